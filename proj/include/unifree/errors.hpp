#pragma once

#include <stdexcept>
#include <string>

namespace unifree {

// Machine-checkable reason attached to every rejected input.
enum class errc {
    base_too_small,
    empty_digits,
    negative_digit,
    duplicate_digit,
    missing_zero_digit,
    digit_count_mismatch,
    smallest_digit_is_zero,
    zero_polynomial_divisor,
    nonmonic_divisor,
    bad_argument,
    slope_too_small,
    empty_offsets,
    duplicate_offset,
    word_index_out_of_range,
    slope_not_prime,
    map_count_mismatch,
    empty_seed_set,
    negative_seed,
    negative_offset,
    resource_cap_exceeded,
};

const char* errc_name(errc code);

// Rejected input or configuration. CLI maps this to exit code 2.
class input_error : public std::invalid_argument {
public:
    input_error(errc code, const std::string& what)
        : std::invalid_argument(what), code_(code) {}
    errc code() const noexcept { return code_; }

private:
    errc code_;
};

// A configured resource cap was hit; the message always carries the cap value.
class resource_limit_error : public input_error {
public:
    resource_limit_error(const std::string& what)
        : input_error(errc::resource_cap_exceeded, what) {}
};

// Two deciders that must agree did not. Never recoverable; CLI exits 3.
class internal_error : public std::logic_error {
public:
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace unifree
