#include "unifree/errors.hpp"

namespace unifree {

const char* errc_name(errc code) {
    switch (code) {
        case errc::base_too_small: return "base_too_small";
        case errc::empty_digits: return "empty_digits";
        case errc::negative_digit: return "negative_digit";
        case errc::duplicate_digit: return "duplicate_digit";
        case errc::missing_zero_digit: return "missing_zero_digit";
        case errc::digit_count_mismatch: return "digit_count_mismatch";
        case errc::smallest_digit_is_zero: return "smallest_digit_is_zero";
        case errc::zero_polynomial_divisor: return "zero_polynomial_divisor";
        case errc::nonmonic_divisor: return "nonmonic_divisor";
        case errc::bad_argument: return "bad_argument";
        case errc::slope_too_small: return "slope_too_small";
        case errc::empty_offsets: return "empty_offsets";
        case errc::duplicate_offset: return "duplicate_offset";
        case errc::word_index_out_of_range: return "word_index_out_of_range";
        case errc::slope_not_prime: return "slope_not_prime";
        case errc::map_count_mismatch: return "map_count_mismatch";
        case errc::empty_seed_set: return "empty_seed_set";
        case errc::negative_seed: return "negative_seed";
        case errc::negative_offset: return "negative_offset";
        case errc::resource_cap_exceeded: return "resource_cap_exceeded";
    }
    return "unknown";
}

}  // namespace unifree
