#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "unifree/digit_system.hpp"
#include "unifree/int_math.hpp"

namespace unifree {

// Dense integer-coefficient polynomial, index = exponent. The zero
// polynomial has an empty coefficient vector; otherwise the highest
// coefficient is nonzero.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<Int> coefficients);

    static IntPolynomial zero() { return IntPolynomial{}; }
    static IntPolynomial one();
    // x^d - 1, the cyclotomic product identity's left side.
    static IntPolynomial power_minus_one(std::int64_t d);

    bool is_zero() const { return coeffs_.empty(); }
    bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }
    // Degree of the zero polynomial is reported as -1.
    std::int64_t degree() const { return static_cast<std::int64_t>(coeffs_.size()) - 1; }
    const Int& coeff(std::size_t exponent) const;
    const std::vector<Int>& coefficients() const { return coeffs_; }

    Int operator()(const Int& x) const;
    std::complex<double> eval(std::complex<double> z) const;

    IntPolynomial operator*(const IntPolynomial& rhs) const;
    IntPolynomial operator-(const IntPolynomial& rhs) const;
    bool operator==(const IntPolynomial&) const = default;

    // Exact division by a monic divisor; returns false (and leaves quotient
    // untouched) when a nonzero remainder appears.
    bool divide_exact(const IntPolynomial& monic_divisor, IntPolynomial& quotient) const;

    std::string to_string() const;

private:
    std::vector<Int> coeffs_;
};

// Sum of z^a over the digits: the mask numerator, 0/1 coefficients.
IntPolynomial digit_polynomial(const DigitSystem& ds);

// d-th cyclotomic polynomial, memoized per process.
IntPolynomial cyclotomic(std::int64_t d);

// True iff q is an exact integer-polynomial multiple of p (p monic, nonzero).
bool divides(const IntPolynomial& p, const IntPolynomial& q);

// True iff the primitive d-th roots of unity are roots of p, decided exactly
// through divisibility by the (irreducible) d-th cyclotomic polynomial.
bool vanishes_at_order(const IntPolynomial& p, std::int64_t d);

// All d > 1 whose prime factors all divide base and with phi(d) <= deg p,
// ascending. Exactly the orders a root of unity sitting at a tree vertex
// k/base^j can have while still possibly dividing p.
std::vector<std::int64_t> admissible_orders(const IntPolynomial& p, std::int64_t base);

}  // namespace unifree
