#include "unifree/polynomial.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>

#include "unifree/errors.hpp"

namespace unifree {

namespace {

void strip_leading_zeros(std::vector<Int>& coeffs) {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

}  // namespace

IntPolynomial::IntPolynomial(std::vector<Int> coefficients)
    : coeffs_(std::move(coefficients)) {
    strip_leading_zeros(coeffs_);
}

IntPolynomial IntPolynomial::one() {
    return IntPolynomial{std::vector<Int>{1}};
}

IntPolynomial IntPolynomial::power_minus_one(std::int64_t d) {
    if (d < 1) throw input_error(errc::bad_argument, "power_minus_one: d must be >= 1");
    std::vector<Int> coeffs(static_cast<std::size_t>(d) + 1, 0);
    coeffs.front() = -1;
    coeffs.back() = 1;
    return IntPolynomial{std::move(coeffs)};
}

const Int& IntPolynomial::coeff(std::size_t exponent) const {
    static const Int kZero = 0;
    return exponent < coeffs_.size() ? coeffs_[exponent] : kZero;
}

Int IntPolynomial::operator()(const Int& x) const {
    Int acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

std::complex<double> IntPolynomial::eval(std::complex<double> z) const {
    std::complex<double> acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * z + static_cast<double>(*it);
    }
    return acc;
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& rhs) const {
    if (is_zero() || rhs.is_zero()) return zero();
    std::vector<Int> prod(coeffs_.size() + rhs.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
            prod[i + j] += coeffs_[i] * rhs.coeffs_[j];
        }
    }
    return IntPolynomial{std::move(prod)};
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& rhs) const {
    std::vector<Int> diff(std::max(coeffs_.size(), rhs.coeffs_.size()), 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) diff[i] += coeffs_[i];
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) diff[i] -= rhs.coeffs_[i];
    return IntPolynomial{std::move(diff)};
}

bool IntPolynomial::divide_exact(const IntPolynomial& monic_divisor,
                                 IntPolynomial& quotient) const {
    if (monic_divisor.is_zero()) {
        throw input_error(errc::zero_polynomial_divisor, "division by zero polynomial");
    }
    if (!monic_divisor.is_monic()) {
        throw input_error(errc::nonmonic_divisor,
                          "divide_exact requires a monic divisor");
    }
    if (is_zero()) {
        quotient = zero();
        return true;
    }
    const std::int64_t dd = monic_divisor.degree();
    if (degree() < dd) return false;  // nonzero dividend, degree too small

    std::vector<Int> rem = coeffs_;
    std::vector<Int> q(static_cast<std::size_t>(degree() - dd) + 1, 0);
    for (std::int64_t i = degree(); i >= dd; --i) {
        Int factor = rem[static_cast<std::size_t>(i)];
        if (factor == 0) continue;
        q[static_cast<std::size_t>(i - dd)] = factor;
        for (std::int64_t j = 0; j <= dd; ++j) {
            rem[static_cast<std::size_t>(i - dd + j)] -=
                factor * monic_divisor.coeffs_[static_cast<std::size_t>(j)];
        }
    }
    for (const Int& c : rem) {
        if (c != 0) return false;
    }
    quotient = IntPolynomial{std::move(q)};
    return true;
}

std::string IntPolynomial::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const Int& c = coeffs_[i];
        if (c == 0) continue;
        if (!out.empty()) out += (c > 0) ? " + " : " - ";
        else if (c < 0) out += "-";
        Int mag = abs(c);
        if (mag != 1 || i == 0) out += mag.str();
        if (i >= 1) {
            out += "z";
            if (i >= 2) out += "^" + std::to_string(i);
        }
    }
    return out;
}

IntPolynomial digit_polynomial(const DigitSystem& ds) {
    std::vector<Int> coeffs(static_cast<std::size_t>(ds.max_digit()) + 1, 0);
    for (std::int64_t a : ds.digits) coeffs[static_cast<std::size_t>(a)] = 1;
    return IntPolynomial{std::move(coeffs)};
}

IntPolynomial cyclotomic(std::int64_t d) {
    if (d < 1) throw input_error(errc::bad_argument, "cyclotomic: d must be >= 1");

    static std::map<std::int64_t, IntPolynomial> cache;
    static std::mutex cache_mutex;
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache.find(d);
        if (it != cache.end()) return it->second;
    }

    // Phi_d = (z^d - 1) / prod of Phi_e over proper divisors e of d.
    IntPolynomial result = IntPolynomial::power_minus_one(d);
    for (std::int64_t e : divisors(d)) {
        if (e == d) continue;
        IntPolynomial quotient;
        if (!result.divide_exact(cyclotomic(e), quotient)) {
            throw internal_error("cyclotomic: exact division failed for d=" +
                                 std::to_string(d));
        }
        result = quotient;
    }

    std::lock_guard<std::mutex> lock(cache_mutex);
    return cache.emplace(d, std::move(result)).first->second;
}

bool divides(const IntPolynomial& p, const IntPolynomial& q) {
    IntPolynomial quotient;
    return q.divide_exact(p, quotient);
}

bool vanishes_at_order(const IntPolynomial& p, std::int64_t d) {
    if (d < 1) throw input_error(errc::bad_argument, "vanishes_at_order: d must be >= 1");
    return divides(cyclotomic(d), p);
}

std::vector<std::int64_t> admissible_orders(const IntPolynomial& p, std::int64_t base) {
    if (base < 2) throw input_error(errc::base_too_small, "admissible_orders: base < 2");
    if (p.is_zero()) throw input_error(errc::bad_argument, "admissible_orders: zero polynomial");

    const std::int64_t max_phi = p.degree();
    // phi(d) >= sqrt(d/2), so phi(d) <= D forces d <= 2*D^2.
    const std::int64_t bound = 2 * max_phi * max_phi + 1;
    std::vector<std::int64_t> base_primes = prime_factors(base);

    std::set<std::int64_t> smooth{1};
    // Inserting larger elements mid-iteration is fine for std::set; they are
    // visited later in order, so this closes {1} under multiplication.
    for (auto it = smooth.begin(); it != smooth.end(); ++it) {
        for (std::int64_t prime : base_primes) {
            if (*it <= bound / prime) smooth.insert(*it * prime);
        }
    }

    std::vector<std::int64_t> orders;
    for (std::int64_t d : smooth) {
        if (d > 1 && euler_phi(d) <= max_phi) orders.push_back(d);
    }
    return orders;
}

}  // namespace unifree
