#pragma once

/*
 * Dense univariate polynomials in t over arbitrary-precision integers.
 *
 * Coefficients are stored in ascending degree: coeffs()[k] multiplies t^k.
 * The zero polynomial has no coefficients and degree kZeroDegree. Every
 * value is kept normalized (highest stored coefficient nonzero), so two
 * polynomials are equal iff their coefficient vectors are equal.
 */

#include <gmpxx.h>

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace trisim {

using Integer = mpz_class;
using Rational = mpq_class;

/// Raised when an exact division leaves a nonzero remainder. Valid inputs
/// never trigger it; it indicates a broken caller invariant.
class InternalDivisionError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

class Poly {
public:
    static constexpr long kZeroDegree = std::numeric_limits<long>::min();

    Poly() = default;
    explicit Poly(std::vector<Integer> coeffs);
    Poly(long c) : Poly(Integer(c)) {}  // NOLINT: constants lift implicitly
    Poly(const Integer& c);              // NOLINT

    /// t - root
    static Poly linear_factor(const Integer& root);
    /// The indeterminate t.
    static Poly t();

    [[nodiscard]] const std::vector<Integer>& coeffs() const { return coeffs_; }
    [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
    [[nodiscard]] long degree() const;
    /// Coefficient of t^k; zero past the degree.
    [[nodiscard]] Integer coeff(std::size_t k) const;
    [[nodiscard]] const Integer& leading() const;
    [[nodiscard]] bool is_constant() const { return coeffs_.size() <= 1; }

    Poly& operator+=(const Poly& q);
    Poly& operator-=(const Poly& q);
    Poly& operator*=(const Poly& q);
    Poly& operator*=(const Integer& c);

    friend Poly operator+(Poly p, const Poly& q) { return p += q; }
    friend Poly operator-(Poly p, const Poly& q) { return p -= q; }
    friend Poly operator*(const Poly& p, const Poly& q);
    friend Poly operator*(Poly p, const Integer& c) { return p *= c; }
    friend Poly operator*(const Integer& c, Poly p) { return p *= c; }
    friend Poly operator-(Poly p);

    friend bool operator==(const Poly& p, const Poly& q) { return p.coeffs_ == q.coeffs_; }

    /// Human-readable form, e.g. "t^3 - 13*t^2 + 55*t - 75".
    [[nodiscard]] std::string to_string() const;

private:
    void normalize();

    std::vector<Integer> coeffs_;
};

Poly poly_add(const Poly& p, const Poly& q);
Poly poly_mul(const Poly& p, const Poly& q);

/// q(t) = p(t - c).
Poly poly_shift(const Poly& p, const Integer& c);

Rational poly_eval(const Poly& p, const Rational& x);

/// Divides p by q over Z[t]. Throws InternalDivisionError unless q divides p
/// exactly with an integer-coefficient quotient. q must be nonzero.
Poly divide_exact(const Poly& p, const Poly& q);

/// Synthetic division by (t - root): returns {quotient, remainder}.
std::pair<Poly, Integer> divide_linear(const Poly& p, const Integer& root);

/// Multiset of monic linear factors, prod (t - root)^mult. Roots are kept
/// distinct and sorted ascending; adding an existing root merges
/// multiplicities.
class ProductFactors {
public:
    struct Factor {
        Integer root;
        std::uint32_t mult;
        friend bool operator==(const Factor&, const Factor&) = default;
    };

    ProductFactors() = default;
    ProductFactors(std::initializer_list<std::pair<long, std::uint32_t>> factors);

    void add(const Integer& root, std::uint32_t mult = 1);

    [[nodiscard]] const std::vector<Factor>& factors() const { return factors_; }
    [[nodiscard]] std::uint64_t total_degree() const;

    friend bool operator==(const ProductFactors&, const ProductFactors&) = default;

private:
    std::vector<Factor> factors_;
};

Poly expand_product(const ProductFactors& f);

}  // namespace trisim
