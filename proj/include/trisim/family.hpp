#pragma once

// Generalized banded families A(r, b, a^(1..n-1)) whose Pascal conjugate is
// lower bidiagonal, the lambda(k) condition that certifies them, and the
// one-step elimination P A Q that drives the induction on n.

#include "trisim/matrix.hpp"
#include "trisim/triangulator.hpp"

#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

namespace trisim {

/// Sequences are stored 1-based with zero extension: b(i) and a(s, i)
/// return 0 for any index outside the stored support.
class FamilySpec {
public:
    /// Validates: n >= 1, b has length n with b_1 = 0, each band s lies in
    /// 1..n-1, has length n, and vanishes for i + s > n. Throws
    /// std::invalid_argument otherwise.
    FamilySpec(long n, Rational r, std::vector<Rational> b, std::map<long, std::vector<Rational>> a);

    /// All-zero sequences.
    static FamilySpec zero(long n, Rational r = 0);
    /// b_i = (n+1-i)(1-i), a^(1)_i = (n+1-i)(n-i), r = 0; build_A gives C~(n).
    static FamilySpec ctilde(long n);

    [[nodiscard]] long n() const { return n_; }
    [[nodiscard]] const Rational& r() const { return r_; }
    [[nodiscard]] Rational b(long i) const;
    [[nodiscard]] Rational a(long s, long i) const;
    [[nodiscard]] const std::vector<Rational>& b_values() const { return b_; }
    /// Stored bands (possibly including all-zero ones).
    [[nodiscard]] const std::map<long, std::vector<Rational>>& bands() const { return a_; }
    /// True when a^(t) is identically zero for every t >= 2.
    [[nodiscard]] bool only_first_band() const;

    /// alpha * x + beta * y for same-size families; r combines likewise.
    static FamilySpec combine(const Rational& alpha, const FamilySpec& x, const Rational& beta,
                              const FamilySpec& y);

    friend bool operator==(const FamilySpec&, const FamilySpec&);

private:
    long n_;
    Rational r_;
    std::vector<Rational> b_;
    std::map<long, std::vector<Rational>> a_;
};

using LambdaVector = std::vector<Rational>;  // lambda(0..n-2)

/// The condition's left-hand side failed to be constant in i for some k.
class NotConstant : public std::runtime_error {
public:
    NotConstant(long k, long i, Rational expected, Rational actual)
        : std::runtime_error("lambda(" + std::to_string(k) + ") not constant: i=1 gives " +
                             expected.get_str() + ", i=" + std::to_string(i) + " gives " +
                             actual.get_str()),
          k(k), i(i), expected(std::move(expected)), actual(std::move(actual)) {}

    long k;
    long i;
    Rational expected;
    Rational actual;
};

/// Left-hand side of the lambda(k) condition at row i:
///   b_{i+1} - b_i
///   + sum_t sum_{l<t} (-1)^(l+t) C(t-l+k, t-1) C(t-1, l) a^(t)_{i+1-l+k}
///   - sum_t sum_{l<t} (-1)^(l+t) C(t-1-l+k, t-1) C(t-1, l) a^(t)_{i-l+k}
/// Requires 0 <= k <= n-2 and 1 <= i <= n-k.
Rational condition_lhs(const FamilySpec& spec, long i, long k);

/// lambda(k) = condition_lhs(spec, 1, k), checked against every i in 1..n-k.
/// Throws NotConstant at the first disagreement.
LambdaVector compute_lambda(const FamilySpec& spec);

RatMatrix build_A(const FamilySpec& spec);

/// Lower bidiagonal: diagonal r + sum_{k=0}^{n-i-1} lambda(k), subdiagonal b_i.
RatMatrix predicted_conjugate(const FamilySpec& spec, const LambdaVector& lambda);

struct FamilyReport {
    long n = 0;
    bool pass = false;
    LambdaVector lambda;
    RatMatrix conjugate;
    RatMatrix predicted;
    /// Set only for families with a single active band.
    std::optional<bool> first_band_closed_form;
    std::optional<Mismatch> mismatch;
};

/// Propagates NotConstant from compute_lambda.
FamilyReport verify_family(const FamilySpec& spec);

/// c^(s)_i for s = 1..n-2, i = 1..n-1 (stored 1-based, length n-1 each).
/// Throws std::logic_error if c^(s)_i != 0 for some s + i > n-1.
std::map<long, std::vector<Rational>> compute_c(const FamilySpec& spec);

/// P A Q deviated from the block form [[A1, 0], [B, r]].
class BlockMismatch : public std::runtime_error {
public:
    explicit BlockMismatch(Mismatch m)
        : std::runtime_error("block mismatch at " + m.where + ": expected " + m.expected +
                             ", got " + m.actual),
          mismatch(std::move(m)) {}

    Mismatch mismatch;
};

struct EliminationResult {
    RatMatrix paq;                 // the full product, for audit
    RatMatrix a1;                  // leading (n-1)x(n-1) block
    std::vector<Rational> b_row;   // last row without its diagonal, length n-1
    FamilySpec subfamily;          // size n-1: b restricted, a := c, same r
};

/// Computes P A Q, checks the block form and A1's entries, and returns the
/// size n-1 family. build_A(subfamily) + lambda(0) I equals A1 whenever the
/// spec satisfies the lambda condition. Requires n >= 2.
EliminationResult eliminate_step(const FamilySpec& spec);

/// Rational family basis: every solution (b, a, lambda) of the lambda
/// condition for size n is a combination of these (with r free). Solves the
/// linear system exactly; intended for n <= 6.
std::vector<FamilySpec> family_basis(long n);

/// Random rational combination of family_basis(n) with small integer
/// weights and a random integer r.
FamilySpec sample_family(long n, std::mt19937_64& rng);

}  // namespace trisim
