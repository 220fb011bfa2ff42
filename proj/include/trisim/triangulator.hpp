#pragma once

/*
 * Pascal-type similarity U A U^-1 and the checks built on it.
 *
 * U(i,j) = C(n-i, n-j) turns C~(n) into a lower bidiagonal matrix with
 * diagonal i(n-i) and subdiagonal (n+1-i)(1-i). Since
 * C + (n-1) I = t I - C~(n-1), that gives
 *
 *     det C = prod_{i=1}^{n-1} (t - (n-1) - i(n-1-i)),
 *
 * which is checked here against the parity-split product and against the
 * continuant oracle.
 */

#include "trisim/matrix.hpp"

#include <optional>
#include <stdexcept>
#include <string>

namespace trisim {

struct Mismatch {
    std::string where;
    std::string expected;
    std::string actual;
};

/// A conjugate that should have had a known shape did not.
class StructureMismatch : public std::runtime_error {
public:
    explicit StructureMismatch(Mismatch m)
        : std::runtime_error("structure mismatch at " + m.where + ": expected " + m.expected +
                             ", got " + m.actual),
          mismatch(std::move(m)) {}

    Mismatch mismatch;
};

template <typename T>
Matrix<T> conjugate_by_U(const Matrix<T>& a) {
    const long n = static_cast<long>(a.size());
    if (n == 0) return a;
    const Matrix<T> u = build_U(n).template map<T>([](const Integer& x) { return T(x); });
    const Matrix<T> v = build_Uinv(n).template map<T>([](const Integer& x) { return T(x); });
    return mat_mul(mat_mul(u, a), v);
}

struct BidiagonalResult {
    long n = 0;
    std::vector<Integer> diag;     // diag[i-1] = entry (i, i)
    std::vector<Integer> subdiag;  // subdiag[i-2] = entry (i, i-1), i = 2..n
    IntMatrix full;
};

/// Conjugates C~(n) by U and certifies the lower bidiagonal form.
/// Throws StructureMismatch on any deviating entry.
BidiagonalResult triangularize_Ctilde(long n);

/// Roots n-1 + i(n-1-i), i = 1..n-1, with merged multiplicities.
ProductFactors nicer_product(long n);

/// The even/odd product formula for det C, expanded.
Poly conjecture_formula(long n);

struct ConjectureReport {
    long n = 0;
    bool pass = false;
    Poly polynomial;  // the common polynomial when pass
    std::optional<Mismatch> mismatch;
};

/// Compares conjecture_formula(n), expand_product(nicer_product(n)) and
/// det_tridiagonal(build_C(n)).
ConjectureReport verify_conjecture(long n);

struct LowpartReport {
    long n = 0;
    bool pass = false;
    RatMatrix conjugate;
    std::optional<Mismatch> mismatch;
};

/// M must vanish for i - j >= 2 (std::invalid_argument otherwise). Checks
/// that U M U^-1 agrees with M on every entry with i - j >= 1.
LowpartReport verify_lowpart(const RatMatrix& m);

}  // namespace trisim
