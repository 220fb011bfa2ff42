#pragma once

// Ground-truth determinants that never touch the Pascal similarity:
// the continuant recurrence for tridiagonal matrices, and fraction-free
// (Bareiss) elimination over Z[t] for dense ones.

#include "trisim/matrix.hpp"

#include <vector>

namespace trisim {

struct TridiagonalSpec {
    std::vector<Poly> diag;   // length n
    std::vector<Poly> sub;    // length n-1, sub[i] sits at (i+2, i+1) in 1-based terms
    std::vector<Poly> super;  // length n-1, super[i] sits at (i+1, i+2)

    [[nodiscard]] std::size_t size() const { return diag.size(); }

    /// Reads the three bands; off-band entries of m are ignored.
    static TridiagonalSpec from_matrix(const PolyMatrix& m);
    [[nodiscard]] PolyMatrix to_matrix() const;
};

/// D_k = d_k D_{k-1} - sub_{k-1} super_{k-1} D_{k-2}, D_0 = 1.
Poly det_tridiagonal(const TridiagonalSpec& spec);

/// Bareiss elimination with row pivoting. Every division is checked exact;
/// a remainder raises InternalDivisionError.
Poly det_fraction_free(PolyMatrix m);

/// det(t I - m).
Poly charpoly(const IntMatrix& m);
/// Rational overload; entries must be integers.
Poly charpoly(const RatMatrix& m);

}  // namespace trisim
