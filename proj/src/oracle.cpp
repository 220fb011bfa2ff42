#include "trisim/oracle.hpp"

#include <utility>

namespace trisim {

TridiagonalSpec TridiagonalSpec::from_matrix(const PolyMatrix& m) {
    TridiagonalSpec spec;
    const std::size_t n = m.size();
    for (std::size_t i = 1; i <= n; ++i) spec.diag.push_back(m(i, i));
    for (std::size_t i = 1; i < n; ++i) {
        spec.sub.push_back(m(i + 1, i));
        spec.super.push_back(m(i, i + 1));
    }
    return spec;
}

PolyMatrix TridiagonalSpec::to_matrix() const {
    const std::size_t n = size();
    PolyMatrix m(n);
    for (std::size_t i = 1; i <= n; ++i) m(i, i) = diag[i - 1];
    for (std::size_t i = 1; i < n; ++i) {
        m(i + 1, i) = sub[i - 1];
        m(i, i + 1) = super[i - 1];
    }
    return m;
}

Poly det_tridiagonal(const TridiagonalSpec& spec) {
    const std::size_t n = spec.size();
    if (spec.sub.size() + 1 != n && !(n == 0 && spec.sub.empty())) {
        throw std::invalid_argument("tridiagonal spec: sub band must have length n-1");
    }
    if (spec.super.size() != spec.sub.size()) {
        throw std::invalid_argument("tridiagonal spec: super band must have length n-1");
    }
    Poly prev(1);  // D_{k-2}
    Poly cur(1);   // D_{k-1}
    for (std::size_t k = 0; k < n; ++k) {
        Poly next = spec.diag[k] * cur;
        if (k > 0) next -= spec.sub[k - 1] * spec.super[k - 1] * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

Poly det_fraction_free(PolyMatrix m) {
    const std::size_t n = m.size();
    if (n == 0) return Poly(1);
    bool negate = false;
    Poly prev_pivot(1);
    for (std::size_t k = 1; k <= n; ++k) {
        std::size_t pivot_row = k;
        while (pivot_row <= n && m(pivot_row, k).is_zero()) ++pivot_row;
        if (pivot_row > n) return Poly{};
        if (pivot_row != k) {
            for (std::size_t j = 1; j <= n; ++j) std::swap(m(k, j), m(pivot_row, j));
            negate = !negate;
        }
        const Poly pivot = m(k, k);
        for (std::size_t i = k + 1; i <= n; ++i) {
            const Poly lead = m(i, k);
            for (std::size_t j = k + 1; j <= n; ++j) {
                Poly num = m(i, j) * pivot;
                if (!lead.is_zero() && !m(k, j).is_zero()) num -= lead * m(k, j);
                m(i, j) = (k == 1) ? std::move(num) : divide_exact(num, prev_pivot);
            }
            m(i, k) = Poly{};
        }
        prev_pivot = pivot;
    }
    Poly det = m(n, n);
    return negate ? -det : det;
}

Poly charpoly(const IntMatrix& m) { return det_fraction_free(char_matrix(m)); }

Poly charpoly(const RatMatrix& m) { return charpoly(to_integer(m)); }

}  // namespace trisim
