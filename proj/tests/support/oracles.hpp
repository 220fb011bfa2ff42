#pragma once

// Test-only ground truth and generators. Nothing here calls into the
// library's multiplication, elimination or conjugation paths, so it can
// check them.

#include "trisim/matrix.hpp"

#include <random>
#include <vector>

namespace trisim::testing {

/// Coefficients of prod (t - roots[k]) via elementary symmetric functions,
/// accumulated one root at a time without Poly arithmetic.
inline std::vector<Integer> expand_roots(const std::vector<long>& roots) {
    std::vector<Integer> e{Integer(1)};  // e[k] = k-th elementary symmetric value
    for (long r : roots) {
        e.push_back(0);
        for (std::size_t k = e.size() - 1; k >= 1; --k) e[k] += e[k - 1] * r;
    }
    // prod (t - r) = sum_k (-1)^k e_k t^{m-k}
    const std::size_t m = roots.size();
    std::vector<Integer> coeffs(m + 1);
    for (std::size_t k = 0; k <= m; ++k) coeffs[m - k] = (k % 2 == 0) ? e[k] : Integer(-e[k]);
    return coeffs;
}

/// Schoolbook product on raw coefficient vectors.
inline std::vector<Integer> schoolbook(const std::vector<Integer>& p, const std::vector<Integer>& q) {
    if (p.empty() || q.empty()) return {};
    std::vector<Integer> out(p.size() + q.size() - 1);
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = 0; j < q.size(); ++j) out[i + j] += p[i] * q[j];
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

inline std::vector<Integer> add_raw(std::vector<Integer> p, const std::vector<Integer>& q, int sign) {
    if (q.size() > p.size()) p.resize(q.size());
    for (std::size_t k = 0; k < q.size(); ++k) p[k] += sign * q[k];
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

/// Laplace expansion along the first row; factorial cost, n <= 6 only.
inline std::vector<Integer> cofactor_det(const std::vector<std::vector<std::vector<Integer>>>& m) {
    const std::size_t n = m.size();
    if (n == 0) return {Integer(1)};
    if (n == 1) {
        auto c = m[0][0];
        while (!c.empty() && c.back() == 0) c.pop_back();
        return c;
    }
    std::vector<Integer> acc;
    for (std::size_t col = 0; col < n; ++col) {
        std::vector<std::vector<std::vector<Integer>>> minor;
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<std::vector<Integer>> row;
            for (std::size_t j = 0; j < n; ++j)
                if (j != col) row.push_back(m[i][j]);
            minor.push_back(std::move(row));
        }
        acc = add_raw(acc, schoolbook(m[0][col], cofactor_det(minor)), col % 2 == 0 ? 1 : -1);
    }
    return acc;
}

inline std::vector<Integer> cofactor_det(const PolyMatrix& m) {
    if (m.size() > 6) throw std::invalid_argument("cofactor_det limited to n <= 6");
    std::vector<std::vector<std::vector<Integer>>> raw(m.size());
    for (std::size_t i = 1; i <= m.size(); ++i)
        for (std::size_t j = 1; j <= m.size(); ++j) raw[i - 1].push_back(m(i, j).coeffs());
    return cofactor_det(raw);
}

inline Poly random_poly(std::mt19937_64& rng, int max_degree, int bound) {
    std::uniform_int_distribution<int> deg(0, max_degree);
    std::uniform_int_distribution<int> coef(-bound, bound);
    std::vector<Integer> c(static_cast<std::size_t>(deg(rng)) + 1);
    for (auto& x : c) x = coef(rng);
    return Poly(std::move(c));
}

/// Random tridiagonal matrix over Z[t] with entries of degree <= 1.
inline PolyMatrix random_tridiagonal(std::mt19937_64& rng, std::size_t n) {
    PolyMatrix m(n);
    for (std::size_t i = 1; i <= n; ++i) {
        m(i, i) = random_poly(rng, 1, 9);
        if (i > 1) m(i, i - 1) = random_poly(rng, 1, 9);
        if (i < n) m(i, i + 1) = random_poly(rng, 1, 9);
    }
    return m;
}

/// Random integer matrix, zero wherever i - j >= 2.
inline RatMatrix random_hessenberg(std::mt19937_64& rng, std::size_t n, int bound) {
    std::uniform_int_distribution<int> coef(-bound, bound);
    RatMatrix m(n);
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= n; ++j)
            if (i < j + 2) m(i, j) = coef(rng);
    return m;
}

inline IntMatrix random_int_matrix(std::mt19937_64& rng, std::size_t n, int bound) {
    std::uniform_int_distribution<int> coef(-bound, bound);
    IntMatrix m(n);
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= n; ++j) m(i, j) = coef(rng);
    return m;
}

}  // namespace trisim::testing
