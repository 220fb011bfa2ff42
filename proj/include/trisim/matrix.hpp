#pragma once

// Dense square matrices over Integer, Rational and Poly, plus the named
// matrices: C, C~(n), U, U^-1, U1, P, Q.
//
// Indexing at the API boundary is 1-based: m(i, j) with 1 <= i, j <= n.

#include "trisim/poly.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace trisim {

template <typename T>
class Matrix {
public:
    using value_type = T;

    Matrix() = default;
    explicit Matrix(std::size_t n) : n_(n), data_(n * n, T(0)) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n);
        for (std::size_t i = 1; i <= n; ++i) m(i, i) = T(1);
        return m;
    }

    [[nodiscard]] std::size_t size() const { return n_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[index(i, j)]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[index(i, j)]; }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.n_ == b.n_ && a.data_ == b.data_;
    }

    template <typename Fn>
    static Matrix generate(std::size_t n, Fn&& fn) {
        Matrix m(n);
        for (std::size_t i = 1; i <= n; ++i)
            for (std::size_t j = 1; j <= n; ++j) m(i, j) = T(fn(i, j));
        return m;
    }

    template <typename U, typename Fn>
    [[nodiscard]] Matrix<U> map(Fn&& fn) const {
        Matrix<U> out(n_);
        for (std::size_t i = 1; i <= n_; ++i)
            for (std::size_t j = 1; j <= n_; ++j) out(i, j) = fn((*this)(i, j));
        return out;
    }

private:
    [[nodiscard]] std::size_t index(std::size_t i, std::size_t j) const {
        if (i < 1 || i > n_ || j < 1 || j > n_) {
            throw std::out_of_range("matrix index (" + std::to_string(i) + ", " + std::to_string(j) +
                                    ") outside 1.." + std::to_string(n_));
        }
        return (i - 1) * n_ + (j - 1);
    }

    std::size_t n_ = 0;
    std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;
using PolyMatrix = Matrix<Poly>;

template <typename T>
Matrix<T> mat_identity(std::size_t n) {
    return Matrix<T>::identity(n);
}

template <typename T>
bool mat_equal(const Matrix<T>& a, const Matrix<T>& b) {
    return a == b;
}

/// Dense product. Zero entries of the left factor are skipped, which makes
/// products of triangular and banded matrices cheap.
template <typename T>
Matrix<T> mat_mul(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("mat_mul: size mismatch " + std::to_string(a.size()) + " vs " +
                                    std::to_string(b.size()));
    }
    const std::size_t n = a.size();
    Matrix<T> c(n);
    for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t l = 1; l <= n; ++l) {
            const T& ail = a(i, l);
            if (ail == 0) continue;
            for (std::size_t j = 1; j <= n; ++j) {
                const T& blj = b(l, j);
                if (blj == 0) continue;
                c(i, j) += ail * blj;
            }
        }
    }
    return c;
}

template <typename T>
Matrix<T> mat_add(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.size() != b.size()) throw std::invalid_argument("mat_add: size mismatch");
    Matrix<T> c = a;
    for (std::size_t i = 1; i <= a.size(); ++i)
        for (std::size_t j = 1; j <= a.size(); ++j) c(i, j) += b(i, j);
    return c;
}

template <typename T>
Matrix<T> mat_scale(const Matrix<T>& a, const T& s) {
    Matrix<T> c = a;
    for (std::size_t i = 1; i <= a.size(); ++i)
        for (std::size_t j = 1; j <= a.size(); ++j) c(i, j) *= s;
    return c;
}

template <typename T>
T mat_trace(const Matrix<T>& a) {
    T acc(0);
    for (std::size_t i = 1; i <= a.size(); ++i) acc += a(i, i);
    return acc;
}

/// [[a, 0], [0, 1]] of size a.size() + 1.
template <typename T>
Matrix<T> block_diag_one(const Matrix<T>& a) {
    Matrix<T> out(a.size() + 1);
    for (std::size_t i = 1; i <= a.size(); ++i)
        for (std::size_t j = 1; j <= a.size(); ++j) out(i, j) = a(i, j);
    out(a.size() + 1, a.size() + 1) = T(1);
    return out;
}

RatMatrix to_rational(const IntMatrix& m);
/// Throws std::invalid_argument if any entry is not an integer.
IntMatrix to_integer(const RatMatrix& m);
PolyMatrix to_poly(const IntMatrix& m);

/// Rational-by-polynomial product; the rational factor must be integral
/// (Poly lives over Z).
PolyMatrix mat_mul(const RatMatrix& a, const PolyMatrix& b);

/// t*I - m.
PolyMatrix char_matrix(const IntMatrix& m);

/// The (n-1)x(n-1) matrix C in t; n >= 2.
PolyMatrix build_C(long n);
/// The n x n tridiagonal C~(n); n >= 1.
IntMatrix build_Ctilde(long n);
/// U(i,j) = C(n-i, n-j), upper unitriangular.
IntMatrix build_U(long n);
/// Closed form (-1)^(i+j) C(n-i, n-j); never obtained by inversion.
IntMatrix build_Uinv(long n);
/// Columns f_1 = e_1, f_j = e_{j-1} + e_j.
IntMatrix build_P(long n);
/// Columns g_j = sum_{i <= j} (-1)^(i+j) e_i.
IntMatrix build_Q(long n);
/// (n-1)x(n-1) Pascal-type matrix C(n-1-i, n-1-j); n >= 2.
IntMatrix build_U1(long n);

}  // namespace trisim
