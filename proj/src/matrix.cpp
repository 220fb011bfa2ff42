#include "trisim/matrix.hpp"

#include "trisim/combinatorics.hpp"

namespace trisim {

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw std::invalid_argument(what);
}

std::size_t side(long n) { return static_cast<std::size_t>(n); }

long sign(long e) { return (e % 2 == 0) ? 1 : -1; }

}  // namespace

RatMatrix to_rational(const IntMatrix& m) {
    return m.map<Rational>([](const Integer& x) { return Rational(x); });
}

IntMatrix to_integer(const RatMatrix& m) {
    return m.map<Integer>([](const Rational& x) {
        if (x.get_den() != 1) throw std::invalid_argument("non-integer entry " + x.get_str());
        return Integer(x.get_num());
    });
}

PolyMatrix to_poly(const IntMatrix& m) {
    return m.map<Poly>([](const Integer& x) { return Poly(x); });
}

PolyMatrix mat_mul(const RatMatrix& a, const PolyMatrix& b) {
    return mat_mul(to_poly(to_integer(a)), b);
}

PolyMatrix char_matrix(const IntMatrix& m) {
    const std::size_t n = m.size();
    PolyMatrix out(n);
    for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t j = 1; j <= n; ++j) {
            out(i, j) = (i == j) ? Poly::linear_factor(m(i, j)) : Poly(Integer(-m(i, j)));
        }
    }
    return out;
}

PolyMatrix build_C(long n) {
    require(n >= 2, "build_C needs n >= 2, got " + std::to_string(n));
    const long m = n - 1;
    PolyMatrix c(side(m));
    for (long i = 1; i <= m; ++i) {
        c(i, i) = Poly::linear_factor(Integer((n - 2 * i + 2) * (n - 1 - i) + 1));
        if (i > 1) c(i, i - 1) = Poly(Integer((i - 1) * (n - i)));
        if (i < m) c(i, i + 1) = Poly(Integer(-(n - 1 - i) * (n - i)));
    }
    return c;
}

IntMatrix build_Ctilde(long n) {
    require(n >= 1, "build_Ctilde needs n >= 1, got " + std::to_string(n));
    IntMatrix c(side(n));
    for (long i = 1; i <= n; ++i) {
        c(i, i) = Integer(n + 1 - i) * (n + 1 - 2 * i);
        if (i > 1) c(i, i - 1) = Integer(n + 1 - i) * (1 - i);
        if (i < n) c(i, i + 1) = Integer(n + 1 - i) * (n - i);
    }
    return c;
}

IntMatrix build_U(long n) {
    require(n >= 1, "build_U needs n >= 1, got " + std::to_string(n));
    IntMatrix u(side(n));
    for (long i = 1; i <= n; ++i)
        for (long j = i; j <= n; ++j) u(i, j) = binom(n - i, n - j);
    return u;
}

IntMatrix build_Uinv(long n) {
    require(n >= 1, "build_Uinv needs n >= 1, got " + std::to_string(n));
    IntMatrix v(side(n));
    for (long i = 1; i <= n; ++i)
        for (long j = i; j <= n; ++j) v(i, j) = sign(i + j) * binom(n - i, n - j);
    return v;
}

IntMatrix build_P(long n) {
    require(n >= 1, "build_P needs n >= 1, got " + std::to_string(n));
    IntMatrix p(side(n));
    p(1, 1) = 1;
    for (long j = 2; j <= n; ++j) {
        p(j - 1, j) = 1;
        p(j, j) = 1;
    }
    return p;
}

IntMatrix build_Q(long n) {
    require(n >= 1, "build_Q needs n >= 1, got " + std::to_string(n));
    IntMatrix q(side(n));
    for (long j = 1; j <= n; ++j)
        for (long i = 1; i <= j; ++i) q(i, j) = sign(i + j);
    return q;
}

IntMatrix build_U1(long n) {
    require(n >= 2, "build_U1 needs n >= 2, got " + std::to_string(n));
    IntMatrix u(side(n - 1));
    for (long i = 1; i <= n - 1; ++i)
        for (long j = i; j <= n - 1; ++j) u(i, j) = binom(n - 1 - i, n - 1 - j);
    return u;
}

}  // namespace trisim
