#include "trisim/oracle.hpp"

#include "trisim/triangulator.hpp"

#include "support/oracles.hpp"

#include <doctest.h>

using namespace trisim;
using trisim::testing::cofactor_det;
using trisim::testing::expand_roots;

namespace {

Poly from_roots(const std::vector<long>& roots) { return Poly(expand_roots(roots)); }

}  // namespace

TEST_CASE("det_tridiagonal") {
    CHECK(det_tridiagonal(TridiagonalSpec::from_matrix(build_C(4))) == from_roots({3, 5, 5}));

    TridiagonalSpec diag_t{{Poly::t(), Poly::t(), Poly::t()}, {Poly(), Poly()}, {Poly(), Poly()}};
    CHECK(det_tridiagonal(diag_t) == from_roots({0, 0, 0}));

    TridiagonalSpec single{{Poly::linear_factor(1)}, {}, {}};
    CHECK(det_tridiagonal(single) == from_roots({1}));

    TridiagonalSpec bad{{Poly(1), Poly(1)}, {}, {}};
    CHECK_THROWS_AS(det_tridiagonal(bad), std::invalid_argument);
}

TEST_CASE("det_fraction_free") {
    // eigenvalues 3, 4, 3, 0 of the triangular form
    CHECK(det_fraction_free(char_matrix(build_Ctilde(4))) == from_roots({0, 3, 3, 4}));
    CHECK(det_fraction_free(to_poly(IntMatrix::identity(4))) == Poly(1));
    CHECK(det_fraction_free(PolyMatrix(3)).is_zero());

    // needs a row swap: [[0,1],[1,0]] has det -1
    PolyMatrix swap(2);
    swap(1, 2) = Poly(1);
    swap(2, 1) = Poly(1);
    CHECK(det_fraction_free(swap) == Poly(-1));

    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        const IntMatrix m = trisim::testing::random_int_matrix(rng, 5, 9);
        const PolyMatrix pm = to_poly(m);
        CHECK(det_fraction_free(pm).coeffs() == cofactor_det(pm));
    }
}

TEST_CASE("charpoly") {
    CHECK(charpoly(build_Ctilde(4)) == Poly(std::vector<Integer>{0, -36, 33, -10, 1}));
    CHECK(charpoly(IntMatrix(2)) == from_roots({0, 0}));
    IntMatrix d(2);
    d(1, 1) = 1;
    d(2, 2) = 2;
    CHECK(charpoly(d) == from_roots({1, 2}));
    RatMatrix half(1);
    half(1, 1) = Rational(1, 2);
    CHECK_THROWS_AS(charpoly(half), std::invalid_argument);
}

TEST_CASE("continuant and Bareiss agree on random tridiagonal matrices") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<int> size(1, 10);
    for (int trial = 0; trial < 200; ++trial) {
        const PolyMatrix m = trisim::testing::random_tridiagonal(rng, static_cast<std::size_t>(size(rng)));
        const Poly a = det_tridiagonal(TridiagonalSpec::from_matrix(m));
        const Poly b = det_fraction_free(m);
        CHECK(a == b);
        if (m.size() <= 6) CHECK(a.coeffs() == cofactor_det(m));
    }
}

TEST_CASE("charpoly of C~(n) has roots i(n-i)") {
    for (long n = 1; n <= 60; ++n) {
        std::vector<long> roots;
        for (long i = 1; i <= n; ++i) roots.push_back(i * (n - i));
        CHECK(charpoly(build_Ctilde(n)) == from_roots(roots));
    }
}

TEST_CASE("continuant of C matches the parity-split product") {
    for (long n = 2; n <= 60; ++n) {
        CHECK(det_tridiagonal(TridiagonalSpec::from_matrix(build_C(n))) == conjecture_formula(n));
    }
}
