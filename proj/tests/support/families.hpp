#pragma once

// Seeded generators of families satisfying the lambda condition.

#include "trisim/family.hpp"

#include <algorithm>
#include <random>
#include <vector>

namespace trisim::testing {

inline Rational random_rational(std::mt19937_64& rng, int bound) {
    std::uniform_int_distribution<int> num(-bound, bound);
    std::uniform_int_distribution<int> den(1, bound);
    Rational q(num(rng), den(rng));
    q.canonicalize();
    return q;
}

/// gamma * (C~ family) + r.
inline FamilySpec scaled_ctilde(long n, const Rational& gamma, const Rational& r) {
    return FamilySpec::combine(gamma, FamilySpec::ctilde(n), 1, FamilySpec::zero(n, r));
}

/// a^(1)_i = gamma (n-i)(n+1-i), b_i = -gamma (i-1)(n+1-i): the quadratic
/// sequences vanishing where the support conventions require.
inline FamilySpec quadratic_family(long n, const Rational& gamma, const Rational& r) {
    std::vector<Rational> b(n), a1(n);
    for (long i = 1; i <= n; ++i) {
        b[i - 1] = -gamma * ((i - 1) * (n + 1 - i));
        a1[i - 1] = gamma * ((n - i) * (n + 1 - i));
    }
    std::map<long, std::vector<Rational>> a;
    if (n >= 2) a.emplace(1, std::move(a1));
    return FamilySpec(n, r, std::move(b), std::move(a));
}

/// Small integer sequences with the required zero pattern; usually fails
/// the lambda condition.
inline FamilySpec random_integer_family(std::mt19937_64& rng, long n, int bound) {
    std::uniform_int_distribution<int> v(-bound, bound);
    std::vector<Rational> b(n);
    for (long i = 2; i <= n; ++i) b[i - 1] = v(rng);
    std::map<long, std::vector<Rational>> a;
    for (long t = 1; t <= n - 1; ++t) {
        std::vector<Rational> seq(n);
        for (long i = 1; i + t <= n; ++i) seq[i - 1] = v(rng);
        a.emplace(t, std::move(seq));
    }
    return FamilySpec(n, v(rng), std::move(b), std::move(a));
}

/// Filtered random search: keeps distinct candidates passing compute_lambda.
inline std::vector<FamilySpec> search_families(std::mt19937_64& rng, long n, int bound, int tries) {
    std::vector<FamilySpec> found;
    for (int k = 0; k < tries; ++k) {
        FamilySpec candidate = random_integer_family(rng, n, bound);
        try {
            compute_lambda(candidate);
            if (std::find(found.begin(), found.end(), candidate) == found.end()) found.push_back(std::move(candidate));
        } catch (const NotConstant&) {
        }
    }
    return found;
}

struct GeneratedFamily {
    std::string origin;
    FamilySpec spec;
};

/// The mixed generator pool used by the unit and acceptance suites.
inline std::vector<GeneratedFamily> generated_families(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<GeneratedFamily> out;
    std::uniform_int_distribution<long> size(1, 12);
    for (int k = 0; k < 40; ++k) {
        const long n = size(rng);
        out.push_back({"scaled_ctilde", scaled_ctilde(n, random_rational(rng, 9), random_rational(rng, 9))});
    }
    for (int k = 0; k < 20; ++k) {
        const long n = size(rng);
        out.push_back({"quadratic", quadratic_family(n, random_rational(rng, 9), random_rational(rng, 9))});
    }
    for (long n = 1; n <= 5; ++n) {
        for (auto& spec : search_families(rng, n, 1, 4000)) out.push_back({"random_search", std::move(spec)});
    }
    std::uniform_int_distribution<long> small(2, 6);
    for (int k = 0; k < 60; ++k) out.push_back({"basis_sample", sample_family(small(rng), rng)});
    return out;
}

}  // namespace trisim::testing
