#pragma once

#include "trisim/poly.hpp"

#include <optional>
#include <string>

namespace trisim {

/// Binomial coefficient C(top, bottom) for top >= 0. Zero when bottom falls
/// outside [0, top]; sums over unrestricted index ranges rely on that.
/// Negative top throws std::domain_error.
Integer binom(long top, long bottom);

struct IdentityCounterexample {
    std::string identity;  // "pascal", "absorption", "trinomial", "hockey_stick"
    long n = 0;
    long k = 0;
    long j = 0;
    std::string detail;
};

struct IdentityReport {
    long n_max = 0;
    std::uint64_t checks = 0;
    std::optional<IdentityCounterexample> counterexample;

    [[nodiscard]] bool pass() const { return !counterexample.has_value(); }
};

/// Exhaustively checks, for all 0 <= j <= k <= n <= n_max:
///   C(n+1,k) = C(n,k) + C(n,k-1)
///   n C(n-1,k-1) = k C(n,k) = (n-k+1) C(n,k-1)
///   C(n,k) C(k,j) = C(n,j) C(n-j,k-j) = C(n,n-k+j) C(n-k+j,j)
///   C(n+1,k+1) = sum_{i=k}^{n} C(i,k)
/// Stops at the first failure.
IdentityReport check_identity_suite(long n_max);

}  // namespace trisim
