#pragma once

// H_n(t): the number of n x n nonnegative integer matrices whose rows and
// columns all sum to t (lattice points of the t-th dilate of the Birkhoff
// polytope).

#include "trisim/poly.hpp"

namespace trisim {

struct CountQuery {
    long n = 1;
    long t = 0;
};

/// Column-by-column dynamic programming over remaining row capacities.
/// Each call owns its memo table, so concurrent calls are independent.
Integer count_dp(const CountQuery& q);

/// Cell-by-cell exhaustive fill. Guarded to n <= 4, t <= 6
/// (std::invalid_argument beyond).
Integer count_bruteforce(const CountQuery& q);

}  // namespace trisim
