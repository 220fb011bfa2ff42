#include "trisim/birkhoff.hpp"

#include <doctest.h>

#include <thread>

using namespace trisim;

namespace {

Integer factorial(long n) {
    Integer f = 1;
    for (long k = 2; k <= n; ++k) f *= k;
    return f;
}

}  // namespace

TEST_CASE("small values") {
    CHECK(count_dp({3, 2}) == 21);
    CHECK(count_bruteforce({3, 2}) == 21);
    CHECK(count_bruteforce({3, 1}) == 6);
    for (long t = 0; t <= 6; ++t) CHECK(count_bruteforce({1, t}) == 1);
    // 4x4 magic-square counts 1, 24, 282, 2008, 10147
    CHECK(count_dp({4, 2}) == 282);
    CHECK(count_dp({4, 3}) == 2008);
    CHECK(count_dp({4, 4}) == 10147);
}

TEST_CASE("dp agrees with brute force") {
    for (long n = 1; n <= 4; ++n)
        for (long t = 0; t <= 6; ++t) CHECK(count_dp({n, t}) == count_bruteforce({n, t}));
}

TEST_CASE("H_n(0) = 1 and H_n(1) = n!") {
    for (long n = 1; n <= 6; ++n) {
        CHECK(count_dp({n, 0}) == 1);
        CHECK(count_dp({n, 1}) == factorial(n));
        if (n <= 4) {
            CHECK(count_bruteforce({n, 0}) == 1);
            CHECK(count_bruteforce({n, 1}) == factorial(n));
        }
    }
}

TEST_CASE("H_2(t) = t + 1") {
    for (long t = 0; t <= 30; ++t) CHECK(count_dp({2, t}) == t + 1);
}

TEST_CASE("strictly increasing in t") {
    for (long n = 2; n <= 4; ++n)
        for (long t = 0; t <= 10; ++t) CHECK(count_dp({n, t + 1}) > count_dp({n, t}));
}

TEST_CASE("argument guards") {
    CHECK_THROWS_AS(count_dp({0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(count_dp({2, -1}), std::invalid_argument);
    CHECK_THROWS_AS(count_bruteforce({5, 1}), std::invalid_argument);
    CHECK_THROWS_AS(count_bruteforce({3, 7}), std::invalid_argument);
}

TEST_CASE("concurrent queries are independent") {
    std::vector<Integer> results(8);
    std::vector<std::thread> threads;
    for (long k = 0; k < 8; ++k) {
        threads.emplace_back([&results, k] { results[k] = count_dp({3 + k % 2, 3 + k / 2}); });
    }
    for (auto& th : threads) th.join();
    for (long k = 0; k < 8; ++k) CHECK(results[k] == count_dp({3 + k % 2, 3 + k / 2}));
}
