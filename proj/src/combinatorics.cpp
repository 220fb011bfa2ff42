#include "trisim/combinatorics.hpp"

#include <stdexcept>

namespace trisim {

Integer binom(long top, long bottom) {
    if (top < 0) throw std::domain_error("binom: negative top " + std::to_string(top));
    if (bottom < 0 || bottom > top) return 0;
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(top),
                 static_cast<unsigned long>(bottom));
    return out;
}

namespace {

std::string show(const Integer& lhs, const Integer& rhs) {
    return lhs.get_str() + " != " + rhs.get_str();
}

}  // namespace

IdentityReport check_identity_suite(long n_max) {
    if (n_max < 1) throw std::invalid_argument("identity suite needs n_max >= 1");
    IdentityReport report;
    report.n_max = n_max;

    auto fail = [&](const char* name, long n, long k, long j, std::string detail) {
        report.counterexample = IdentityCounterexample{name, n, k, j, std::move(detail)};
    };

    for (long n = 0; n <= n_max; ++n) {
        for (long k = 0; k <= n; ++k) {
            ++report.checks;
            const Integer pascal_lhs = binom(n + 1, k);
            const Integer pascal_rhs = binom(n, k) + binom(n, k - 1);
            if (pascal_lhs != pascal_rhs) {
                fail("pascal", n, k, 0, show(pascal_lhs, pascal_rhs));
                return report;
            }

            if (k >= 1) {
                ++report.checks;
                const Integer a = n * binom(n - 1, k - 1);
                const Integer b = k * binom(n, k);
                const Integer c = (n - k + 1) * binom(n, k - 1);
                if (a != b || b != c) {
                    fail("absorption", n, k, 0, a.get_str() + ", " + b.get_str() + ", " + c.get_str());
                    return report;
                }
            }

            ++report.checks;
            Integer hockey = 0;
            for (long i = k; i <= n; ++i) hockey += binom(i, k);
            const Integer hockey_lhs = binom(n + 1, k + 1);
            if (hockey_lhs != hockey) {
                fail("hockey_stick", n, k, 0, show(hockey_lhs, hockey));
                return report;
            }

            for (long j = 0; j <= k; ++j) {
                ++report.checks;
                const Integer a = binom(n, k) * binom(k, j);
                const Integer b = binom(n, j) * binom(n - j, k - j);
                const Integer c = binom(n, n - k + j) * binom(n - k + j, j);
                if (a != b || b != c) {
                    fail("trinomial", n, k, j, a.get_str() + ", " + b.get_str() + ", " + c.get_str());
                    return report;
                }
            }
        }
    }
    return report;
}

}  // namespace trisim
