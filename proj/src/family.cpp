#include "trisim/family.hpp"

#include "trisim/combinatorics.hpp"

#include <algorithm>

namespace trisim {

namespace {

std::string at(long i, long j) { return "(" + std::to_string(i) + "," + std::to_string(j) + ")"; }

long sign(long e) { return (e % 2 == 0) ? 1 : -1; }

Rational alternating_band_sum(const FamilySpec& spec, long i) {
    Rational acc = 0;
    for (long t = 1; t <= spec.n() - 1; ++t) acc += sign(t - 1) * spec.a(t, i);
    return acc;
}

}  // namespace

FamilySpec::FamilySpec(long n, Rational r, std::vector<Rational> b,
                       std::map<long, std::vector<Rational>> a)
    : n_(n), r_(std::move(r)), b_(std::move(b)), a_(std::move(a)) {
    if (n_ < 1) throw std::invalid_argument("family: n must be >= 1");
    r_.canonicalize();
    for (auto& x : b_) x.canonicalize();
    for (auto& [s, seq] : a_)
        for (auto& x : seq) x.canonicalize();
    if (static_cast<long>(b_.size()) != n_) {
        throw std::invalid_argument("family: b must have length n = " + std::to_string(n_));
    }
    if (b_[0] != 0) throw std::invalid_argument("family: b_1 must be 0, got " + b_[0].get_str());
    for (const auto& [s, seq] : a_) {
        if (s < 1 || s > n_ - 1) {
            throw std::invalid_argument("family: band " + std::to_string(s) + " outside 1..n-1");
        }
        if (static_cast<long>(seq.size()) != n_) {
            throw std::invalid_argument("family: band " + std::to_string(s) + " must have length n");
        }
        for (long i = n_ - s + 1; i <= n_; ++i) {
            if (seq[i - 1] != 0) {
                throw std::invalid_argument("family: a^(" + std::to_string(s) + ")_" +
                                            std::to_string(i) + " must vanish since i + s > n");
            }
        }
    }
}

FamilySpec FamilySpec::zero(long n, Rational r) {
    return FamilySpec(n, std::move(r), std::vector<Rational>(n > 0 ? n : 0), {});
}

FamilySpec FamilySpec::ctilde(long n) {
    if (n < 1) throw std::invalid_argument("family: n must be >= 1");
    std::vector<Rational> b(n), a1(n);
    for (long i = 1; i <= n; ++i) {
        b[i - 1] = (n + 1 - i) * (1 - i);
        a1[i - 1] = (n + 1 - i) * (n - i);
    }
    std::map<long, std::vector<Rational>> a;
    if (n >= 2) a.emplace(1, std::move(a1));
    return FamilySpec(n, 0, std::move(b), std::move(a));
}

Rational FamilySpec::b(long i) const {
    if (i < 1 || i > n_) return 0;
    return b_[i - 1];
}

Rational FamilySpec::a(long s, long i) const {
    if (i < 1 || i > n_) return 0;
    auto it = a_.find(s);
    if (it == a_.end()) return 0;
    return it->second[i - 1];
}

bool FamilySpec::only_first_band() const {
    return std::all_of(a_.begin(), a_.end(), [](const auto& band) {
        return band.first == 1 ||
               std::all_of(band.second.begin(), band.second.end(), [](const Rational& x) { return x == 0; });
    });
}

FamilySpec FamilySpec::combine(const Rational& alpha, const FamilySpec& x, const Rational& beta,
                               const FamilySpec& y) {
    if (x.n() != y.n()) throw std::invalid_argument("family combine: size mismatch");
    const long n = x.n();
    std::vector<Rational> b(n);
    for (long i = 1; i <= n; ++i) b[i - 1] = alpha * x.b(i) + beta * y.b(i);
    std::map<long, std::vector<Rational>> a;
    for (const auto* src : {&x, &y}) {
        for (const auto& band : src->bands()) a.try_emplace(band.first, std::vector<Rational>(n));
    }
    for (auto& [s, seq] : a)
        for (long i = 1; i <= n; ++i) seq[i - 1] = alpha * x.a(s, i) + beta * y.a(s, i);
    return FamilySpec(n, alpha * x.r() + beta * y.r(), std::move(b), std::move(a));
}

bool operator==(const FamilySpec& x, const FamilySpec& y) {
    if (x.n() != y.n() || x.r() != y.r() || x.b_values() != y.b_values()) return false;
    for (long s = 1; s <= x.n() - 1; ++s)
        for (long i = 1; i <= x.n(); ++i)
            if (x.a(s, i) != y.a(s, i)) return false;
    return true;
}

Rational condition_lhs(const FamilySpec& spec, long i, long k) {
    const long n = spec.n();
    if (k < 0 || k > n - 2) {
        throw std::invalid_argument("condition_lhs: k = " + std::to_string(k) + " outside 0..n-2");
    }
    if (i < 1 || i > n - k) {
        throw std::invalid_argument("condition_lhs: i = " + std::to_string(i) + " outside 1..n-k");
    }
    Rational acc = spec.b(i + 1) - spec.b(i);
    for (long t = 1; t <= n - 1; ++t) {
        if (spec.bands().find(t) == spec.bands().end()) continue;
        for (long l = 0; l <= t - 1; ++l) {
            const Integer weight = sign(l + t) * binom(t - 1, l);
            const Integer lead = binom(t - l + k, t - 1);
            const Integer trail = binom(t - 1 - l + k, t - 1);
            if (lead != 0) acc += Rational(weight * lead) * spec.a(t, i + 1 - l + k);
            if (trail != 0) acc -= Rational(weight * trail) * spec.a(t, i - l + k);
        }
    }
    return acc;
}

LambdaVector compute_lambda(const FamilySpec& spec) {
    const long n = spec.n();
    LambdaVector lambda;
    for (long k = 0; k <= n - 2; ++k) {
        Rational candidate = condition_lhs(spec, 1, k);
        for (long i = 2; i <= n - k; ++i) {
            Rational value = condition_lhs(spec, i, k);
            if (value != candidate) throw NotConstant(k, i, candidate, value);
        }
        lambda.push_back(std::move(candidate));
    }
    return lambda;
}

RatMatrix build_A(const FamilySpec& spec) {
    const long n = spec.n();
    RatMatrix a(static_cast<std::size_t>(n));
    for (long i = 1; i <= n; ++i) {
        a(i, i) = spec.r() + spec.b(i) + alternating_band_sum(spec, i);
        if (i > 1) a(i, i - 1) = spec.b(i);
        for (long t = 1; i + t <= n; ++t) a(i, i + t) = spec.a(t, i);
    }
    return a;
}

RatMatrix predicted_conjugate(const FamilySpec& spec, const LambdaVector& lambda) {
    const long n = spec.n();
    if (static_cast<long>(lambda.size()) != std::max(n - 1, 0L)) {
        throw std::invalid_argument("predicted_conjugate: lambda must have length n-1");
    }
    RatMatrix out(static_cast<std::size_t>(n));
    for (long i = 1; i <= n; ++i) {
        Rational d = spec.r();
        for (long k = 0; k <= n - i - 1; ++k) d += lambda[k];
        out(i, i) = d;
        if (i > 1) out(i, i - 1) = spec.b(i);
    }
    return out;
}

FamilyReport verify_family(const FamilySpec& spec) {
    FamilyReport report;
    report.n = spec.n();
    report.lambda = compute_lambda(spec);
    report.conjugate = conjugate_by_U(build_A(spec));
    report.predicted = predicted_conjugate(spec, report.lambda);

    const long n = spec.n();
    for (long i = 1; i <= n && !report.mismatch; ++i) {
        for (long j = 1; j <= n; ++j) {
            if (report.conjugate(i, j) != report.predicted(i, j)) {
                report.mismatch = Mismatch{at(i, j), report.predicted(i, j).get_str(),
                                           report.conjugate(i, j).get_str()};
                break;
            }
        }
    }

    if (spec.only_first_band()) {
        bool ok = true;
        for (long i = 1; i <= n; ++i) {
            const Rational closed = spec.r() + spec.a(1, i) + (n - i) * (spec.b(i + 1) - spec.b(i));
            if (closed != report.predicted(i, i)) {
                ok = false;
                if (!report.mismatch) {
                    report.mismatch = Mismatch{"closed-form diagonal " + at(i, i), closed.get_str(),
                                               report.predicted(i, i).get_str()};
                }
                break;
            }
        }
        report.first_band_closed_form = ok;
    }
    report.pass = !report.mismatch.has_value();
    return report;
}

std::map<long, std::vector<Rational>> compute_c(const FamilySpec& spec) {
    const long n = spec.n();
    std::map<long, std::vector<Rational>> c;
    for (long s = 1; s <= n - 2; ++s) {
        std::vector<Rational> seq(n - 1);
        for (long i = 1; i <= n - 1; ++i) {
            Rational own = 0;
            for (long t = s + 1; t <= n - 1; ++t) own += sign(t - 1) * spec.a(t, i);
            Rational next = 0;
            for (long t = s; t <= n - 1; ++t) next += sign(t - 1) * spec.a(t, i + 1);
            Rational value = sign(s) * (own - next);
            if (s + i > n - 1 && value != 0) {
                throw std::logic_error("c^(" + std::to_string(s) + ")_" + std::to_string(i) +
                                       " = " + value.get_str() + " should vanish");
            }
            seq[i - 1] = std::move(value);
        }
        c.emplace(s, std::move(seq));
    }
    return c;
}

EliminationResult eliminate_step(const FamilySpec& spec) {
    const long n = spec.n();
    if (n < 2) throw std::invalid_argument("eliminate_step needs n >= 2");
    const RatMatrix p = to_rational(build_P(n));
    const RatMatrix q = to_rational(build_Q(n));
    RatMatrix paq = mat_mul(mat_mul(p, build_A(spec)), q);

    auto expect = [&](long i, long j, const Rational& want) {
        if (paq(i, j) != want) throw BlockMismatch({at(i, j), want.get_str(), paq(i, j).get_str()});
    };

    for (long i = 1; i <= n - 1; ++i) expect(i, n, 0);
    for (long j = 1; j <= n - 2; ++j) expect(n, j, 0);
    expect(n, n - 1, spec.b(n));
    expect(n, n, spec.r());

    const auto c = compute_c(spec);
    const long m = n - 1;
    RatMatrix a1(static_cast<std::size_t>(m));
    for (long i = 1; i <= m; ++i) {
        for (long j = 1; j <= m; ++j) {
            Rational want = 0;
            if (i == j) want = spec.r() + spec.b(i + 1) + alternating_band_sum(spec, i);
            else if (i == j + 1) want = spec.b(i);
            else if (j > i) want = c.at(j - i)[i - 1];
            expect(i, j, want);
            a1(i, j) = paq(i, j);
        }
    }

    std::vector<Rational> b_row(m);
    for (long j = 1; j <= m; ++j) b_row[j - 1] = paq(n, j);

    std::vector<Rational> sub_b(spec.b_values().begin(), spec.b_values().end() - 1);
    FamilySpec sub(m, spec.r(), std::move(sub_b), c);
    return EliminationResult{std::move(paq), std::move(a1), std::move(b_row), std::move(sub)};
}

namespace {

// Reduced row echelon form over Q; returns pivot columns.
std::vector<std::size_t> rref(std::vector<std::vector<Rational>>& rows, std::size_t cols) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t p = r;
        while (p < rows.size() && rows[p][c] == 0) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[r], rows[p]);
        const Rational inv = 1 / rows[r][c];
        for (auto& x : rows[r]) x *= inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c] == 0) continue;
            const Rational f = rows[i][c];
            for (std::size_t j = c; j < cols; ++j) rows[i][j] -= f * rows[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

std::vector<FamilySpec> family_basis(long n) {
    if (n < 1) throw std::invalid_argument("family_basis needs n >= 1");
    // Unknowns: b_2..b_n, then a^(t)_i for i + t <= n. lambda(k) is
    // eliminated by differencing consecutive rows of the same k.
    struct Slot {
        long band;  // 0 for b
        long i;
    };
    std::vector<Slot> slots;
    for (long i = 2; i <= n; ++i) slots.push_back({0, i});
    for (long t = 1; t <= n - 1; ++t)
        for (long i = 1; i + t <= n; ++i) slots.push_back({t, i});

    auto unit = [&](const Slot& slot) {
        std::vector<Rational> b(n);
        std::map<long, std::vector<Rational>> a;
        if (slot.band == 0) {
            b[slot.i - 1] = 1;
        } else {
            std::vector<Rational> seq(n);
            seq[slot.i - 1] = 1;
            a.emplace(slot.band, std::move(seq));
        }
        return FamilySpec(n, 0, std::move(b), std::move(a));
    };

    const std::size_t cols = slots.size();
    std::vector<std::vector<Rational>> rows;
    std::vector<FamilySpec> units;
    units.reserve(cols);
    for (const auto& s : slots) units.push_back(unit(s));
    for (long k = 0; k <= n - 2; ++k) {
        for (long i = 2; i <= n - k; ++i) {
            std::vector<Rational> row(cols);
            for (std::size_t c = 0; c < cols; ++c) {
                row[c] = condition_lhs(units[c], i, k) - condition_lhs(units[c], 1, k);
            }
            rows.push_back(std::move(row));
        }
    }

    const auto pivots = rref(rows, cols);
    std::vector<bool> is_pivot(cols, false);
    for (auto p : pivots) is_pivot[p] = true;

    std::vector<FamilySpec> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> x(cols);
        x[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = -rows[r][free];

        std::vector<Rational> b(n);
        std::map<long, std::vector<Rational>> a;
        for (std::size_t c = 0; c < cols; ++c) {
            if (x[c] == 0) continue;
            const Slot& s = slots[c];
            if (s.band == 0) {
                b[s.i - 1] = x[c];
            } else {
                auto& seq = a.try_emplace(s.band, std::vector<Rational>(n)).first->second;
                seq[s.i - 1] = x[c];
            }
        }
        basis.emplace_back(n, 0, std::move(b), std::move(a));
    }
    return basis;
}

FamilySpec sample_family(long n, std::mt19937_64& rng) {
    const auto basis = family_basis(n);
    std::uniform_int_distribution<int> weight(-3, 3);
    std::uniform_int_distribution<int> shift(-5, 5);
    FamilySpec out = FamilySpec::zero(n, Rational(shift(rng)));
    for (const auto& v : basis) out = FamilySpec::combine(1, out, Rational(weight(rng)), v);
    return out;
}

}  // namespace trisim
