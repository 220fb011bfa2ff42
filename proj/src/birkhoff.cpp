#include "trisim/birkhoff.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <vector>

namespace trisim {

namespace {

void validate(const CountQuery& q) {
    if (q.n < 1) throw std::invalid_argument("count: n must be >= 1");
    if (q.t < 0) throw std::invalid_argument("count: t must be >= 0");
}

class ColumnDp {
public:
    ColumnDp(long n, long t) : n_(n), t_(t) {}

    Integer count(const std::vector<long>& capacity, long columns_left) {
        if (columns_left == 0) return 1;  // capacities sum to t * columns_left = 0
        auto key = capacity;
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;

        Integer total = 0;
        std::vector<long> next = capacity;
        fill_column(0, t_, next, columns_left, total);
        memo_.emplace(std::move(key), total);
        return total;
    }

private:
    // Chooses column entry for row `row` given `remaining` column sum; `next`
    // holds capacities after the entries chosen so far.
    void fill_column(long row, long remaining, std::vector<long>& next, long columns_left,
                     Integer& total) {
        if (row == n_ - 1) {
            if (remaining > next[row]) return;
            next[row] -= remaining;
            total += count(next, columns_left - 1);
            next[row] += remaining;
            return;
        }
        const long cap = std::min(next[row], remaining);
        for (long v = 0; v <= cap; ++v) {
            next[row] -= v;
            fill_column(row + 1, remaining - v, next, columns_left, total);
            next[row] += v;
        }
    }

    long n_;
    long t_;
    std::map<std::vector<long>, Integer> memo_;
};

struct BruteFill {
    long n;
    long t;
    std::vector<long> row_left;
    std::vector<long> col_left;
    Integer found = 0;

    void cell(long i, long j) {
        if (i == n) {
            ++found;
            return;
        }
        const long ni = (j + 1 == n) ? i + 1 : i;
        const long nj = (j + 1 == n) ? 0 : j + 1;
        // Last cell in a row or column is forced by its budget.
        long lo = 0;
        long hi = std::min(row_left[i], col_left[j]);
        if (j == n - 1) {
            lo = std::max(lo, row_left[i]);
            hi = std::min(hi, row_left[i]);
        }
        if (i == n - 1) {
            lo = std::max(lo, col_left[j]);
            hi = std::min(hi, col_left[j]);
        }
        for (long v = lo; v <= hi; ++v) {
            row_left[i] -= v;
            col_left[j] -= v;
            cell(ni, nj);
            row_left[i] += v;
            col_left[j] += v;
        }
    }
};

}  // namespace

Integer count_dp(const CountQuery& q) {
    validate(q);
    ColumnDp dp(q.n, q.t);
    return dp.count(std::vector<long>(q.n, q.t), q.n);
}

Integer count_bruteforce(const CountQuery& q) {
    validate(q);
    if (q.n > 4 || q.t > 6) {
        throw std::invalid_argument("count_bruteforce limited to n <= 4, t <= 6");
    }
    BruteFill fill{q.n, q.t, std::vector<long>(q.n, q.t), std::vector<long>(q.n, q.t)};
    fill.cell(0, 0);
    return fill.found;
}

}  // namespace trisim
