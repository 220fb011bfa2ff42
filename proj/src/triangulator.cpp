#include "trisim/triangulator.hpp"

#include "trisim/oracle.hpp"

namespace trisim {

namespace {

std::string at(long i, long j) { return "(" + std::to_string(i) + "," + std::to_string(j) + ")"; }

}  // namespace

BidiagonalResult triangularize_Ctilde(long n) {
    if (n < 1) throw std::invalid_argument("triangularize_Ctilde needs n >= 1");
    BidiagonalResult out;
    out.n = n;
    out.full = conjugate_by_U(build_Ctilde(n));
    for (long i = 1; i <= n; ++i) {
        for (long j = 1; j <= n; ++j) {
            Integer expected = 0;
            if (i == j) expected = Integer(i) * (n - i);
            else if (i == j + 1) expected = Integer(n + 1 - i) * (1 - i);
            const Integer& actual = out.full(i, j);
            if (actual != expected) {
                throw StructureMismatch({at(i, j), expected.get_str(), actual.get_str()});
            }
        }
    }
    for (long i = 1; i <= n; ++i) out.diag.push_back(out.full(i, i));
    for (long i = 2; i <= n; ++i) out.subdiag.push_back(out.full(i, i - 1));
    return out;
}

ProductFactors nicer_product(long n) {
    if (n < 2) throw std::invalid_argument("nicer_product needs n >= 2");
    ProductFactors f;
    for (long i = 1; i <= n - 1; ++i) f.add(Integer(n - 1 + i * (n - 1 - i)));
    return f;
}

Poly conjecture_formula(long n) {
    if (n < 2) throw std::invalid_argument("conjecture_formula needs n >= 2");
    const Integer base = n - 1;
    Poly out = Poly::linear_factor(base);
    auto square = [&out](const Integer& root) {
        const Poly lin = Poly::linear_factor(root);
        out *= lin;
        out *= lin;
    };
    if (n % 2 == 0) {
        const long r = n / 2;
        for (long i = 0; i <= r - 2; ++i) square(base + r * (r - 1) - i * (i + 1));
    } else {
        const long r = (n + 1) / 2;
        const Integer shifted = base + (r - 1) * (r - 1);
        out *= Poly::linear_factor(shifted);
        for (long i = 1; i <= r - 2; ++i) square(shifted - i * i);
    }
    return out;
}

ConjectureReport verify_conjecture(long n) {
    ConjectureReport report;
    report.n = n;
    const Poly conjectured = conjecture_formula(n);
    const Poly product = expand_product(nicer_product(n));
    const Poly oracle = det_tridiagonal(TridiagonalSpec::from_matrix(build_C(n)));
    if (conjectured != product) {
        report.mismatch = Mismatch{"conjecture_formula vs nicer_product", product.to_string(),
                                   conjectured.to_string()};
    } else if (oracle != product) {
        report.mismatch = Mismatch{"det_tridiagonal(C) vs nicer_product", product.to_string(),
                                   oracle.to_string()};
    } else {
        report.pass = true;
        report.polynomial = product;
    }
    return report;
}

LowpartReport verify_lowpart(const RatMatrix& m) {
    const long n = static_cast<long>(m.size());
    for (long i = 1; i <= n; ++i)
        for (long j = 1; j + 2 <= i; ++j)
            if (m(i, j) != 0) {
                throw std::invalid_argument("verify_lowpart: nonzero entry at " + at(i, j) +
                                            " below the first subdiagonal");
            }
    LowpartReport report;
    report.n = n;
    report.conjugate = conjugate_by_U(m);
    for (long i = 1; i <= n; ++i) {
        for (long j = 1; j + 1 <= i; ++j) {
            if (report.conjugate(i, j) != m(i, j)) {
                report.mismatch = Mismatch{at(i, j), m(i, j).get_str(), report.conjugate(i, j).get_str()};
                return report;
            }
        }
    }
    report.pass = true;
    return report;
}

}  // namespace trisim
