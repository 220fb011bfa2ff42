#include "trisim/poly.hpp"

#include <algorithm>
#include <sstream>

namespace trisim {

Poly::Poly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

Poly::Poly(const Integer& c) {
    if (c != 0) coeffs_.push_back(c);
}

Poly Poly::linear_factor(const Integer& root) { return Poly({Integer(-root), Integer(1)}); }

Poly Poly::t() { return Poly({Integer(0), Integer(1)}); }

long Poly::degree() const {
    return coeffs_.empty() ? kZeroDegree : static_cast<long>(coeffs_.size()) - 1;
}

Integer Poly::coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Integer(0); }

const Integer& Poly::leading() const {
    if (coeffs_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
    return coeffs_.back();
}

void Poly::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Poly& Poly::operator+=(const Poly& q) {
    if (q.coeffs_.size() > coeffs_.size()) coeffs_.resize(q.coeffs_.size());
    for (std::size_t k = 0; k < q.coeffs_.size(); ++k) coeffs_[k] += q.coeffs_[k];
    normalize();
    return *this;
}

Poly& Poly::operator-=(const Poly& q) {
    if (q.coeffs_.size() > coeffs_.size()) coeffs_.resize(q.coeffs_.size());
    for (std::size_t k = 0; k < q.coeffs_.size(); ++k) coeffs_[k] -= q.coeffs_[k];
    normalize();
    return *this;
}

Poly operator*(const Poly& p, const Poly& q) {
    if (p.is_zero() || q.is_zero()) return {};
    std::vector<Integer> out(p.coeffs_.size() + q.coeffs_.size() - 1);
    for (std::size_t i = 0; i < p.coeffs_.size(); ++i) {
        if (p.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < q.coeffs_.size(); ++j) {
            mpz_addmul(out[i + j].get_mpz_t(), p.coeffs_[i].get_mpz_t(), q.coeffs_[j].get_mpz_t());
        }
    }
    // Z is an integral domain, so the leading product is nonzero.
    return Poly(std::move(out));
}

Poly& Poly::operator*=(const Poly& q) {
    *this = *this * q;
    return *this;
}

Poly& Poly::operator*=(const Integer& c) {
    if (c == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& a : coeffs_) a *= c;
    return *this;
}

Poly operator-(Poly p) {
    for (auto& a : p.coeffs_) a = -a;
    return p;
}

std::string Poly::to_string() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        const Integer& c = coeffs_[k];
        if (c == 0) continue;
        Integer mag = abs(c);
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        const bool unit = (mag == 1);
        if (k == 0) {
            os << mag;
            continue;
        }
        if (!unit) os << mag << "*";
        os << "t";
        if (k > 1) os << "^" << k;
    }
    return os.str();
}

Poly poly_add(const Poly& p, const Poly& q) { return p + q; }

Poly poly_mul(const Poly& p, const Poly& q) { return p * q; }

Poly poly_shift(const Poly& p, const Integer& c) {
    // Taylor shift by repeated synthetic division: p(t - c) = sum_k d_k t^k,
    // where d_k are the coefficients of p expanded around -c.
    std::vector<Integer> a = p.coeffs();
    const std::size_t n = a.size();
    const Integer shift = -c;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        for (std::size_t k = n - 1; k-- > i;) {
            mpz_addmul(a[k].get_mpz_t(), a[k + 1].get_mpz_t(), shift.get_mpz_t());
        }
    }
    return Poly(std::move(a));
}

Rational poly_eval(const Poly& p, const Rational& x) {
    Rational acc = 0;
    const auto& c = p.coeffs();
    for (std::size_t k = c.size(); k-- > 0;) acc = acc * x + Rational(c[k]);
    return acc;
}

Poly divide_exact(const Poly& p, const Poly& q) {
    if (q.is_zero()) throw std::domain_error("division by the zero polynomial");
    if (p.is_zero()) return {};
    if (p.degree() < q.degree()) {
        throw InternalDivisionError("inexact polynomial division: " + p.to_string() + " / " +
                                    q.to_string());
    }
    std::vector<Integer> rem = p.coeffs();
    const auto& d = q.coeffs();
    const std::size_t dq = d.size() - 1;
    std::vector<Integer> quot(rem.size() - dq);
    Integer r;
    for (std::size_t k = quot.size(); k-- > 0;) {
        Integer& top = rem[k + dq];
        if (top == 0) continue;
        mpz_fdiv_qr(quot[k].get_mpz_t(), r.get_mpz_t(), top.get_mpz_t(), d.back().get_mpz_t());
        if (r != 0) {
            throw InternalDivisionError("inexact polynomial division: " + p.to_string() + " / " +
                                        q.to_string());
        }
        for (std::size_t j = 0; j <= dq; ++j) {
            mpz_submul(rem[k + j].get_mpz_t(), quot[k].get_mpz_t(), d[j].get_mpz_t());
        }
    }
    for (std::size_t j = 0; j < dq; ++j) {
        if (rem[j] != 0) {
            throw InternalDivisionError("inexact polynomial division: " + p.to_string() + " / " +
                                        q.to_string());
        }
    }
    return Poly(std::move(quot));
}

std::pair<Poly, Integer> divide_linear(const Poly& p, const Integer& root) {
    const auto& a = p.coeffs();
    if (a.empty()) return {Poly{}, Integer(0)};
    std::vector<Integer> quot(a.size() - 1);
    Integer carry = 0;
    for (std::size_t k = a.size(); k-- > 0;) {
        carry = carry * root + a[k];
        if (k > 0) quot[k - 1] = carry;
    }
    return {Poly(std::move(quot)), carry};
}

ProductFactors::ProductFactors(std::initializer_list<std::pair<long, std::uint32_t>> factors) {
    for (const auto& [root, mult] : factors) add(Integer(root), mult);
}

void ProductFactors::add(const Integer& root, std::uint32_t mult) {
    if (mult == 0) throw std::invalid_argument("factor multiplicity must be positive");
    auto it = std::lower_bound(factors_.begin(), factors_.end(), root,
                               [](const Factor& f, const Integer& r) { return f.root < r; });
    if (it != factors_.end() && it->root == root) {
        it->mult += mult;
    } else {
        factors_.insert(it, Factor{root, mult});
    }
}

std::uint64_t ProductFactors::total_degree() const {
    std::uint64_t d = 0;
    for (const auto& f : factors_) d += f.mult;
    return d;
}

Poly expand_product(const ProductFactors& f) {
    Poly out(1);
    for (const auto& factor : f.factors()) {
        const Poly lin = Poly::linear_factor(factor.root);
        for (std::uint32_t m = 0; m < factor.mult; ++m) out *= lin;
    }
    return out;
}

}  // namespace trisim
