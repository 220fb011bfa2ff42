#include "trisim/serialize.hpp"

#include <regex>

namespace trisim {

namespace {

const std::regex kIntegerPattern("-?[0-9]+");
const std::regex kRationalPattern("(-?[0-9]+)(/([0-9]+))?");

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw FormatError(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

const std::string& as_string(const Json& j, const char* what) {
    if (!j.is_string()) throw FormatError(std::string(what) + " must be a decimal string");
    return j.get_ref<const std::string&>();
}

long as_size(const Json& j, const char* what) {
    if (!j.is_number_integer()) throw FormatError(std::string(what) + " must be an integer");
    const long v = j.get<long>();
    if (v < 1) throw FormatError(std::string(what) + " must be >= 1");
    return v;
}

template <typename T, typename Fmt>
Json rows_to_json(const Matrix<T>& m, const char* kind, Fmt&& fmt) {
    Json rows = Json::array();
    for (std::size_t i = 1; i <= m.size(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 1; j <= m.size(); ++j) row.push_back(fmt(m(i, j)));
        rows.push_back(std::move(row));
    }
    Json out;
    out["n"] = m.size();
    out["kind"] = kind;
    out["entries"] = std::move(rows);
    return out;
}

template <typename T, typename Parse>
Matrix<T> rows_from_json(const Json& entries, std::size_t n, Parse&& parse) {
    if (!entries.is_array() || entries.size() != n) throw FormatError("entries must be n rows");
    Matrix<T> m(n);
    for (std::size_t i = 1; i <= n; ++i) {
        const Json& row = entries[i - 1];
        if (!row.is_array() || row.size() != n) throw FormatError("each row must have n entries");
        for (std::size_t j = 1; j <= n; ++j) m(i, j) = parse(row[j - 1]);
    }
    return m;
}

std::vector<Rational> rational_list(const Json& j, const char* what) {
    if (!j.is_array()) throw FormatError(std::string(what) + " must be a list");
    std::vector<Rational> out;
    for (const auto& x : j) out.push_back(parse_rational(as_string(x, what)));
    return out;
}

}  // namespace

Integer parse_integer(const std::string& s) {
    if (!std::regex_match(s, kIntegerPattern)) throw FormatError("not an integer: \"" + s + "\"");
    return Integer(s, 10);
}

Rational parse_rational(const std::string& s) {
    std::smatch m;
    if (!std::regex_match(s, m, kRationalPattern)) throw FormatError("not a rational: \"" + s + "\"");
    Rational q(Integer(m[1].str(), 10));
    if (m[3].matched) {
        const Integer den(m[3].str(), 10);
        if (den == 0) throw FormatError("zero denominator: \"" + s + "\"");
        q /= den;
    }
    return q;
}

std::string format_rational(const Rational& q) { return q.get_str(); }

Json poly_to_json(const Poly& p) {
    Json out = Json::array();
    for (const auto& c : p.coeffs()) out.push_back(c.get_str());
    return out;
}

Poly poly_from_json(const Json& j) {
    if (!j.is_array()) throw FormatError("polynomial must be a list of decimal strings");
    std::vector<Integer> coeffs;
    for (const auto& c : j) coeffs.push_back(parse_integer(as_string(c, "coefficient")));
    return Poly(std::move(coeffs));
}

Json factors_to_json(const ProductFactors& f) {
    Json list = Json::array();
    for (const auto& factor : f.factors()) {
        Json item;
        item["root"] = factor.root.get_str();
        item["mult"] = factor.mult;
        list.push_back(std::move(item));
    }
    Json out;
    out["factors"] = std::move(list);
    return out;
}

Json matrix_to_json(const IntMatrix& m) {
    return rows_to_json(m, "int", [](const Integer& x) { return x.get_str(); });
}

Json matrix_to_json(const RatMatrix& m) {
    bool integral = true;
    for (std::size_t i = 1; i <= m.size() && integral; ++i)
        for (std::size_t j = 1; j <= m.size(); ++j)
            if (m(i, j).get_den() != 1) {
                integral = false;
                break;
            }
    return rows_to_json(m, integral ? "int" : "rat", [](const Rational& x) { return x.get_str(); });
}

Json matrix_to_json(const PolyMatrix& m) {
    return rows_to_json(m, "poly", [](const Poly& p) { return poly_to_json(p); });
}

AnyMatrix matrix_from_json(const Json& j) {
    const auto n = static_cast<std::size_t>(as_size(field(j, "n"), "n"));
    const std::string kind = as_string(field(j, "kind"), "kind");
    const Json& entries = field(j, "entries");
    if (kind == "int") {
        return rows_from_json<Rational>(entries, n, [](const Json& x) {
            return Rational(parse_integer(as_string(x, "entry")));
        });
    }
    if (kind == "rat") {
        return rows_from_json<Rational>(entries, n,
                                        [](const Json& x) { return parse_rational(as_string(x, "entry")); });
    }
    if (kind == "poly") {
        return rows_from_json<Poly>(entries, n, [](const Json& x) { return poly_from_json(x); });
    }
    throw FormatError("unknown matrix kind \"" + kind + "\"");
}

Json family_to_json(const FamilySpec& spec) {
    Json out;
    out["n"] = spec.n();
    out["r"] = format_rational(spec.r());
    out["b"] = rationals_to_json(spec.b_values());
    Json bands = Json::object();
    for (const auto& [s, seq] : spec.bands()) bands[std::to_string(s)] = rationals_to_json(seq);
    out["a"] = std::move(bands);
    return out;
}

FamilySpec family_from_json(const Json& j) {
    const long n = as_size(field(j, "n"), "n");
    const Rational r = j.contains("r") ? parse_rational(as_string(j.at("r"), "r")) : Rational(0);
    std::vector<Rational> b = rational_list(field(j, "b"), "b");
    std::map<long, std::vector<Rational>> a;
    if (j.contains("a")) {
        const Json& bands = j.at("a");
        if (!bands.is_object()) throw FormatError("\"a\" must map band index to a list");
        for (const auto& [key, seq] : bands.items()) {
            if (!std::regex_match(key, kIntegerPattern)) throw FormatError("band key \"" + key + "\" is not an integer");
            a.emplace(std::stol(key), rational_list(seq, "a band"));
        }
    }
    try {
        return FamilySpec(n, r, std::move(b), std::move(a));
    } catch (const std::invalid_argument& e) {
        throw FormatError(e.what());
    }
}

Json rationals_to_json(const std::vector<Rational>& v) {
    Json out = Json::array();
    for (const auto& x : v) out.push_back(format_rational(x));
    return out;
}

Json mismatch_to_json(const Mismatch& m) {
    Json out;
    out["where"] = m.where;
    out["expected"] = m.expected;
    out["actual"] = m.actual;
    return out;
}

Json report_to_json(const ConjectureReport& r) {
    Json out;
    out["n"] = r.n;
    out["status"] = r.pass ? "pass" : "fail";
    out["polynomial"] = poly_to_json(r.polynomial);
    if (r.mismatch) out["mismatch"] = mismatch_to_json(*r.mismatch);
    return out;
}

Json report_to_json(const LowpartReport& r) {
    Json out;
    out["n"] = r.n;
    out["status"] = r.pass ? "pass" : "fail";
    out["conjugate"] = matrix_to_json(r.conjugate);
    if (r.mismatch) out["mismatch"] = mismatch_to_json(*r.mismatch);
    return out;
}

Json report_to_json(const FamilyReport& r) {
    Json out;
    out["n"] = r.n;
    out["status"] = r.pass ? "pass" : "fail";
    out["lambda"] = rationals_to_json(r.lambda);
    out["conjugate"] = matrix_to_json(r.conjugate);
    if (r.first_band_closed_form) out["first_band_closed_form"] = *r.first_band_closed_form;
    if (r.mismatch) out["mismatch"] = mismatch_to_json(*r.mismatch);
    return out;
}

Json report_to_json(const IdentityReport& r) {
    Json out;
    out["n_max"] = r.n_max;
    out["status"] = r.pass() ? "pass" : "fail";
    out["checks"] = r.checks;
    if (r.counterexample) {
        const auto& c = *r.counterexample;
        Json ce;
        ce["identity"] = c.identity;
        ce["n"] = c.n;
        ce["k"] = c.k;
        ce["j"] = c.j;
        ce["detail"] = c.detail;
        out["counterexample"] = std::move(ce);
    }
    return out;
}

}  // namespace trisim
