#pragma once

// JSON wire formats. Big numbers always travel as decimal strings
// ("-13", "3/4") so they round-trip exactly; keys keep insertion order so
// output is byte-stable.

#include "trisim/birkhoff.hpp"
#include "trisim/combinatorics.hpp"
#include "trisim/family.hpp"
#include "trisim/matrix.hpp"
#include "trisim/triangulator.hpp"

#include <json.hpp>

#include <stdexcept>
#include <variant>

namespace trisim {

using Json = nlohmann::ordered_json;

/// Malformed or invariant-violating input document.
class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

Integer parse_integer(const std::string& s);
/// "p/q" or an integer string; q must be nonzero.
Rational parse_rational(const std::string& s);
std::string format_rational(const Rational& q);

/// ["25","-10","1"] for t^2 - 10t + 25.
Json poly_to_json(const Poly& p);
Poly poly_from_json(const Json& j);

Json factors_to_json(const ProductFactors& f);

/// {"n", "kind", "entries"}: kind "int" for integer matrices, "poly" for
/// polynomial ones. Rational matrices with a non-integer entry use kind
/// "rat" with "p/q" strings.
Json matrix_to_json(const IntMatrix& m);
Json matrix_to_json(const RatMatrix& m);
Json matrix_to_json(const PolyMatrix& m);

using AnyMatrix = std::variant<RatMatrix, PolyMatrix>;
AnyMatrix matrix_from_json(const Json& j);

/// {"n", "r", "b", "a": {"1": [...], ...}}; omitted bands are zero.
Json family_to_json(const FamilySpec& spec);
FamilySpec family_from_json(const Json& j);

Json rationals_to_json(const std::vector<Rational>& v);

Json mismatch_to_json(const Mismatch& m);
Json report_to_json(const ConjectureReport& r);
Json report_to_json(const LowpartReport& r);
Json report_to_json(const FamilyReport& r);
Json report_to_json(const IdentityReport& r);

}  // namespace trisim
