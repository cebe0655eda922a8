#pragma once

// JSON encodings of the library types and the report objects shared by the
// command-line tool and the Python module. All numbers cross the boundary as
// exact rational strings ("3", "-5/7"); integers are also accepted on input.

#include "wittforge/invol12.hpp"
#include "wittforge/ramlattice.hpp"

#include <nlohmann/json.hpp>

namespace wittforge::json_io {

using nlohmann::json;

Rational rational_from_json(const json& j);
json to_json(const Rational& q);
json to_json(const SquareClass& c);
json to_json(const BrauerClass& b);
json to_json(const H3Class& h);

QuadForm quadform_from_json(const json& j);     // {"diag": [...]}
json to_json(const QuadForm& q);

QuaternionAlgebra algebra_from_json(const json& j);  // {"a": .., "b": ..}
json to_json(const QuaternionAlgebra& h);

QuatElem quatelem_from_json(const json& j);  // {"alg": {...}, "coords": [t, x, y, z]}
json to_json(const QuatElem& q);

/// {"alg": {...}, "entries": [[t,x,y,z], ...]} or
/// {"alg": {...}, "common": [t,x,y,z], "multipliers": [...]}
SkewHermForm skewherm_from_json(const json& j);
json to_json(const SkewHermForm& h);

/// {"a0": {"split": {"diag": [...]}} | {"m3h": {...}}, "h": {"alg": {...}, "i": [t,x,y,z]}}
ProductPresentation presentation_from_json(const json& j);
json to_json(const ProductPresentation& p);

/// {"slots": [[[n1,n2,n3,n4], [..]], [[..], [..]]]}
std::array<RamSymbol, 2> slots_from_json(const json& j);

json to_json(const PfisterDecomposition& d);

/// Parses text, mapping syntax errors to ParseError.
json parse(const std::string& text);

json invariants_report(const QuadForm& q, long bound = default_search_bound());
json decompose12_report(const QuadForm& psi, long bound = default_search_bound());
json hyper_over_report(const QuadForm& q, const SquareClass& d);
json f3_report(const ProductPresentation& p, long bound = default_search_bound());
json exists_report(const QuaternionAlgebra& h1, const QuaternionAlgebra& h2, long bound = default_search_bound());
json additive_report(const ProductPresentation& p, long bound = default_search_bound());
json obstruction_report(const std::array<RamSymbol, 2>& d);

}  // namespace wittforge::json_io
