#pragma once

// JSON encodings of colourings, complexes, polynomials, actions and
// certificates.  Output objects keep insertion order so that identical
// inputs serialize byte for byte identically.

#include <string>

#include "json.hpp"
#include "spancol/colouring.hpp"
#include "spancol/realize.hpp"
#include "spancol/sr.hpp"
#include "spancol/steenrod.hpp"

namespace spancol {

using Json = nlohmann::ordered_json;

// {variant, field: {p, e}, n, assignments}.  A weak assignment is a vector,
// an intermediate one a one-row matrix, a full one [line rows, hyperplane rows].
Json colouring_to_json(const SpanColouring& c);
SpanColouring colouring_from_json(const Json& j);

// {vertices: [{name, degree}], facets: [[names]]}
Json complex_to_json(const GradedComplex& k);
GradedComplex complex_from_json(const Json& j);

// A list of {generator: exponent} maps; coefficients other than 1 are
// written as [coefficient, {generator: exponent}].
Json poly_to_json(const Poly& p);
Poly poly_from_json(const Json& j, const RingPtr& ring);

// {ring, D, sq2: {gen: poly}, sq4: {gen: poly}}; other stored operations
// appear under sq<k>.
Json action_to_json(const SteenrodAction& a);
SteenrodAction action_from_json(const Json& j);

Json certificate_to_json(const Certificate& c);
Json modp_to_json(const ModpAction& a);
Json extraction_to_json(const Extraction& e);

Json read_json_file(const std::string& path);

}  // namespace spancol
