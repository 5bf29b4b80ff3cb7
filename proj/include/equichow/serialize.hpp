#pragma once

// JSON encoding of polynomials, presentations and graded groups.
//
// A polynomial is a list of terms in decreasing monomial order; each term is
// [coefficient, name, exponent, name, exponent, ...] with the coefficient as
// a decimal string ("12", "-1/2") and variables in declared order, so 12*t
// is [["12", "t", 1]] and the constant 5 is [["5"]]. A presentation is
//   {"variables": [{"name": "t", "degree": 1}],
//    "coefficient_domain": "integers" | "rationals",
//    "relations": [<polynomial>, ...],
//    "strategy": "principal-univariate"}

#include "json.hpp"

#include "equichow/graded.hpp"
#include "equichow/polynomial.hpp"
#include "equichow/presentation.hpp"

namespace equichow {

using Json = nlohmann::ordered_json;

Json to_json(const Polynomial& p);
Json to_json(const RingPresentation& R);
Json to_json(const GradedAbelianGroup& g);

/// Throws ParseError naming the offending field.
Polynomial polynomial_from_json(const Json& j, const RingPtr& ring);
RingPresentation presentation_from_json(const Json& j);
RingPtr ring_from_json(const Json& variables);

}  // namespace equichow
