#pragma once

#include "json.hpp"

#include "nesto/buildset.hpp"
#include "nesto/nested.hpp"
#include "nesto/poly.hpp"
#include "nesto/poset.hpp"

namespace nesto {

using Json = nlohmann::ordered_json;

/// Lowest degree first: [1, 3] is 1 + 3t. The zero polynomial is [].
Json to_json(const IntPolynomial& p);
IntPolynomial polynomial_from_json(const Json& j);

/// {"ground": [labels], "elements": [[labels], ...]}
Json to_json(const BuildingSet& b);
/// Validates labels (1..64) and both axioms; throws ParseError.
BuildingSet building_set_from_json(const Json& j);

/// The counts by size, as an array.
Json to_json(const FaceCensus& c);

Json to_json(const TreePoset& p);

}  // namespace nesto
