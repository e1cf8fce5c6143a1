#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "nesto/buildset.hpp"
#include "nesto/poly.hpp"

namespace nesto {

/// Number of nested sets of each cardinality 0..d. By polarity the entry at
/// size k counts the faces of dimension d - k of the nestohedron.
struct FaceCensus {
  std::vector<std::int64_t> counts_by_size;
  int dimension = 0;

  bool operator==(const FaceCensus&) const = default;
};

struct EnumerationLimits {
  /// Refuse building sets with more than this many non-maximal members.
  std::size_t max_candidates = std::size_t{1} << 20;
  bool override_cap = false;
};

/// Receives each nested set as a span of members in (cardinality, bits) order.
using NestedSetVisitor = std::function<void(std::span<const Subset>)>;

/// Counts nested sets by depth-first backtracking over B - B_max.
FaceCensus enumerate_nested_sets(const BuildingSet& b, const EnumerationLimits& limits = {});

/// Streams every nested set (including the empty one) to `visit`.
void visit_nested_sets(const BuildingSet& b, const NestedSetVisitor& visit, const EnumerationLimits& limits = {});

/// f_k = census[d - k]. Returns the polynomial; its degree is the dimension.
IntPolynomial f_polynomial(const BuildingSet& b, const EnumerationLimits& limits = {});
IntPolynomial f_polynomial(const FaceCensus& census);

/// gamma straight from the face numbers. The ground truth for every gamma
/// computed elsewhere.
IntPolynomial gamma_oracle(const BuildingSet& b, const EnumerationLimits& limits = {});

/// Graded count of nested sets containing i versus the convolution of the
/// censuses of B|_I and B/I (shifted by one for i itself).
bool facet_f_identity_check(const BuildingSet& b, Subset i, const EnumerationLimits& limits = {});

}  // namespace nesto
