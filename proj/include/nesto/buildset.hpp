#pragma once

#include <atomic>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "nesto/graph.hpp"
#include "nesto/subset.hpp"

namespace nesto {

/// A building set on `ground`: nonempty subsets containing every singleton and
/// closed under unions of intersecting members. Immutable; copies share the
/// element storage. Elements are kept in (cardinality, bits) order.
class BuildingSet {
 public:
  /// Checks both axioms and throws DomainError if either fails.
  BuildingSet(Subset ground, std::vector<Subset> elements);

  /// Skips the axiom check; for callers that construct valid sets by design.
  /// Duplicates are removed and the order is canonicalized.
  static BuildingSet trusted(Subset ground, std::vector<Subset> elements);

  Subset ground() const { return d_->ground; }
  int ground_size() const { return d_->ground.size(); }
  std::span<const Subset> elements() const { return d_->elements; }
  std::size_t size() const { return d_->elements.size(); }
  bool contains(Subset s) const;

  /// Inclusion-maximal members; a partition of the ground set.
  std::span<const Subset> b_max() const { return d_->b_max; }
  bool connected() const { return d_->b_max.size() == 1 && d_->b_max[0] == d_->ground; }
  /// Dimension of the nestohedron: |ground| - |b_max|.
  int dimension() const { return ground_size() - static_cast<int>(d_->b_max.size()); }

  /// Every non-singleton member is a disjoint union of two members. Cached.
  bool is_flag() const;
  /// Connected, flag and of size 2n - 1.
  bool is_minimal_flag() const;

  /// Members ordered canonically, relabeled to 1..m by rank in the ground
  /// set. Equal keys mean equal building sets up to that relabeling.
  std::vector<std::uint64_t> compact_key() const;

  bool operator==(const BuildingSet& o) const {
    return ground() == o.ground() && std::equal(elements().begin(), elements().end(), o.elements().begin(), o.elements().end());
  }

  std::string to_string() const;

 private:
  struct Data {
    Subset ground;
    std::vector<Subset> elements;
    std::vector<Subset> b_max;
    // Dense membership bitmap indexed by raw bits when the largest label is
    // small; otherwise `elements` is searched.
    std::vector<std::uint64_t> bitmap;
    std::vector<Subset> by_bits;
    mutable std::atomic<signed char> flag{-1};
  };
  explicit BuildingSet(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
  static std::shared_ptr<const Data> build(Subset ground, std::vector<Subset> elements);

  std::shared_ptr<const Data> d_;
};

bool is_building_set(std::span<const Subset> candidate, Subset ground);

/// Subsets of V(g) that induce connected subgraphs.
BuildingSet graphical_building_set(const LabeledGraph& g);

/// B|_I = {J in B : J subset of I}, on I.
BuildingSet restriction(const BuildingSet& b, Subset i);

/// B/I = {J - I : J in B, J not inside I}, on ground - I. Labels are kept.
BuildingSet contraction(const BuildingSet& b, Subset i);

inline bool is_flag(const BuildingSet& b) { return b.is_flag(); }

/// A minimal flag building set inside the ambient set, rooted at `root`,
/// stored as the split chosen at every non-singleton node.
struct DecompositionTree {
  Subset root;
  std::map<Subset, std::pair<Subset, Subset>> splits;

  std::vector<Subset> nodes() const;
  bool contains(Subset s) const;
  /// Throws InternalError unless every split is a disjoint union of members
  /// of `ambient`, every node is reached from the root and singletons close
  /// the tree.
  void validate(const BuildingSet& ambient) const;
  BuildingSet as_building_set() const;
};

/// Deterministic binary decomposition of i: at each node the split whose
/// smaller part is lex_less-least is taken.
DecompositionTree binary_decomposition(const BuildingSet& b, Subset i);

/// A decomposition of i having j as a node (b flag, j a proper subset of i).
DecompositionTree decomposition_containing(const BuildingSet& b, Subset i, Subset j);

/// B[B_1, ..., B_n]: block k of the result carries parts[k] relabeled onto
/// consecutive labels, and every member {i_1..i_m} of b adds the union of the
/// matching blocks. Blocks follow b's ground labels in increasing order.
BuildingSet product_building_set(const BuildingSet& b, std::span<const BuildingSet> parts);

}  // namespace nesto
