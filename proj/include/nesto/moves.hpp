#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nesto/graph.hpp"

namespace nesto {

/// Detach the pendant forest F from the branch vertex c and hang it from the
/// leaf l at the far end of the path c, c_1, ..., c_k, l.
struct TreeShiftMove {
  int leaf = 0;
  int branch = 0;
  std::vector<int> path;  // c_1..c_k, starting next to the branch vertex
  Subset moved;           // F
  Subset rest;            // E = V - (F + c + path + l), nonempty

  bool operator==(const TreeShiftMove&) const = default;
  std::string to_string() const;
};

/// Leaves l and l_hat floss v: the shortest l..l_hat path is unique and v is
/// its only vertex of degree >= 3. dist(l, v) <= dist(l_hat, v).
struct FlossingMove {
  int leaf = 0;       // l
  int far_leaf = 0;   // l_hat
  int flossed = 0;    // v
  int anchor = 0;     // w, the neighbor of l
  int r = 0;          // dist(l, v) + 1
  int r_hat = 0;      // dist(l_hat, v) + 1

  bool operator==(const FlossingMove&) const = default;
  std::string to_string() const;
};

/// Every (l, c, F) with F a nonempty union of components of G - c that are
/// trees hanging from c by one edge, and E nonempty. Throws DomainError on a
/// disconnected graph.
std::vector<TreeShiftMove> enumerate_tree_shifts(const LabeledGraph& g);

/// Throws DomainError unless m satisfies every tree-shift condition on g.
void validate_tree_shift(const LabeledGraph& g, const TreeShiftMove& m);

/// Replaces each F-c edge by the matching F-l edge.
LabeledGraph apply_tree_shift(const LabeledGraph& g, const TreeShiftMove& m);

/// Inverse construction: every neighbor of l other than c is moved over to c,
/// leaving l a leaf of c. t must be a tree, c and l adjacent non-leaves.
LabeledGraph reverse_shift(const LabeledGraph& t, int c, int l);

/// All flossing moves. When dist(l, v) == dist(l_hat, v) both orientations
/// are listed.
std::vector<FlossingMove> enumerate_flossing(const LabeledGraph& g);

void validate_flossing(const LabeledGraph& g, const FlossingMove& m);

/// Removes (l, w) and adds (l_hat, l).
LabeledGraph apply_flossing(const LabeledGraph& g, const FlossingMove& m);

/// Sum of distances over unordered vertex pairs.
std::int64_t wiener_index(const LabeledGraph& g);

}  // namespace nesto
