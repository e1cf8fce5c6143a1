#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "nesto/graph.hpp"

namespace nesto {

/// AHU code of a tree rooted at its centroid; with two centroids the
/// lexicographically smaller code wins. Equal codes iff isomorphic trees.
std::string tree_code(const LabeledGraph& t);

/// Minimum, over all relabelings, of the upper-triangle adjacency bit
/// string. Labels must be 1..n with n <= 11. Cost is n!.
std::uint64_t canonical_graph_code(const LabeledGraph& g);

/// Permutation search; the independent check for both canonical forms.
bool isomorphic_bruteforce(const LabeledGraph& a, const LabeledGraph& b);

/// One representative per isomorphism class of connected graphs on n
/// vertices (n <= 7), found by adding edges level by level from the empty
/// graph. Sorted by edge count, then canonical code.
std::vector<LabeledGraph> connected_graph_classes(int n);

/// One representative per isomorphism class of trees on n vertices: every
/// tree on n - 1 vertices gains a leaf at every vertex, then duplicates are
/// dropped. Sorted by tree_code.
std::vector<LabeledGraph> tree_classes(int n);

/// G(n, 1/2) conditioned on being connected.
LabeledGraph random_connected_graph(int n, std::mt19937_64& rng);

/// Uniformly random labels 1..n applied to g.
LabeledGraph random_relabeling(const LabeledGraph& g, std::mt19937_64& rng);

}  // namespace nesto
