#pragma once

#include <array>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "nesto/subset.hpp"

namespace nesto {

/// Simple undirected graph on a set of labels (normally 1..n). Adjacency is a
/// Subset per label, so all set-level queries are word operations.
class LabeledGraph {
 public:
  LabeledGraph() = default;
  /// Edgeless graph on 1..n.
  explicit LabeledGraph(int n);
  /// Edgeless graph on an arbitrary label set.
  explicit LabeledGraph(Subset vertices);

  static LabeledGraph from_edges(int n, std::span<const std::pair<int, int>> edges);

  Subset vertices() const { return vertices_; }
  int order() const { return vertices_.size(); }
  int edge_count() const;
  Subset neighbors(int v) const { return adj_[static_cast<std::size_t>(v - 1)]; }
  int degree(int v) const { return neighbors(v).size(); }
  bool adjacent(int u, int v) const { return neighbors(u).contains(v); }
  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<std::pair<int, int>> edges() const;

  /// Throws DomainError on loops, unknown labels and repeated edges.
  void add_edge(int u, int v);
  void remove_edge(int u, int v);

  bool connected() const;
  bool is_tree() const { return connected() && edge_count() == order() - 1; }
  Subset leaves() const;
  /// Component of v inside the induced subgraph on `within`.
  Subset component_of(int v, Subset within) const;
  std::vector<Subset> components(Subset within) const;
  std::vector<Subset> components() const { return components(vertices_); }
  bool induces_connected(Subset s) const;
  bool induces_tree(Subset s) const;
  /// BFS distances indexed by label (index 0 unused); -1 when unreachable.
  std::vector<int> distances_from(int v) const;

  LabeledGraph induced(Subset s) const;
  /// new_label[old] for every vertex; the image must again be a label set.
  LabeledGraph relabeled(std::span<const int> new_label) const;

  bool operator==(const LabeledGraph&) const = default;

 private:
  Subset vertices_;
  std::array<Subset, kMaxLabel> adj_{};
};

/// Graph on V - I where u, v are adjacent if they were, or both touch I.
/// Labels are kept as they are.
LabeledGraph contract_graph(const LabeledGraph& g, Subset i);

LabeledGraph path_graph(int n);
LabeledGraph cycle_graph(int n);
LabeledGraph complete_graph(int n);
/// K_{1,n-1} with the given center.
LabeledGraph star_graph(int n, int center = 1);

/// Text format: "n m" then m lines "u v" (1 <= u < v <= n); blank lines and
/// '#' comments are skipped. Throws ParseError.
LabeledGraph parse_graph(std::istream& in);
LabeledGraph parse_graph(const std::string& text);
LabeledGraph read_graph_file(const std::string& path);
std::string format_graph(const LabeledGraph& g);

}  // namespace nesto
