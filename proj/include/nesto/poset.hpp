#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "nesto/gamma_engine.hpp"
#include "nesto/graph.hpp"
#include "nesto/parallel.hpp"
#include "nesto/poly.hpp"

namespace nesto {

struct CanonicalTree {
  std::string code;
  int n = 0;
  int leaf_count = 0;
  LabeledGraph graph;   // a representative, labels 1..n
  IntPolynomial gamma;  // empty until build_poset fills it
};

struct PosetEdge {
  std::size_t from = 0;
  std::size_t to = 0;
  bool operator==(const PosetEdge&) const = default;
  auto operator<=>(const PosetEdge&) const = default;
};

/// Trees on n vertices ordered by tree shifts. A shift edge (T, T') means some
/// tree shift of T yields T'; floss edges come from flossing moves with
/// r >= 3 and are annotations only. below[a][b] is true iff b <= a, i.e. b is
/// reachable from a along shift edges (reflexive).
struct TreePoset {
  int n = 0;
  std::vector<CanonicalTree> nodes;
  std::vector<PosetEdge> shift_edges;
  std::vector<PosetEdge> floss_edges;
  std::vector<std::vector<char>> below;

  bool le(std::size_t lower, std::size_t upper) const { return below[upper][lower] != 0; }
  /// Index of the node with this code; throws DomainError when absent.
  std::size_t index_of(const std::string& code) const;
};

/// One tree per isomorphism class, ordered by code. 1 <= n <= 12.
std::vector<CanonicalTree> enumerate_trees(int n);

/// 1 <= n <= 12. gamma is attached to every node through the incremental
/// engine; `memo` may be shared across calls.
TreePoset build_poset(int n, GammaMemo& memo, Execution exec = Execution::parallel);
TreePoset build_poset(int n, Execution exec = Execution::parallel);

struct PosetCheck {
  std::string name;
  bool passed = true;
  std::string detail;
};

struct PosetReport {
  int n = 0;
  std::size_t minimum = 0;  // Path_n
  std::size_t maximum = 0;  // K_{1,n-1}
  std::vector<PosetCheck> checks;
  bool passed() const;
};

/// Evaluates every property of the shift order: unique minimum Path_n,
/// unique maximum K_{1,n-1}, leaf counts along edges, gamma monotone along
/// shift edges, floss edges and the order, and the path/star bounds with
/// equality only at the extremes.
PosetReport check_poset(const TreePoset& p);

/// check_poset, throwing VerificationFailure with the first counterexample.
PosetReport verify_poset(const TreePoset& p);

/// One rank per leaf count, solid shift edges, dashed floss edges, node labels
/// "code | gamma".
std::string poset_to_dot(const TreePoset& p);

}  // namespace nesto
