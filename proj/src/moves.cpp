#include "nesto/moves.hpp"

#include <optional>
#include <sstream>

#include "nesto/errors.hpp"

namespace nesto {
namespace {

struct BranchPath {
  int branch;
  std::vector<int> path;  // from the branch side towards the leaf, excluding both
};

// Walks inward from a leaf through degree-2 vertices. nullopt when the walk
// ends at another leaf, i.e. the component is a path.
std::optional<BranchPath> walk_to_branch(const LabeledGraph& g, int leaf) {
  std::vector<int> path;
  int prev = leaf;
  int cur = g.neighbors(leaf).min_label();
  while (g.degree(cur) == 2) {
    path.push_back(cur);
    const int next = (g.neighbors(cur) - Subset::single(prev)).min_label();
    prev = cur;
    cur = next;
  }
  if (g.degree(cur) < 3) return std::nullopt;
  return BranchPath{cur, std::vector<int>(path.rbegin(), path.rend())};
}

Subset path_set(const std::vector<int>& path, int leaf) {
  Subset s = Subset::single(leaf);
  for (int v : path) s |= Subset::single(v);
  return s;
}

void require_connected(const LabeledGraph& g, const char* what) {
  if (g.order() == 0 || !g.connected()) throw DomainError(std::string(what) + " needs a connected graph");
}

// The flossing data for an ordered leaf pair, if l and l_hat floss a vertex
// with dist(l, v) <= dist(l_hat, v).
std::optional<FlossingMove> floss_pair(const LabeledGraph& g, int l, int l_hat) {
  std::vector<int> dist(kMaxLabel + 1, -1);
  std::vector<std::int64_t> ways(kMaxLabel + 1, 0);
  dist[static_cast<std::size_t>(l)] = 0;
  ways[static_cast<std::size_t>(l)] = 1;
  Subset seen = Subset::single(l), frontier = seen;
  for (int d = 1; !frontier.empty() && !seen.contains(l_hat); ++d) {
    Subset next;
    frontier.for_each_label([&](int u) { next |= g.neighbors(u); });
    next -= seen;
    next.for_each_label([&](int u) {
      dist[static_cast<std::size_t>(u)] = d;
      std::int64_t w = 0;
      (g.neighbors(u) & frontier).for_each_label([&](int p) { w = std::min<std::int64_t>(2, w + ways[static_cast<std::size_t>(p)]); });
      ways[static_cast<std::size_t>(u)] = w;
    });
    seen |= next;
    frontier = next;
  }
  if (!seen.contains(l_hat) || ways[static_cast<std::size_t>(l_hat)] != 1) return std::nullopt;

  std::vector<int> path{l_hat};
  for (int cur = l_hat; cur != l;) {
    int pred = 0;
    g.neighbors(cur).for_each_label([&](int p) {
      if (dist[static_cast<std::size_t>(p)] == dist[static_cast<std::size_t>(cur)] - 1) pred = p;
    });
    path.push_back(pred);
    cur = pred;
  }
  // path runs l_hat .. l; position from the l end is the distance to l.
  int branched = 0, count = 0;
  for (int v : path)
    if (g.degree(v) >= 3) {
      branched = v;
      ++count;
    }
  if (count != 1) return std::nullopt;
  const int d_l = dist[static_cast<std::size_t>(branched)];
  const int d_hat = dist[static_cast<std::size_t>(l_hat)] - d_l;
  if (d_l > d_hat) return std::nullopt;
  return FlossingMove{l, l_hat, branched, g.neighbors(l).min_label(), d_l + 1, d_hat + 1};
}

}  // namespace

std::string TreeShiftMove::to_string() const {
  std::ostringstream os;
  os << "shift(l=" << leaf << ", c=" << branch << ", path=[";
  for (std::size_t i = 0; i < path.size(); ++i) os << (i ? "," : "") << path[i];
  os << "], F=" << moved.to_string() << ", E=" << rest.to_string() << ")";
  return os.str();
}

std::string FlossingMove::to_string() const {
  std::ostringstream os;
  os << "floss(l=" << leaf << ", l_hat=" << far_leaf << ", v=" << flossed << ", w=" << anchor << ", r=" << r
     << ", r_hat=" << r_hat << ")";
  return os.str();
}

std::vector<TreeShiftMove> enumerate_tree_shifts(const LabeledGraph& g) {
  require_connected(g, "enumerate_tree_shifts");
  std::vector<TreeShiftMove> moves;
  g.leaves().for_each_label([&](int l) {
    const auto walk = walk_to_branch(g, l);
    if (!walk) return;
    const int c = walk->branch;
    const Subset along = path_set(walk->path, l);
    const Subset c_set = Subset::single(c);
    std::vector<Subset> hanging;  // components that may join F
    for (Subset comp : g.components(g.vertices() - c_set - along))
      if (g.induces_tree(comp | c_set)) hanging.push_back(comp);
    if (hanging.size() >= 63) throw GroundSetTooLarge("too many pendant trees at one branch vertex");
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << hanging.size()); ++mask) {
      Subset f;
      for (std::size_t k = 0; k < hanging.size(); ++k)
        if ((mask >> k) & 1U) f |= hanging[k];
      const Subset e = g.vertices() - f - c_set - along;
      if (e.empty()) continue;
      moves.push_back(TreeShiftMove{l, c, walk->path, f, e});
    }
  });
  return moves;
}

void validate_tree_shift(const LabeledGraph& g, const TreeShiftMove& m) {
  auto fail = [&](const std::string& why) { throw DomainError("invalid tree shift " + m.to_string() + ": " + why); };
  require_connected(g, "tree shift");
  if (!g.vertices().contains(m.leaf) || g.degree(m.leaf) != 1) fail("l is not a leaf");
  const auto walk = walk_to_branch(g, m.leaf);
  if (!walk) fail("no vertex of degree > 2 on the way in from l");
  if (walk->branch != m.branch || walk->path != m.path) fail("c or the path to it does not match the graph");
  const Subset c_set = Subset::single(m.branch);
  const Subset along = path_set(m.path, m.leaf);
  if (m.moved.empty() || !m.moved.subset_of(g.vertices() - c_set - along)) fail("F must be a nonempty set off the path");
  if (!g.induces_tree(m.moved | c_set)) fail("F + c does not induce a tree");
  Subset touching;
  m.moved.for_each_label([&](int v) { touching |= g.neighbors(v); });
  if (!(touching - m.moved).subset_of(c_set)) fail("a vertex outside F + c is adjacent to F");
  const Subset e = g.vertices() - m.moved - c_set - along;
  if (e.empty()) fail("E is empty");
  if (e != m.rest) fail("E does not match");
}

LabeledGraph apply_tree_shift(const LabeledGraph& g, const TreeShiftMove& m) {
  validate_tree_shift(g, m);
  LabeledGraph out = g;
  (g.neighbors(m.branch) & m.moved).for_each_label([&](int v) {
    out.remove_edge(v, m.branch);
    out.add_edge(v, m.leaf);
  });
  return out;
}

LabeledGraph reverse_shift(const LabeledGraph& t, int c, int l) {
  if (!t.is_tree()) throw DomainError("reverse_shift needs a tree");
  if (!t.vertices().contains(c) || !t.vertices().contains(l) || !t.adjacent(c, l))
    throw DomainError("reverse_shift needs adjacent vertices");
  if (t.degree(c) < 2 || t.degree(l) < 2) throw DomainError("reverse_shift vertices must not be leaves");
  LabeledGraph out = t;
  (t.neighbors(l) - Subset::single(c)).for_each_label([&](int u) {
    out.remove_edge(u, l);
    out.add_edge(u, c);
  });
  return out;
}

std::vector<FlossingMove> enumerate_flossing(const LabeledGraph& g) {
  require_connected(g, "enumerate_flossing");
  std::vector<FlossingMove> moves;
  const Subset leaves = g.leaves();
  leaves.for_each_label([&](int l) {
    (leaves - Subset::single(l)).for_each_label([&](int l_hat) {
      if (auto m = floss_pair(g, l, l_hat)) moves.push_back(*m);
    });
  });
  return moves;
}

void validate_flossing(const LabeledGraph& g, const FlossingMove& m) {
  require_connected(g, "flossing");
  const Subset leaves = g.leaves();
  if (!leaves.contains(m.leaf) || !leaves.contains(m.far_leaf) || m.leaf == m.far_leaf)
    throw DomainError("invalid flossing move " + m.to_string() + ": l and l_hat must be distinct leaves");
  const auto expected = floss_pair(g, m.leaf, m.far_leaf);
  if (!expected || !(*expected == m)) throw DomainError("invalid flossing move " + m.to_string());
}

LabeledGraph apply_flossing(const LabeledGraph& g, const FlossingMove& m) {
  validate_flossing(g, m);
  LabeledGraph out = g;
  out.remove_edge(m.leaf, m.anchor);
  out.add_edge(m.far_leaf, m.leaf);
  return out;
}

std::int64_t wiener_index(const LabeledGraph& g) {
  require_connected(g, "wiener_index");
  std::int64_t total = 0;
  g.vertices().for_each_label([&](int u) {
    const auto dist = g.distances_from(u);
    g.vertices().for_each_label([&](int v) {
      if (u < v) total += dist[static_cast<std::size_t>(v)];
    });
  });
  return total;
}

}  // namespace nesto
