#include "nesto/poset.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "nesto/buildset.hpp"
#include "nesto/catalog.hpp"
#include "nesto/errors.hpp"
#include "nesto/moves.hpp"

namespace nesto {

std::size_t TreePoset::index_of(const std::string& code) const {
  auto it = std::lower_bound(nodes.begin(), nodes.end(), code, [](const CanonicalTree& t, const std::string& c) { return t.code < c; });
  if (it == nodes.end() || it->code != code) throw DomainError("no tree with code " + code);
  return static_cast<std::size_t>(it - nodes.begin());
}

std::vector<CanonicalTree> enumerate_trees(int n) {
  if (n < 1 || n > 12) throw DomainError("enumerate_trees supports 1 <= n <= 12, got " + std::to_string(n));
  std::vector<CanonicalTree> out;
  for (auto& g : tree_classes(n)) out.push_back(CanonicalTree{tree_code(g), n, g.leaves().size(), g, {}});
  return out;
}

TreePoset build_poset(int n, GammaMemo& memo, Execution exec) {
  if (n < 1 || n > 12) throw DomainError("build_poset supports 1 <= n <= 12, got " + std::to_string(n));
  TreePoset p;
  p.n = n;
  p.nodes = enumerate_trees(n);
  const std::size_t count = p.nodes.size();

  std::vector<std::vector<PosetEdge>> shifts(count), flosses(count);
  for_each_index(count, exec, [&](std::size_t i) {
    CanonicalTree& node = p.nodes[i];
    node.gamma = gamma_incremental(graphical_building_set(node.graph), memo);
    for (const auto& m : enumerate_tree_shifts(node.graph))
      shifts[i].push_back({i, p.index_of(tree_code(apply_tree_shift(node.graph, m)))});
    for (const auto& m : enumerate_flossing(node.graph)) {
      if (m.r < 3) continue;
      const std::size_t j = p.index_of(tree_code(apply_flossing(node.graph, m)));
      if (j != i) flosses[i].push_back({i, j});
    }
  });
  for (std::size_t i = 0; i < count; ++i) {
    p.shift_edges.insert(p.shift_edges.end(), shifts[i].begin(), shifts[i].end());
    p.floss_edges.insert(p.floss_edges.end(), flosses[i].begin(), flosses[i].end());
  }
  for (auto* edges : {&p.shift_edges, &p.floss_edges}) {
    std::sort(edges->begin(), edges->end());
    edges->erase(std::unique(edges->begin(), edges->end()), edges->end());
  }

  std::vector<std::vector<std::size_t>> out(count);
  for (const auto& e : p.shift_edges) out[e.from].push_back(e.to);
  p.below.assign(count, std::vector<char>(count, 0));
  for (std::size_t s = 0; s < count; ++s) {
    std::vector<std::size_t> stack{s};
    p.below[s][s] = 1;
    while (!stack.empty()) {
      const std::size_t u = stack.back();
      stack.pop_back();
      for (std::size_t v : out[u])
        if (!p.below[s][v]) {
          p.below[s][v] = 1;
          stack.push_back(v);
        }
    }
  }
  return p;
}

TreePoset build_poset(int n, Execution exec) {
  GammaMemo memo;
  return build_poset(n, memo, exec);
}

bool PosetReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const PosetCheck& c) { return c.passed; });
}

PosetReport check_poset(const TreePoset& p) {
  PosetReport r;
  r.n = p.n;
  const std::size_t count = p.nodes.size();
  r.minimum = p.index_of(tree_code(path_graph(p.n)));
  r.maximum = p.index_of(tree_code(star_graph(p.n)));
  auto name = [&](std::size_t i) { return p.nodes[i].code + " " + p.nodes[i].gamma.to_string(); };
  auto pair = [&](std::size_t a, std::size_t b) { return name(a) + " -> " + name(b); };

  auto add = [&](std::string check_name) -> PosetCheck& {
    r.checks.push_back({std::move(check_name), true, {}});
    return r.checks.back();
  };
  auto fail = [](PosetCheck& c, std::string detail) {
    if (c.passed) c.detail = std::move(detail);
    c.passed = false;
  };

  {
    auto& c = add("shift edges drop one leaf");
    for (const auto& e : p.shift_edges)
      if (p.nodes[e.from].leaf_count != p.nodes[e.to].leaf_count + 1) fail(c, pair(e.from, e.to));
  }
  {
    auto& c = add("floss edges keep the leaf count");
    for (const auto& e : p.floss_edges)
      if (p.nodes[e.from].leaf_count != p.nodes[e.to].leaf_count) fail(c, pair(e.from, e.to));
  }
  std::vector<int> out_degree(count, 0), in_degree(count, 0);
  for (const auto& e : p.shift_edges) {
    ++out_degree[e.from];
    ++in_degree[e.to];
  }
  {
    auto& c = add("Path_n is the unique minimum");
    for (std::size_t i = 0; i < count; ++i) {
      if (i != r.minimum && out_degree[i] == 0) fail(c, "another minimal tree " + name(i));
      if (!p.le(r.minimum, i)) fail(c, "Path_n not below " + name(i));
    }
  }
  {
    auto& c = add("K_{1,n-1} is the unique maximum");
    for (std::size_t i = 0; i < count; ++i) {
      if (i != r.maximum && in_degree[i] == 0) fail(c, "another maximal tree " + name(i));
      if (!p.le(i, r.maximum)) fail(c, name(i) + " not below K_{1,n-1}");
    }
  }
  {
    auto& c = add("gamma monotone along shift edges");
    for (const auto& e : p.shift_edges)
      if (!gamma_le(p.nodes[e.to].gamma, p.nodes[e.from].gamma)) fail(c, pair(e.from, e.to));
  }
  {
    auto& c = add("gamma monotone along floss edges");
    for (const auto& e : p.floss_edges)
      if (!gamma_le(p.nodes[e.to].gamma, p.nodes[e.from].gamma)) fail(c, pair(e.from, e.to));
  }
  {
    auto& c = add("gamma monotone along the order");
    for (std::size_t a = 0; a < count; ++a)
      for (std::size_t b = 0; b < count; ++b)
        if (p.le(a, b) && !gamma_le(p.nodes[a].gamma, p.nodes[b].gamma)) fail(c, pair(b, a));
  }
  {
    auto& c = add("path and star bounds, attained only at the extremes");
    const auto& lo = p.nodes[r.minimum].gamma;
    const auto& hi = p.nodes[r.maximum].gamma;
    for (std::size_t i = 0; i < count; ++i) {
      const auto& g = p.nodes[i].gamma;
      if (!gamma_le(lo, g) || !gamma_le(g, hi)) fail(c, "bounds violated at " + name(i));
      if (i != r.minimum && g == lo) fail(c, "lower bound attained at " + name(i));
      if (i != r.maximum && g == hi) fail(c, "upper bound attained at " + name(i));
    }
  }
  return r;
}

PosetReport verify_poset(const TreePoset& p) {
  PosetReport r = check_poset(p);
  for (const auto& c : r.checks)
    if (!c.passed) throw VerificationFailure("n=" + std::to_string(p.n) + ": " + c.name + " fails: " + c.detail);
  return r;
}

std::string poset_to_dot(const TreePoset& p) {
  std::ostringstream os;
  os << "digraph tree_poset_" << p.n << " {\n  rankdir=TB;\n  node [shape=box];\n";
  std::map<int, std::vector<std::size_t>, std::greater<>> ranks;
  for (std::size_t i = 0; i < p.nodes.size(); ++i) ranks[p.nodes[i].leaf_count].push_back(i);
  for (const auto& [leaves, members] : ranks) {
    os << "  subgraph leaves_" << leaves << " {\n    rank=same;\n";
    for (std::size_t i : members)
      os << "    t" << i << " [label=\"" << p.nodes[i].code << " | " << p.nodes[i].gamma.to_string() << "\"];\n";
    os << "  }\n";
  }
  for (const auto& e : p.shift_edges) os << "  t" << e.from << " -> t" << e.to << ";\n";
  for (const auto& e : p.floss_edges) os << "  t" << e.from << " -> t" << e.to << " [style=dashed];\n";
  os << "}\n";
  return os.str();
}

}  // namespace nesto
