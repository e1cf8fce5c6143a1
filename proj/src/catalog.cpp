#include "nesto/catalog.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "nesto/errors.hpp"

namespace nesto {
namespace {

std::string rooted_code(const LabeledGraph& t, int v, int parent) {
  std::vector<std::string> kids;
  t.neighbors(v).for_each_label([&](int u) {
    if (u != parent) kids.push_back(rooted_code(t, u, v));
  });
  std::sort(kids.begin(), kids.end());
  std::string s = "(";
  for (const auto& k : kids) s += k;
  return s + ")";
}

// Size of the subtree below v when the tree hangs from `parent`; records the
// largest branch at every vertex.
int subtree_sizes(const LabeledGraph& t, int v, int parent, std::vector<int>& heaviest) {
  int total = 1;
  int biggest = 0;
  t.neighbors(v).for_each_label([&](int u) {
    if (u == parent) return;
    const int s = subtree_sizes(t, u, v, heaviest);
    total += s;
    biggest = std::max(biggest, s);
  });
  heaviest[static_cast<std::size_t>(v)] = std::max(biggest, t.order() - total);
  return total;
}

void require_contiguous(const LabeledGraph& g, int max_n) {
  if (g.vertices() != Subset::range(g.order())) throw DomainError("graph labels must be 1..n");
  if (g.order() > max_n) throw GroundSetTooLarge("graph too large for brute-force canonical form");
}

}  // namespace

std::string tree_code(const LabeledGraph& t) {
  if (!t.is_tree()) throw DomainError("tree_code needs a tree");
  std::vector<int> heaviest(kMaxLabel + 1, 0);
  subtree_sizes(t, t.vertices().min_label(), 0, heaviest);
  int best = t.order();
  t.vertices().for_each_label([&](int v) { best = std::min(best, heaviest[static_cast<std::size_t>(v)]); });
  std::string code;
  t.vertices().for_each_label([&](int v) {
    if (heaviest[static_cast<std::size_t>(v)] != best) return;
    std::string c = rooted_code(t, v, 0);
    if (code.empty() || c < code) code = std::move(c);
  });
  return code;
}

std::uint64_t canonical_graph_code(const LabeledGraph& g) {
  require_contiguous(g, 11);
  const int n = g.order();
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);
  std::uint64_t best = ~std::uint64_t{0};
  do {
    std::uint64_t code = 0;
    int bit = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j, ++bit)
        if (g.adjacent(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)])) code |= std::uint64_t{1} << bit;
    best = std::min(best, code);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

bool isomorphic_bruteforce(const LabeledGraph& a, const LabeledGraph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  const auto av = a.vertices().labels();
  auto bv = b.vertices().labels();
  do {
    bool ok = true;
    for (std::size_t i = 0; i < av.size() && ok; ++i)
      for (std::size_t j = i + 1; j < av.size() && ok; ++j)
        ok = a.adjacent(av[i], av[j]) == b.adjacent(bv[i], bv[j]);
    if (ok) return true;
  } while (std::next_permutation(bv.begin(), bv.end()));
  return false;
}

std::vector<LabeledGraph> connected_graph_classes(int n) {
  if (n < 1 || n > 7) throw DomainError("connected_graph_classes supports 1 <= n <= 7");
  std::map<std::uint64_t, LabeledGraph> level{{canonical_graph_code(LabeledGraph(n)), LabeledGraph(n)}};
  std::vector<LabeledGraph> out;
  while (!level.empty()) {
    std::map<std::uint64_t, LabeledGraph> next;
    for (const auto& [code, g] : level) {
      if (g.connected()) out.push_back(g);
      for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) {
          if (g.adjacent(u, v)) continue;
          LabeledGraph h = g;
          h.add_edge(u, v);
          next.try_emplace(canonical_graph_code(h), h);
        }
    }
    level = std::move(next);
  }
  return out;
}

std::vector<LabeledGraph> tree_classes(int n) {
  if (n < 1 || n > 12) throw DomainError("tree enumeration supports 1 <= n <= 12");
  std::map<std::string, LabeledGraph> current{{tree_code(LabeledGraph(1)), LabeledGraph(1)}};
  for (int m = 2; m <= n; ++m) {
    std::map<std::string, LabeledGraph> next;
    for (const auto& [code, t] : current)
      for (int v = 1; v < m; ++v) {
        LabeledGraph g(m);
        for (auto [a, b] : t.edges()) g.add_edge(a, b);
        g.add_edge(v, m);
        next.try_emplace(tree_code(g), g);
      }
    current = std::move(next);
  }
  std::vector<LabeledGraph> out;
  for (auto& [code, t] : current) out.push_back(t);
  return out;
}

LabeledGraph random_connected_graph(int n, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(0.5);
  for (;;) {
    LabeledGraph g(n);
    for (int u = 1; u <= n; ++u)
      for (int v = u + 1; v <= n; ++v)
        if (coin(rng)) g.add_edge(u, v);
    if (g.connected()) return g;
  }
}

LabeledGraph random_relabeling(const LabeledGraph& g, std::mt19937_64& rng) {
  const auto labels = g.vertices().labels();
  auto image = labels;
  std::shuffle(image.begin(), image.end(), rng);
  std::vector<int> map(kMaxLabel + 1, 0);
  for (std::size_t i = 0; i < labels.size(); ++i) map[static_cast<std::size_t>(labels[i])] = image[i];
  return g.relabeled(map);
}

}  // namespace nesto
