#include "nesto/graph.hpp"

#include <fstream>
#include <sstream>

#include "nesto/errors.hpp"

namespace nesto {

LabeledGraph::LabeledGraph(int n) : vertices_(Subset::range(n)) {
  if (n < 0 || n > kMaxLabel) throw GroundSetTooLarge("graph order " + std::to_string(n) + " outside 0..64");
}

LabeledGraph::LabeledGraph(Subset vertices) : vertices_(vertices) {}

LabeledGraph LabeledGraph::from_edges(int n, std::span<const std::pair<int, int>> edges) {
  LabeledGraph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

int LabeledGraph::edge_count() const {
  int twice = 0;
  vertices_.for_each_label([&](int v) { twice += degree(v); });
  return twice / 2;
}

std::vector<std::pair<int, int>> LabeledGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  vertices_.for_each_label([&](int u) {
    neighbors(u).for_each_label([&](int v) {
      if (u < v) out.emplace_back(u, v);
    });
  });
  return out;
}

void LabeledGraph::add_edge(int u, int v) {
  if (u == v) throw DomainError("self-loop at vertex " + std::to_string(u));
  if (u < 1 || v < 1 || u > kMaxLabel || v > kMaxLabel || !vertices_.contains(u) || !vertices_.contains(v))
    throw DomainError("edge (" + std::to_string(u) + "," + std::to_string(v) + ") uses an unknown vertex");
  if (adjacent(u, v))
    throw DomainError("repeated edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
  adj_[static_cast<std::size_t>(u - 1)] |= Subset::single(v);
  adj_[static_cast<std::size_t>(v - 1)] |= Subset::single(u);
}

void LabeledGraph::remove_edge(int u, int v) {
  if (!vertices_.contains(u) || !vertices_.contains(v) || !adjacent(u, v))
    throw DomainError("no edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
  adj_[static_cast<std::size_t>(u - 1)] -= Subset::single(v);
  adj_[static_cast<std::size_t>(v - 1)] -= Subset::single(u);
}

Subset LabeledGraph::component_of(int v, Subset within) const {
  Subset seen = Subset::single(v);
  Subset frontier = seen;
  while (!frontier.empty()) {
    Subset next;
    frontier.for_each_label([&](int u) { next |= neighbors(u); });
    next = (next & within) - seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

std::vector<Subset> LabeledGraph::components(Subset within) const {
  std::vector<Subset> out;
  Subset rest = within & vertices_;
  while (!rest.empty()) {
    const Subset c = component_of(rest.min_label(), rest);
    out.push_back(c);
    rest -= c;
  }
  return out;
}

bool LabeledGraph::connected() const {
  return vertices_.empty() || component_of(vertices_.min_label(), vertices_) == vertices_;
}

bool LabeledGraph::induces_connected(Subset s) const {
  return !s.empty() && component_of(s.min_label(), s) == s;
}

bool LabeledGraph::induces_tree(Subset s) const {
  if (!induces_connected(s)) return false;
  int twice = 0;
  s.for_each_label([&](int v) { twice += (neighbors(v) & s).size(); });
  return twice / 2 == s.size() - 1;
}

Subset LabeledGraph::leaves() const {
  Subset out;
  vertices_.for_each_label([&](int v) {
    if (degree(v) == 1) out |= Subset::single(v);
  });
  return out;
}

std::vector<int> LabeledGraph::distances_from(int v) const {
  std::vector<int> dist(kMaxLabel + 1, -1);
  dist[static_cast<std::size_t>(v)] = 0;
  Subset seen = Subset::single(v), frontier = seen;
  for (int d = 1; !frontier.empty(); ++d) {
    Subset next;
    frontier.for_each_label([&](int u) { next |= neighbors(u); });
    next -= seen;
    next.for_each_label([&](int u) { dist[static_cast<std::size_t>(u)] = d; });
    seen |= next;
    frontier = next;
  }
  return dist;
}

LabeledGraph LabeledGraph::induced(Subset s) const {
  LabeledGraph g(s & vertices_);
  g.vertices_.for_each_label([&](int v) { g.adj_[static_cast<std::size_t>(v - 1)] = neighbors(v) & g.vertices_; });
  return g;
}

LabeledGraph LabeledGraph::relabeled(std::span<const int> new_label) const {
  Subset verts;
  vertices_.for_each_label([&](int v) { verts |= Subset::single(new_label[static_cast<std::size_t>(v)]); });
  if (verts.size() != order()) throw DomainError("relabeling is not injective");
  LabeledGraph g(verts);
  for (auto [u, v] : edges()) g.add_edge(new_label[static_cast<std::size_t>(u)], new_label[static_cast<std::size_t>(v)]);
  return g;
}

LabeledGraph contract_graph(const LabeledGraph& g, Subset i) {
  const Subset rest = g.vertices() - i;
  LabeledGraph out = g.induced(rest);
  Subset touching;
  i.for_each_label([&](int v) { touching |= g.neighbors(v); });
  touching &= rest;
  touching.for_each_label([&](int u) {
    touching.for_each_label([&](int v) {
      if (u < v && !out.adjacent(u, v)) out.add_edge(u, v);
    });
  });
  return out;
}

LabeledGraph path_graph(int n) {
  LabeledGraph g(n);
  for (int v = 1; v < n; ++v) g.add_edge(v, v + 1);
  return g;
}

LabeledGraph cycle_graph(int n) {
  LabeledGraph g = path_graph(n);
  if (n >= 3) g.add_edge(1, n);
  return g;
}

LabeledGraph complete_graph(int n) {
  LabeledGraph g(n);
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v) g.add_edge(u, v);
  return g;
}

LabeledGraph star_graph(int n, int center) {
  LabeledGraph g(n);
  for (int v = 1; v <= n; ++v)
    if (v != center) g.add_edge(center, v);
  return g;
}

namespace {

// Next line that is not blank or a comment; strips trailing comments.
bool next_content_line(std::istream& in, std::string& line, int& lineno) {
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
  }
  return false;
}

}  // namespace

LabeledGraph parse_graph(std::istream& in) {
  std::string line;
  int lineno = 0;
  if (!next_content_line(in, line, lineno)) throw ParseError("empty graph input");
  long n = -1, m = -1;
  {
    std::istringstream ls(line);
    std::string extra;
    if (!(ls >> n >> m) || (ls >> extra)) throw ParseError("line " + std::to_string(lineno) + ": expected \"n m\"");
  }
  if (n < 1 || n > kMaxLabel) throw ParseError("vertex count " + std::to_string(n) + " outside 1..64");
  if (m < 0) throw ParseError("negative edge count");
  LabeledGraph g(static_cast<int>(n));
  for (long e = 0; e < m; ++e) {
    if (!next_content_line(in, line, lineno))
      throw ParseError("expected " + std::to_string(m) + " edges, found " + std::to_string(e));
    std::istringstream ls(line);
    long u = 0, v = 0;
    std::string extra;
    if (!(ls >> u >> v) || (ls >> extra)) throw ParseError("line " + std::to_string(lineno) + ": expected \"u v\"");
    if (u < 1 || v < 1 || u > n || v > n)
      throw ParseError("line " + std::to_string(lineno) + ": vertex outside 1.." + std::to_string(n));
    if (u == v) throw ParseError("line " + std::to_string(lineno) + ": self-loop");
    if (g.adjacent(static_cast<int>(u), static_cast<int>(v)))
      throw ParseError("line " + std::to_string(lineno) + ": repeated edge");
    g.add_edge(static_cast<int>(u), static_cast<int>(v));
  }
  if (next_content_line(in, line, lineno)) throw ParseError("line " + std::to_string(lineno) + ": unexpected trailing content");
  return g;
}

LabeledGraph parse_graph(const std::string& text) {
  std::istringstream in(text);
  return parse_graph(in);
}

LabeledGraph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open graph file " + path);
  return parse_graph(in);
}

std::string format_graph(const LabeledGraph& g) {
  std::ostringstream os;
  const auto es = g.edges();
  os << g.order() << ' ' << es.size() << '\n';
  for (auto [u, v] : es) os << u << ' ' << v << '\n';
  return os.str();
}

}  // namespace nesto
