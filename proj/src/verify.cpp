#include "nesto/verify.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <map>
#include <mutex>
#include <random>
#include <sstream>

#include "nesto/buildset.hpp"
#include "nesto/catalog.hpp"
#include "nesto/errors.hpp"
#include "nesto/gamma_engine.hpp"
#include "nesto/moves.hpp"
#include "nesto/nested.hpp"
#include "nesto/poset.hpp"

namespace nesto {
namespace {

using Clock = std::chrono::steady_clock;

// Runs a suite body that fills `detail` and returns (passed, cases).
// A positive limit fails the suite when its wall time exceeds it.
template <typename Body>
SuiteResult timed(std::string id, std::string name, Body&& body, double limit_seconds = 0.0) {
  SuiteResult r{std::move(id), std::move(name), false, 0, 0.0, {}};
  const auto start = Clock::now();
  try {
    body(r);
  } catch (const std::exception& e) {
    r.passed = false;
    r.detail = std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  if (limit_seconds > 0.0 && r.seconds >= limit_seconds) {
    r.passed = false;
    r.detail += "; exceeded " + std::to_string(static_cast<int>(limit_seconds)) + " s";
  }
  return r;
}

// Collects the first few failures of a suite.
class Failures {
 public:
  void add(std::string what) {
    std::lock_guard lock(mutex_);
    ++count_;
    if (examples_.size() < 3) examples_.push_back(std::move(what));
  }
  std::size_t count() const { return count_; }
  std::string summary() const {
    std::string s = std::to_string(count_) + " violation(s)";
    for (const auto& e : examples_) s += "; " + e;
    return s;
  }

 private:
  std::mutex mutex_;
  std::size_t count_ = 0;
  std::vector<std::string> examples_;
};

std::vector<LabeledGraph> connected_graphs_up_to(int max_n) {
  std::vector<LabeledGraph> out;
  for (int n = 1; n <= max_n; ++n) {
    auto cls = connected_graph_classes(n);
    out.insert(out.end(), cls.begin(), cls.end());
  }
  return out;
}

std::vector<LabeledGraph> trees_up_to(int max_n) {
  std::vector<LabeledGraph> out;
  for (int n = 1; n <= max_n; ++n) {
    auto cls = tree_classes(n);
    out.insert(out.end(), cls.begin(), cls.end());
  }
  return out;
}

IntPolynomial graph_gamma(const LabeledGraph& g, GammaMemo& memo) {
  return gamma_incremental(graphical_building_set(g), memo);
}

LabeledGraph random_graph(int n, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(0.5);
  LabeledGraph g(n);
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

// Random connected spanning subgraph: a random spanning tree of g plus each
// further edge of g with probability 1/2.
LabeledGraph random_connected_subgraph(const LabeledGraph& g, std::mt19937_64& rng) {
  auto edges = g.edges();
  std::shuffle(edges.begin(), edges.end(), rng);
  LabeledGraph tree(g.vertices());
  std::vector<std::pair<int, int>> spare;
  for (auto [u, v] : edges) {
    if (!tree.component_of(u, tree.vertices()).contains(v))
      tree.add_edge(u, v);
    else
      spare.emplace_back(u, v);
  }
  std::bernoulli_distribution coin(0.5);
  for (auto [u, v] : spare)
    if (coin(rng)) tree.add_edge(u, v);
  return tree;
}

template <typename MoveList, typename Apply>
void check_moves_lower_gamma(const std::vector<LabeledGraph>& graphs, const VerifyOptions& opts, MoveList&& moves_of,
                             Apply&& apply, SuiteResult& r, const char* what) {
  GammaMemo memo;
  Failures failures;
  std::vector<std::size_t> move_counts(graphs.size(), 0), wiener_up(graphs.size(), 0);
  for_each_index(graphs.size(), opts.exec, [&](std::size_t i) {
    const LabeledGraph& g = graphs[i];
    const IntPolynomial before = graph_gamma(g, memo);
    const std::int64_t w = wiener_index(g);
    for (const auto& m : moves_of(g)) {
      const LabeledGraph h = apply(g, m);
      ++move_counts[i];
      if (wiener_index(h) > w) ++wiener_up[i];
      const IntPolynomial after = graph_gamma(h, memo);
      if (!gamma_le(after, before))
        failures.add(std::string(what) + " " + m.to_string() + " on " + format_graph(g) + " raises gamma " +
                     before.to_string() + " to " + after.to_string());
    }
  });
  std::size_t total = 0, up = 0;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    total += move_counts[i];
    up += wiener_up[i];
  }
  r.cases = total;
  r.passed = failures.count() == 0;
  std::ostringstream os;
  os << graphs.size() << " graphs, " << total << " moves, " << failures.summary() << "; Wiener index increased on " << up
     << "/" << total << " moves";
  r.detail = os.str();
}

}  // namespace

SuiteResult suite_engine_oracle_agreement(const VerifyOptions& opts) {
  return timed("1", "engine = oracle on every connected graph with n <= 6", [&](SuiteResult& r) {
    std::vector<LabeledGraph> graphs;
    std::ostringstream counts;
    for (int n = 1; n <= 6; ++n) {
      auto cls = connected_graph_classes(n);
      counts << (n > 1 ? "/" : "") << cls.size();
      graphs.insert(graphs.end(), cls.begin(), cls.end());
    }
    const std::size_t exhaustive = graphs.size();
    std::mt19937_64 rng(opts.seed);
    for (int k = 0; k < 200; ++k) graphs.push_back(random_connected_graph(7, rng));

    // Timed single-threaded: the runtime bound applies to one worker.
    const auto start = Clock::now();
    GammaMemo memo;
    Failures failures;
    for (const auto& g : graphs) {
      const BuildingSet b = graphical_building_set(g);
      const IntPolynomial fast = gamma_incremental(b, memo);
      const IntPolynomial slow = gamma_oracle(b);
      if (fast != slow) failures.add(format_graph(g) + " engine " + fast.to_string() + " oracle " + slow.to_string());
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    const bool classes_ok = exhaustive == 143 && counts.str() == "1/1/2/6/21/112";
    r.cases = graphs.size();
    r.passed = failures.count() == 0 && classes_ok && secs < 300.0;
    r.detail = "classes by n " + counts.str() + " + 200 random on 7 vertices; " + failures.summary();
    if (!classes_ok) r.detail += "; unexpected class counts";
    if (secs >= 300.0) r.detail += "; exceeded 300 s";
  });
}

SuiteResult suite_known_values(const VerifyOptions&) {
  return timed("2", "known gamma values", [&](SuiteResult& r) {
    const std::vector<std::tuple<std::string, LabeledGraph, IntPolynomial>> table{
        {"Path_2", path_graph(2), {1}},        {"Path_3", path_graph(3), {1, 1}},    {"K_3", complete_graph(3), {1, 2}},
        {"Path_4", path_graph(4), {1, 3}},     {"K_{1,3}", star_graph(4), {1, 4}}, {"K_4", complete_graph(4), {1, 8}},
    };
    Failures failures;
    for (const auto& [name, g, expected] : table) {
      const BuildingSet b = graphical_building_set(g);
      const auto fast = gamma_incremental(b);
      const auto slow = gamma_oracle(b);
      if (fast != expected || slow != expected)
        failures.add(name + " engine " + fast.to_string() + " oracle " + slow.to_string() + " expected " + expected.to_string());
    }
    r.cases = table.size();
    r.passed = failures.count() == 0;
    r.detail = failures.summary();
  });
}

SuiteResult suite_tree_shifts_lower_gamma(const VerifyOptions& opts) {
  return timed("3", "tree shifts lower gamma (trees n <= " + std::to_string(opts.max_tree_n) + ", graphs n <= 6)",
               [&](SuiteResult& r) {
                 std::vector<LabeledGraph> graphs = trees_up_to(opts.max_tree_n);
                 for (auto& g : connected_graphs_up_to(6))
                   if (!g.is_tree()) graphs.push_back(g);
                 Failures leaf_failures;
                 check_moves_lower_gamma(
                     graphs, opts, [](const LabeledGraph& g) { return enumerate_tree_shifts(g); },
                     [&](const LabeledGraph& g, const TreeShiftMove& m) {
                       LabeledGraph h = apply_tree_shift(g, m);
                       if (h.leaves().size() != g.leaves().size() - 1 || !h.connected())
                         leaf_failures.add(m.to_string() + " does not drop exactly one leaf");
                       return h;
                     },
                     r, "tree shift");
                 if (leaf_failures.count()) {
                   r.passed = false;
                   r.detail += "; leaf count: " + leaf_failures.summary();
                 }
               },
               600.0);
}

SuiteResult suite_flossing_lowers_gamma(const VerifyOptions& opts) {
  return timed("4", "flossing moves lower gamma (trees n <= " + std::to_string(opts.max_tree_n) + ", graphs n <= 6)",
               [&](SuiteResult& r) {
                 std::vector<LabeledGraph> graphs = trees_up_to(opts.max_tree_n);
                 for (auto& g : connected_graphs_up_to(6))
                   if (!g.is_tree()) graphs.push_back(g);
                 Failures shape_failures;
                 check_moves_lower_gamma(
                     graphs, opts, [](const LabeledGraph& g) { return enumerate_flossing(g); },
                     [&](const LabeledGraph& g, const FlossingMove& m) {
                       LabeledGraph h = apply_flossing(g, m);
                       const int drop = g.leaves().size() - h.leaves().size();
                       if (drop != (m.r == 2 ? 1 : 0) || !h.connected())
                         shape_failures.add(m.to_string() + " changes the leaf count by " + std::to_string(-drop));
                       if (m.r == 2) {
                         // Coincides with the shift hanging l from l_hat.
                         bool found = false;
                         for (const auto& s : enumerate_tree_shifts(g))
                           if (s.leaf == m.far_leaf && s.moved == Subset::single(m.leaf) && apply_tree_shift(g, s) == h)
                             found = true;
                         if (!found) shape_failures.add(m.to_string() + " is not a tree shift");
                       }
                       return h;
                     },
                     r, "flossing");
                 if (shape_failures.count()) {
                   r.passed = false;
                   r.detail += "; shape: " + shape_failures.summary();
                 }
               });
}

SuiteResult suite_path_star_bounds(const VerifyOptions& opts) {
  return timed("5", "Path_n <= T <= K_{1,n-1} with equality only at the ends (n <= " + std::to_string(opts.max_tree_n) + ")",
               [&](SuiteResult& r) {
                 Failures failures;
                 GammaMemo memo;
                 for (int n = 1; n <= opts.max_tree_n; ++n) {
                   const auto trees = tree_classes(n);
                   std::vector<IntPolynomial> gammas(trees.size());
                   for_each_index(trees.size(), opts.exec, [&](std::size_t i) {
                     const BuildingSet b = graphical_building_set(trees[i]);
                     gammas[i] = gamma_incremental(b, memo);
                     const IntPolynomial slow = gamma_oracle(b);
                     if (slow != gammas[i]) failures.add("engine/oracle mismatch on " + tree_code(trees[i]));
                   });
                   const std::string path = tree_code(path_graph(n)), star = tree_code(star_graph(n));
                   IntPolynomial lo, hi;
                   for (std::size_t i = 0; i < trees.size(); ++i) {
                     if (tree_code(trees[i]) == path) lo = gammas[i];
                     if (tree_code(trees[i]) == star) hi = gammas[i];
                   }
                   for (std::size_t i = 0; i < trees.size(); ++i) {
                     const std::string code = tree_code(trees[i]);
                     ++r.cases;
                     if (!gamma_le(lo, gammas[i]) || !gamma_le(gammas[i], hi)) failures.add("bounds fail at " + code);
                     if (code != path && gammas[i] == lo) failures.add("lower bound attained at " + code);
                     if (code != star && gammas[i] == hi) failures.add("upper bound attained at " + code);
                   }
                 }
                 r.passed = failures.count() == 0;
                 r.detail = std::to_string(r.cases) + " trees; " + failures.summary();
               });
}

SuiteResult suite_shift_poset(const VerifyOptions& opts) {
  return timed("6", "shift order: unique min Path_n, unique max K_{1,n-1}, gamma monotone (n = 2.." +
                        std::to_string(opts.max_tree_n) + ")",
               [&](SuiteResult& r) {
                 GammaMemo memo;
                 std::vector<std::string> bad;
                 std::size_t nodes = 0;
                 for (int n = 2; n <= opts.max_tree_n; ++n) {
                   const TreePoset p = build_poset(n, memo, opts.exec);
                   nodes += p.nodes.size();
                   for (const auto& c : check_poset(p).checks)
                     if (!c.passed) bad.push_back("n=" + std::to_string(n) + " " + c.name + ": " + c.detail);
                 }
                 r.cases = nodes;
                 r.passed = bad.empty();
                 r.detail = std::to_string(nodes) + " trees";
                 for (const auto& b : bad) r.detail += "; " + b;
               });
}

SuiteResult suite_seven_vertex_figure(const VerifyOptions& opts) {
  return timed("7", "7-vertex tree poset: row sizes and arrow counts between rows", [&](SuiteResult& r) {
    const TreePoset p = build_poset(7, opts.exec);
    std::map<int, int> class_sizes;
    for (const auto& t : p.nodes) ++class_sizes[t.leaf_count];
    std::map<std::pair<int, int>, int> shifts, flosses;
    for (const auto& e : p.shift_edges) ++shifts[{p.nodes[e.from].leaf_count, p.nodes[e.to].leaf_count}];
    for (const auto& e : p.floss_edges) ++flosses[{p.nodes[e.from].leaf_count, p.nodes[e.to].leaf_count}];

    // Rows of 1/2/4/3/1 trees by leaf count, 2+7+8+3 shift arrows between
    // consecutive rows, one floss arrow among the 4-leaf trees and two among
    // the 3-leaf trees.
    const std::map<int, int> want_sizes{{6, 1}, {5, 2}, {4, 4}, {3, 3}, {2, 1}};
    const std::map<std::pair<int, int>, int> want_shifts{{{6, 5}, 2}, {{5, 4}, 7}, {{4, 3}, 8}, {{3, 2}, 3}};
    const std::map<std::pair<int, int>, int> want_flosses{{{4, 4}, 1}, {{3, 3}, 2}};

    auto show = [](const std::map<std::pair<int, int>, int>& m) {
      std::string s;
      for (const auto& [k, v] : m) s += " " + std::to_string(k.first) + "->" + std::to_string(k.second) + ":" + std::to_string(v);
      return s;
    };
    r.cases = p.nodes.size();
    r.passed = p.nodes.size() == 11 && class_sizes == want_sizes && shifts == want_shifts && flosses == want_flosses;
    r.detail = std::to_string(p.nodes.size()) + " trees; shifts" + show(shifts) + "; flosses" + show(flosses);
  });
}

SuiteResult suite_dehn_sommerville(const VerifyOptions& opts) {
  return timed("8a", "Dehn-Sommerville symmetry of every h", [&](SuiteResult& r) {
    std::vector<LabeledGraph> graphs = connected_graphs_up_to(6);
    auto trees = trees_up_to(opts.max_tree_n);
    graphs.insert(graphs.end(), trees.begin(), trees.end());
    std::mt19937_64 rng(opts.seed + 1);
    for (int k = 0; k < 20; ++k) graphs.push_back(random_graph(6, rng));  // disconnected ones too
    Failures failures;
    for_each_index(graphs.size(), opts.exec, [&](std::size_t i) {
      const BuildingSet b = graphical_building_set(graphs[i]);
      const int d = b.dimension();
      const IntPolynomial f = f_polynomial(b);
      const IntPolynomial h = f_to_h(f, d);
      if (!h.symmetric(d)) failures.add("asymmetric h " + h.to_string());
      if (h.evaluate(1) != f[0]) failures.add("h(1) != f_0 for " + format_graph(graphs[i]));
      if (gamma_to_h(h_to_gamma(h, d), d) != h) failures.add("gamma round trip fails for " + h.to_string());
    });
    r.cases = graphs.size();
    r.passed = failures.count() == 0;
    r.detail = failures.summary();
  });
}

SuiteResult suite_gamma_nonnegative(const VerifyOptions& opts) {
  return timed("8b", "gamma >= 0 for every flag building set met by the engine", [&](SuiteResult& r) {
    std::vector<LabeledGraph> graphs = connected_graphs_up_to(6);
    auto trees = trees_up_to(opts.max_tree_n);
    graphs.insert(graphs.end(), trees.begin(), trees.end());
    GammaMemo memo;
    for_each_index(graphs.size(), opts.exec, [&](std::size_t i) { graph_gamma(graphs[i], memo); });
    Failures failures;
    const auto entries = memo.entries();
    for (const auto& [key, g] : entries)
      if (!g.nonnegative()) failures.add("negative gamma " + g.to_string());
    // Spot-check stored values against the oracle.
    std::mt19937_64 rng(opts.seed + 2);
    std::uniform_int_distribution<std::size_t> pick(0, entries.empty() ? 0 : entries.size() - 1);
    for (int k = 0; k < 50 && !entries.empty(); ++k) {
      const auto& [key, g] = entries[pick(rng)];
      const IntPolynomial slow = gamma_oracle(from_compact_key(key));
      if (slow != g) failures.add("memo entry " + g.to_string() + " but oracle " + slow.to_string());
    }
    r.cases = entries.size();
    r.passed = failures.count() == 0;
    r.detail = std::to_string(entries.size()) + " memoized flag building sets; " + failures.summary();
  });
}

SuiteResult suite_inclusion_monotone(const VerifyOptions& opts) {
  return timed("8c", "gamma monotone under inclusion (100 random pairs, n <= 6)", [&](SuiteResult& r) {
    std::mt19937_64 rng(opts.seed + 3);
    std::uniform_int_distribution<int> size(2, 6);
    Failures failures;
    GammaMemo memo;
    for (int k = 0; k < 100; ++k) {
      const LabeledGraph g = random_connected_graph(size(rng), rng);
      const BuildingSet full = graphical_building_set(g);
      BuildingSet lower = full, upper = full;
      if (k % 2 == 0) {
        lower = graphical_building_set(random_connected_subgraph(g, rng));
      } else {
        const FlagChain chain = flag_chain(initial_comb(full), full);
        std::uniform_int_distribution<std::size_t> cut(0, chain.additions.size());
        std::size_t a = cut(rng), b = cut(rng);
        if (a > b) std::swap(a, b);
        std::vector<Subset> prefix(chain.base.elements().begin(), chain.base.elements().end());
        for (std::size_t s = 0; s < b; ++s) {
          if (s == a) lower = BuildingSet(full.ground(), prefix);
          prefix.push_back(chain.additions[s]);
        }
        if (a == b) lower = BuildingSet(full.ground(), prefix);
        upper = BuildingSet(full.ground(), prefix);
      }
      for (Subset e : lower.elements())
        if (!upper.contains(e)) failures.add("generated pair is not an inclusion");
      if (!lower.connected() || !upper.connected() || !lower.is_flag() || !upper.is_flag())
        failures.add("generated pair is not connected flag");
      const auto gl = gamma_incremental(lower, memo), gu = gamma_incremental(upper, memo);
      if (!gamma_le(gl, gu)) failures.add(lower.to_string() + " has gamma " + gl.to_string() + " above " + gu.to_string());
    }
    r.cases = 100;
    r.passed = failures.count() == 0;
    r.detail = failures.summary();
  });
}

SuiteResult suite_facet_identity(const VerifyOptions& opts) {
  return timed("8d", "facet face poset = restriction x contraction (connected n <= 6)", [&](SuiteResult& r) {
    const auto graphs = connected_graphs_up_to(6);
    Failures failures;
    std::vector<std::size_t> counts(graphs.size(), 0);
    for_each_index(graphs.size(), opts.exec, [&](std::size_t gi) {
      const BuildingSet b = graphical_building_set(graphs[gi]);
      for (Subset i : b.elements()) {
        if (i == b.ground()) continue;
        ++counts[gi];
        if (!facet_f_identity_check(b, i)) failures.add(format_graph(graphs[gi]) + " facet " + i.to_string());
        if (!restriction(b, i).is_flag() || !contraction(b, i).is_flag())
          failures.add("restriction/contraction by " + i.to_string() + " not flag");
      }
    });
    for (auto c : counts) r.cases += c;
    r.passed = failures.count() == 0;
    r.detail = std::to_string(graphs.size()) + " graphs; " + failures.summary();
  });
}

SuiteResult suite_product_law(const VerifyOptions& opts) {
  return timed("8e", "product building sets multiply f and gamma (50 random)", [&](SuiteResult& r) {
    std::mt19937_64 rng(opts.seed + 4);
    std::uniform_int_distribution<int> outer(1, 3), inner(1, 3);
    Failures failures;
    for (int k = 0; k < 50; ++k) {
      const int m = outer(rng);
      const BuildingSet b = graphical_building_set(random_graph(m, rng));
      std::vector<BuildingSet> parts;
      IntPolynomial f_rhs = f_polynomial(b), g_rhs = gamma_oracle(b);
      for (int i = 0; i < m; ++i) {
        parts.push_back(graphical_building_set(random_connected_graph(inner(rng), rng)));
        f_rhs *= f_polynomial(parts.back());
        g_rhs *= gamma_oracle(parts.back());
      }
      const BuildingSet prod = product_building_set(b, parts);
      if (f_polynomial(prod) != f_rhs) failures.add("f mismatch for " + prod.to_string());
      if (gamma_oracle(prod) != g_rhs) failures.add("gamma mismatch for " + prod.to_string());
      if (gamma_incremental(prod) != g_rhs) failures.add("engine gamma mismatch for " + prod.to_string());
    }
    r.cases = 50;
    r.passed = failures.count() == 0;
    r.detail = failures.summary();
  });
}

SuiteResult suite_flag_chains(const VerifyOptions& opts) {
  return timed("9", "greedy flag chains from the comb succeed (connected n <= 7)", [&](SuiteResult& r) {
    const auto graphs = connected_graphs_up_to(7);
    Failures failures;
    for_each_index(graphs.size(), opts.exec, [&](std::size_t i) {
      const BuildingSet b = graphical_building_set(graphs[i]);
      const BuildingSet comb = initial_comb(b);
      if (!comb.is_minimal_flag()) failures.add("comb not minimal flag for " + format_graph(graphs[i]));
      const FlagChain chain = flag_chain(comb, b);
      if (!flag_chain_valid(chain)) failures.add("invalid chain for " + format_graph(graphs[i]));
    });
    r.cases = graphs.size();
    r.passed = failures.count() == 0;
    r.detail = std::to_string(graphs.size()) + " graphs; " + failures.summary();
  });
}

std::vector<SuiteResult> run_all_suites(const VerifyOptions& opts) {
  return {suite_engine_oracle_agreement(opts), suite_known_values(opts),  suite_tree_shifts_lower_gamma(opts),
          suite_flossing_lowers_gamma(opts),   suite_path_star_bounds(opts), suite_shift_poset(opts),
          suite_seven_vertex_figure(opts),     suite_dehn_sommerville(opts), suite_gamma_nonnegative(opts),
          suite_inclusion_monotone(opts),      suite_facet_identity(opts),  suite_product_law(opts),
          suite_flag_chains(opts)};
}

std::string format_suite_table(const std::vector<SuiteResult>& results) {
  std::ostringstream os;
  for (const auto& s : results) {
    os << (s.passed ? "PASS" : "FAIL") << "  [" << s.id << "] " << s.name << " (" << s.cases << " cases, " << std::fixed
       << std::setprecision(2) << s.seconds << " s)";
    if (!s.detail.empty()) os << "  " << s.detail;
    os << '\n';
  }
  return os.str();
}

}  // namespace nesto
