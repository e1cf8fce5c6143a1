#include <doctest.h>

#include <random>

#include "nesto/buildset.hpp"
#include "nesto/catalog.hpp"
#include "nesto/errors.hpp"
#include "nesto/nested.hpp"
#include "oracles.hpp"

using namespace nesto;

namespace {

std::vector<std::int64_t> trimmed(const FaceCensus& c) {
  auto v = c.counts_by_size;
  while (v.size() > 1 && v.back() == 0) v.pop_back();
  return v;
}

}  // namespace

TEST_CASE("census of small building sets") {
  CHECK(enumerate_nested_sets(graphical_building_set(path_graph(2))).counts_by_size == std::vector<std::int64_t>{1, 2});
  CHECK(enumerate_nested_sets(graphical_building_set(path_graph(3))).counts_by_size ==
        std::vector<std::int64_t>{1, 5, 5});
  const auto point = enumerate_nested_sets(BuildingSet(Subset{1}, {{1}}));
  CHECK(point.counts_by_size == std::vector<std::int64_t>{1});
  CHECK(point.dimension == 0);
}

TEST_CASE("f polynomials") {
  CHECK(f_polynomial(graphical_building_set(path_graph(3))) == IntPolynomial{5, 5, 1});
  CHECK(f_polynomial(graphical_building_set(path_graph(2))) == IntPolynomial{2, 1});
  CHECK(f_polynomial(graphical_building_set(complete_graph(3))) == IntPolynomial{6, 6, 1});
  CHECK(f_polynomial(graphical_building_set(path_graph(4))) == IntPolynomial{14, 21, 9, 1});
  // Permutohedron of dimension 3: 24 vertices, 36 edges, 14 facets.
  CHECK(f_polynomial(graphical_building_set(complete_graph(4))) == IntPolynomial{24, 36, 14, 1});
}

TEST_CASE("oracle gamma") {
  CHECK(gamma_oracle(graphical_building_set(path_graph(2))) == IntPolynomial{1});
  CHECK(gamma_oracle(graphical_building_set(path_graph(3))) == IntPolynomial{1, 1});
  CHECK(gamma_oracle(graphical_building_set(complete_graph(3))) == IntPolynomial{1, 2});
}

TEST_CASE("enumerator agrees with the definition") {
  std::vector<LabeledGraph> graphs;
  for (int n = 1; n <= 4; ++n)
    for (auto& g : connected_graph_classes(n)) graphs.push_back(g);
  graphs.push_back(path_graph(5));
  graphs.push_back(star_graph(5));
  graphs.push_back(cycle_graph(5));
  LabeledGraph split(5);
  split.add_edge(1, 2);
  split.add_edge(3, 4);
  graphs.push_back(split);
  for (const auto& g : graphs) {
    const auto b = graphical_building_set(g);
    CHECK(trimmed(enumerate_nested_sets(b)) == oracle::census(b));
  }
  // Non-graphical and non-flag inputs.
  const BuildingSet nonflag(Subset{1, 2, 3, 4}, {{1}, {2}, {3}, {4}, {1, 2}, {1, 2, 3, 4}});
  CHECK(trimmed(enumerate_nested_sets(nonflag)) == oracle::census(nonflag));
}

TEST_CASE("visitor sees every nested set once") {
  const auto b = graphical_building_set(cycle_graph(4));
  std::vector<std::int64_t> counts(4, 0);
  std::set<std::vector<std::uint64_t>> seen;
  visit_nested_sets(b, [&](std::span<const Subset> s) {
    ++counts[s.size()];
    std::vector<std::uint64_t> key;
    for (Subset x : s) key.push_back(x.bits());
    std::sort(key.begin(), key.end());
    CHECK(seen.insert(key).second);
  });
  CHECK(counts == enumerate_nested_sets(b).counts_by_size);
}

TEST_CASE("h(1) counts vertices and h is symmetric") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& g : connected_graph_classes(n)) {
      const auto b = graphical_building_set(g);
      const auto f = f_polynomial(b);
      const auto h = f_to_h(f, b.dimension());
      CHECK(h.symmetric(b.dimension()));
      CHECK(h.evaluate(1) == f[0]);
    }
}

TEST_CASE("disconnected graphs multiply") {
  std::mt19937_64 rng(21);
  for (int k = 0; k < 40; ++k) {
    LabeledGraph g(6);
    for (int u = 1; u <= 6; ++u)
      for (int v = u + 1; v <= 6; ++v)
        if (rng() % 3 == 0) g.add_edge(u, v);
    IntPolynomial prod{1};
    for (Subset c : g.components()) prod *= gamma_oracle(graphical_building_set(g.induced(c)));
    CHECK(gamma_oracle(graphical_building_set(g)) == prod);
  }
}

TEST_CASE("facet identity") {
  const auto p3 = graphical_building_set(path_graph(3));
  CHECK(facet_f_identity_check(p3, {1, 2}));
  CHECK(facet_f_identity_check(p3, {2}));
  CHECK(facet_f_identity_check(graphical_building_set(complete_graph(3)), {1, 3}));
  CHECK_THROWS_AS(facet_f_identity_check(p3, {1, 3}), DomainError);
  CHECK_THROWS_AS(facet_f_identity_check(p3, {1, 2, 3}), DomainError);
}

TEST_CASE("enumeration cap") {
  EnumerationLimits tight;
  tight.max_candidates = 3;
  const auto b = graphical_building_set(path_graph(4));
  CHECK_THROWS_AS(enumerate_nested_sets(b, tight), CapExceeded);
  tight.override_cap = true;
  CHECK(enumerate_nested_sets(b, tight).counts_by_size.size() == 4);
}
