#include <doctest.h>

#include <random>

#include "nesto/buildset.hpp"
#include "nesto/catalog.hpp"
#include "nesto/errors.hpp"
#include "oracles.hpp"

using namespace nesto;

namespace {

std::set<std::uint64_t> bits_of(std::initializer_list<Subset> s) {
  std::set<std::uint64_t> out;
  for (Subset x : s) out.insert(x.bits());
  return out;
}

std::vector<LabeledGraph> small_connected(int max_n) {
  std::vector<LabeledGraph> out;
  for (int n = 1; n <= max_n; ++n)
    for (auto& g : connected_graph_classes(n)) out.push_back(g);
  return out;
}

}  // namespace

TEST_CASE("graphical building sets") {
  const auto p3 = graphical_building_set(path_graph(3));
  CHECK(oracle::as_set(p3) == bits_of({{1}, {2}, {3}, {1, 2}, {2, 3}, {1, 2, 3}}));
  CHECK(graphical_building_set(complete_graph(3)).size() == 7);
  const auto two = graphical_building_set(LabeledGraph(2));
  CHECK(oracle::as_set(two) == bits_of({{1}, {2}}));
  CHECK(two.b_max().size() == 2);
  CHECK_FALSE(two.connected());
  CHECK(p3.connected());
  CHECK(p3.dimension() == 2);

  std::mt19937_64 rng(5);
  for (int k = 0; k < 50; ++k) {
    const auto g = random_connected_graph(6, rng);
    const auto b = graphical_building_set(g);
    CHECK(oracle::as_set(b) == oracle::graphical(g));
    CHECK(is_building_set(b.elements(), b.ground()));
    CHECK(b.is_flag());
  }
}

TEST_CASE("building set axioms") {
  const std::vector<Subset> ok{{1}, {2}, {3}, {1, 2, 3}};
  const std::vector<Subset> no_singleton{{1}, {2}, {1, 2}, {2, 3}};
  const std::vector<Subset> not_closed{{1}, {2}, {3}, {1, 2}, {2, 3}};
  CHECK(is_building_set(ok, Subset{1, 2, 3}));
  CHECK_FALSE(is_building_set(no_singleton, Subset{1, 2, 3}));
  CHECK_FALSE(is_building_set(not_closed, Subset{1, 2, 3}));
  CHECK_THROWS_AS(BuildingSet(Subset{1, 2, 3}, not_closed), DomainError);
  CHECK_THROWS_AS(BuildingSet(Subset{1, 2}, {{1}, {2}, {}}), DomainError);
}

TEST_CASE("restriction") {
  const auto p3 = graphical_building_set(path_graph(3));
  CHECK(oracle::as_set(restriction(p3, {1, 2})) == bits_of({{1}, {2}, {1, 2}}));
  CHECK(oracle::as_set(restriction(p3, {1, 3})) == bits_of({{1}, {3}}));
  const auto k3 = graphical_building_set(complete_graph(3));
  CHECK(oracle::as_set(restriction(k3, {1, 3})) == bits_of({{1}, {3}, {1, 3}}));
  CHECK_THROWS_AS(restriction(p3, {4}), DomainError);
}

TEST_CASE("contraction") {
  const auto p3 = graphical_building_set(path_graph(3));
  const auto c = contraction(p3, {2});
  CHECK(c.ground() == Subset{1, 3});
  CHECK(oracle::as_set(c) == bits_of({{1}, {3}, {1, 3}}));
  CHECK(oracle::as_set(contraction(p3, {1})) == bits_of({{2}, {3}, {2, 3}}));
  const auto star = graphical_building_set(star_graph(4, 4));
  const auto cs = contraction(star, {4});
  CHECK(cs.size() == 7);
  CHECK(oracle::as_set(cs) == oracle::contraction(star, {4}));
  CHECK_THROWS_AS(contraction(p3, {1, 3}), DomainError);
}

TEST_CASE("contraction matches graph contraction, both stay flag") {
  for (const auto& g : small_connected(6)) {
    const auto b = graphical_building_set(g);
    for (Subset i : b.elements()) {
      const auto c = contraction(b, i);
      CHECK(oracle::as_set(c) == oracle::contraction(b, i));
      if (i != b.ground()) CHECK(oracle::as_set(c) == oracle::graphical(contract_graph(g, i)));
      CHECK(c.is_flag());
      CHECK(restriction(b, i).is_flag());
    }
  }
}

TEST_CASE("flagness") {
  CHECK_FALSE(BuildingSet(Subset{1, 2, 3}, {{1}, {2}, {3}, {1, 2, 3}}).is_flag());
  CHECK(BuildingSet(Subset{1, 2, 3}, {{1}, {2}, {3}, {1, 2}, {1, 2, 3}}).is_flag());
  std::mt19937_64 rng(9);
  // Random building sets: close random families under intersecting unions.
  for (int k = 0; k < 300; ++k) {
    const int n = 2 + static_cast<int>(rng() % 4);
    std::set<std::uint64_t> fam;
    for (int i = 1; i <= n; ++i) fam.insert(Subset::single(i).bits());
    for (int i = 0; i < 3; ++i) fam.insert((rng() & ((1ULL << n) - 1)) | 1ULL);
    fam.erase(0);
    bool grew = true;
    while (grew) {
      grew = false;
      for (auto a : std::vector<std::uint64_t>(fam.begin(), fam.end()))
        for (auto b : std::vector<std::uint64_t>(fam.begin(), fam.end()))
          if ((a & b) && fam.insert(a | b).second) grew = true;
    }
    std::vector<Subset> elems;
    for (auto x : fam) elems.emplace_back(x);
    const BuildingSet b(Subset::range(n), elems);
    CHECK(b.is_flag() == oracle::flag(b));
    if (b.is_flag())
      for (Subset i : b.elements()) {
        CHECK(restriction(b, i).is_flag());
        CHECK(contraction(b, i).is_flag());
      }
  }
}

TEST_CASE("binary decomposition tie-break") {
  const auto p3 = graphical_building_set(path_graph(3));
  const auto t = binary_decomposition(p3, {1, 2, 3});
  CHECK(t.root == Subset{1, 2, 3});
  CHECK(t.splits.at(Subset{1, 2, 3}) == std::pair{Subset{3}, Subset{1, 2}});
  CHECK(t.splits.at(Subset{1, 2}) == std::pair{Subset{2}, Subset{1}});
  const auto p2 = binary_decomposition(graphical_building_set(path_graph(2)), {1, 2});
  CHECK(p2.nodes().size() == 3);
  const auto k3 = binary_decomposition(graphical_building_set(complete_graph(3)), {1, 2, 3});
  CHECK(k3.splits.at(Subset{1, 2, 3}) == std::pair{Subset{3}, Subset{1, 2}});
  CHECK_THROWS_AS(binary_decomposition(BuildingSet(Subset{1, 2, 3}, {{1}, {2}, {3}, {1, 2, 3}}), {1, 2, 3}), NotFlag);
  CHECK_THROWS_AS(binary_decomposition(p3, {1, 3}), DomainError);
}

TEST_CASE("decompositions containing a member") {
  const auto p3 = graphical_building_set(path_graph(3));
  auto nodes = [](const DecompositionTree& t) {
    std::set<std::uint64_t> s;
    for (Subset x : t.nodes()) s.insert(x.bits());
    return s;
  };
  CHECK(nodes(decomposition_containing(p3, {1, 2, 3}, {2, 3})) == bits_of({{1, 2, 3}, {2, 3}, {1}, {2}, {3}}));
  CHECK(decomposition_containing(p3, {1, 2, 3}, {1}).contains({1}));
  const auto k3 = graphical_building_set(complete_graph(3));
  CHECK(nodes(decomposition_containing(k3, {1, 2, 3}, {1, 3})) == bits_of({{1, 2, 3}, {1, 3}, {1}, {2}, {3}}));
  CHECK_THROWS_AS(decomposition_containing(p3, {1, 2}, {2, 3}), DomainError);
  CHECK_THROWS_AS(decomposition_containing(p3, {1, 2}, {1, 2}), DomainError);

  for (const auto& g : small_connected(5)) {
    const auto b = graphical_building_set(g);
    for (Subset i : b.elements())
      for (Subset j : b.elements()) {
        if (!j.proper_subset_of(i)) continue;
        const auto t = decomposition_containing(b, i, j);
        CHECK(t.contains(j));
        CHECK_NOTHROW(t.validate(b));
        const auto m = t.as_building_set();
        CHECK(m.is_minimal_flag());
        CHECK(m.size() == static_cast<std::size_t>(2 * i.size() - 1));
      }
  }
}

TEST_CASE("product building sets") {
  const BuildingSet b(Subset{1, 2}, {{1}, {2}, {1, 2}});
  const std::vector<BuildingSet> parts{graphical_building_set(path_graph(2)), BuildingSet(Subset{1}, {{1}})};
  const auto p = product_building_set(b, parts);
  CHECK(p.ground() == Subset{1, 2, 3});
  CHECK(oracle::as_set(p) == bits_of({{1}, {2}, {3}, {1, 2}, {1, 2, 3}}));

  const auto edgeless = graphical_building_set(LabeledGraph(2));
  const std::vector<BuildingSet> two{graphical_building_set(path_graph(2)), graphical_building_set(path_graph(3))};
  const auto q = product_building_set(edgeless, two);
  CHECK(oracle::as_set(q) == bits_of({{1}, {2}, {1, 2}, {3}, {4}, {5}, {3, 4}, {4, 5}, {3, 4, 5}}));
  CHECK_THROWS_AS(product_building_set(b, std::vector<BuildingSet>{parts[0]}), DomainError);
}

TEST_CASE("minimal flag sets have 2n-1 members") {
  for (const auto& g : small_connected(6)) {
    const auto b = graphical_building_set(g);
    CHECK(b.size() >= static_cast<std::size_t>(2 * g.order() - 1));
    const auto m = binary_decomposition(b, b.ground()).as_building_set();
    CHECK(m.size() == static_cast<std::size_t>(2 * g.order() - 1));
    CHECK(m.is_minimal_flag());
    CHECK(oracle::flag(m));
    CHECK(b.is_minimal_flag() == (b.size() == m.size()));
  }
}

TEST_CASE("compact keys ignore label gaps") {
  const BuildingSet a(Subset{2, 5}, {{2}, {5}, {2, 5}});
  const auto b = graphical_building_set(path_graph(2));
  CHECK(a.compact_key() == b.compact_key());
  CHECK_FALSE(graphical_building_set(path_graph(3)).compact_key() == graphical_building_set(complete_graph(3)).compact_key());
}
