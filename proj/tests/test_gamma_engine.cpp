#include <doctest.h>

#include <random>

#include "nesto/buildset.hpp"
#include "nesto/catalog.hpp"
#include "nesto/errors.hpp"
#include "nesto/gamma_engine.hpp"
#include "nesto/nested.hpp"
#include "nesto/parallel.hpp"
#include "oracles.hpp"

using namespace nesto;

namespace {

std::vector<LabeledGraph> connected_up_to(int max_n) {
  std::vector<LabeledGraph> out;
  for (int n = 1; n <= max_n; ++n)
    for (auto& g : connected_graph_classes(n)) out.push_back(g);
  return out;
}

}  // namespace

TEST_CASE("initial comb") {
  const auto p3 = graphical_building_set(path_graph(3));
  CHECK(oracle::as_set(initial_comb(p3)) == std::set<std::uint64_t>{0b1, 0b10, 0b100, 0b11, 0b111});
  const auto p2 = graphical_building_set(path_graph(2));
  CHECK(initial_comb(p2) == p2);
  const auto k3 = graphical_building_set(complete_graph(3));
  const auto comb = initial_comb(k3);
  CHECK(oracle::as_set(comb) == std::set<std::uint64_t>{0b1, 0b10, 0b100, 0b11, 0b111});
  CHECK(comb.is_minimal_flag());
  // Flag but with no prefix comb: falls back to a binary decomposition.
  const BuildingSet pairs(Subset::range(4), {{1}, {2}, {3}, {4}, {1, 2}, {3, 4}, {1, 2, 3, 4}});
  CHECK(initial_comb(pairs) == pairs);
  CHECK_THROWS_AS(initial_comb(graphical_building_set(LabeledGraph(2))), DomainError);
}

TEST_CASE("flag chains") {
  const auto p3 = graphical_building_set(path_graph(3));
  CHECK(flag_chain(initial_comb(p3), p3).additions == std::vector<Subset>{{2, 3}});
  const auto k3 = graphical_building_set(complete_graph(3));
  const auto chain = flag_chain(initial_comb(k3), k3);
  CHECK(chain.additions == std::vector<Subset>{{1, 3}, {2, 3}});
  CHECK(flag_chain_valid(chain));
  CHECK(flag_chain(k3, k3).additions.empty());
  CHECK_THROWS_AS(flag_chain(k3, p3), DomainError);
}

TEST_CASE("engine known values") {
  CHECK(gamma_incremental(graphical_building_set(path_graph(2))) == IntPolynomial{1});
  CHECK(gamma_incremental(graphical_building_set(complete_graph(3))) == IntPolynomial{1, 2});
  CHECK(gamma_incremental(graphical_building_set(path_graph(4))) == IntPolynomial{1, 3});
  CHECK(gamma_incremental(graphical_building_set(star_graph(4))) == IntPolynomial{1, 4});
  CHECK(gamma_incremental(graphical_building_set(complete_graph(4))) == IntPolynomial{1, 8});
  // Non-flag input is answered by the oracle.
  const BuildingSet nonflag(Subset{1, 2, 3}, {{1}, {2}, {3}, {1, 2, 3}});
  CHECK(gamma_incremental(nonflag) == gamma_oracle(nonflag));
}

TEST_CASE("engine equals oracle, both scan orders") {
  GammaMemo memo;
  for (const auto& g : connected_up_to(6)) {
    const auto b = graphical_building_set(g);
    const auto expected = gamma_oracle(b);
    CHECK(gamma_incremental(b, memo) == expected);
    CHECK(gamma_incremental(b, EngineOptions{ScanOrder::reverse}) == expected);
  }
  CHECK(memo.size() > 0);
  CHECK(memo.hits() > 0);
}

TEST_CASE("serial and parallel runs agree") {
  std::mt19937_64 rng(77);
  std::vector<LabeledGraph> graphs;
  for (int k = 0; k < 60; ++k) graphs.push_back(random_connected_graph(7, rng));
  std::vector<IntPolynomial> serial(graphs.size()), parallel(graphs.size());
  GammaMemo a, b;
  for_each_index(graphs.size(), Execution::serial,
                 [&](std::size_t i) { serial[i] = gamma_incremental(graphical_building_set(graphs[i]), a); });
  for_each_index(graphs.size(), Execution::parallel,
                 [&](std::size_t i) { parallel[i] = gamma_incremental(graphical_building_set(graphs[i]), b); });
  CHECK(serial == parallel);
  CHECK(a.entries() == b.entries());
}

TEST_CASE("parallel loop rethrows") {
  CHECK_THROWS_AS(for_each_index(10, Execution::parallel,
                                 [](std::size_t i) {
                                   if (i == 7) throw DomainError("boom");
                                 }),
                  DomainError);
}

TEST_CASE("memo keeps the first value") {
  GammaMemo memo;
  const MemoKey key{2, 1, 2, 3};
  CHECK_FALSE(memo.find(key).has_value());
  memo.insert(key, {1});
  memo.insert(key, {2});
  CHECK(*memo.find(key) == IntPolynomial{1});
  CHECK(from_compact_key(graphical_building_set(path_graph(2)).compact_key()) == graphical_building_set(path_graph(2)));
}

TEST_CASE("chains from every comb are flag at each step") {
  for (const auto& g : connected_up_to(6)) {
    const auto b = graphical_building_set(g);
    const auto comb = initial_comb(b);
    CHECK(comb.is_minimal_flag());
    for (auto order : {ScanOrder::forward, ScanOrder::reverse}) CHECK(flag_chain_valid(flag_chain(comb, b, order)));
  }
}
