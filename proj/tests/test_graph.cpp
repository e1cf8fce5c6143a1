#include <doctest.h>

#include "nesto/errors.hpp"
#include "nesto/graph.hpp"

using nesto::LabeledGraph;
using nesto::Subset;

TEST_CASE("named graphs") {
  CHECK(nesto::path_graph(4).edge_count() == 3);
  CHECK(nesto::cycle_graph(5).edge_count() == 5);
  CHECK(nesto::complete_graph(5).edge_count() == 10);
  const auto star = nesto::star_graph(4, 2);
  CHECK(star.degree(2) == 3);
  CHECK(star.leaves() == Subset{1, 3, 4});
  CHECK(star.is_tree());
  CHECK_FALSE(nesto::cycle_graph(4).is_tree());
}

TEST_CASE("structure queries") {
  LabeledGraph g(5);
  g.add_edge(1, 2);
  g.add_edge(2, 3);
  g.add_edge(4, 5);
  CHECK_FALSE(g.connected());
  CHECK(g.components().size() == 2);
  CHECK(g.component_of(1, g.vertices()) == Subset{1, 2, 3});
  CHECK(g.induces_connected(Subset{1, 2}));
  CHECK_FALSE(g.induces_connected(Subset{1, 3}));
  CHECK(g.induces_tree(Subset{1, 2, 3}));
  const auto d = g.distances_from(1);
  CHECK(d[3] == 2);
  CHECK(d[4] == -1);
}

TEST_CASE("edge errors") {
  LabeledGraph g(3);
  CHECK_THROWS_AS(g.add_edge(1, 1), nesto::DomainError);
  CHECK_THROWS_AS(g.add_edge(1, 4), nesto::DomainError);
  g.add_edge(1, 2);
  CHECK_THROWS_AS(g.add_edge(2, 1), nesto::DomainError);
  CHECK_THROWS_AS(g.remove_edge(2, 3), nesto::DomainError);
}

TEST_CASE("contracting a vertex joins its neighbours") {
  const auto c = nesto::contract_graph(nesto::path_graph(3), Subset{2});
  CHECK(c.vertices() == Subset{1, 3});
  CHECK(c.adjacent(1, 3));
  const auto k = nesto::contract_graph(nesto::star_graph(4, 4), Subset{4});
  CHECK(k.edge_count() == 3);
}

TEST_CASE("graph text format") {
  const auto g = nesto::parse_graph("# a path\n3 2\n\n1 2\n3 2\n");
  CHECK(g == nesto::path_graph(3));
  CHECK(nesto::parse_graph(nesto::format_graph(g)) == g);
  CHECK_THROWS_AS(nesto::parse_graph("3 2\n1 2\n"), nesto::ParseError);
  CHECK_THROWS_AS(nesto::parse_graph("3 1\n1 4\n"), nesto::ParseError);
  CHECK_THROWS_AS(nesto::parse_graph("3 1\n2 2\n"), nesto::ParseError);
  CHECK_THROWS_AS(nesto::parse_graph("3 2\n1 2\n2 1\n"), nesto::ParseError);
  CHECK_THROWS_AS(nesto::parse_graph("3 1\n1 2\n2 3\n"), nesto::ParseError);
  CHECK_THROWS_AS(nesto::parse_graph("65 0\n"), nesto::ParseError);
  CHECK_THROWS_AS(nesto::parse_graph("x y\n"), nesto::ParseError);
  CHECK_THROWS_AS(nesto::parse_graph(""), nesto::ParseError);
}
