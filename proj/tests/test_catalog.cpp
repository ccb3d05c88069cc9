#include <doctest.h>

#include "clawlab/catalog.hpp"
#include "clawlab/solvers.hpp"
#include "clawlab/structure.hpp"
#include "oracles.hpp"

using namespace clawlab;

TEST_CASE("fig1 graphs have the expected maximum degrees") {
  CHECK(resolve_catalog_ref("@fig1a").graph.max_degree() == 6);
  CHECK(resolve_catalog_ref("@fig1b").graph.max_degree() == 7);
  CHECK(resolve_catalog_ref("@fig1c").graph.max_degree() == 7);
  CHECK(resolve_catalog_ref("@fig1d").graph.max_degree() == 8);
}

TEST_CASE("fig1d is claw-free and the line graph of a tripled 5-cycle") {
  const Graph g = resolve_catalog_ref("@fig1d").graph;
  CHECK(oracle::claw_free(g));
  Multigraph m(5);
  for (int i = 0; i < 5; ++i) m.add_edge(i, (i + 1) % 5, 3);
  CHECK(is_isomorphic(g, line_graph(m)).has_value());
}

TEST_CASE("N6 is a 5-cycle plus a vertex with four neighbours on it") {
  const NamedGraph n6 = resolve_catalog_ref("@N6");
  const int y = 5;
  REQUIRE(n6.labels.at(y) == "y");
  CHECK(is_isomorphic(remove_vertex(n6.graph, y), cycle_graph(5)).has_value());
  CHECK(n6.graph.degree(y) == 4);
}

TEST_CASE("small named graphs") {
  CHECK(is_isomorphic(resolve_catalog_ref("@antichair").graph, complement(resolve_catalog_ref("@chair").graph)).has_value());
  CHECK(is_isomorphic(resolve_catalog_ref("@paw").graph, complement(disjoint_union(path_graph(3), complete_graph(1)))).has_value());
  CHECK(resolve_catalog_ref("@diamond").graph.edge_count() == 5);
  CHECK(resolve_catalog_ref("@claw").graph.max_degree() == 3);
  CHECK(resolve_catalog_ref("@E2n:3").graph.edge_count() == 12);
  CHECK(is_isomorphic(resolve_catalog_ref("@E2n:2").graph, cycle_graph(4)).has_value());
  CHECK(resolve_catalog_ref("@thickC5:2,1,1,1,1").graph.order() == 6);
}

TEST_CASE("G_t is claw-free and not quasi-line with the stated parameters") {
  for (int t = 1; t <= 6; ++t) {
    const Graph g = resolve_catalog_ref("@G_t:" + std::to_string(t)).graph;
    CHECK(oracle::claw_free(g));
    CHECK_FALSE(is_quasi_line(g));
    CHECK(g.max_degree() == t + 4);
    CHECK(clique_number(g) == t + 2);
    CHECK(chromatic_number(g).chi == t + 3);
  }
}

TEST_CASE("D8 and fig4 shapes") {
  const NamedGraph d8 = resolve_catalog_ref("@D8");
  CHECK(d8.graph.order() == 8);
  CHECK(d8.graph.edge_count() == 17);
  const NamedGraph f4 = resolve_catalog_ref("@fig4");
  CHECK(f4.graph.order() == 6);
}

TEST_CASE("catalog errors") {
  CHECK_THROWS_AS(resolve_catalog_ref("@nope"), InvalidArgument);
  CHECK_THROWS_AS(resolve_catalog_ref("D8"), InvalidArgument);
  CHECK_THROWS_AS(resolve_catalog_ref("@G_t:0"), InvalidArgument);
  CHECK_THROWS_AS(resolve_catalog_ref("@thickC5:1,1,1"), InvalidArgument);
  CHECK_THROWS_AS(resolve_catalog_ref("@E2n:x"), InvalidArgument);
  for (const auto& e : catalog_list()) CHECK_FALSE(e.provenance.empty());
}
