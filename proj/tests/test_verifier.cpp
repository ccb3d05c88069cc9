#include <doctest.h>

#include <algorithm>
#include <set>

#include "clawlab/catalog.hpp"
#include "clawlab/structure.hpp"
#include "clawlab/verifier.hpp"

using namespace clawlab;

namespace {

std::string stable_json(Report r) {
  r.elapsed_ms = 0;
  return report_to_json(r);
}

}  // namespace

TEST_CASE("registry holds exactly one check per in-scope statement") {
  const std::vector<std::string> in_scope{
      "SmallPot", "CannotColorSelfWithSelf", "ComponentsOfColor", "NeighborhoodPotShrink", "LowSinglePair",
      "ConnectedAtLeast4Poss", "K3Classification", "K2Classification", "K2Antichair", "K3P4", "E2JoinB", "mixed",
      "mixed3", "IntersectionsInB", "E2n", "CircularInterval", "NoHomogeneous", "Irreducible2Join",
      "TrivialOrCanonical", "N6", "D8", "fig4", "BisimplicialOrThickC5", "TwoTwoOneTwoOne", "BKClawFree",
      "BipartiteComplementJoin", "BKW", "Gt", "LineGraph3C5", "fig1a", "fig1b", "fig1c", "fig1d", "TwoTripleEdges",
      "muBound"};
  const auto ids = check_ids();
  CHECK(std::set<std::string>(ids.begin(), ids.end()).size() == ids.size());
  CHECK(std::set<std::string>(ids.begin(), ids.end()) == std::set<std::string>(in_scope.begin(), in_scope.end()));
}

TEST_CASE("check id expansion") {
  CHECK(expand_check_ids({"fig1"}) == std::vector<std::string>{"fig1a", "fig1b", "fig1c", "fig1d"});
  CHECK(expand_check_ids({"all"}) == check_ids());
  CHECK(expand_check_ids({"N6", "D8"}) == std::vector<std::string>{"N6", "D8"});
  CHECK_THROWS_AS(expand_check_ids({"NoSuchLemma"}), InvalidArgument);
  CHECK_THROWS_AS(run_check("NoSuchLemma"), InvalidArgument);
}

TEST_CASE("reports round-trip through JSON") {
  Report r;
  r.id = "x";
  r.universe = "u";
  r.tested = 12;
  r.failures = {{"3 1; 0-1", "because"}};
  r.elapsed_ms = 1.5;
  r.notes = {"a", "b"};
  r.exhaustive = false;
  const Report back = report_from_json(report_to_json(r));
  CHECK(back.id == r.id);
  CHECK(back.universe == r.universe);
  CHECK(back.tested == r.tested);
  CHECK(back.failures == r.failures);
  CHECK(back.elapsed_ms == r.elapsed_ms);
  CHECK(back.notes == r.notes);
  CHECK(back.exhaustive == r.exhaustive);
  CHECK(report_to_json(back) == report_to_json(r));
  const Report real = run_check("K3P4");
  CHECK(report_to_json(report_from_json(report_to_json(real))) == report_to_json(real));
  CHECK_THROWS_AS(report_from_json("{"), InvalidArgument);
}

TEST_CASE("config parsing") {
  const VerifyConfig c = parse_config(R"({"max_b":4,"workers":3,"seed":9,"samples":10,"checks":{"E2JoinB":{"max_b":5}}})");
  CHECK(c.max_b == 4);
  CHECK(c.workers == 3);
  CHECK(c.seed == 9u);
  CHECK(c.samples == 10);
  CHECK(c.bound("E2JoinB") == 5);
  CHECK(c.bound("K3Classification") == 4);
  CHECK_THROWS_AS(parse_config("[1,2"), InvalidArgument);
}

TEST_CASE("reports are identical across runs and worker counts") {
  for (const char* id : {"K3Classification", "E2JoinB", "mixed3", "BKW", "NoHomogeneous", "TrivialOrCanonical",
                         "BipartiteComplementJoin", "TwoTripleEdges", "muBound", "E2n"}) {
    CAPTURE(id);
    VerifyConfig one;
    one.max_b = 5;
    VerifyConfig many = one;
    many.workers = 4;
    const std::string a = stable_json(run_check(id, one));
    CHECK(a == stable_json(run_check(id, many)));
    CHECK(a == stable_json(run_check(id, one)));
  }
}

TEST_CASE("counterexample verification") {
  for (const char* name : {"fig1a", "fig1b", "fig1c", "fig1d"})
    CHECK(verify_counterexample(resolve_catalog_ref(std::string("@") + name).graph, name).passed());
  // graphs on which bk_check takes the coloring branch are not counterexamples
  for (const char* ref : {"@G_t:5", "@G_t:6", "@thickC5:4,4,4,4,4"}) {
    const Graph g = resolve_catalog_ref(ref).graph;
    const BKResult r = bk_check(g);
    REQUIRE(r.coloring.has_value());
    CHECK(is_proper_coloring(g, *r.coloring));
    CHECK(colors_used(*r.coloring) <= r.delta - 1);
    CHECK_FALSE(verify_counterexample(g, ref).passed());
  }
}

TEST_CASE("bk_check branches and preconditions") {
  const BKResult k = bk_check(complete_graph(10));
  REQUIRE(k.clique.has_value());
  CHECK(popcount(*k.clique) == 9);
  CHECK_FALSE(k.refutation);
  CHECK_THROWS_AS(bk_check(star_graph(9)), InvalidArgument);
  CHECK_THROWS_AS(bk_check(resolve_catalog_ref("@fig1d").graph), InvalidArgument);
}

TEST_CASE("extract_critical returns a k-critical induced subgraph") {
  for (const char* ref : {"@fig1a", "@G_t:2", "@N6"}) {
    const Graph g = resolve_catalog_ref(ref).graph;
    const int k = chromatic_number(g).chi;
    const CriticalSubgraph c = extract_critical(g, k);
    CHECK(c.graph == induced(g, c.kept));
    CHECK(chromatic_number(c.graph).chi >= k);
    for (int v = 0; v < c.graph.order(); ++v) CHECK(chromatic_number(remove_vertex(c.graph, v)).chi < k);
  }
}

TEST_CASE("family predicates") {
  CHECK(is_almost_complete(complete_graph(4)));
  CHECK(is_almost_complete(resolve_catalog_ref("@paw").graph));
  CHECK_FALSE(is_almost_complete(cycle_graph(4)));
  CHECK(clique_component_sizes(disjoint_union(complete_graph(3), complete_graph(1))) == std::vector<int>{1, 3});
  CHECK_FALSE(clique_component_sizes(path_graph(3)).has_value());
  CHECK(is_e3_join_clique(join(empty_graph(3), complete_graph(2))));
  CHECK(in_e2_family(disjoint_union(path_graph(3), complete_graph(2))));
  CHECK_FALSE(in_e2_family(disjoint_union(path_graph(3), path_graph(3))));
  CHECK(is_k2_shape(path_graph(4)));
  CHECK_FALSE(is_k2_shape(cycle_graph(5)));
}

TEST_CASE("bipartite multigraph enumeration, small counts") {
  const auto ms = enumerate_bipartite_multigraphs(3);
  // 1 edge: K2; 2 edges: double edge, P3; 3 edges: triple edge, P3 with one edge doubled, P4, K_{1,3}
  CHECK(ms.size() == 7);
  for (const auto& m : ms) {
    CHECK(m.edge_instance_count() >= 1);
    CHECK(m.edge_instance_count() <= 3);
  }
}
