#include <doctest.h>

#include <random>
#include <sstream>

#include "clawlab/catalog.hpp"
#include "clawlab/graph.hpp"
#include "clawlab/solvers.hpp"
#include "clawlab/verifier.hpp"
#include "oracles.hpp"

using namespace clawlab;

TEST_CASE("make_graph rejects bad input") {
  CHECK_THROWS_AS(make_graph(3, {{0, 3}}), InvalidArgument);
  CHECK_THROWS_AS(make_graph(3, {{1, 1}}), InvalidArgument);
  CHECK_THROWS_AS(make_graph(33, {}), InvalidArgument);
  CHECK_THROWS_AS(make_graph(-1, {}), InvalidArgument);
}

TEST_CASE("graph text format round trip") {
  const Graph g = resolve_catalog_ref("@D8").graph;
  std::stringstream ss;
  write_graph(ss, g);
  CHECK(read_graph(ss) == g);
  std::istringstream bad("3 2\n0 1\n");
  CHECK_THROWS_AS(read_graph(bad), InvalidArgument);
  std::istringstream junk("x");
  CHECK_THROWS_AS(read_graph(junk), InvalidArgument);
}

TEST_CASE("basic constructors") {
  CHECK(complete_graph(5).edge_count() == 10);
  CHECK(empty_graph(4).edge_count() == 0);
  CHECK(cycle_graph(6).max_degree() == 2);
  CHECK(path_graph(4).edge_count() == 3);
  CHECK(star_graph(3).max_degree() == 3);
  const Graph j = join(cycle_graph(5), complete_graph(2));
  CHECK(j.order() == 7);
  CHECK(j.edge_count() == 5 + 1 + 10);
  CHECK(disjoint_union(complete_graph(2), complete_graph(3)).edge_count() == 4);
}

TEST_CASE("complement is an involution and induced on V is identity") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    const Graph g = oracle::random_graph(rng, 1 + i % 12, 0.4);
    CHECK(complement(complement(g)) == g);
    CHECK(induced(g, g.vertices()) == g);
  }
}

TEST_CASE("solvers agree with brute force on random graphs") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 150; ++i) {
    const Graph g = oracle::random_graph(rng, 1 + i % 8, 0.2 + 0.1 * (i % 6));
    CHECK(clique_number(g) == oracle::clique_number(g));
    CHECK(independence_number(g) == oracle::independence_number(g));
    const auto r = chromatic_number(g);
    CHECK(r.chi == oracle::chromatic_number(g));
    CHECK(is_proper_coloring(g, r.coloring));
    CHECK(colors_used(r.coloring) == r.chi);
    CHECK(popcount(maximum_clique(g)) == oracle::clique_number(g));
    CHECK(g.is_clique(maximum_clique(g)));
    if (r.chi > 0) CHECK_FALSE(k_coloring(g, r.chi - 1).has_value());
  }
}

TEST_CASE("Brooks bounds hold on every graph up to 7 vertices") {
  for (int n = 1; n <= 7; ++n)
    for (const Graph& g : enumerate_graphs(n)) {
      const int chi = chromatic_number(g).chi;
      CHECK(clique_number(g) <= chi);
      CHECK(chi <= g.max_degree() + 1);
      if (chi == g.max_degree() + 1) {
        bool exceptional = false;
        for (VertexSet c : g.components()) {
          const Graph h = induced(g, c);
          const int k = h.order();
          const bool complete = h.edge_count() == k * (k - 1) / 2;
          const bool odd_cycle = k % 2 == 1 && k >= 3 && h.max_degree() == 2 && h.min_degree() == 2;
          if ((complete || odd_cycle) && chromatic_number(h).chi == chi) exceptional = true;
        }
        CHECK(exceptional);
      }
    }
}

TEST_CASE("join adds chromatic and clique numbers") {
  for (int a = 1; a <= 3; ++a)
    for (int b = 1; b <= 3; ++b)
      for (const Graph& g : enumerate_graphs(a))
        for (const Graph& h : enumerate_graphs(b)) {
          const Graph j = join(g, h);
          CHECK(chromatic_number(j).chi == chromatic_number(g).chi + chromatic_number(h).chi);
          CHECK(clique_number(j) == clique_number(g) + clique_number(h));
        }
}

TEST_CASE("line graph degrees follow the multiplicity formula") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 5);
    Multigraph m(n);
    const int edges = 1 + static_cast<int>(rng() % 10);
    for (int i = 0; i < edges; ++i) {
      const int x = static_cast<int>(rng() % n);
      int y = static_cast<int>(rng() % n);
      if (x == y) y = (y + 1) % n;
      m.add_edge(x, y);
    }
    const Graph l = line_graph(m);
    const auto inst = m.edge_instances();
    REQUIRE(static_cast<int>(inst.size()) == m.edge_instance_count());
    for (std::size_t i = 0; i < inst.size(); ++i)
      CHECK(l.degree(static_cast<int>(i)) == m.degree(inst[i].x) + m.degree(inst[i].y) - m.multiplicity(inst[i].x, inst[i].y) - 1);
  }
}

TEST_CASE("isomorphism maps transport adjacency and invariants agree") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 100; ++i) {
    const int n = 1 + i % 10;
    const Graph g = oracle::random_graph(rng, n, 0.45);
    std::vector<int> perm(n);
    for (int v = 0; v < n; ++v) perm[v] = v;
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Edge> e;
    for (auto [u, v] : g.edges()) e.emplace_back(perm[u], perm[v]);
    const Graph h = make_graph(n, e);
    const auto phi = is_isomorphic(g, h);
    REQUIRE(phi.has_value());
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v) CHECK(g.adjacent(u, v) == h.adjacent((*phi)[u], (*phi)[v]));
    CHECK(invariant_signature(g) == invariant_signature(h));
    CHECK(clique_number(g) == clique_number(h));
    CHECK(independence_number(g) == independence_number(h));
    CHECK(chromatic_number(g).chi == chromatic_number(h).chi);
  }
  CHECK_FALSE(is_isomorphic(cycle_graph(6), disjoint_union(cycle_graph(3), cycle_graph(3))).has_value());
}

TEST_CASE("graph enumeration counts match the known sequence") {
  const int expected[] = {0, 1, 2, 4, 11, 34, 156, 1044};
  for (int n = 1; n <= 7; ++n) CHECK(enumerate_graphs(n).size() == static_cast<std::size_t>(expected[n]));
  CHECK_THROWS_AS(enumerate_graphs(8), InvalidArgument);
}

TEST_CASE("chromatic budget is enforced") {
  CHECK_THROWS_AS(chromatic_number(resolve_catalog_ref("@fig1d").graph, Budget{1}), BudgetExceeded);
}
