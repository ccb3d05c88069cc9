// Acceptance suite: one line per criterion, exit status 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "clawlab/catalog.hpp"
#include "clawlab/choosability.hpp"
#include "clawlab/graph.hpp"
#include "clawlab/solvers.hpp"
#include "clawlab/structure.hpp"
#include "clawlab/verifier.hpp"

using namespace clawlab;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (cond) return;
    if (ok) detail = what;
    ok = false;
  }
};

int workers = 1;

VerifyConfig config() {
  VerifyConfig c;
  c.workers = workers;
  return c;
}

void require_report(Outcome& o, const Report& r, std::string& summary) {
  summary += r.id + " " + std::to_string(r.tested) + "/" + std::to_string(r.failures.size()) + "f; ";
  o.require(r.passed(), r.id + ": " + (r.failures.empty() ? "" : r.failures.front().detail));
}

bool bipartite(const Graph& g) {
  std::vector<int> side(g.order(), -1);
  for (int s = 0; s < g.order(); ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    std::vector<int> stack{s};
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (int v : members(g.neighbors(u))) {
        if (side[v] < 0) {
          side[v] = 1 - side[u];
          stack.push_back(v);
        } else if (side[v] == side[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

Graph named(const std::string& ref) { return resolve_catalog_ref(ref).graph; }

// ---------------------------------------------------------------- criteria

Outcome counterexamples(std::string& info) {
  Outcome o;
  const int expected_delta[] = {6, 7, 7, 8};
  const char* names[] = {"fig1a", "fig1b", "fig1c", "fig1d"};
  for (int i = 0; i < 4; ++i) {
    const Graph g = named(std::string("@") + names[i]);
    const Report r = verify_counterexample(g, names[i]);
    const int chi = chromatic_number(g).chi;
    const int omega = clique_number(g);
    info += std::string(names[i]) + " (" + std::to_string(g.max_degree()) + "," + std::to_string(chi) + ",w" +
            std::to_string(omega) + ") ";
    o.require(r.passed(), std::string(names[i]) + " report failed");
    o.require(g.max_degree() == expected_delta[i] && chi == expected_delta[i], std::string(names[i]) + " (Delta, chi)");
    o.require(omega <= g.max_degree() - 1, std::string(names[i]) + " omega");
  }
  return o;
}

Outcome tightness(std::string& info) {
  Outcome o;
  for (int t = 3; t <= 5; ++t) {
    const Graph g = g_t(t);
    const int chi = chromatic_number(g).chi, omega = clique_number(g), delta = g.max_degree();
    info += "t=" + std::to_string(t) + " (" + std::to_string(chi) + "," + std::to_string(omega) + "," +
            std::to_string(delta) + ") ";
    o.require(chi == t + 3 && omega == t + 2 && delta == t + 4, "G_" + std::to_string(t) + " parameters");
    o.require(is_claw_free(g), "G_t claw-free");
    o.require(!is_quasi_line(g), "G_t quasi-line");
  }
  return o;
}

Outcome line_graph_identity(std::string& info) {
  Outcome o;
  Multigraph m(5);
  for (int i = 0; i < 5; ++i) m.add_edge(i, (i + 1) % 5, 3);
  const Graph l = line_graph(m);
  info = "|L| = " + std::to_string(l.order()) + ", |E| = " + std::to_string(l.edge_count());
  o.require(is_isomorphic(l, named("@fig1d")).has_value(), "not isomorphic to fig1d");
  return o;
}

Outcome d1_verdicts(std::string& info) {
  Outcome o;
  const Graph k1 = complete_graph(1), k2 = complete_graph(2), k3 = complete_graph(3), e2 = empty_graph(2),
              e3 = empty_graph(3);
  const std::vector<std::pair<std::string, Graph>> good{
      {"K1*N6", join(k1, named("@N6"))},
      {"D8", named("@D8")},
      {"K3*P4", join(k3, path_graph(4))},
      {"K2*antichair", join(k2, named("@antichair"))},
      {"K2*fig4", join(k2, named("@fig4"))},
      {"E2*P4", join(e2, path_graph(4))},
      {"K2*C5", join(k2, cycle_graph(5))},
      {"K2*C4", join(k2, cycle_graph(4))},
      {"E2*paw", join(e2, named("@paw"))},
      {"E2*diamond", join(e2, named("@diamond"))}};
  const Graph k2k2 = disjoint_union(k2, k2);
  const std::vector<std::pair<std::string, Graph>> bad{
      {"K3*(K2+K2)", join(k3, k2k2)},
      {"E2*(K2+P3)", join(e2, disjoint_union(k2, path_graph(3)))},
      {"K3*(E3+K2)", join(k3, disjoint_union(e3, k2))},
      {"K3*(E3+K1)", join(k3, disjoint_union(e3, k1))},
      {"K3*(E3+K3)", join(k3, disjoint_union(e3, k3))},
      {"K3*paw", join(k3, named("@paw"))},
      {"K3*(K1+K2+K2)", join(k3, disjoint_union(k1, k2k2))},
      {"K3*(E3*K2)", join(k3, join(e3, k2))}};
  ChooseOptions opt;
  opt.workers = workers;
  opt.reduce = false;  // raw Small Pot cap |G| - 1 on the whole graph
  double slowest = 0;
  for (const auto& [name, g] : good) {
    const auto t0 = std::chrono::steady_clock::now();
    const Verdict v = is_d1_choosable(g, opt);
    slowest = std::max(slowest, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
    o.require(v.choosable, name + " reported not choosable");
  }
  for (const auto& [name, g] : bad) {
    const Verdict v = is_d1_choosable(g, opt);
    o.require(!v.choosable, name + " reported choosable");
    if (v.witness) {
      const auto f = FSpec::d1().resolve(g);
      for (int x = 0; x < g.order(); ++x) o.require(popcount(v.witness->lists[x]) == f[x], name + " witness sizes");
      o.require(!color_from_lists(g, *v.witness), name + " witness is colorable");
    } else {
      o.require(false, name + " has no witness");
    }
  }
  info = std::to_string(good.size()) + " choosable, " + std::to_string(bad.size()) + " not; slowest " +
         std::to_string(slowest).substr(0, 5) + " s";
  o.require(slowest < 120, "an instance exceeded 2 min");
  return o;
}

Outcome reports(const std::vector<std::pair<std::string, int>>& ids, std::string& info) {
  Outcome o;
  for (const auto& [id, bound] : ids) {
    VerifyConfig c = config();
    if (bound > 0) c.max_b = bound;
    require_report(o, run_check(id, c), info);
  }
  return o;
}

Outcome e2n(std::string& info) {
  Outcome o;
  for (int n = 1; n <= 4; ++n) {
    const Graph g = e2_power(n);
    ChooseOptions opt;
    opt.workers = workers;
    const Verdict yes = is_f_choosable(g, FSpec::constant(n), opt);
    const Verdict no = is_f_choosable(g, FSpec::constant(n - 1), opt);
    o.require(yes.choosable, "E2^" + std::to_string(n) + " not n-choosable");
    o.require(!no.choosable && no.witness && !color_from_lists(g, *no.witness),
              "E2^" + std::to_string(n) + " (n-1)-choosable or bad witness");
    info += std::to_string(n) + " ";
  }
  info = "n = " + info + "checked";
  return o;
}

Outcome bk(std::string& info) {
  Outcome o;
  const Graph g5 = g_t(5);
  const BKResult a = bk_check(g5);
  o.require(a.coloring && is_proper_coloring(g5, *a.coloring) && colors_used(*a.coloring) == 8, "G_5 8-coloring");
  const BKResult b = bk_check(complete_graph(10));
  o.require(b.clique && popcount(*b.clique) == b.delta && complete_graph(10).is_clique(*b.clique), "K10 clique");
  o.require(!a.refutation && !b.refutation, "refutation event");
  const Report r = run_check("BKClawFree", config());
  require_report(o, r, info);
  info += "G_5 colors " + std::to_string(a.coloring ? colors_used(*a.coloring) : -1) + ", K10 clique " +
          std::to_string(b.clique ? popcount(*b.clique) : -1);
  return o;
}

// Hosts H + b1 + b2 with b1 joined to a clique prefix A1 of a linear order of H,
// b2 to a disjoint clique suffix A2, and b1 ~ b2.
struct ReductionTally {
  int reducible = 0;
  int reduced = 0;
  int degenerate = 0;
  int invalid = 0;
};

void reduction_corpus(ReductionTally& tally, std::string& first_problem) {
  for (int n = 3; n <= 6; ++n)
    for (const Graph& h : enumerate_graphs(n)) {
      if (!h.is_connected()) continue;
      const auto rep = is_linear_interval(h);
      if (!rep) continue;
      const auto& ord = rep->order;
      for (int p = 1; p < n; ++p)
        for (int q = 1; p + q <= n; ++q) {
          VertexSet a1 = 0, a2 = 0;
          for (int i = 0; i < p; ++i) a1 |= singleton(ord[i]);
          for (int i = n - q; i < n; ++i) a2 |= singleton(ord[i]);
          if (!h.is_clique(a1) || !h.is_clique(a2)) continue;
          std::vector<Edge> e = h.edges();
          for (int v : members(a1)) e.emplace_back(v, n);
          for (int v : members(a2)) e.emplace_back(v, n + 1);
          e.emplace_back(n, n + 1);
          const Graph host = make_graph(n + 2, e);
          const auto j = make_two_join(host, h.vertices(), a1, a2);
          if (!j || j->kind != TwoJoinKind::canonical || !j->reducible) continue;
          ++tally.reducible;
          std::vector<TwoJoin> chain{*j};
          try {
            while (chain.back().kind == TwoJoinKind::canonical && chain.back().reducible)
              chain.push_back(reduce_two_join(host, chain.back()));
          } catch (const InvalidArgument&) {
            ++tally.degenerate;
            if (first_problem.empty()) first_problem = "degenerate reduction on " + graph_signature(host);
            continue;
          }
          bool valid = true;
          for (const auto& s : chain) valid &= two_join_violation(host, s).empty();
          const auto& last = chain.back();
          if (valid && last.kind == TwoJoinKind::canonical && !last.reducible) {
            ++tally.reduced;
          } else {
            ++tally.invalid;
            if (first_problem.empty()) first_problem = "invalid reduction output on " + graph_signature(host);
          }
        }
    }
}

Outcome structure(std::string& info) {
  Outcome o;
  int graphs = 0, circular = 0;
  for (int n = 1; n <= 7; ++n)
    for (const Graph& g : enumerate_graphs(n)) {
      ++graphs;
      const std::string sig = graph_signature(g);
      const auto circ = is_circular_interval(g);
      const auto lin = is_linear_interval(g);
      if (circ) {
        ++circular;
        o.require(represents(g, *circ) && is_claw_free(g) && is_quasi_line(g), "circular interval invariant: " + sig);
      }
      if (lin) {
        IntervalRepresentation wrapped = *lin;
        wrapped.circular = true;
        o.require(represents(g, *lin) && circ && represents(g, wrapped), "linear interval invariant: " + sig);
      }
      const auto cover = two_clique_cover(g);
      o.require(cover.has_value() == bipartite(complement(g)), "two-clique cover iff co-bipartite: " + sig);
      if (cover) o.require(independence_number(g) <= 2, "cover implies alpha <= 2: " + sig);
      if (is_quasi_line(g)) o.require(is_claw_free(g), "quasi-line implies claw-free: " + sig);
      if (auto parts = as_thickened_c5(g)) {
        std::vector<int> sizes;
        for (VertexSet p : *parts) sizes.push_back(popcount(p));
        o.require(is_isomorphic(g, thicken(cycle_graph(5), sizes)).has_value(), "thickened C5 reconstruction: " + sig);
      }
      if (!is_skeletal(g)) o.require(is_skeletal(make_skeletal(g)), "make_skeletal: " + sig);
    }
  for (const char* id : {"CircularInterval", "NoHomogeneous", "Irreducible2Join", "TrivialOrCanonical"})
    require_report(o, run_check(id, config()), info);
  ReductionTally tally;
  std::string problem;
  reduction_corpus(tally, problem);
  info += std::to_string(graphs) + " graphs (" + std::to_string(circular) + " circular interval); reducible 2-joins " +
          std::to_string(tally.reducible) + ": " + std::to_string(tally.reduced) + " reduced to irreducible canonical, " +
          std::to_string(tally.degenerate) + " degenerate, " + std::to_string(tally.invalid) + " invalid";
  o.require(tally.degenerate == 0 && tally.invalid == 0, problem);
  return o;
}

struct Criterion {
  int number;
  std::string name;
  double limit_s;  // 0: no runtime bound stated
  std::function<Outcome(std::string&)> run;
};

}  // namespace

int main(int argc, char** argv) {
  for (int i = 1; i + 1 < argc; ++i)
    if (std::string(argv[i]) == "--workers") workers = std::max(1, std::stoi(argv[i + 1]));
  const std::vector<Criterion> criteria{
      {1, "counterexample suite", 30, counterexamples},
      {2, "tightness family G_t", 10, tightness},
      {3, "line_graph(3 C5) = fig1d", 5, line_graph_identity},
      {4, "d1-choosability verdicts", 0, d1_verdicts},
      {5, "classification lemmas", 0,
       [](std::string& s) { return reports({{"K3Classification", 6}, {"E2JoinB", 6}, {"ConnectedAtLeast4Poss", 5}}, s); }},
      {6, "low-vertex lemmas", 0,
       [](std::string& s) { return reports({{"mixed", 0}, {"mixed3", 0}, {"TwoTwoOneTwoOne", 0}}, s); }},
      {7, "minimal bad assignment properties", 0,
       [](std::string& s) {
         return reports({{"ComponentsOfColor", 6},
                         {"CannotColorSelfWithSelf", 6},
                         {"NeighborhoodPotShrink", 6},
                         {"LowSinglePair", 6},
                         {"IntersectionsInB", 6}},
                        s);
       }},
      {8, "E2^n choosability", 120, e2n},
      {9, "BisimplicialOrThickC5 desk form", 0,
       [](std::string& s) { return reports({{"BisimplicialOrThickC5", 6}}, s); }},
      {10, "BKW desk check", 600, [](std::string& s) { return reports({{"BKW", 6}}, s); }},
      {11, "bk_check instances", 0, bk},
      {12, "structure suite", 0, structure},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    std::string info;
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      o = c.run(info);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.limit_s > 0 && secs >= c.limit_s) o.require(false, "runtime over limit");
    if (!o.ok) ++failed;
    char timing[64];
    if (c.limit_s > 0)
      std::snprintf(timing, sizeof timing, "%.2f s, limit %.0f s", secs, c.limit_s);
    else
      std::snprintf(timing, sizeof timing, "%.2f s", secs);
    std::printf("%s [%2d] %s (%s) %s%s%s\n", o.ok ? "PASS" : "FAIL", c.number, c.name.c_str(), timing, info.c_str(),
                o.ok ? "" : " | ", o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
