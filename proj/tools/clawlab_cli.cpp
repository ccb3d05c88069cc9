#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "clawlab/catalog.hpp"
#include "clawlab/choosability.hpp"
#include "clawlab/graph.hpp"
#include "clawlab/solvers.hpp"
#include "clawlab/structure.hpp"
#include "clawlab/verifier.hpp"

using namespace clawlab;
using nlohmann::json;

namespace {

enum Exit { ok = 0, negative = 1, error = 2, budget = 3 };

struct Globals {
  bool as_json = false;
  int workers = 1;
  std::uint64_t node_budget = 0;
  int max_b = -1;
  std::uint64_t seed = 1;
  std::string config;
};

Graph load_graph(const std::string& source) {
  if (!source.empty() && source[0] == '@') return resolve_catalog_ref(source).graph;
  std::ifstream in(source);
  if (!in) throw InvalidArgument("cannot open graph file '" + source + "'");
  return read_graph(in);
}

json set_json(VertexSet s) { return members(s); }

json two_join_json(const TwoJoin& j) {
  return {{"h", set_json(j.h)},   {"a1", set_json(j.a1)}, {"a2", set_json(j.a2)},
          {"b1", set_json(j.b1)}, {"b2", set_json(j.b2)}, {"order", j.order},
          {"kind", to_string(j.kind)}, {"reducible", j.reducible}};
}

json representation_json(const std::optional<IntervalRepresentation>& rep) {
  if (!rep) return {{"accepted", false}};
  json arcs = json::array();
  for (auto [a, b] : rep->arcs) arcs.push_back({a, b});
  return {{"accepted", true}, {"witness", {{"order", rep->order}, {"arcs", arcs}}}};
}

ChooseOptions choose_options(const Globals& g) {
  ChooseOptions o;
  o.workers = g.workers;
  o.max_nodes = g.node_budget;
  return o;
}

int cmd_choosable(const Globals& g, const std::string& source, const std::string& fspec, bool exhaustive) {
  const Graph graph = load_graph(source);
  const FSpec f = FSpec::parse(fspec);
  ChooseOptions o = choose_options(g);
  o.exhaustive = exhaustive;
  const Verdict v = is_f_choosable(graph, f, o);
  if (g.as_json) {
    json j{{"graph", source},           {"f", f.to_string()},          {"choosable", v.choosable},
           {"pot_cap", v.pot_cap},       {"nodes", v.stats.nodes},      {"assignments", v.stats.assignments},
           {"prunes", v.stats.prunes}};
    if (v.witness) {
      json lists = json::array();
      for (ColorSet c : v.witness->lists) {
        std::vector<int> colors;
        for (int x = 0; x < 32; ++x)
          if ((c >> x) & 1u) colors.push_back(x);
        lists.push_back(colors);
      }
      j["witness"] = lists;
    }
    std::cout << j.dump() << '\n';
  } else {
    std::cout << (v.choosable ? "choosable" : "not choosable") << '\n';
    if (v.witness) std::cout << v.witness->to_string();
  }
  return v.choosable ? ok : negative;
}

int cmd_verify(const Globals& g, const std::vector<std::string>& ids, int samples) {
  VerifyConfig cfg;
  if (!g.config.empty()) {
    std::ifstream in(g.config);
    if (!in) throw InvalidArgument("cannot open config '" + g.config + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    cfg = parse_config(ss.str(), cfg);
  }
  if (g.max_b >= 0) cfg.max_b = g.max_b;
  cfg.workers = g.workers;
  if (g.node_budget) cfg.node_budget = g.node_budget;
  cfg.seed = g.seed;
  if (samples >= 0) cfg.samples = samples;
  bool all_pass = true;
  for (const auto& id : expand_check_ids(ids.empty() ? std::vector<std::string>{"all"} : ids)) {
    const Report r = run_check(id, cfg);
    all_pass &= r.passed();
    if (g.as_json) {
      std::cout << report_to_json(r) << std::endl;
      continue;
    }
    std::cout << (r.passed() ? "PASS " : "FAIL ") << r.id << "  tested=" << r.tested
              << "  failures=" << r.failures.size() << "  " << static_cast<long>(r.elapsed_ms) << " ms"
              << (r.exhaustive ? "" : "  [smoke]") << '\n';
    std::cout << "     universe: " << r.universe << '\n';
    for (const auto& n : r.notes) std::cout << "     note: " << n << '\n';
    for (const auto& f : r.failures) std::cout << "     failure: " << f.graph << " | " << f.detail << '\n';
    std::cout.flush();
  }
  return all_pass ? ok : negative;
}

int cmd_recognize(const Globals& g, const std::string& source) {
  const Graph graph = load_graph(source);
  const Budget b{g.node_budget ? g.node_budget : 2000000};
  json j{{"name", source}, {"n", graph.order()}, {"m", graph.edge_count()}};
  const auto claw = find_claw(graph);
  j["claw_free"] = !claw;
  if (claw) j["claw"] = {{"center", claw->center}, {"leaves", claw->leaves}};
  const auto nb = non_bisimplicial_vertex(graph);
  j["quasi_line"] = !nb;
  if (nb) j["non_bisimplicial_vertex"] = *nb;
  if (auto cover = two_clique_cover(graph))
    j["two_clique_cover"] = {{"accepted", true}, {"witness", {set_json(cover->first), set_json(cover->second)}}};
  else
    j["two_clique_cover"] = {{"accepted", false}};
  if (auto t = as_thickened_c5(graph)) {
    json parts = json::array();
    for (VertexSet s : *t) parts.push_back(set_json(s));
    j["thickened_c5"] = {{"accepted", true}, {"witness", parts}};
  } else {
    j["thickened_c5"] = {{"accepted", false}};
  }
  std::vector<std::string> over_budget;
  try {
    j["circular_interval"] = representation_json(is_circular_interval(graph, b));
  } catch (const BudgetExceeded&) {
    j["circular_interval"] = nullptr;
    over_budget.push_back("circular_interval");
  }
  try {
    j["linear_interval"] = representation_json(is_linear_interval(graph, b));
  } catch (const BudgetExceeded&) {
    j["linear_interval"] = nullptr;
    over_budget.push_back("linear_interval");
  }
  j["omega"] = clique_number(graph);
  j["alpha"] = independence_number(graph);
  j["Delta"] = graph.max_degree();
  j["delta"] = graph.min_degree();
  try {
    j["chi"] = chromatic_number(graph, b).chi;
  } catch (const BudgetExceeded&) {
    j["chi"] = nullptr;
    over_budget.push_back("chi");
  }
  j["chi_l"] = nullptr;
  if (graph.order() <= 10) {
    try {
      ChooseOptions o = choose_options(g);
      o.max_nodes = b.max_nodes;
      j["chi_l"] = list_chromatic_number(graph, o);
    } catch (const BudgetExceeded&) {
      over_budget.push_back("chi_l");
    }
  } else {
    over_budget.push_back("chi_l");
  }
  j["budget_exceeded"] = over_budget;
  if (g.as_json) {
    std::cout << j.dump() << '\n';
  } else {
    std::cout << j.dump(2) << '\n';
  }
  return ok;
}

int cmd_chromatic(const Globals& g, const std::string& source) {
  const Graph graph = load_graph(source);
  const auto r = chromatic_number(graph, Budget{g.node_budget});
  if (g.as_json) {
    std::cout << json{{"graph", source}, {"chi", r.chi}, {"coloring", r.coloring}, {"nodes", r.nodes}}.dump() << '\n';
  } else {
    std::cout << "chi = " << r.chi << "\ncoloring:";
    for (int c : r.coloring) std::cout << ' ' << c;
    std::cout << '\n';
  }
  return ok;
}

int cmd_catalog(const Globals& g, const std::string& name) {
  if (name.empty()) {
    json list = json::array();
    for (const auto& e : catalog_list()) {
      list.push_back({{"name", e.name}, {"provenance", e.provenance}, {"params", e.params}});
      if (!g.as_json) std::cout << e.name << (e.params.empty() ? "" : " (" + e.params + ")") << "  " << e.provenance << '\n';
    }
    if (g.as_json) std::cout << list.dump() << '\n';
    return ok;
  }
  const NamedGraph ng = resolve_catalog_ref(name[0] == '@' ? name : "@" + name);
  if (g.as_json) {
    std::cout << json{{"name", ng.name},
                      {"provenance", ng.provenance},
                      {"n", ng.graph.order()},
                      {"edges", ng.graph.edges()},
                      {"labels", ng.labels}}
                     .dump()
              << '\n';
  } else {
    write_graph(std::cout, ng.graph);
  }
  return ok;
}

int cmd_bk_check(const Globals& g, const std::string& source, const std::string& dir) {
  const Graph graph = load_graph(source);
  const BKResult r = bk_check(graph, Budget{g.node_budget}, dir);
  json j{{"graph", source}, {"Delta", r.delta}, {"refutation", r.refutation}};
  if (r.clique) j["clique"] = set_json(*r.clique);
  if (r.coloring) j["coloring"] = *r.coloring;
  if (g.as_json) {
    std::cout << j.dump() << '\n';
  } else if (r.clique) {
    std::cout << "K_" << r.delta << " found:";
    for (int v : members(*r.clique)) std::cout << ' ' << v;
    std::cout << '\n';
  } else if (r.coloring) {
    std::cout << (r.delta - 1) << "-coloring:";
    for (int c : *r.coloring) std::cout << ' ' << c;
    std::cout << '\n';
  } else {
    std::cout << "REFUTATION EVENT: neither K_Delta nor a (Delta-1)-coloring\n";
  }
  return r.refutation ? negative : ok;
}

int cmd_reduce(const Globals& g, const std::string& source, int max_h) {
  const Graph graph = load_graph(source);
  json out = json::array();
  for (const auto& j : find_interval_two_joins(graph, max_h)) {
    json chain = json::array();
    json entry = two_join_json(j);
    if (j.kind == TwoJoinKind::canonical && j.reducible) {
      try {
        for (const auto& step : reduce_fully(graph, j)) chain.push_back(two_join_json(step));
      } catch (const InvalidArgument& e) {
        entry["reduction_error"] = e.what();
      }
    }
    entry["chain"] = chain;
    out.push_back(entry);
  }
  std::cout << (g.as_json ? out.dump() : out.dump(2)) << '\n';
  return ok;
}

int cmd_smoke(const Globals& g, const std::string& gadget, int samples) {
  const Report r = smoke_check_gadget(gadget, samples < 0 ? 1000 : samples, g.seed);
  if (g.as_json)
    std::cout << report_to_json(r) << '\n';
  else
    std::cout << (r.passed() ? "PASS " : "FAIL ") << r.id << "  " << r.tested - r.failures.size() << '/' << r.tested
              << " good  [smoke]\n";
  return r.passed() ? ok : negative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"clawlab: exact choosability, structure recognition and lemma verification for small graphs"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_flag("--json", g.as_json, "machine-readable output");
  app.add_option("--workers", g.workers, "worker threads")->check(CLI::PositiveNumber);
  app.add_option("--node-budget", g.node_budget, "search node budget (0 = unlimited)");
  app.add_option("--max-b", g.max_b, "universe bound for verify")->check(CLI::NonNegativeNumber);
  app.add_option("--seed", g.seed, "seed for randomized smoke checks");
  app.add_option("--config", g.config, "JSON verify config file");

  std::string graph_src, fspec = "d1", name, dir, gadget = "two-triple-edges";
  std::vector<std::string> ids;
  bool exhaustive = false;
  int samples = -1, max_h = 8;

  auto* choosable = app.add_subcommand("choosable", "decide f-choosability");
  choosable->add_option("graph", graph_src, "graph file or @catalog name")->required();
  choosable->add_option("--f", fspec, "d1, d0, k=4, f=3,2,2, optionally followed by low=v,... or set=v:size");
  choosable->add_flag("--exhaustive", exhaustive, "allow f(v) >= |G| with pot cap sum f");

  auto* verify = app.add_subcommand("verify", "run lemma checks");
  verify->add_option("ids", ids, "check ids, 'all' or 'fig1'");
  verify->add_option("--samples", samples, "samples for smoke checks");

  auto* recognize = app.add_subcommand("recognize", "structural profile as JSON");
  recognize->add_option("graph", graph_src)->required();

  auto* chromatic = app.add_subcommand("chromatic", "exact chromatic number");
  chromatic->add_option("graph", graph_src)->required();

  auto* catalog = app.add_subcommand("catalog", "list catalog names or print one graph");
  catalog->add_option("name", name);

  auto* bk = app.add_subcommand("bk-check", "K_Delta or (Delta-1)-coloring for claw-free graphs with Delta >= 9");
  bk->add_option("graph", graph_src)->required();
  bk->add_option("--refutation-dir", dir, "where to persist refutation events");

  auto* reduce = app.add_subcommand("reduce-2join", "find interval 2-joins and reduce them");
  reduce->add_option("graph", graph_src)->required();
  reduce->add_option("--max-h", max_h, "largest H searched");

  auto* smoke = app.add_subcommand("smoke", "randomized gadget colorability smoke test");
  smoke->add_option("gadget", gadget, "two-triple-edges or mu-bound-AB");
  smoke->add_option("--samples", samples);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? ok : error;
  }

  try {
    if (*choosable) return cmd_choosable(g, graph_src, fspec, exhaustive);
    if (*verify) return cmd_verify(g, ids, samples);
    if (*recognize) return cmd_recognize(g, graph_src);
    if (*chromatic) return cmd_chromatic(g, graph_src);
    if (*catalog) return cmd_catalog(g, name);
    if (*bk) return cmd_bk_check(g, graph_src, dir);
    if (*reduce) return cmd_reduce(g, graph_src, max_h);
    if (*smoke) return cmd_smoke(g, gadget, samples);
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return budget;
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return error;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return error;
  }
  return error;
}
