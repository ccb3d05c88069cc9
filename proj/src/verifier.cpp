#include "clawlab/verifier.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <numeric>
#include <random>
#include <sstream>

#include <json.hpp>

#include "clawlab/structure.hpp"

namespace clawlab {

using nlohmann::json;

// ---------------------------------------------------------------- reports and config

std::string report_to_json(const Report& r, int indent) {
  json j;
  j["id"] = r.id;
  j["universe"] = r.universe;
  j["tested"] = r.tested;
  j["failures"] = json::array();
  for (const auto& f : r.failures) j["failures"].push_back({{"graph", f.graph}, {"detail", f.detail}});
  j["elapsed_ms"] = r.elapsed_ms;
  j["notes"] = r.notes;
  j["exhaustive"] = r.exhaustive;
  j["passed"] = r.passed();
  return j.dump(indent);
}

Report report_from_json(const std::string& text) {
  Report r;
  try {
    const json j = json::parse(text);
    r.id = j.at("id").get<std::string>();
    r.universe = j.at("universe").get<std::string>();
    r.tested = j.at("tested").get<std::uint64_t>();
    for (const auto& f : j.at("failures")) r.failures.push_back({f.at("graph"), f.at("detail")});
    r.elapsed_ms = j.at("elapsed_ms").get<double>();
    r.notes = j.at("notes").get<std::vector<std::string>>();
    r.exhaustive = j.at("exhaustive").get<bool>();
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("malformed report: ") + e.what());
  }
  return r;
}

VerifyConfig parse_config(const std::string& text, VerifyConfig base) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("malformed config: ") + e.what());
  }
  if (!j.is_object()) throw InvalidArgument("config must be a JSON object");
  try {
    if (j.contains("max_b")) base.max_b = j["max_b"].get<int>();
    if (j.contains("workers")) base.workers = j["workers"].get<int>();
    if (j.contains("node_budget")) base.node_budget = j["node_budget"].get<std::uint64_t>();
    if (j.contains("seed")) base.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("samples")) base.samples = j["samples"].get<int>();
    if (j.contains("checks"))
      for (const auto& [id, c] : j["checks"].items())
        if (c.contains("max_b")) base.max_b_for[id] = c["max_b"].get<int>();
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("bad config value: ") + e.what());
  }
  return base;
}

std::string graph_signature(const Graph& g) {
  std::ostringstream os;
  os << g.order() << ' ' << g.edge_count() << ';';
  for (auto [u, v] : g.edges()) os << ' ' << u << '-' << v;
  return os.str();
}

// ---------------------------------------------------------------- universes

namespace {

struct IsoClasses {
  std::map<std::vector<std::uint64_t>, std::vector<std::size_t>> buckets;

  // True when g is new; records it under index idx.
  template <typename Get>
  bool insert(const Graph& g, std::size_t idx, Get&& get) {
    auto& bucket = buckets[invariant_signature(g)];
    for (auto i : bucket)
      if (is_isomorphic(g, get(i))) return false;
    bucket.push_back(idx);
    return true;
  }
};

const std::vector<Graph>& graphs_of_order(int n) {
  static std::mutex mutex;
  static std::map<int, std::vector<Graph>> memo;
  {
    std::lock_guard lock(mutex);
    if (auto it = memo.find(n); it != memo.end()) return it->second;
  }
  std::vector<Graph> out;
  if (n == 1) {
    out.push_back(empty_graph(1));
  } else {
    const auto& prev = graphs_of_order(n - 1);
    IsoClasses classes;
    for (const auto& p : prev) {
      const auto base = p.edges();
      for (VertexSet s = 0; s < full_set(n - 1) + 1u; ++s) {
        auto e = base;
        for (int v : members(s)) e.emplace_back(v, n - 1);
        Graph g = make_graph(n, e);
        if (classes.insert(g, out.size(), [&](std::size_t i) -> const Graph& { return out[i]; })) out.push_back(g);
      }
    }
  }
  std::lock_guard lock(mutex);
  return memo.emplace(n, std::move(out)).first->second;
}

}  // namespace

std::vector<Graph> enumerate_graphs(int n) {
  if (n < 1 || n > 7) throw InvalidArgument("enumerate_graphs supports 1 <= n <= 7, got " + std::to_string(n));
  return graphs_of_order(n);
}

std::vector<Graph> enumerate_graphs(int n, const std::function<bool(const Graph&)>& filter) {
  std::vector<Graph> out;
  for (const auto& g : enumerate_graphs(n))
    if (filter(g)) out.push_back(g);
  return out;
}

namespace {

struct SidedMultigraph {
  Multigraph m;
  VertexSet x_side = 0;
};

Graph subdivision(const Multigraph& m) {
  std::vector<Edge> e;
  int next = m.order();
  for (const auto& inst : m.edge_instances()) {
    e.emplace_back(inst.x, next);
    e.emplace_back(inst.y, next);
    ++next;
  }
  return make_graph(next, e);
}

Multigraph grown(const Multigraph& m, int extra) {
  Multigraph out(m.order() + extra);
  for (int x = 0; x < m.order(); ++x)
    for (int y = x + 1; y < m.order(); ++y) out.set_multiplicity(x, y, m.multiplicity(x, y));
  return out;
}

}  // namespace

std::vector<Multigraph> enumerate_bipartite_multigraphs(int max_edges) {
  if (max_edges < 0 || max_edges > 12) throw InvalidArgument("max_edges must be in 0..12");
  std::vector<Multigraph> out;
  if (max_edges == 0) return out;
  std::vector<SidedMultigraph> level;
  {
    Multigraph m(2);
    m.add_edge(0, 1);
    level.push_back({m, singleton(0)});
  }
  for (int k = 1;; ++k) {
    for (const auto& s : level) out.push_back(s.m);
    if (k == max_edges) break;
    std::vector<SidedMultigraph> next;
    std::vector<Graph> subdivisions;
    IsoClasses classes;
    auto offer = [&](SidedMultigraph cand) {
      Graph sub = subdivision(cand.m);
      if (classes.insert(sub, next.size(), [&](std::size_t i) -> const Graph& { return subdivisions[i]; })) {
        subdivisions.push_back(sub);
        next.push_back(std::move(cand));
      }
    };
    for (const auto& s : level) {
      const int n = s.m.order();
      for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y) {
          if (contains(s.x_side, x) == contains(s.x_side, y)) continue;
          SidedMultigraph c = s;
          c.m.add_edge(x, y);
          offer(std::move(c));
        }
      for (int v = 0; v < n; ++v) {
        SidedMultigraph c{grown(s.m, 1), s.x_side};
        c.m.add_edge(v, n);
        if (!contains(s.x_side, v)) c.x_side |= singleton(n);
        offer(std::move(c));
      }
    }
    level = std::move(next);
  }
  return out;
}

// ---------------------------------------------------------------- families

bool is_almost_complete(const Graph& b) {
  for (int v = 0; v < b.order(); ++v)
    if (b.is_clique(b.vertices() & ~singleton(v))) return true;
  return false;
}

std::optional<std::vector<int>> clique_component_sizes(const Graph& b) {
  std::vector<int> sizes;
  for (VertexSet c : b.components()) {
    if (!b.is_clique(c)) return std::nullopt;
    sizes.push_back(popcount(c));
  }
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

bool is_e3_join_clique(const Graph& b) {
  if (b.order() < 3) return false;
  return is_isomorphic(b, join(empty_graph(3), complete_graph(b.order() - 3))).has_value();
}

bool in_k3_family(const Graph& b) {
  if (is_almost_complete(b)) return true;
  if (auto sizes = clique_component_sizes(b)) {
    const auto& s = *sizes;
    const auto ones = std::count(s.begin(), s.end(), 1);
    if (s.size() <= 2) return true;
    if (s.size() == 3 && ones >= 1) return true;
    if (ones >= 3 && s.size() <= 4) return true;
  }
  return b.order() <= 5 && is_e3_join_clique(b);
}

bool in_e2_family(const Graph& b) {
  const Graph p3 = path_graph(3);
  int paths = 0;
  for (VertexSet c : b.components()) {
    if (b.is_clique(c)) continue;
    if (popcount(c) != 3 || !is_isomorphic(induced(b, c), p3)) return false;
    ++paths;
  }
  return paths <= 1;
}

bool is_k2_shape(const Graph& h) {
  const int n = h.order();
  for (int a = 1; 2 * a <= n; ++a) {
    auto e = disjoint_union(complete_graph(a), complete_graph(n - a)).edges();
    e.emplace_back(0, a);
    if (is_isomorphic(h, make_graph(n, e))) return true;
  }
  if (n >= 4) {
    auto e = complete_graph(n - 2).edges();
    e.emplace_back(0, n - 2);
    e.emplace_back(1, n - 1);
    if (is_isomorphic(h, make_graph(n, e))) return true;
  }
  return false;
}

// ---------------------------------------------------------------- counterexamples and BK

Report verify_counterexample(const Graph& g, const std::string& name, const Budget& budget) {
  Report r;
  r.id = name;
  r.universe = "single graph " + graph_signature(g);
  r.tested = 1;
  const int delta = g.max_degree();
  const int omega = clique_number(g);
  const auto chi = chromatic_number(g, budget);
  if (!is_proper_coloring(g, chi.coloring)) throw std::logic_error("chromatic_number returned an improper coloring");
  r.notes.push_back("Delta=" + std::to_string(delta) + " omega=" + std::to_string(omega) +
                    " chi=" + std::to_string(chi.chi));
  if (chi.chi != delta || omega > delta - 1) {
    std::ostringstream os;
    os << "not a counterexample: chi=" << chi.chi << " Delta=" << delta << " omega=" << omega;
    r.failures.push_back({graph_signature(g), os.str()});
  }
  return r;
}

BKResult bk_check(const Graph& g, const Budget& budget, const std::string& refutation_dir) {
  if (auto claw = find_claw(g)) {
    std::ostringstream os;
    os << "not claw-free: claw at " << claw->center << " with leaves " << claw->leaves[0] << ',' << claw->leaves[1]
       << ',' << claw->leaves[2];
    throw InvalidArgument(os.str());
  }
  BKResult r;
  r.delta = g.max_degree();
  if (r.delta < 9) throw InvalidArgument("Delta = " + std::to_string(r.delta) + " < 9");
  const VertexSet k = maximum_clique(g);
  if (popcount(k) >= r.delta) {
    VertexSet c = 0;
    for (VertexSet s = k; popcount(c) < r.delta; s &= s - 1) c |= singleton(lowest(s));
    r.clique = c;
    return r;
  }
  if (auto col = k_coloring(g, r.delta - 1, budget)) {
    r.coloring = *col;
    return r;
  }
  r.refutation = true;
  if (!refutation_dir.empty()) {
    std::filesystem::create_directories(refutation_dir);
    const auto sig = graph_signature(g);
    std::ostringstream name;
    name << "bk-refutation-" << std::hex << std::hash<std::string>{}(sig) << ".txt";
    std::ofstream out(std::filesystem::path(refutation_dir) / name.str());
    write_graph(out, g);
    out << "# Delta=" << r.delta << " omega=" << popcount(k) << " no " << (r.delta - 1) << "-coloring found\n";
  }
  return r;
}

CriticalSubgraph extract_critical(const Graph& g, int k, const Budget& budget) {
  if (k_coloring(g, k - 1, budget)) throw InvalidArgument("chi(G) < " + std::to_string(k));
  VertexSet kept = g.vertices();
  for (int v = 0; v < g.order(); ++v) {
    const VertexSet trial = kept & ~singleton(v);
    if (!k_coloring(induced(g, trial), k - 1, budget)) kept = trial;
  }
  return {induced(g, kept), kept};
}

// ---------------------------------------------------------------- gadgets

namespace {

Gadget two_triple_edges() {
  // u=0, v=1, w=2; p1..p3 = 3..5 hang off u, q = 6 off v, r1..r3 = 7..9 off w.
  Multigraph m(10);
  for (int p = 3; p <= 5; ++p) m.add_edge(0, p);
  m.add_edge(0, 1, 3);
  m.add_edge(1, 6);
  m.add_edge(1, 2, 3);
  for (int r = 7; r <= 9; ++r) m.add_edge(2, r);
  Gadget gd{"two-triple-edges", line_graph(m), {}};
  for (const auto& e : m.edge_instances()) {
    if (e.x == 0 && e.y == 1) gd.sizes.push_back(8);       // b
    else if (e.x == 0) gd.sizes.push_back(4);              // a
    else if (e.x == 1 && e.y == 2) gd.sizes.push_back(8);  // d
    else if (e.x == 1) gd.sizes.push_back(5);              // c
    else gd.sizes.push_back(4);                            // e
  }
  return gd;
}

Gadget mu_bound(int t, const Graph& b, const std::string& label) {
  const int j = clique_number(b) < b.order() - 1 ? 1 : 0;
  Gadget gd{"mu-bound-AB t=" + std::to_string(t) + " B=" + label + " j=" + std::to_string(j),
            join(complete_graph(t), b), {}};
  for (int v = 0; v < gd.graph.order(); ++v) gd.sizes.push_back(gd.graph.degree(v) - (v < t ? j : 1));
  return gd;
}

}  // namespace

std::vector<Gadget> gadget_instances(const std::string& id) {
  if (id == "two-triple-edges") return {two_triple_edges()};
  if (id == "mu-bound-AB")
    return {mu_bound(2, complement(cycle_graph(6)), "complement(C6)"), mu_bound(3, path_graph(4), "P4"),
            mu_bound(4, disjoint_union(complete_graph(2), complete_graph(2)), "2K2")};
  throw InvalidArgument("unknown gadget '" + id + "'");
}

Report smoke_check_gadget(const std::string& id, int samples, std::uint64_t seed) {
  const auto gadgets = gadget_instances(id);
  if (samples < 0) throw InvalidArgument("samples must be nonnegative");
  Report r;
  r.id = id;
  r.universe = std::to_string(samples) + " random list assignments (seed " + std::to_string(seed) +
               ") over pots of size |G|-1";
  r.exhaustive = false;
  r.notes.push_back("smoke: randomized sampling, not a proof");
  for (const auto& gd : gadgets) r.notes.push_back("gadget " + gd.name + ": " + graph_signature(gd.graph));
  std::mt19937_64 rng(seed);
  for (int s = 0; s < samples; ++s) {
    const auto& gd = gadgets[s % gadgets.size()];
    const int pot = gd.graph.order() - 1;
    std::vector<int> colors(pot);
    std::iota(colors.begin(), colors.end(), 0);
    ListAssignment l;
    for (int v = 0; v < gd.graph.order(); ++v) {
      std::shuffle(colors.begin(), colors.end(), rng);
      ColorSet c = 0;
      for (int i = 0; i < std::min(gd.sizes[v], pot); ++i) c |= ColorSet{1} << colors[i];
      l.lists.push_back(c);
    }
    ++r.tested;
    if (!is_good(gd.graph, l)) r.failures.push_back({graph_signature(gd.graph), gd.name + " bad lists:\n" + l.to_string()});
  }
  return r;
}

// ---------------------------------------------------------------- the recoloring construction

namespace {

// Per-component substitute colors, or nullopt when some component sees the whole pot.
std::optional<std::vector<std::pair<VertexSet, int>>> substitutes(const Graph& g, const ListAssignment& l, int c) {
  if (l.order() != g.order()) throw InvalidArgument("list assignment size does not match the graph");
  const ColorSet pot = l.pot();
  if (!((pot >> c) & 1u)) throw InvalidArgument("color " + std::to_string(c) + " is not in the pot");
  std::vector<std::pair<VertexSet, int>> out;
  for (VertexSet h : g.components(l.vertices_meeting(ColorSet{1} << c))) {
    const ColorSet missing = pot & ~l.pot_of(h);
    if (!missing) return std::nullopt;
    out.emplace_back(h, lowest(missing));
  }
  return out;
}

}  // namespace

std::optional<ListAssignment> components_of_color_shrink(const Graph& g, const ListAssignment& l, int c) {
  auto subs = substitutes(g, l, c);
  if (!subs) return std::nullopt;
  ListAssignment out = l;
  for (auto [h, alpha] : *subs)
    for (int v : members(h)) out.lists[v] = (l.lists[v] & ~(ColorSet{1} << c)) | (ColorSet{1} << alpha);
  return out;
}

Coloring components_of_color_recolor(const Graph& g, const ListAssignment& l, int c, const Coloring& pi) {
  auto subs = substitutes(g, l, c);
  if (!subs) throw InvalidArgument("some component of G_c sees the whole pot");
  Coloring out = pi;
  for (auto [h, alpha] : *subs)
    for (int v : members(h))
      if (pi[v] == alpha) out[v] = c;
  return out;
}

}  // namespace clawlab
