#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "clawlab/choosability.hpp"
#include "clawlab/graph.hpp"
#include "clawlab/solvers.hpp"

namespace clawlab {

struct Failure {
  std::string graph;   ///< "n m; u-v u-v ..." edge-list form
  std::string detail;  ///< witness assignment, offending structure, or reason
  friend bool operator==(const Failure&, const Failure&) = default;
};

struct Report {
  std::string id;
  std::string universe;
  std::uint64_t tested = 0;
  std::vector<Failure> failures;
  double elapsed_ms = 0;
  std::vector<std::string> notes;
  bool exhaustive = true;

  bool passed() const { return failures.empty(); }
};

/// JSON text {id, universe, tested, failures[], elapsed_ms, notes[], exhaustive, passed}.
std::string report_to_json(const Report& r, int indent = -1);
Report report_from_json(const std::string& text);

struct VerifyConfig {
  /// Default bound on |B| (or |H|) for the "for all B" classification universes.
  int max_b = 6;
  int workers = 1;
  /// Per-search node budget for the choosability oracle (0 = unlimited).
  std::uint64_t node_budget = 0;
  std::uint64_t seed = 1;
  /// Samples per gadget for the randomized smoke checks.
  int samples = 1000;
  /// Per-check overrides of max_b, keyed by check id.
  std::map<std::string, int> max_b_for;

  int bound(const std::string& id) const {
    auto it = max_b_for.find(id);
    return it == max_b_for.end() ? max_b : it->second;
  }
};

/// Reads a JSON config {"max_b":5,"workers":2,"node_budget":0,"seed":1,"samples":100,
/// "checks":{"E2JoinB":{"max_b":5}}}; missing keys keep their defaults.
VerifyConfig parse_config(const std::string& text, VerifyConfig base = {});

std::string graph_signature(const Graph& g);

/// One representative per isomorphism class of graphs on n vertices (n <= 7 unfiltered),
/// generated by one-vertex extension of the (n-1)-vertex representatives.
std::vector<Graph> enumerate_graphs(int n);
std::vector<Graph> enumerate_graphs(int n, const std::function<bool(const Graph&)>& filter);

/// Connected bipartite multigraphs with 1..max_edges edge instances, one per
/// isomorphism class, each drawn with side X = vertex 0's side.
std::vector<Multigraph> enumerate_bipartite_multigraphs(int max_edges);

// ---------------------------------------------------------------- families named in the classifications

/// Some v with B - v complete.
bool is_almost_complete(const Graph& b);
/// Sizes of the components, ascending, when every component is a clique.
std::optional<std::vector<int>> clique_component_sizes(const Graph& b);
/// The five families whose join with K3 is not d1-choosable.
bool in_k3_family(const Graph& b);
/// Disjoint union of cliques and at most one P3.
bool in_e2_family(const Graph& b);
/// Two disjoint cliques plus one edge between them, or a clique (>= 2 vertices)
/// with pendant edges at two distinct clique vertices.
bool is_k2_shape(const Graph& h);
/// E3 * K_{|B|-3} (|B| >= 3).
bool is_e3_join_clique(const Graph& b);

/// Registered check ids, in registry order.
std::vector<std::string> check_ids();
/// Expands "all", "fig1" and plain ids; throws InvalidArgument for unknown ids.
std::vector<std::string> expand_check_ids(const std::vector<std::string>& requested);
Report run_check(const std::string& id, const VerifyConfig& config = {});

/// Delta, omega and chi; passes iff chi = Delta and omega <= Delta - 1.
Report verify_counterexample(const Graph& g, const std::string& name, const Budget& budget = {});

struct BKResult {
  int delta = 0;
  std::optional<VertexSet> clique;     ///< a K_Delta
  std::optional<Coloring> coloring;    ///< a (Delta - 1)-coloring
  bool refutation = false;             ///< neither exists: contradicts the theorem
};

/// Requires G claw-free with Delta >= 9 (InvalidArgument otherwise). On a refutation
/// event the graph is written to `refutation_dir` when that is nonempty.
BKResult bk_check(const Graph& g, const Budget& budget = {}, const std::string& refutation_dir = "");

struct CriticalSubgraph {
  Graph graph;
  VertexSet kept = 0;  ///< vertices of the input that survive
};

/// Greedy deletion in index order of every vertex whose removal keeps chi >= k.
CriticalSubgraph extract_critical(const Graph& g, int k, const Budget& budget = {});

/// Randomized colorability smoke test of a named gadget ("two-triple-edges", "mu-bound-AB").
Report smoke_check_gadget(const std::string& id, int samples, std::uint64_t seed);

/// The line-graph gadget with its list sizes.
struct Gadget {
  std::string name;
  Graph graph;
  std::vector<int> sizes;
};
std::vector<Gadget> gadget_instances(const std::string& id);

/// The construction from the ComponentsOfColor proof: for a color c whose G_c
/// components all miss some pot color, replace c on component H_i by a color
/// alpha_i missing from Pot_{H_i}. Returns nullopt when some component sees the whole pot.
std::optional<ListAssignment> components_of_color_shrink(const Graph& g, const ListAssignment& l, int c);
/// Recolor to c every vertex of a component H_i of G_c that pi colors alpha_i.
Coloring components_of_color_recolor(const Graph& g, const ListAssignment& l, int c, const Coloring& pi);

}  // namespace clawlab
