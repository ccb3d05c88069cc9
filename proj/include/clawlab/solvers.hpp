#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "clawlab/graph.hpp"

namespace clawlab {

/// Total map vertex -> color index.
using Coloring = std::vector<int>;

bool is_proper_coloring(const Graph& g, const Coloring& c);
int colors_used(const Coloring& c);

/// Search limits shared by the exact solvers. Zero means unlimited.
struct Budget {
  std::uint64_t max_nodes = 0;
};

/// Maximum clique by branch and bound with a greedy-coloring bound.
VertexSet maximum_clique(const Graph& g, VertexSet within);
inline VertexSet maximum_clique(const Graph& g) { return maximum_clique(g, g.vertices()); }
int clique_number(const Graph& g);
int clique_number(const Graph& g, VertexSet within);
VertexSet maximum_independent_set(const Graph& g);
int independence_number(const Graph& g);

/// Every nonempty clique, sorted by mask. Exponential; meant for small graphs.
std::vector<VertexSet> all_cliques(const Graph& g);

/// Greedy coloring in the given vertex order (first available color).
Coloring greedy_coloring(const Graph& g, const std::vector<int>& order);
/// DSATUR greedy coloring (ties by index); an upper bound on chi.
Coloring dsatur_coloring(const Graph& g);

struct ChromaticResult {
  int chi = 0;
  Coloring coloring;
  std::uint64_t nodes = 0;
};

/// Exact chromatic number: clique lower bound, greedy upper bounds, then DSATUR
/// branch and bound. Throws BudgetExceeded when the node budget runs out.
ChromaticResult chromatic_number(const Graph& g, const Budget& budget = {});
/// A proper coloring with at most k colors, or nullopt if none exists.
std::optional<Coloring> k_coloring(const Graph& g, int k, const Budget& budget = {});

/// Vertex bijection phi with u ~ v iff phi(u) ~ phi(v), or nullopt.
/// Color refinement first, then a permutation search over refined cells.
std::optional<std::vector<int>> is_isomorphic(const Graph& g, const Graph& h, const Budget& budget = {});
/// Isomorphism-invariant fingerprint: equal for isomorphic graphs.
std::vector<std::uint64_t> invariant_signature(const Graph& g);

/// Outcome of a bipartite matching that tries to saturate the right side.
struct HallResult {
  /// Pairs (left, right); present iff every right vertex is matched.
  std::optional<std::vector<std::pair<int, int>>> matching;
  /// When no saturating matching exists: S within right with |N(S)| < |S|.
  VertexSet violator = 0;
  VertexSet violator_neighbors = 0;
};

HallResult saturating_matching(VertexSet left, VertexSet right, const std::function<bool(int, int)>& related);

}  // namespace clawlab
