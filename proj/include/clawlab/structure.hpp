#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "clawlab/graph.hpp"
#include "clawlab/solvers.hpp"

namespace clawlab {

// ---------------------------------------------------------------- claws and covers

struct Claw {
  int center = 0;
  std::array<int, 3> leaves{};
};

/// An induced K_{1,3}; centers and leaf triples are scanned in index order.
std::optional<Claw> find_claw(const Graph& g);
inline bool is_claw_free(const Graph& g) { return !find_claw(g).has_value(); }

using CliquePair = std::pair<VertexSet, VertexSet>;

/// Partition of `within` into two cliques (the second may be empty), iff the
/// complement of G[within] is bipartite. BFS 2-coloring; the lowest unvisited
/// vertex of each component goes to the first clique.
std::optional<CliquePair> two_clique_cover(const Graph& g, VertexSet within);
inline std::optional<CliquePair> two_clique_cover(const Graph& g) { return two_clique_cover(g, g.vertices()); }

/// Two cliques covering N(v), if v is bisimplicial.
std::optional<CliquePair> bisimplicial_cover(const Graph& g, int v);
/// The first vertex that is not bisimplicial; nullopt means G is quasi-line.
std::optional<int> non_bisimplicial_vertex(const Graph& g);
inline bool is_quasi_line(const Graph& g) { return !non_bisimplicial_vertex(g).has_value(); }

/// Thickening cliques T_1..T_5 in cyclic order (T_1 holds vertex 0's class,
/// T_2 the neighbouring class with the smaller lowest member), verified edge for edge.
std::optional<std::array<VertexSet, 5>> as_thickened_c5(const Graph& g);

// ---------------------------------------------------------------- interval representations

/// Vertices placed around a circle (or along a line) in `order`; each arc is a
/// closed run of positions [first, last], wrapping past the end for circles.
struct IntervalRepresentation {
  std::vector<int> order;
  std::vector<std::pair<int, int>> arcs;
  bool circular = false;
};

/// True iff the representation defines exactly the graph g.
bool represents(const Graph& g, const IntervalRepresentation& rep);

/// Exhaustive order search: g is circular (linear) interval iff some circular
/// (linear) order puts every edge inside a run of positions that induces a clique.
/// Throws BudgetExceeded when the search passes budget.max_nodes (0 = unlimited).
std::optional<IntervalRepresentation> is_circular_interval(const Graph& g, const Budget& budget = {});
std::optional<IntervalRepresentation> is_linear_interval(const Graph& g, const Budget& budget = {});

/// Linear order of G[h] whose first |first| vertices are `first` and whose last
/// |last| vertices are `last`, or nullopt.
std::optional<std::vector<int>> linear_order_with_ends(const Graph& g, VertexSet h, VertexSet first, VertexSet last,
                                                       const Budget& budget = {});

// ---------------------------------------------------------------- homogeneous pairs

struct HomogeneousPair {
  VertexSet a1 = 0;
  VertexSet a2 = 0;
  bool skeletal = true;
};

/// Every homogeneous pair of cliques, unordered (lowest(a1) < lowest(a2)), sorted by (a1, a2).
std::vector<HomogeneousPair> homogeneous_clique_pairs(const Graph& g);
/// A1-A2 edges whose deletion keeps omega(G[A1 u A2]), lexicographic.
std::vector<Edge> removable_edges(const Graph& g, const HomogeneousPair& p);

struct SkeletalViolation {
  HomogeneousPair pair;
  Edge edge;
};

/// The lexicographically least removable edge over all nonskeletal pairs, or nullopt if skeletal.
std::optional<SkeletalViolation> find_nonskeletal(const Graph& g);
inline bool is_skeletal(const Graph& g) { return !find_nonskeletal(g).has_value(); }
/// Delete violating edges one at a time (least first) until the graph is skeletal.
Graph make_skeletal(const Graph& g);

// ---------------------------------------------------------------- interval 2-joins

enum class TwoJoinKind { trivial, canonical, noncanonical };
std::string to_string(TwoJoinKind k);

struct TwoJoin {
  VertexSet h = 0;
  VertexSet a1 = 0;
  VertexSet a2 = 0;
  VertexSet b1 = 0;
  VertexSet b2 = 0;
  /// Left-to-right order of H: starts inside A1, ends inside A2.
  std::vector<int> order;
  TwoJoinKind kind = TwoJoinKind::canonical;
  bool reducible = false;

  friend bool operator==(const TwoJoin&, const TwoJoin&) = default;
};

/// Checks the four defining conditions for the given quintuple (and that `order`
/// is a linear interval order of H with A1 first and A2 last). Returns an empty
/// string when valid, otherwise the first violated condition.
std::string two_join_violation(const Graph& g, const TwoJoin& j);
/// Fills in kind and reducible for a valid quintuple with its order.
void classify_two_join(const Graph& g, TwoJoin& j);

/// Interval 2-joins with H connected, H != V(G), |H| <= max_h, and B1, B2 nonempty.
std::vector<TwoJoin> find_interval_two_joins(const Graph& g, int max_h = 8);

/// Build and classify the quintuple for H with the given ends, if it is an interval 2-join.
std::optional<TwoJoin> make_two_join(const Graph& g, VertexSet h, VertexSet a1, VertexSet a2);

/// One reduction step; the result is re-verified. Throws InvalidArgument when j is
/// not canonical and reducible.
TwoJoin reduce_two_join(const Graph& g, const TwoJoin& j);
/// Reduce until irreducible; returns every join in the chain, the input first.
std::vector<TwoJoin> reduce_fully(const Graph& g, const TwoJoin& j);

}  // namespace clawlab
