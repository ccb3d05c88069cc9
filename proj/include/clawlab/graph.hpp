#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace clawlab {

/// Bit mask over vertex indices 0..31; bit v set means vertex v is a member.
using VertexSet = std::uint32_t;

inline constexpr int kMaxVertices = 32;

inline int popcount(VertexSet s) { return std::popcount(s); }
inline bool contains(VertexSet s, int v) { return (s >> v) & 1u; }
inline VertexSet singleton(int v) { return VertexSet{1} << v; }
inline VertexSet full_set(int n) {
  return n >= kMaxVertices ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
}
inline int lowest(VertexSet s) { return std::countr_zero(s); }
std::vector<int> members(VertexSet s);

/// Raised for malformed input: bad endpoints, loops, size overflow, unknown names.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an exact search exceeds its configured node budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Edge = std::pair<int, int>;

/// Immutable simple graph on at most 32 vertices with bit-mask adjacency rows.
class Graph {
 public:
  Graph() = default;

  int order() const { return n_; }
  VertexSet vertices() const { return full_set(n_); }
  VertexSet neighbors(int v) const { return adj_[v]; }
  VertexSet closed_neighbors(int v) const { return adj_[v] | singleton(v); }
  bool adjacent(int u, int v) const { return contains(adj_[u], v); }
  int degree(int v) const { return popcount(adj_[v]); }
  int degree_in(int v, VertexSet within) const { return popcount(adj_[v] & within); }

  int max_degree() const;
  int min_degree() const;
  int edge_count() const;
  std::vector<Edge> edges() const;

  bool is_clique(VertexSet s) const;
  bool is_independent(VertexSet s) const;
  bool is_connected() const;
  /// Vertex sets of the connected components of G[within], ordered by lowest member.
  std::vector<VertexSet> components(VertexSet within) const;
  std::vector<VertexSet> components() const { return components(vertices()); }

  /// Adjacency rows, one mask per vertex.
  std::vector<std::uint32_t> rows() const { return {adj_.begin(), adj_.begin() + n_}; }

  friend bool operator==(const Graph& a, const Graph& b) {
    if (a.n_ != b.n_) return false;
    for (int v = 0; v < a.n_; ++v)
      if (a.adj_[v] != b.adj_[v]) return false;
    return true;
  }

  friend Graph make_graph(int n, std::span<const Edge> edges);

 private:
  int n_ = 0;
  std::array<std::uint32_t, kMaxVertices> adj_{};
};

Graph make_graph(int n, std::span<const Edge> edges);
inline Graph make_graph(int n, std::initializer_list<Edge> edges) {
  return make_graph(n, std::span<const Edge>(edges.begin(), edges.size()));
}
inline Graph make_graph(int n, const std::vector<Edge>& edges) {
  return make_graph(n, std::span<const Edge>(edges));
}

Graph complete_graph(int n);
Graph empty_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph star_graph(int leaves);

/// A * B: disjoint union plus every edge between the parts. G's vertices come first.
Graph join(const Graph& g, const Graph& h);
Graph disjoint_union(const Graph& g, const Graph& h);
Graph complement(const Graph& g);
/// G[s], with the members of s relabelled 0.. in increasing order.
Graph induced(const Graph& g, VertexSet s);
Graph remove_vertex(const Graph& g, int v);
Graph remove_edge(const Graph& g, int u, int v);
/// Replace vertex x by a clique of sizes[x] vertices; cliques T_x, T_y are joined iff x ~ y.
/// Vertices of T_0 come first, then T_1, and so on.
Graph thicken(const Graph& g, std::span<const int> sizes);

/// Multigraph on n vertices with symmetric multiplicity table, zero diagonal.
class Multigraph {
 public:
  explicit Multigraph(int n = 0);

  int order() const { return n_; }
  int multiplicity(int x, int y) const { return mu_[x * n_ + y]; }
  void set_multiplicity(int x, int y, int m);
  void add_edge(int x, int y, int copies = 1) { set_multiplicity(x, y, multiplicity(x, y) + copies); }
  int degree(int x) const;
  int edge_instance_count() const;

  struct EdgeInstance {
    int x;
    int y;
    int copy;
  };
  /// Edge instances ordered lexicographically by endpoints (x < y), then copy index.
  std::vector<EdgeInstance> edge_instances() const;

 private:
  int n_;
  std::vector<int> mu_;
};

/// One vertex per edge instance (in edge_instances() order); adjacent iff they share an endpoint.
Graph line_graph(const Multigraph& m);

/// Text format: "n m" then m lines "u v".
Graph read_graph(std::istream& in);
void write_graph(std::ostream& out, const Graph& g);
/// Text format: "n m" then m lines "u v mult".
Multigraph read_multigraph(std::istream& in);

std::string to_string(const Graph& g);

}  // namespace clawlab
