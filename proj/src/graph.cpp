#include "clawlab/graph.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

namespace clawlab {

std::vector<int> members(VertexSet s) {
  std::vector<int> out;
  out.reserve(popcount(s));
  for (; s; s &= s - 1) out.push_back(lowest(s));
  return out;
}

int Graph::max_degree() const {
  int best = 0;
  for (int v = 0; v < n_; ++v) best = std::max(best, degree(v));
  return best;
}

int Graph::min_degree() const {
  if (n_ == 0) return 0;
  int best = n_;
  for (int v = 0; v < n_; ++v) best = std::min(best, degree(v));
  return best;
}

int Graph::edge_count() const {
  int twice = 0;
  for (int v = 0; v < n_; ++v) twice += degree(v);
  return twice / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < n_; ++u)
    for (VertexSet s = adj_[u] & ~full_set(u + 1); s; s &= s - 1) out.emplace_back(u, lowest(s));
  return out;
}

bool Graph::is_clique(VertexSet s) const {
  for (VertexSet t = s; t; t &= t - 1) {
    const int v = lowest(t);
    if ((s & ~singleton(v) & ~adj_[v]) != 0) return false;
  }
  return true;
}

bool Graph::is_independent(VertexSet s) const {
  for (VertexSet t = s; t; t &= t - 1)
    if (adj_[lowest(t)] & s) return false;
  return true;
}

std::vector<VertexSet> Graph::components(VertexSet within) const {
  std::vector<VertexSet> out;
  VertexSet left = within;
  while (left) {
    VertexSet comp = singleton(lowest(left));
    VertexSet frontier = comp;
    while (frontier) {
      VertexSet next = 0;
      for (VertexSet t = frontier; t; t &= t - 1) next |= adj_[lowest(t)];
      next &= within & ~comp;
      comp |= next;
      frontier = next;
    }
    out.push_back(comp);
    left &= ~comp;
  }
  return out;
}

bool Graph::is_connected() const { return n_ <= 1 || components().size() == 1; }

Graph make_graph(int n, std::span<const Edge> edges) {
  if (n < 0 || n > kMaxVertices)
    throw InvalidArgument("vertex count " + std::to_string(n) + " outside 0.." + std::to_string(kMaxVertices));
  Graph g;
  g.n_ = n;
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw InvalidArgument("edge " + std::to_string(u) + "-" + std::to_string(v) + " has an endpoint out of range");
    if (u == v) throw InvalidArgument("self-loop at vertex " + std::to_string(u));
    g.adj_[u] |= singleton(v);
    g.adj_[v] |= singleton(u);
  }
  return g;
}

namespace {

void check_size(int n) {
  if (n > kMaxVertices) throw InvalidArgument("result would have " + std::to_string(n) + " vertices (limit 32)");
}

}  // namespace

Graph complete_graph(int n) {
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return make_graph(n, e);
}

Graph empty_graph(int n) { return make_graph(n, {}); }

Graph cycle_graph(int n) {
  std::vector<Edge> e;
  for (int v = 0; v < n; ++v) e.emplace_back(v, (v + 1) % n);
  return make_graph(n, e);
}

Graph path_graph(int n) {
  std::vector<Edge> e;
  for (int v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
  return make_graph(n, e);
}

Graph star_graph(int leaves) {
  std::vector<Edge> e;
  for (int v = 1; v <= leaves; ++v) e.emplace_back(0, v);
  return make_graph(leaves + 1, e);
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  const int n = g.order() + h.order();
  check_size(n);
  auto e = g.edges();
  for (auto [u, v] : h.edges()) e.emplace_back(u + g.order(), v + g.order());
  return make_graph(n, e);
}

Graph join(const Graph& g, const Graph& h) {
  const int n = g.order() + h.order();
  check_size(n);
  auto e = disjoint_union(g, h).edges();
  for (int u = 0; u < g.order(); ++u)
    for (int v = 0; v < h.order(); ++v) e.emplace_back(u, g.order() + v);
  return make_graph(n, e);
}

Graph complement(const Graph& g) {
  std::vector<Edge> e;
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (!g.adjacent(u, v)) e.emplace_back(u, v);
  return make_graph(g.order(), e);
}

Graph induced(const Graph& g, VertexSet s) {
  if (s & ~g.vertices()) throw InvalidArgument("vertex set is not a subset of the graph");
  const auto keep = members(s);
  std::vector<int> index(g.order(), -1);
  for (int i = 0; i < static_cast<int>(keep.size()); ++i) index[keep[i]] = i;
  std::vector<Edge> e;
  for (auto [u, v] : g.edges())
    if (index[u] >= 0 && index[v] >= 0) e.emplace_back(index[u], index[v]);
  return make_graph(static_cast<int>(keep.size()), e);
}

Graph remove_vertex(const Graph& g, int v) { return induced(g, g.vertices() & ~singleton(v)); }

Graph remove_edge(const Graph& g, int u, int v) {
  auto e = g.edges();
  std::erase_if(e, [&](const Edge& x) { return (x.first == u && x.second == v) || (x.first == v && x.second == u); });
  return make_graph(g.order(), e);
}

Graph thicken(const Graph& g, std::span<const int> sizes) {
  if (static_cast<int>(sizes.size()) != g.order())
    throw InvalidArgument("thicken needs one size per vertex");
  std::vector<int> start(g.order() + 1, 0);
  for (int x = 0; x < g.order(); ++x) {
    if (sizes[x] < 1) throw InvalidArgument("thickening cliques must be nonempty");
    start[x + 1] = start[x] + sizes[x];
  }
  check_size(start.back());
  std::vector<Edge> e;
  for (int x = 0; x < g.order(); ++x) {
    for (int a = start[x]; a < start[x + 1]; ++a)
      for (int b = a + 1; b < start[x + 1]; ++b) e.emplace_back(a, b);
    for (int y = x + 1; y < g.order(); ++y) {
      if (!g.adjacent(x, y)) continue;
      for (int a = start[x]; a < start[x + 1]; ++a)
        for (int b = start[y]; b < start[y + 1]; ++b) e.emplace_back(a, b);
    }
  }
  return make_graph(start.back(), e);
}

Multigraph::Multigraph(int n) : n_(n), mu_(static_cast<std::size_t>(n) * n, 0) {
  if (n < 0) throw InvalidArgument("negative vertex count");
}

void Multigraph::set_multiplicity(int x, int y, int m) {
  if (x < 0 || y < 0 || x >= n_ || y >= n_) throw InvalidArgument("multigraph endpoint out of range");
  if (x == y) throw InvalidArgument("multigraph loops are not supported");
  if (m < 0) throw InvalidArgument("negative multiplicity");
  mu_[x * n_ + y] = m;
  mu_[y * n_ + x] = m;
}

int Multigraph::degree(int x) const {
  int d = 0;
  for (int y = 0; y < n_; ++y) d += multiplicity(x, y);
  return d;
}

int Multigraph::edge_instance_count() const {
  int total = 0;
  for (int x = 0; x < n_; ++x)
    for (int y = x + 1; y < n_; ++y) total += multiplicity(x, y);
  return total;
}

std::vector<Multigraph::EdgeInstance> Multigraph::edge_instances() const {
  std::vector<EdgeInstance> out;
  for (int x = 0; x < n_; ++x)
    for (int y = x + 1; y < n_; ++y)
      for (int c = 0; c < multiplicity(x, y); ++c) out.push_back({x, y, c});
  return out;
}

Graph line_graph(const Multigraph& m) {
  const auto inst = m.edge_instances();
  check_size(static_cast<int>(inst.size()));
  std::vector<Edge> e;
  for (std::size_t a = 0; a < inst.size(); ++a)
    for (std::size_t b = a + 1; b < inst.size(); ++b) {
      const auto& p = inst[a];
      const auto& q = inst[b];
      if (p.x == q.x || p.x == q.y || p.y == q.x || p.y == q.y)
        e.emplace_back(static_cast<int>(a), static_cast<int>(b));
    }
  return make_graph(static_cast<int>(inst.size()), e);
}

namespace {

template <typename T>
T read_value(std::istream& in, const char* what) {
  T x{};
  if (!(in >> x)) throw InvalidArgument(std::string("malformed graph file: expected ") + what);
  return x;
}

}  // namespace

Graph read_graph(std::istream& in) {
  const int n = read_value<int>(in, "vertex count");
  const int m = read_value<int>(in, "edge count");
  if (m < 0) throw InvalidArgument("negative edge count");
  std::vector<Edge> e;
  for (int i = 0; i < m; ++i) {
    const int u = read_value<int>(in, "edge endpoint");
    const int v = read_value<int>(in, "edge endpoint");
    e.emplace_back(u, v);
  }
  return make_graph(n, e);
}

void write_graph(std::ostream& out, const Graph& g) {
  const auto e = g.edges();
  out << g.order() << ' ' << e.size() << '\n';
  for (auto [u, v] : e) out << u << ' ' << v << '\n';
}

Multigraph read_multigraph(std::istream& in) {
  const int n = read_value<int>(in, "vertex count");
  const int m = read_value<int>(in, "edge count");
  if (n < 0 || n > 64) throw InvalidArgument("multigraph vertex count out of range");
  Multigraph g(n);
  for (int i = 0; i < m; ++i) {
    const int u = read_value<int>(in, "edge endpoint");
    const int v = read_value<int>(in, "edge endpoint");
    const int mult = read_value<int>(in, "multiplicity");
    if (u < 0 || v < 0 || u >= n || v >= n) throw InvalidArgument("multigraph endpoint out of range");
    if (u == v) throw InvalidArgument("self-loop at vertex " + std::to_string(u));
    g.add_edge(u, v, mult);
  }
  return g;
}

std::string to_string(const Graph& g) {
  std::ostringstream os;
  write_graph(os, g);
  return os.str();
}

}  // namespace clawlab
