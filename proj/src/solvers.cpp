#include "clawlab/solvers.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace clawlab {

bool is_proper_coloring(const Graph& g, const Coloring& c) {
  if (static_cast<int>(c.size()) != g.order()) return false;
  for (auto [u, v] : g.edges())
    if (c[u] == c[v]) return false;
  return std::all_of(c.begin(), c.end(), [](int x) { return x >= 0; });
}

int colors_used(const Coloring& c) {
  std::vector<int> sorted(c);
  std::sort(sorted.begin(), sorted.end());
  return static_cast<int>(std::unique(sorted.begin(), sorted.end()) - sorted.begin());
}

// ---------------------------------------------------------------- cliques

namespace {

class CliqueSearch {
 public:
  explicit CliqueSearch(const Graph& g) : g_(g) {}

  VertexSet run(VertexSet within) {
    best_ = 0;
    best_size_ = 0;
    expand(0, 0, within);
    return best_;
  }

 private:
  // Greedy color classes over p in index order; returns vertices in color order with bounds.
  void color_sort(VertexSet p, std::vector<int>& order, std::vector<int>& bound) const {
    int color = 0;
    VertexSet left = p;
    while (left) {
      ++color;
      VertexSet avail = left;
      while (avail) {
        const int v = lowest(avail);
        avail &= ~g_.neighbors(v) & ~singleton(v);
        left &= ~singleton(v);
        order.push_back(v);
        bound.push_back(color);
      }
    }
  }

  void expand(VertexSet current, int size, VertexSet p) {
    if (!p) {
      if (size > best_size_) {
        best_size_ = size;
        best_ = current;
      }
      return;
    }
    std::vector<int> order;
    std::vector<int> bound;
    color_sort(p, order, bound);
    for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
      if (size + bound[i] <= best_size_) return;
      const int v = order[i];
      expand(current | singleton(v), size + 1, p & g_.neighbors(v));
      p &= ~singleton(v);
    }
  }

  const Graph& g_;
  VertexSet best_ = 0;
  int best_size_ = 0;
};

}  // namespace

VertexSet maximum_clique(const Graph& g, VertexSet within) { return CliqueSearch(g).run(within); }

int clique_number(const Graph& g) { return popcount(maximum_clique(g)); }
int clique_number(const Graph& g, VertexSet within) { return popcount(maximum_clique(g, within)); }

VertexSet maximum_independent_set(const Graph& g) { return maximum_clique(complement(g)); }
int independence_number(const Graph& g) { return popcount(maximum_independent_set(g)); }

std::vector<VertexSet> all_cliques(const Graph& g) {
  std::vector<VertexSet> out;
  auto extend = [&](auto&& self, VertexSet clique, VertexSet cand) -> void {
    out.push_back(clique);
    for (VertexSet c = cand; c; c &= c - 1) {
      const int v = lowest(c);
      self(self, clique | singleton(v), cand & g.neighbors(v) & ~full_set(v + 1));
    }
  };
  for (int v = 0; v < g.order(); ++v) extend(extend, singleton(v), g.neighbors(v) & ~full_set(v + 1));
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------- coloring

Coloring greedy_coloring(const Graph& g, const std::vector<int>& order) {
  Coloring c(g.order(), -1);
  for (int v : order) {
    std::uint64_t used = 0;
    for (VertexSet s = g.neighbors(v); s; s &= s - 1)
      if (c[lowest(s)] >= 0) used |= std::uint64_t{1} << c[lowest(s)];
    c[v] = std::countr_one(used);
  }
  return c;
}

Coloring dsatur_coloring(const Graph& g) {
  const int n = g.order();
  Coloring c(n, -1);
  std::vector<std::uint64_t> seen(n, 0);
  for (int step = 0; step < n; ++step) {
    int pick = -1;
    int best_sat = -1;
    int best_deg = -1;
    for (int v = 0; v < n; ++v) {
      if (c[v] >= 0) continue;
      const int sat = std::popcount(seen[v]);
      const int deg = g.degree(v);
      if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
        pick = v;
        best_sat = sat;
        best_deg = deg;
      }
    }
    c[pick] = std::countr_one(seen[pick]);
    for (VertexSet s = g.neighbors(pick); s; s &= s - 1) seen[lowest(s)] |= std::uint64_t{1} << c[pick];
  }
  return c;
}

namespace {

class KColoringSearch {
 public:
  KColoringSearch(const Graph& g, int k, const Budget& budget) : g_(g), k_(k), budget_(budget) {}

  std::optional<Coloring> run(std::uint64_t& nodes) {
    const int n = g_.order();
    color_.assign(n, -1);
    seen_.assign(n, 0);
    // Symmetry breaking: a maximum clique takes colors 0..w-1.
    const auto clique = members(maximum_clique(g_));
    if (static_cast<int>(clique.size()) > k_) return std::nullopt;
    int used = 0;
    for (int v : clique) assign(v, used++);
    const bool ok = search(n - static_cast<int>(clique.size()), used);
    nodes += nodes_;
    if (!ok) return std::nullopt;
    return color_;
  }

 private:
  void assign(int v, int c) {
    color_[v] = c;
    for (VertexSet s = g_.neighbors(v); s; s &= s - 1) ++count_[lowest(s)][c], seen_[lowest(s)] |= std::uint64_t{1} << c;
  }
  void unassign(int v) {
    const int c = color_[v];
    color_[v] = -1;
    for (VertexSet s = g_.neighbors(v); s; s &= s - 1) {
      const int u = lowest(s);
      if (--count_[u][c] == 0) seen_[u] &= ~(std::uint64_t{1} << c);
    }
  }

  bool search(int remaining, int used) {
    if (remaining == 0) return true;
    if (budget_.max_nodes && ++nodes_ > budget_.max_nodes) throw BudgetExceeded("chromatic search exceeded node budget");
    if (!budget_.max_nodes) ++nodes_;
    int pick = -1;
    int best_sat = -1;
    int best_deg = -1;
    for (int v = 0; v < g_.order(); ++v) {
      if (color_[v] >= 0) continue;
      const int sat = std::popcount(seen_[v]);
      int deg = 0;
      for (VertexSet s = g_.neighbors(v); s; s &= s - 1) deg += color_[lowest(s)] < 0;
      if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
        pick = v;
        best_sat = sat;
        best_deg = deg;
      }
    }
    if (best_sat >= k_) return false;
    const int limit = std::min(k_, used + 1);
    for (int c = 0; c < limit; ++c) {
      if ((seen_[pick] >> c) & 1u) continue;
      assign(pick, c);
      if (search(remaining - 1, std::max(used, c + 1))) return true;
      unassign(pick);
    }
    return false;
  }

  const Graph& g_;
  int k_;
  Budget budget_;
  std::uint64_t nodes_ = 0;
  Coloring color_;
  std::vector<std::uint64_t> seen_;
  std::array<std::array<int, 64>, kMaxVertices> count_{};
};

}  // namespace

std::optional<Coloring> k_coloring(const Graph& g, int k, const Budget& budget) {
  if (g.order() == 0) return Coloring{};
  if (k <= 0) return std::nullopt;
  std::uint64_t nodes = 0;
  return KColoringSearch(g, std::min(k, 63), budget).run(nodes);
}

ChromaticResult chromatic_number(const Graph& g, const Budget& budget) {
  ChromaticResult r;
  if (g.order() == 0) return r;
  const int lower = clique_number(g);
  Coloring best = dsatur_coloring(g);
  std::vector<int> by_degree(g.order());
  std::iota(by_degree.begin(), by_degree.end(), 0);
  std::stable_sort(by_degree.begin(), by_degree.end(), [&](int a, int b) { return g.degree(a) > g.degree(b); });
  Coloring other = greedy_coloring(g, by_degree);
  if (colors_used(other) < colors_used(best)) best = other;
  int upper = colors_used(best);
  // Descend from the greedy bound until a k-coloring fails.
  while (upper > lower) {
    KColoringSearch search(g, upper - 1, budget);
    auto c = search.run(r.nodes);
    if (!c) break;
    best = *c;
    upper = colors_used(best);
  }
  r.chi = upper;
  r.coloring = best;
  return r;
}

// ---------------------------------------------------------------- isomorphism

namespace {

// Joint color refinement of a list of graphs; colors are canonical (depend only on
// the multiset of structures), so equal graphs up to isomorphism get equal histograms.
std::vector<std::vector<int>> refine(const std::vector<const Graph*>& graphs) {
  std::vector<std::vector<int>> color(graphs.size());
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const Graph& g = *graphs[i];
    color[i].resize(g.order());
    for (int v = 0; v < g.order(); ++v) {
      int inner = 0;
      for (VertexSet s = g.neighbors(v); s; s &= s - 1) inner += g.degree_in(lowest(s), g.neighbors(v));
      color[i][v] = g.degree(v) * 1024 + inner / 2;
    }
  }
  std::size_t classes = 0;
  for (;;) {
    std::map<std::vector<int>, int> names;
    std::vector<std::vector<std::vector<int>>> keys(graphs.size());
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      const Graph& g = *graphs[i];
      keys[i].resize(g.order());
      for (int v = 0; v < g.order(); ++v) {
        std::vector<int> key{color[i][v]};
        std::vector<int> around;
        for (VertexSet s = g.neighbors(v); s; s &= s - 1) around.push_back(color[i][lowest(s)]);
        std::sort(around.begin(), around.end());
        key.insert(key.end(), around.begin(), around.end());
        names.emplace(key, 0);
        keys[i][v] = std::move(key);
      }
    }
    int next = 0;
    for (auto& [key, name] : names) name = next++;
    for (std::size_t i = 0; i < graphs.size(); ++i)
      for (std::size_t v = 0; v < keys[i].size(); ++v) color[i][v] = names[keys[i][v]];
    if (names.size() == classes) break;
    classes = names.size();
  }
  return color;
}

class IsoSearch {
 public:
  IsoSearch(const Graph& g, const Graph& h, std::vector<int> cg, std::vector<int> ch, const Budget& budget)
      : g_(g), h_(h), cg_(std::move(cg)), ch_(std::move(ch)), budget_(budget) {}

  std::optional<std::vector<int>> run() {
    const int n = g_.order();
    // Order g's vertices: smallest color class first, then most links to earlier picks.
    std::map<int, int> class_size;
    for (int c : cg_) ++class_size[c];
    VertexSet placed = 0;
    for (int step = 0; step < n; ++step) {
      int pick = -1;
      std::tuple<int, int, int> best{};
      for (int v = 0; v < n; ++v) {
        if (contains(placed, v)) continue;
        std::tuple<int, int, int> key{g_.degree_in(v, placed), -class_size[cg_[v]], -v};
        if (pick < 0 || key > best) {
          pick = v;
          best = key;
        }
      }
      order_.push_back(pick);
      placed |= singleton(pick);
    }
    map_.assign(n, -1);
    if (!extend(0, 0)) return std::nullopt;
    return map_;
  }

 private:
  bool extend(int depth, VertexSet used) {
    if (depth == g_.order()) return true;
    if (budget_.max_nodes && ++nodes_ > budget_.max_nodes) throw BudgetExceeded("isomorphism search exceeded node budget");
    const int v = order_[depth];
    for (int w = 0; w < h_.order(); ++w) {
      if (contains(used, w) || ch_[w] != cg_[v]) continue;
      bool ok = true;
      for (int i = 0; i < depth && ok; ++i) {
        const int u = order_[i];
        ok = g_.adjacent(u, v) == h_.adjacent(map_[u], w);
      }
      if (!ok) continue;
      map_[v] = w;
      if (extend(depth + 1, used | singleton(w))) return true;
      map_[v] = -1;
    }
    return false;
  }

  const Graph& g_;
  const Graph& h_;
  std::vector<int> cg_;
  std::vector<int> ch_;
  Budget budget_;
  std::uint64_t nodes_ = 0;
  std::vector<int> order_;
  std::vector<int> map_;
};

}  // namespace

std::optional<std::vector<int>> is_isomorphic(const Graph& g, const Graph& h, const Budget& budget) {
  if (g.order() != h.order() || g.edge_count() != h.edge_count()) return std::nullopt;
  auto colors = refine({&g, &h});
  auto a = colors[0];
  auto b = colors[1];
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  if (a != b) return std::nullopt;
  return IsoSearch(g, h, colors[0], colors[1], budget).run();
}

std::vector<std::uint64_t> invariant_signature(const Graph& g) {
  auto colors = refine({&g})[0];
  std::sort(colors.begin(), colors.end());
  std::vector<std::uint64_t> sig{static_cast<std::uint64_t>(g.order()), static_cast<std::uint64_t>(g.edge_count())};
  // Refined color names depend on the graph, so summarize classes by (degree, size).
  std::map<int, int> hist;
  for (int c : colors) ++hist[c];
  std::vector<std::uint64_t> degree_hist;
  for (int v = 0; v < g.order(); ++v) degree_hist.push_back(g.degree(v));
  std::sort(degree_hist.begin(), degree_hist.end());
  sig.insert(sig.end(), degree_hist.begin(), degree_hist.end());
  std::vector<std::uint64_t> sizes;
  for (auto& [c, k] : hist) sizes.push_back(k);
  std::sort(sizes.begin(), sizes.end());
  sig.push_back(hist.size());
  sig.insert(sig.end(), sizes.begin(), sizes.end());
  std::uint64_t triangles = 0;
  for (auto [u, v] : g.edges()) triangles += popcount(g.neighbors(u) & g.neighbors(v));
  sig.push_back(triangles);
  return sig;
}

// ---------------------------------------------------------------- matching

HallResult saturating_matching(VertexSet left, VertexSet right, const std::function<bool(int, int)>& related) {
  std::array<int, kMaxVertices> match_left{};
  std::array<int, kMaxVertices> match_right{};
  match_left.fill(-1);
  match_right.fill(-1);
  VertexSet seen_left = 0;
  VertexSet seen_right = 0;
  auto augment = [&](auto&& self, int r) -> bool {
    seen_right |= singleton(r);
    for (VertexSet s = left; s; s &= s - 1) {
      const int l = lowest(s);
      if (contains(seen_left, l) || !related(l, r)) continue;
      seen_left |= singleton(l);
      if (match_left[l] < 0 || self(self, match_left[l])) {
        match_left[l] = r;
        match_right[r] = l;
        return true;
      }
    }
    return false;
  };
  HallResult out;
  for (VertexSet s = right; s; s &= s - 1) {
    const int r = lowest(s);
    seen_left = seen_right = 0;
    if (!augment(augment, r)) {
      // The alternating tree from r: its right side has one more vertex than its neighbourhood.
      out.violator = seen_right;
      out.violator_neighbors = seen_left;
      return out;
    }
  }
  std::vector<std::pair<int, int>> pairs;
  for (VertexSet s = right; s; s &= s - 1) pairs.emplace_back(match_right[lowest(s)], lowest(s));
  out.matching = std::move(pairs);
  return out;
}

}  // namespace clawlab
