#include "clawlab/structure.hpp"

#include <algorithm>
#include <map>

namespace clawlab {

// ---------------------------------------------------------------- claws and covers

std::optional<Claw> find_claw(const Graph& g) {
  for (int c = 0; c < g.order(); ++c) {
    const auto nb = members(g.neighbors(c));
    for (std::size_t i = 0; i < nb.size(); ++i)
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        if (g.adjacent(nb[i], nb[j])) continue;
        for (std::size_t k = j + 1; k < nb.size(); ++k)
          if (!g.adjacent(nb[i], nb[k]) && !g.adjacent(nb[j], nb[k])) return Claw{c, {nb[i], nb[j], nb[k]}};
      }
  }
  return std::nullopt;
}

std::optional<CliquePair> two_clique_cover(const Graph& g, VertexSet within) {
  VertexSet side[2] = {0, 0};
  VertexSet unseen = within;
  while (unseen) {
    const int root = lowest(unseen);
    std::vector<int> queue{root};
    side[0] |= singleton(root);
    unseen &= ~singleton(root);
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      const int u = queue[qi];
      const int su = contains(side[0], u) ? 0 : 1;
      // neighbours in the complement of G[within]
      const VertexSet anti = within & ~g.closed_neighbors(u);
      if (anti & side[su]) return std::nullopt;
      for (VertexSet t = anti & unseen; t; t &= t - 1) {
        const int w = lowest(t);
        side[1 - su] |= singleton(w);
        unseen &= ~singleton(w);
        queue.push_back(w);
      }
    }
  }
  return CliquePair{side[0], side[1]};
}

std::optional<CliquePair> bisimplicial_cover(const Graph& g, int v) { return two_clique_cover(g, g.neighbors(v)); }

std::optional<int> non_bisimplicial_vertex(const Graph& g) {
  for (int v = 0; v < g.order(); ++v)
    if (!bisimplicial_cover(g, v)) return v;
  return std::nullopt;
}

std::optional<std::array<VertexSet, 5>> as_thickened_c5(const Graph& g) {
  std::vector<VertexSet> classes;
  std::vector<VertexSet> keys;
  for (int v = 0; v < g.order(); ++v) {
    const VertexSet key = g.closed_neighbors(v);
    auto it = std::find(keys.begin(), keys.end(), key);
    if (it == keys.end()) {
      keys.push_back(key);
      classes.push_back(singleton(v));
    } else {
      classes[it - keys.begin()] |= singleton(v);
    }
  }
  if (classes.size() != 5) return std::nullopt;
  auto joined = [&](VertexSet a, VertexSet b) {
    for (VertexSet t = a; t; t &= t - 1)
      if ((g.neighbors(lowest(t)) & b) != b) return false;
    return true;
  };
  auto touching = [&](VertexSet a, VertexSet b) {
    for (VertexSet t = a; t; t &= t - 1)
      if (g.neighbors(lowest(t)) & b) return true;
    return false;
  };
  std::array<std::vector<int>, 5> nbr;
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) {
      if (i == j || !touching(classes[i], classes[j])) continue;
      if (!joined(classes[i], classes[j])) return std::nullopt;
      nbr[i].push_back(j);
    }
  for (int i = 0; i < 5; ++i)
    if (!g.is_clique(classes[i]) || nbr[i].size() != 2) return std::nullopt;
  std::array<VertexSet, 5> out{};
  int prev = -1;
  int cur = 0;  // classes[0] holds vertex 0
  for (int k = 0; k < 5; ++k) {
    out[k] = classes[cur];
    int next;
    if (prev < 0)
      next = lowest(classes[nbr[cur][0]]) < lowest(classes[nbr[cur][1]]) ? nbr[cur][0] : nbr[cur][1];
    else
      next = nbr[cur][0] == prev ? nbr[cur][1] : nbr[cur][0];
    prev = cur;
    cur = next;
  }
  if (cur != 0) return std::nullopt;
  return out;
}

// ---------------------------------------------------------------- interval representations

namespace {

VertexSet run_mask(const std::vector<int>& order, int first, int len) {
  VertexSet s = 0;
  const int n = static_cast<int>(order.size());
  for (int k = 0; k < len; ++k) s |= singleton(order[(first + k) % n]);
  return s;
}

std::vector<std::pair<int, int>> maximal_arcs(const Graph& g, const std::vector<int>& order, bool circular) {
  const int n = static_cast<int>(order.size());
  std::vector<std::pair<VertexSet, std::pair<int, int>>> runs;
  for (int i = 0; i < n; ++i) {
    int len = 1;
    const int max_len = circular ? n : n - i;
    while (len < max_len && g.is_clique(run_mask(order, i, len + 1))) ++len;
    if (len >= 2) runs.push_back({run_mask(order, i, len), {i, (i + len - 1) % n}});
  }
  std::vector<std::pair<int, int>> arcs;
  for (std::size_t i = 0; i < runs.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < runs.size() && !dominated; ++j) {
      if (i == j) continue;
      const bool subset = (runs[i].first & ~runs[j].first) == 0;
      dominated = subset && (runs[i].first != runs[j].first || j < i);
    }
    if (!dominated) arcs.push_back(runs[i].second);
  }
  return arcs;
}

class OrderSearch {
 public:
  OrderSearch(const Graph& g, VertexSet h, bool circular, VertexSet first, VertexSet last, const Budget& budget)
      : g_(g), h_(h), circular_(circular), first_(first), last_(last), budget_(budget), size_(popcount(h)) {}

  std::optional<std::vector<int>> run() {
    if (size_ == 0) return std::vector<int>{};
    if (circular_) {
      // Rotation: the lowest vertex goes first.
      const int v = lowest(h_);
      order_.push_back(v);
      placed_ = singleton(v);
      if (extend()) return order_;
      return std::nullopt;
    }
    if (extend()) return order_;
    return std::nullopt;
  }

 private:
  bool allowed(int pos, int x) const {
    const bool early = pos < popcount(first_);
    const bool late = pos >= size_ - popcount(last_);
    if (first_ && contains(first_, x) != early) return false;
    if (last_ && contains(last_, x) != late) return false;
    return true;
  }

  bool linear_ok(int x) const {
    const VertexSet open = h_ & ~placed_ & ~singleton(x);
    for (int u : order_)
      if ((g_.neighbors(u) & open) && !g_.adjacent(u, x)) return false;
    // everything after the earliest placed neighbour of x must be adjacent to x
    bool seen = false;
    for (int u : order_) {
      if (!seen && g_.adjacent(u, x)) seen = true;
      if (seen && !g_.adjacent(u, x)) return false;
    }
    return true;
  }

  bool circular_ok(int x) const {
    VertexSet prefix = 0;
    const VertexSet all = placed_;
    for (int u : order_) {
      prefix |= singleton(u);
      if (!g_.adjacent(u, x)) continue;
      const VertexSet inner = (all & ~prefix) | singleton(u) | singleton(x);
      const VertexSet outer = prefix | singleton(x);
      if (!g_.is_clique(inner) && !g_.is_clique(outer)) return false;
    }
    return true;
  }

  bool circular_complete() const {
    const int n = static_cast<int>(order_.size());
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        if (!g_.adjacent(order_[i], order_[j])) continue;
        if (!g_.is_clique(run_mask(order_, i, j - i + 1)) && !g_.is_clique(run_mask(order_, j, n - j + i + 1)))
          return false;
      }
    return true;
  }

  bool extend() {
    if (budget_.max_nodes && ++nodes_ > budget_.max_nodes)
      throw BudgetExceeded("interval order search exceeded node budget");
    if (static_cast<int>(order_.size()) == size_) return !circular_ || circular_complete();
    const int pos = static_cast<int>(order_.size());
    for (VertexSet t = h_ & ~placed_; t; t &= t - 1) {
      const int x = lowest(t);
      if (!allowed(pos, x)) continue;
      if (circular_ ? !circular_ok(x) : !linear_ok(x)) continue;
      order_.push_back(x);
      placed_ |= singleton(x);
      if (extend()) return true;
      order_.pop_back();
      placed_ &= ~singleton(x);
    }
    return false;
  }

  const Graph& g_;
  VertexSet h_;
  bool circular_;
  VertexSet first_;
  VertexSet last_;
  Budget budget_;
  int size_;
  std::uint64_t nodes_ = 0;
  std::vector<int> order_;
  VertexSet placed_ = 0;
};

}  // namespace

bool represents(const Graph& g, const IntervalRepresentation& rep) {
  const int n = static_cast<int>(rep.order.size());
  if (n != g.order()) return false;
  std::vector<bool> seen(n, false);
  for (int v : rep.order) {
    if (v < 0 || v >= n || seen[v]) return false;
    seen[v] = true;
  }
  std::vector<VertexSet> arc_sets;
  for (auto [a, b] : rep.arcs) {
    if (a < 0 || a >= n || b < 0 || b >= n) return false;
    if (!rep.circular && b < a) return false;
    const int len = b >= a ? b - a + 1 : n - a + b + 1;
    arc_sets.push_back(run_mask(rep.order, a, len));
  }
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      const bool together = std::any_of(arc_sets.begin(), arc_sets.end(), [&](VertexSet s) {
        return contains(s, u) && contains(s, v);
      });
      if (together != g.adjacent(u, v)) return false;
    }
  return true;
}

std::optional<IntervalRepresentation> is_circular_interval(const Graph& g, const Budget& budget) {
  OrderSearch search(g, g.vertices(), true, 0, 0, budget);
  auto order = search.run();
  if (!order) return std::nullopt;
  return IntervalRepresentation{*order, maximal_arcs(g, *order, true), true};
}

std::optional<IntervalRepresentation> is_linear_interval(const Graph& g, const Budget& budget) {
  OrderSearch search(g, g.vertices(), false, 0, 0, budget);
  auto order = search.run();
  if (!order) return std::nullopt;
  return IntervalRepresentation{*order, maximal_arcs(g, *order, false), false};
}

std::optional<std::vector<int>> linear_order_with_ends(const Graph& g, VertexSet h, VertexSet first, VertexSet last,
                                                       const Budget& budget) {
  if ((first & ~h) || (last & ~h)) throw InvalidArgument("end cliques must lie inside H");
  OrderSearch search(g, h, false, first, last, budget);
  return search.run();
}

// ---------------------------------------------------------------- homogeneous pairs

namespace {

VertexSet splitters(const Graph& g, VertexSet a) {
  VertexSet out = 0;
  for (VertexSet t = g.vertices() & ~a; t; t &= t - 1) {
    const int w = lowest(t);
    const VertexSet seen = g.neighbors(w) & a;
    if (seen && seen != a) out |= singleton(w);
  }
  return out;
}

}  // namespace

std::vector<Edge> removable_edges(const Graph& g, const HomogeneousPair& p) {
  const VertexSet both = p.a1 | p.a2;
  const int omega = clique_number(g, both);
  std::vector<Edge> out;
  for (VertexSet s = p.a1; s; s &= s - 1) {
    const int u = lowest(s);
    for (VertexSet t = g.neighbors(u) & p.a2; t; t &= t - 1) {
      const int v = lowest(t);
      if (clique_number(remove_edge(g, u, v), both) == omega) out.emplace_back(std::min(u, v), std::max(u, v));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<HomogeneousPair> homogeneous_clique_pairs(const Graph& g) {
  const auto cliques = all_cliques(g);
  std::vector<VertexSet> split(cliques.size());
  for (std::size_t i = 0; i < cliques.size(); ++i) split[i] = splitters(g, cliques[i]);
  std::vector<HomogeneousPair> out;
  for (std::size_t i = 0; i < cliques.size(); ++i) {
    const VertexSet a1 = cliques[i];
    for (std::size_t j = 0; j < cliques.size(); ++j) {
      const VertexSet a2 = cliques[j];
      if ((a1 & a2) || lowest(a1) >= lowest(a2)) continue;
      if (popcount(a1) + popcount(a2) < 3) continue;
      if ((split[i] & ~a2) || (split[j] & ~a1)) continue;
      HomogeneousPair p{a1, a2, true};
      p.skeletal = removable_edges(g, p).empty();
      out.push_back(p);
    }
  }
  std::sort(out.begin(), out.end(),
            [](const HomogeneousPair& x, const HomogeneousPair& y) { return std::tie(x.a1, x.a2) < std::tie(y.a1, y.a2); });
  return out;
}

std::optional<SkeletalViolation> find_nonskeletal(const Graph& g) {
  std::optional<SkeletalViolation> best;
  for (const auto& p : homogeneous_clique_pairs(g)) {
    if (p.skeletal) continue;
    const auto edges = removable_edges(g, p);
    if (!best || edges.front() < best->edge) best = SkeletalViolation{p, edges.front()};
  }
  return best;
}

Graph make_skeletal(const Graph& g) {
  Graph cur = g;
  while (auto v = find_nonskeletal(cur)) cur = remove_edge(cur, v->edge.first, v->edge.second);
  return cur;
}

// ---------------------------------------------------------------- interval 2-joins

std::string to_string(TwoJoinKind k) {
  switch (k) {
    case TwoJoinKind::trivial: return "trivial";
    case TwoJoinKind::canonical: return "canonical";
    case TwoJoinKind::noncanonical: return "noncanonical";
  }
  return "?";
}

namespace {

VertexSet neighbors_of_set(const Graph& g, VertexSet s) {
  VertexSet out = 0;
  for (VertexSet t = s; t; t &= t - 1) out |= g.neighbors(lowest(t));
  return out;
}

// The vertex of `end` with the fewest neighbours in H, ties by index.
int end_vertex(const Graph& g, VertexSet h, VertexSet end) {
  int best = -1;
  for (int v : members(end))
    if (best < 0 || g.degree_in(v, h) < g.degree_in(best, h)) best = v;
  return best;
}

bool side_reducible(const Graph& g, VertexSet h, VertexSet a) {
  const int v = end_vertex(g, h, a);
  return ((neighbors_of_set(g, a) & h) & ~a) == ((g.neighbors(v) & h) & ~a);
}

}  // namespace

std::string two_join_violation(const Graph& g, const TwoJoin& j) {
  const VertexSet outside = g.vertices() & ~j.h;
  if (!j.h) return "H is empty";
  if (!j.a1 || !j.a2) return "an end clique is empty";
  if ((j.a1 & ~j.h) || (j.a2 & ~j.h)) return "A1, A2 must lie in H";
  if ((j.b1 & ~outside) || (j.b2 & ~outside)) return "B1, B2 must lie outside H";
  if (!g.is_clique(j.a1) || !g.is_clique(j.a2)) return "A1, A2 must be cliques";
  if (!g.is_clique(j.b1) || !g.is_clique(j.b2)) return "B1, B2 must be cliques";
  for (VertexSet t = j.h; t; t &= t - 1) {
    const int x = lowest(t);
    VertexSet expect = 0;
    if (contains(j.a1, x)) expect |= j.b1;
    if (contains(j.a2, x)) expect |= j.b2;
    if ((g.neighbors(x) & outside) != expect) return "edges between H and G-H are not exactly A1-B1 and A2-B2";
  }
  // order: a linear interval order of H with A1 first and A2 last
  const int t = static_cast<int>(j.order.size());
  VertexSet seen = 0;
  for (int v : j.order) seen |= singleton(v);
  if (t != popcount(j.h) || seen != j.h) return "order is not a permutation of H";
  const int n1 = popcount(j.a1);
  const int n2 = popcount(j.a2);
  for (int p = 0; p < t; ++p) {
    const int v = j.order[p];
    if (contains(j.a1, v) != (p < n1)) return "A1 is not an end of the order";
    if (contains(j.a2, v) != (p >= t - n2)) return "A2 is not an end of the order";
  }
  for (int p = 0; p < t; ++p)
    for (int q = p + 1; q < t; ++q) {
      if (!g.adjacent(j.order[p], j.order[q])) continue;
      VertexSet seg = 0;
      for (int r = p; r <= q; ++r) seg |= singleton(j.order[r]);
      if (!g.is_clique(seg)) return "order is not a linear interval order of H";
    }
  return "";
}

void classify_two_join(const Graph& g, TwoJoin& j) {
  if (j.a1 == j.h && j.a2 == j.h)
    j.kind = TwoJoinKind::trivial;
  else if (!(j.a1 & j.a2))
    j.kind = TwoJoinKind::canonical;
  else
    j.kind = TwoJoinKind::noncanonical;
  j.reducible = j.kind == TwoJoinKind::canonical && !g.is_clique(j.h) &&
                (side_reducible(g, j.h, j.a1) || side_reducible(g, j.h, j.a2));
}

std::optional<TwoJoin> make_two_join(const Graph& g, VertexSet h, VertexSet a1, VertexSet a2) {
  if (!a1 || !a2 || (a1 & ~h) || (a2 & ~h)) return std::nullopt;
  const VertexSet outside = g.vertices() & ~h;
  VertexSet b1 = outside;
  VertexSet b2 = outside;
  for (VertexSet t = a1; t; t &= t - 1) b1 &= g.neighbors(lowest(t));
  for (VertexSet t = a2; t; t &= t - 1) b2 &= g.neighbors(lowest(t));
  if (!b1 || !b2) return std::nullopt;
  TwoJoin j{h, a1, a2, b1, b2, {}, TwoJoinKind::canonical, false};
  // cheap conditions before the order search
  for (VertexSet t = h; t; t &= t - 1) {
    const int x = lowest(t);
    VertexSet expect = 0;
    if (contains(a1, x)) expect |= b1;
    if (contains(a2, x)) expect |= b2;
    if ((g.neighbors(x) & outside) != expect) return std::nullopt;
  }
  if (!g.is_clique(a1) || !g.is_clique(a2) || !g.is_clique(b1) || !g.is_clique(b2)) return std::nullopt;
  auto order = linear_order_with_ends(g, h, a1, a2);
  if (!order) return std::nullopt;
  j.order = std::move(*order);
  if (!two_join_violation(g, j).empty()) return std::nullopt;
  classify_two_join(g, j);
  return j;
}

std::vector<TwoJoin> find_interval_two_joins(const Graph& g, int max_h) {
  const int n = g.order();
  if (n > 20) throw InvalidArgument("2-join search supports at most 20 vertices");
  std::vector<TwoJoin> out;
  const int limit = std::min(max_h, n - 1);
  for (int size = 1; size <= limit; ++size) {
    // Gosper's hack over all size-subsets
    for (std::uint64_t m = (std::uint64_t{1} << size) - 1; m < (std::uint64_t{1} << n);) {
      const VertexSet h = static_cast<VertexSet>(m);
      if (g.components(h).size() == 1) {
        VertexSet x = 0;
        for (VertexSet t = h; t; t &= t - 1)
          if (g.neighbors(lowest(t)) & ~h) x |= singleton(lowest(t));
        if (x && two_clique_cover(g, x)) {
          for (VertexSet a1 = x;; a1 = (a1 - 1) & x) {
            if (a1 && g.is_clique(a1)) {
              const VertexSet rest = x & ~a1;
              for (VertexSet extra = a1;; extra = (extra - 1) & a1) {
                const VertexSet a2 = rest | extra;
                if (a2 && a1 <= a2 && g.is_clique(a2))
                  if (auto j = make_two_join(g, h, a1, a2)) out.push_back(std::move(*j));
                if (!extra) break;
              }
            }
            if (!a1) break;
          }
        }
      }
      const std::uint64_t c = m & -m;
      const std::uint64_t r = m + c;
      m = (((r ^ m) >> 2) / c) | r;
    }
  }
  return out;
}

TwoJoin reduce_two_join(const Graph& g, const TwoJoin& j) {
  if (j.kind != TwoJoinKind::canonical || !j.reducible)
    throw InvalidArgument("only canonical reducible 2-joins can be reduced");
  // Reduce from the A1 side when it qualifies and does not degenerate, otherwise mirror.
  for (const bool left : {true, false}) {
    const VertexSet a1 = left ? j.a1 : j.a2;
    const VertexSet a2 = left ? j.a2 : j.a1;
    const VertexSet b2 = left ? j.b2 : j.b1;
    if (!side_reducible(g, j.h, a1)) continue;
    const int v1 = end_vertex(g, j.h, a1);
    const VertexSet c = (g.neighbors(v1) & j.h) & ~a1;
    const VertexSet na1 = c & ~a2;
    const VertexSet na2 = a2 & ~c;
    if (!na1) continue;
    TwoJoin r;
    r.h = j.h & ~(a1 | (c & a2));
    r.a1 = na1;
    r.a2 = na2;
    r.b1 = a1 | (c & a2);
    r.b2 = b2 | (c & a2);
    auto order = linear_order_with_ends(g, r.h, r.a1, r.a2);
    if (!order) throw std::logic_error("reduced 2-join has no linear interval order");
    r.order = std::move(*order);
    if (const auto why = two_join_violation(g, r); !why.empty())
      throw std::logic_error("reduced 2-join is invalid: " + why);
    classify_two_join(g, r);
    return r;
  }
  throw InvalidArgument("reduction degenerates: every neighbour of the end vertex lies in the opposite end");
}

std::vector<TwoJoin> reduce_fully(const Graph& g, const TwoJoin& j) {
  std::vector<TwoJoin> chain{j};
  while (chain.back().kind == TwoJoinKind::canonical && chain.back().reducible) {
    chain.push_back(reduce_two_join(g, chain.back()));
    if (popcount(chain.back().h) >= popcount(chain[chain.size() - 2].h))
      throw std::logic_error("2-join reduction did not shrink H");
  }
  return chain;
}

}  // namespace clawlab
