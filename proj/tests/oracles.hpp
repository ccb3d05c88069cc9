#pragma once

// Slow, direct implementations used only as test oracles.

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "clawlab/graph.hpp"

namespace oracle {

using clawlab::Graph;
using clawlab::VertexSet;

inline bool adj(const Graph& g, int u, int v) {
  for (auto [a, b] : g.edges())
    if ((a == u && b == v) || (a == v && b == u)) return true;
  return false;
}

inline int clique_number(const Graph& g) {
  const int n = g.order();
  int best = 0;
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    bool ok = true;
    for (int u = 0; u < n && ok; ++u)
      for (int v = u + 1; v < n && ok; ++v)
        if ((s >> u & 1) && (s >> v & 1) && !adj(g, u, v)) ok = false;
    if (ok) best = std::max(best, std::popcount(s));
  }
  return best;
}

inline int independence_number(const Graph& g) {
  const int n = g.order();
  int best = 0;
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    bool ok = true;
    for (int u = 0; u < n && ok; ++u)
      for (int v = u + 1; v < n && ok; ++v)
        if ((s >> u & 1) && (s >> v & 1) && adj(g, u, v)) ok = false;
    if (ok) best = std::max(best, std::popcount(s));
  }
  return best;
}

// every map V -> {0..k-1}
inline bool k_colorable(const Graph& g, int k) {
  const int n = g.order();
  if (n == 0) return true;
  if (k == 0) return false;
  std::vector<int> c(n, 0);
  const auto edges = g.edges();
  for (;;) {
    bool ok = true;
    for (auto [u, v] : edges)
      if (c[u] == c[v]) {
        ok = false;
        break;
      }
    if (ok) return true;
    int i = 0;
    while (i < n && ++c[i] == k) c[i++] = 0;
    if (i == n) return false;
  }
}

inline int chromatic_number(const Graph& g) {
  int k = 0;
  while (!k_colorable(g, k)) ++k;
  return k;
}

inline bool claw_free(const Graph& g) {
  const int n = g.order();
  for (int c = 0; c < n; ++c)
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        for (int d = b + 1; d < n; ++d) {
          if (c == a || c == b || c == d) continue;
          if (adj(g, c, a) && adj(g, c, b) && adj(g, c, d) && !adj(g, a, b) && !adj(g, a, d) && !adj(g, b, d))
            return false;
        }
  return true;
}

// lists[v] is a color bitmask; try every choice c(v) in lists[v]
inline bool list_colorable(const Graph& g, const std::vector<std::uint32_t>& lists) {
  const int n = g.order();
  std::vector<int> c(n, -1);
  const auto edges = g.edges();
  std::function<bool(int)> go = [&](int v) {
    if (v == n) {
      for (auto [a, b] : edges)
        if (c[a] == c[b]) return false;
      return true;
    }
    for (int x = 0; x < 32; ++x)
      if (lists[v] >> x & 1) {
        c[v] = x;
        if (go(v + 1)) return true;
      }
    return false;
  };
  return go(0);
}

// f-choosable by trying every assignment with lists inside {0..pot-1};
// pot = sum f is always enough.
inline bool f_choosable(const Graph& g, const std::vector<int>& f, int pot) {
  const int n = g.order();
  std::vector<std::vector<std::uint32_t>> options(n);
  for (int v = 0; v < n; ++v)
    for (std::uint32_t s = 0; s < (1u << pot); ++s)
      if (std::popcount(s) == f[v]) options[v].push_back(s);
  std::vector<std::uint32_t> lists(n);
  std::function<bool(int)> go = [&](int v) {
    if (v == n) return list_colorable(g, lists);
    for (auto s : options[v]) {
      lists[v] = s;
      if (!go(v + 1)) return false;
    }
    return true;
  };
  return go(0);
}

inline Graph random_graph(std::mt19937_64& rng, int n, double p) {
  std::vector<clawlab::Edge> e;
  std::bernoulli_distribution coin(p);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) e.emplace_back(u, v);
  return clawlab::make_graph(n, e);
}

// all labelled graphs on n vertices (n <= 5)
inline std::vector<Graph> labelled_graphs(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  std::vector<Graph> out;
  for (std::uint32_t m = 0; m < (1u << pairs.size()); ++m) {
    std::vector<clawlab::Edge> e;
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if (m >> i & 1) e.push_back(pairs[i]);
    out.push_back(clawlab::make_graph(n, e));
  }
  return out;
}

}  // namespace oracle
