#include "clawlab/catalog.hpp"

#include <charconv>
#include <functional>
#include <map>

namespace clawlab {

namespace {

// Edge lists below are the \Edge commands of the figure sources, with tikz
// vertex vK mapped to index K unless a relabeling is noted.

const std::vector<Edge> kFig1a = {
    {0, 1}, {0, 2}, {0, 3}, {0, 4},  {0, 5},  {0, 6},  {1, 2},  {1, 3},  {1, 4},  {1, 5},  {1, 6},  {2, 3},
    {2, 4}, {2, 5}, {2, 6}, {3, 4},  {3, 5},  {3, 6},  {4, 7},  {4, 11}, {5, 8},  {5, 9},  {6, 9},  {6, 10},
    {7, 8}, {7, 9}, {7, 10}, {7, 11}, {8, 9}, {8, 10}, {8, 11}, {9, 10}, {9, 11}, {10, 11}};

const std::vector<Edge> kFig1b = {
    {0, 1},  {0, 2},  {0, 3},  {0, 4},  {0, 10}, {0, 12}, {1, 2},  {1, 3},  {1, 4},  {1, 10}, {1, 12}, {2, 3},
    {2, 4},  {2, 10}, {2, 13}, {3, 4},  {3, 10}, {3, 13}, {4, 10}, {4, 11}, {5, 6},  {5, 7},  {5, 8},  {5, 9},
    {5, 11}, {5, 12}, {5, 13}, {6, 7},  {6, 8},  {6, 9},  {6, 11}, {6, 12}, {6, 13}, {7, 8},  {7, 9},  {7, 11},
    {7, 12}, {7, 13}, {8, 9},  {8, 11}, {8, 12}, {8, 13}, {9, 11}, {9, 12}, {9, 13}, {10, 11}};

const std::vector<Edge> kFig1c = {
    {0, 1},  {0, 2},  {0, 3},  {0, 4},  {0, 10}, {0, 11}, {0, 12}, {1, 2},  {1, 3},  {1, 4},  {1, 10},
    {1, 11}, {1, 12}, {2, 3},  {2, 4},  {2, 5},  {2, 6},  {3, 4},  {3, 5},  {3, 6},  {4, 5},  {4, 6},
    {5, 6},  {5, 7},  {5, 8},  {5, 9},  {6, 7},  {6, 8},  {6, 9},  {7, 8},  {7, 9},  {7, 10}, {7, 11},
    {7, 12}, {8, 9},  {8, 10}, {8, 11}, {8, 12}, {9, 10}, {9, 11}, {9, 12}, {10, 11}, {10, 12}, {11, 12}};

const std::vector<Edge> kFig1d = {
    {0, 1},   {0, 2},   {0, 3},   {0, 4},  {0, 5},  {0, 12}, {0, 13}, {0, 14}, {1, 2},  {1, 3},  {1, 4},  {1, 5},
    {1, 12},  {1, 13},  {1, 14},  {2, 3},  {2, 4},  {2, 5},  {2, 12}, {2, 13}, {2, 14}, {3, 4},  {3, 5},  {3, 6},
    {3, 7},   {3, 8},   {4, 5},   {4, 6},  {4, 7},  {4, 8},  {5, 6},  {5, 7},  {5, 8},  {6, 7},  {6, 8},  {6, 9},
    {6, 10},  {6, 11},  {7, 8},   {7, 9},  {7, 10}, {7, 11}, {8, 9},  {8, 10}, {8, 11}, {9, 10}, {9, 11}, {9, 12},
    {9, 13},  {9, 14},  {10, 11}, {10, 12}, {10, 13}, {10, 14}, {11, 12}, {11, 13}, {11, 14}, {12, 13}, {12, 14},
    {13, 14}};

// N6, relabeled x1..x5 = 0..4, y = 5 (tikz: v0=x1 v1=x2 v2=x5 v3=x4 v4=x3 v5=y).
NamedGraph n6() {
  return {"N6",
          make_graph(6, {{1, 0}, {1, 2}, {2, 3}, {4, 3}, {0, 4}, {5, 0}, {5, 1}, {5, 2}, {5, 3}}),
          "Figure 2",
          {"x1", "x2", "x3", "x4", "x5", "y"}};
}

// D8, relabeled x1..x5 = 0..4, y3 = 5, y4 = 6, w = 7
// (tikz: v0=x2 v1=x4 v2=x3 v3=x5 v4=y3 v5=w v6=y4 v7=x1).
NamedGraph d8() {
  enum { x1, x2, x3, x4, x5, y3, y4, w };
  return {"D8",
          make_graph(8, {{x3, x2}, {x3, x4}, {x5, x4}, {y3, x4}, {x2, w},  {x4, w},  {x3, w},  {x5, w}, {y3, x3},
                         {y3, x2}, {y4, x4}, {y4, w},  {y4, x5}, {y4, x3}, {x1, x5}, {x1, x2}, {x1, w}}),
          "Figure 3",
          {"x1", "x2", "x3", "x4", "x5", "y3", "y4", "w"}};
}

// Figure 4 gadget in tikz order: v0=x1 v1=y3 v2=v v3=x3 v4=y1 v5=z.
NamedGraph fig4() {
  return {"fig4",
          make_graph(6, {{0, 2}, {1, 2}, {3, 1}, {3, 2}, {4, 0}, {4, 2}, {5, 3}, {5, 1}}),
          "Figure 4",
          {"x1", "y3", "v", "x3", "y1", "z"}};
}

Graph chair() { return make_graph(5, {{0, 1}, {0, 2}, {0, 3}, {3, 4}}); }

void expect_params(std::string_view name, const std::vector<int>& params, std::size_t count) {
  if (params.size() != count)
    throw InvalidArgument(std::string(name) + " expects " + std::to_string(count) + " parameter(s), got " +
                          std::to_string(params.size()));
}

struct Builder {
  std::string provenance;
  std::string params;
  std::function<NamedGraph(const std::vector<int>&)> build;
};

NamedGraph fixed(std::string name, Graph g, std::string provenance) {
  return {std::move(name), std::move(g), std::move(provenance), {}};
}

const std::map<std::string, Builder, std::less<>>& registry() {
  static const std::map<std::string, Builder, std::less<>> r = [] {
    std::map<std::string, Builder, std::less<>> m;
    auto add_fixed = [&m](std::string name, std::string prov, std::function<NamedGraph()> f) {
      m[name] = {prov, "", [name, f](const std::vector<int>& p) {
                   expect_params(name, p, 0);
                   return f();
                 }};
    };
    add_fixed("fig1a", "Figure 1(a), Delta = 6", [] { return fixed("fig1a", make_graph(12, kFig1a), "Figure 1(a)"); });
    add_fixed("fig1b", "Figure 1(b), Delta = 7", [] { return fixed("fig1b", make_graph(14, kFig1b), "Figure 1(b)"); });
    add_fixed("fig1c", "Figure 1(c), Delta = 7", [] { return fixed("fig1c", make_graph(13, kFig1c), "Figure 1(c)"); });
    add_fixed("fig1d", "Figure 1(d), Delta = 8", [] { return fixed("fig1d", make_graph(15, kFig1d), "Figure 1(d)"); });
    add_fixed("N6", "Figure 2", n6);
    add_fixed("D8", "Figure 3", d8);
    add_fixed("fig4", "Figure 4", fig4);
    add_fixed("chair", "K_{1,3} with one edge subdivided", [] { return fixed("chair", chair(), "definition"); });
    add_fixed("antichair", "complement of the chair",
              [] { return fixed("antichair", complement(chair()), "definition"); });
    add_fixed("paw", "K3 with a pendant edge",
              [] { return fixed("paw", make_graph(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}}), "definition"); });
    add_fixed("diamond", "K4 minus an edge",
              [] { return fixed("diamond", make_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}}), "definition"); });
    add_fixed("claw", "K_{1,3}", [] { return fixed("claw", star_graph(3), "definition"); });
    add_fixed("C5", "5-cycle", [] { return fixed("C5", cycle_graph(5), "definition"); });
    m["E2n"] = {"join of n copies of E2", "n>=1", [](const std::vector<int>& p) {
                  expect_params("E2n", p, 1);
                  return fixed("E2n:" + std::to_string(p[0]), e2_power(p[0]), "E2^n");
                }};
    m["G_t"] = {"K_t * C5", "t>=1", [](const std::vector<int>& p) {
                  expect_params("G_t", p, 1);
                  return fixed("G_t:" + std::to_string(p[0]), g_t(p[0]), "G_t = K_t * C5");
                }};
    m["thickC5"] = {"thickening of C5", "s1,...,s5>=1", [](const std::vector<int>& p) {
                      expect_params("thickC5", p, 5);
                      std::string name = "thickC5:";
                      for (std::size_t i = 0; i < p.size(); ++i) name += (i ? "," : "") + std::to_string(p[i]);
                      return fixed(name, thickened_c5(p), "thickening of C5");
                    }};
    auto family = [&m](std::string name, std::string prov, int min, Graph (*f)(int)) {
      m[name] = {prov, "n>=" + std::to_string(min), [name, min, f](const std::vector<int>& p) {
                   expect_params(name, p, 1);
                   if (p[0] < min) throw InvalidArgument(name + " needs n >= " + std::to_string(min));
                   return fixed(name + ":" + std::to_string(p[0]), f(p[0]), name);
                 }};
    };
    family("K", "complete graph", 1, complete_graph);
    family("E", "edgeless graph", 1, empty_graph);
    family("P", "path", 1, path_graph);
    family("C", "cycle", 3, cycle_graph);
    return m;
  }();
  return r;
}

}  // namespace

Graph e2_power(int n) {
  if (n < 1) throw InvalidArgument("E2^n needs n >= 1");
  Graph g = empty_graph(2);
  for (int i = 1; i < n; ++i) g = join(g, empty_graph(2));
  return g;
}

Graph g_t(int t) {
  if (t < 1) throw InvalidArgument("G_t needs t >= 1");
  return join(complete_graph(t), cycle_graph(5));
}

Graph thickened_c5(const std::vector<int>& sizes) {
  if (sizes.size() != 5) throw InvalidArgument("a thickening of C5 needs five sizes");
  return thicken(cycle_graph(5), sizes);
}

NamedGraph catalog_get(std::string_view name, const std::vector<int>& params) {
  const auto& r = registry();
  auto it = r.find(name);
  if (it == r.end()) throw InvalidArgument("unknown catalog graph '" + std::string(name) + "'");
  return it->second.build(params);
}

std::vector<CatalogEntry> catalog_list() {
  std::vector<CatalogEntry> out;
  for (const auto& [name, b] : registry()) out.push_back({name, b.provenance, b.params});
  return out;
}

NamedGraph resolve_catalog_ref(std::string_view ref) {
  if (ref.empty() || ref.front() != '@') throw InvalidArgument("catalog references start with '@'");
  ref.remove_prefix(1);
  const auto colon = ref.find(':');
  const auto name = ref.substr(0, colon);
  std::vector<int> params;
  if (colon != std::string_view::npos) {
    auto rest = ref.substr(colon + 1);
    while (!rest.empty()) {
      const auto comma = rest.find(',');
      const auto tok = rest.substr(0, comma);
      int x = 0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), x);
      if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw InvalidArgument("bad catalog parameter '" + std::string(tok) + "'");
      params.push_back(x);
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
  }
  return catalog_get(name, params);
}

}  // namespace clawlab
