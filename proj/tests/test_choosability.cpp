#include <doctest.h>

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <set>

#include "clawlab/catalog.hpp"
#include "clawlab/choosability.hpp"
#include "clawlab/verifier.hpp"
#include "oracles.hpp"

using namespace clawlab;

namespace {

// Bad assignments up to color renaming, generated with new colors always taken
// as the next unused ones; brute-force checked. Returns true iff none is bad.
bool growth_oracle_choosable(const Graph& g, const std::vector<int>& f) {
  const int n = g.order();
  std::vector<std::uint32_t> lists(n);
  std::function<bool(int, int)> go = [&](int v, int used) {
    if (v == n) return oracle::list_colorable(g, lists);
    const std::uint32_t old = (1u << used) - 1;
    for (std::uint32_t s = old;; s = (s - 1) & old) {
      const int fresh = f[v] - std::popcount(s);
      if (fresh >= 0 && used + fresh <= 32) {
        lists[v] = s | (((1u << fresh) - 1) << used);
        if (!go(v + 1, used + fresh)) return false;
      }
      if (s == 0) break;
    }
    return true;
  };
  return go(0, 0);
}

std::vector<int> sizes(const Graph& g, const FSpec& f) { return f.resolve(g); }

ListAssignment random_assignment(std::mt19937_64& rng, const std::vector<int>& f, int pot) {
  ListAssignment l;
  for (int k : f) {
    std::vector<int> colors(pot);
    std::iota(colors.begin(), colors.end(), 0);
    std::shuffle(colors.begin(), colors.end(), rng);
    ColorSet s = 0;
    for (int i = 0; i < k && i < pot; ++i) s |= ColorSet{1} << colors[i];
    l.lists.push_back(s);
  }
  return l;
}

ListAssignment permute_colors(const ListAssignment& l, const std::vector<int>& perm) {
  ListAssignment out;
  for (ColorSet s : l.lists) {
    ColorSet t = 0;
    for (int c = 0; c < 32; ++c)
      if (s >> c & 1u) t |= ColorSet{1} << perm[c];
    out.lists.push_back(t);
  }
  return out;
}

}  // namespace

TEST_CASE("FSpec parsing and resolution") {
  const Graph p = path_graph(4);
  CHECK(FSpec::parse("d1").resolve(p) == std::vector<int>{0, 1, 1, 0});
  CHECK(FSpec::parse("d0").resolve(p) == std::vector<int>{1, 2, 2, 1});
  CHECK(FSpec::parse("k=3").resolve(p) == std::vector<int>{3, 3, 3, 3});
  CHECK(FSpec::parse("f=1,2,3,4").resolve(p) == std::vector<int>{1, 2, 3, 4});
  CHECK(FSpec::parse("d1 low=1").resolve(p) == std::vector<int>{0, 2, 1, 0});
  CHECK(FSpec::parse("k=2 set=0:5").resolve(p) == std::vector<int>{5, 2, 2, 2});
  for (const char* text : {"d1", "k=4", "f=3,2,2", "d1 low=2"}) CHECK(FSpec::parse(FSpec::parse(text).to_string()).to_string() == FSpec::parse(text).to_string());
  CHECK_THROWS_AS(FSpec::parse(""), InvalidArgument);
  CHECK_THROWS_AS(FSpec::parse("d2"), InvalidArgument);
  CHECK_THROWS_AS(FSpec::parse("k=x"), InvalidArgument);
  CHECK_THROWS_AS(FSpec::parse("d1 mid=3"), InvalidArgument);
}

TEST_CASE("list assignment text round trip") {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 50; ++i) {
    const auto l = random_assignment(rng, {1, 2, 3, 2, 4}, 7);
    CHECK(ListAssignment::parse(l.to_string()) == l);
  }
  CHECK_THROWS_AS(ListAssignment::parse("0 1 2"), InvalidArgument);
  CHECK_THROWS_AS(ListAssignment::parse("0: 40"), InvalidArgument);
}

TEST_CASE("canonical form is invariant under color permutations") {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 300; ++i) {
    const int pot = 3 + i % 6;
    const auto l = random_assignment(rng, {2, 3, 1, 2, 3, 2}, pot);
    std::vector<int> perm(32);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const auto c = canonical_form(l);
    CHECK(canonical_form(permute_colors(l, perm)) == c);
    CHECK(canonical_form(c) == c);
    CHECK(c.pot_size() == l.pot_size());
  }
}

TEST_CASE("equal canonical forms imply color-permutation equivalence") {
  // every assignment of sizes (2,2,2) over 4 colors, grouped by canonical form
  std::vector<ListAssignment> all;
  for (ColorSet a = 0; a < 16; ++a)
    for (ColorSet b = 0; b < 16; ++b)
      for (ColorSet c = 0; c < 16; ++c)
        if (popcount(a) == 2 && popcount(b) == 2 && popcount(c) == 2) all.push_back({{a, b, c}});
  std::vector<int> perm(32);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> perms;
  do perms.push_back(perm);
  while (std::next_permutation(perm.begin(), perm.begin() + 4));
  for (std::size_t i = 0; i < all.size(); i += 7)
    for (std::size_t j = 0; j < all.size(); j += 5) {
      bool related = false;
      for (const auto& p : perms) related |= permute_colors(all[i], p) == all[j];
      CHECK((canonical_form(all[i]) == canonical_form(all[j])) == related);
    }
}

TEST_CASE("color_from_lists agrees with brute force and returns proper list colorings") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 300; ++i) {
    const Graph g = oracle::random_graph(rng, 2 + i % 6, 0.5);
    std::vector<int> f(g.order());
    for (int& k : f) k = 1 + static_cast<int>(rng() % 3);
    const auto l = random_assignment(rng, f, 4);
    const auto c = color_from_lists(g, l);
    CHECK(c.has_value() == oracle::list_colorable(g, l.lists));
    if (c) {
      CHECK(is_proper_coloring(g, *c));
      for (int v = 0; v < g.order(); ++v) CHECK((l.lists[v] >> (*c)[v] & 1u));
    }
  }
}

TEST_CASE("goodness is monotone under enlarging lists") {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 300; ++i) {
    const Graph g = oracle::random_graph(rng, 3 + i % 5, 0.5);
    std::vector<int> f(g.order(), 2);
    auto l = random_assignment(rng, f, 4);
    if (!is_good(g, l)) continue;
    const int v = static_cast<int>(rng() % g.order());
    l.lists[v] |= ColorSet{1} << (rng() % 6);
    CHECK(is_good(g, l));
  }
}

TEST_CASE("is_f_choosable agrees with an exhaustive brute-force oracle") {
  const std::vector<FSpec> specs{FSpec::d0(), FSpec::d1(), FSpec::constant(2), FSpec::constant(3)};
  int decided = 0;
  for (int n = 1; n <= 5; ++n)
    for (const Graph& g : enumerate_graphs(n))
      for (const FSpec& spec : specs) {
        if (n == 5 && spec.base() == FSpec::Base::constant && spec.resolve(g)[0] == 3) continue;
        const auto f = sizes(g, spec);
        ChooseOptions o;
        o.exhaustive = true;
        const Verdict v = is_f_choosable(g, f, o);
        CAPTURE(graph_signature(g));
        CAPTURE(spec.to_string());
        CHECK(v.choosable == growth_oracle_choosable(g, f));
        if (!v.choosable) {
          REQUIRE(v.witness.has_value());
          for (int x = 0; x < n; ++x) CHECK(popcount(v.witness->lists[x]) == f[x]);
          CHECK_FALSE(oracle::list_colorable(g, v.witness->lists));
        }
        ++decided;
      }
  CHECK(decided == 174);
}

TEST_CASE("known list chromatic numbers") {
  CHECK(list_chromatic_number(cycle_graph(5)) == 3);
  CHECK(list_chromatic_number(cycle_graph(4)) == 2);
  CHECK(list_chromatic_number(join(empty_graph(2), empty_graph(4))) == 3);  // K_{2,4}
  CHECK(list_chromatic_number(join(empty_graph(3), empty_graph(3))) == 3);  // K_{3,3}
  CHECK(list_chromatic_number(e2_power(3)) == 3);
  CHECK(list_chromatic_number(complete_graph(4)) == 4);
}

TEST_CASE("C5 is not d0-choosable with the two-color witness") {
  const Verdict v = is_d0_choosable(cycle_graph(5));
  CHECK_FALSE(v.choosable);
  REQUIRE(v.witness.has_value());
  CHECK(v.witness->pot_size() == 2);
}

TEST_CASE("minimal bad assignments are bad, canonical and of least pot") {
  for (int n = 3; n <= 5; ++n)
    for (const Graph& g : enumerate_graphs(n)) {
      const auto f = FSpec::d0().resolve(g);
      if (is_f_choosable(g, f).choosable) {
        CHECK_THROWS_AS(minimal_bad_assignments(g, f), InvalidArgument);
        continue;
      }
      const auto minimal = minimal_bad_assignments(g, f);
      REQUIRE_FALSE(minimal.empty());
      const auto all = bad_assignments(g, f);
      int least = 99;
      for (const auto& l : all) least = std::min(least, l.pot_size());
      std::set<ListAssignment> expected;
      for (const auto& l : all)
        if (l.pot_size() == least) expected.insert(l);
      CHECK(std::set<ListAssignment>(minimal.begin(), minimal.end()) == expected);
      for (const auto& l : minimal) {
        CHECK(canonical_form(l) == l);
        CHECK_FALSE(is_good(g, l));
      }
    }
}

TEST_CASE("enumeration streams one canonical representative per class") {
  const Graph g = cycle_graph(4);
  const std::vector<int> f{2, 2, 2, 2};
  std::vector<ListAssignment> seen;
  enumerate_assignments(g, f, {}, [&](const ListAssignment& l) {
    seen.push_back(l);
    return true;
  });
  std::set<ListAssignment> unique(seen.begin(), seen.end());
  CHECK(unique.size() == seen.size());
  for (const auto& l : seen) {
    CHECK(canonical_form(l) == l);
    CHECK(l.pot_size() <= 3);
  }
  // independent count: classes of (2,2,2,2) assignments over at most 3 colors
  std::set<ListAssignment> classes;
  for (ColorSet a = 0; a < 8; ++a)
    for (ColorSet b = 0; b < 8; ++b)
      for (ColorSet c = 0; c < 8; ++c)
        for (ColorSet d = 0; d < 8; ++d)
          if (popcount(a) == 2 && popcount(b) == 2 && popcount(c) == 2 && popcount(d) == 2)
            classes.insert(canonical_form({{a, b, c, d}}));
  CHECK(classes.size() == seen.size());
  CHECK_THROWS_AS(enumerate_assignments(g, std::vector<int>{4, 2, 2, 2}, {}, [](const ListAssignment&) { return true; }),
                  InvalidArgument);
}

TEST_CASE("verdicts are identical across worker counts") {
  for (const char* ref : {"@D8", "@N6", "@E2n:3", "@fig4"}) {
    const Graph g = resolve_catalog_ref(ref).graph;
    ChooseOptions one, many;
    many.workers = 4;
    for (const FSpec& f : {FSpec::d1(), FSpec::d0()}) {
      const Verdict a = is_f_choosable(g, f, one);
      const Verdict b = is_f_choosable(g, f, many);
      CHECK(a.choosable == b.choosable);
      CHECK(a.witness == b.witness);
    }
  }
}

TEST_CASE("node budget raises BudgetExceeded") {
  ChooseOptions o;
  o.max_nodes = 50;
  CHECK_THROWS_AS(is_d1_choosable(resolve_catalog_ref("@D8").graph, o), BudgetExceeded);
}
