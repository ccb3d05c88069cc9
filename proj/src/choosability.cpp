#include "clawlab/choosability.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <charconv>
#include <numeric>
#include <sstream>

#include "clawlab/parallel.hpp"

namespace clawlab {

// ---------------------------------------------------------------- ListAssignment

ColorSet ListAssignment::pot() const {
  ColorSet p = 0;
  for (ColorSet l : lists) p |= l;
  return p;
}

ColorSet ListAssignment::pot_of(VertexSet s) const {
  ColorSet p = 0;
  for (; s; s &= s - 1) p |= lists[lowest(s)];
  return p;
}

VertexSet ListAssignment::vertices_meeting(ColorSet s) const {
  VertexSet out = 0;
  for (int v = 0; v < order(); ++v)
    if (lists[v] & s) out |= singleton(v);
  return out;
}

std::string ListAssignment::to_string() const {
  std::ostringstream os;
  for (int v = 0; v < order(); ++v) {
    os << v << ':';
    for (int c : members(lists[v])) os << ' ' << c;
    os << '\n';
  }
  return os.str();
}

namespace {

int parse_int(std::string_view s, const char* what) {
  int x = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    throw InvalidArgument(std::string("cannot parse ") + what + " from '" + std::string(s) + "'");
  return x;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    const auto pos = s.find(sep, start);
    const auto end = pos == std::string_view::npos ? s.size() : pos;
    if (end > start) out.push_back(s.substr(start, end - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

ListAssignment ListAssignment::parse(std::string_view text) {
  std::vector<std::pair<int, ColorSet>> rows;
  for (auto line : split(text, '\n')) {
    line = trim(line);
    if (line.empty()) continue;
    const auto colon = line.find(':');
    if (colon == std::string_view::npos) throw InvalidArgument("list line lacks ':'");
    const int v = parse_int(trim(line.substr(0, colon)), "vertex");
    ColorSet l = 0;
    for (auto tok : split(line.substr(colon + 1), ' ')) {
      tok = trim(tok);
      if (tok.empty()) continue;
      const int c = parse_int(tok, "color");
      if (c < 0 || c >= 32) throw InvalidArgument("colors must lie in 0..31");
      l |= ColorSet{1} << c;
    }
    rows.emplace_back(v, l);
  }
  ListAssignment out;
  out.lists.assign(rows.size(), 0);
  for (auto [v, l] : rows) {
    if (v < 0 || v >= static_cast<int>(rows.size())) throw InvalidArgument("list vertex out of range");
    out.lists[v] = l;
  }
  return out;
}

namespace {

std::uint32_t reverse_bits(std::uint32_t x, int width) {
  std::uint32_t r = 0;
  for (int i = 0; i < width; ++i)
    if ((x >> i) & 1u) r |= std::uint32_t{1} << (width - 1 - i);
  return r;
}

}  // namespace

ListAssignment canonical_form(const ListAssignment& l) {
  const int n = l.order();
  std::vector<VertexSet> classes;
  for (int c : members(l.pot())) classes.push_back(l.vertices_meeting(ColorSet{1} << c));
  // Lowest member first; same lowest member: earlier vertices' membership decides.
  std::sort(classes.begin(), classes.end(),
            [n](VertexSet a, VertexSet b) { return reverse_bits(a, n) > reverse_bits(b, n); });
  ListAssignment out;
  out.lists.assign(n, 0);
  for (std::size_t c = 0; c < classes.size(); ++c)
    for (VertexSet s = classes[c]; s; s &= s - 1) out.lists[lowest(s)] |= ColorSet{1} << c;
  return out;
}

// ---------------------------------------------------------------- FSpec

FSpec FSpec::constant(int k) {
  FSpec f(Base::constant);
  f.k_ = k;
  return f;
}

FSpec FSpec::explicit_sizes(std::vector<int> sizes) {
  FSpec f(Base::explicit_sizes);
  f.sizes_ = std::move(sizes);
  return f;
}

FSpec& FSpec::set(int v, int size) {
  overrides_[v] = size;
  return *this;
}

FSpec& FSpec::low(int v) {
  overrides_[v] = -1;
  return *this;
}

std::vector<int> FSpec::resolve(const Graph& g) const {
  std::vector<int> f(g.order());
  for (int v = 0; v < g.order(); ++v) {
    switch (base_) {
      case Base::d0: f[v] = g.degree(v); break;
      case Base::d1: f[v] = g.degree(v) - 1; break;
      case Base::constant: f[v] = k_; break;
      case Base::explicit_sizes:
        if (static_cast<int>(sizes_.size()) != g.order()) throw InvalidArgument("explicit f has the wrong length");
        f[v] = sizes_[v];
        break;
    }
  }
  for (auto [v, size] : overrides_) {
    if (v < 0 || v >= g.order()) throw InvalidArgument("f override names a vertex out of range");
    f[v] = size < 0 ? g.degree(v) : size;
  }
  for (int& x : f) x = std::max(x, 0);
  return f;
}

std::string FSpec::to_string() const {
  std::ostringstream os;
  switch (base_) {
    case Base::d0: os << "d0"; break;
    case Base::d1: os << "d1"; break;
    case Base::constant: os << "k=" << k_; break;
    case Base::explicit_sizes:
      os << "f=";
      for (std::size_t i = 0; i < sizes_.size(); ++i) os << (i ? "," : "") << sizes_[i];
      break;
  }
  std::vector<int> lows;
  std::vector<std::pair<int, int>> sets;
  for (auto [v, s] : overrides_) {
    if (s < 0)
      lows.push_back(v);
    else
      sets.emplace_back(v, s);
  }
  if (!lows.empty()) {
    os << " low=";
    for (std::size_t i = 0; i < lows.size(); ++i) os << (i ? "," : "") << lows[i];
  }
  for (auto [v, s] : sets) os << " set=" << v << ':' << s;
  return os.str();
}

FSpec FSpec::parse(std::string_view text) {
  auto tokens = split(trim(text), ' ');
  if (tokens.empty()) throw InvalidArgument("empty f specification");
  std::optional<FSpec> f;
  const auto head = tokens[0];
  if (head == "d0") {
    f = FSpec::d0();
  } else if (head == "d1") {
    f = FSpec::d1();
  } else if (head.starts_with("k=")) {
    f = FSpec::constant(parse_int(head.substr(2), "k"));
  } else if (head.starts_with("f=")) {
    std::vector<int> sizes;
    for (auto t : split(head.substr(2), ',')) sizes.push_back(parse_int(t, "list size"));
    f = FSpec::explicit_sizes(std::move(sizes));
  } else {
    throw InvalidArgument("unknown f specification '" + std::string(head) + "'");
  }
  for (std::size_t i = 1; i < tokens.size(); ++i) {
    const auto t = tokens[i];
    if (t.starts_with("low=")) {
      for (auto v : split(t.substr(4), ',')) f->low(parse_int(v, "vertex"));
    } else if (t.starts_with("set=")) {
      const auto parts = split(t.substr(4), ':');
      if (parts.size() != 2) throw InvalidArgument("set= expects vertex:size");
      f->set(parse_int(parts[0], "vertex"), parse_int(parts[1], "list size"));
    } else {
      throw InvalidArgument("unknown f modifier '" + std::string(t) + "'");
    }
  }
  return *f;
}

// ---------------------------------------------------------------- coloring from lists

std::optional<Coloring> color_from_lists(const Graph& g, const ListAssignment& l) {
  const int n = g.order();
  if (l.order() != n) throw InvalidArgument("list assignment does not match the graph");
  Coloring c(n, -1);
  std::vector<ColorSet> avail(l.lists);
  auto search = [&](auto&& self, int remaining) -> bool {
    if (remaining == 0) return true;
    int pick = -1;
    int fewest = 64;
    for (int v = 0; v < n; ++v) {
      if (c[v] >= 0) continue;
      const int k = popcount(avail[v]);
      if (k < fewest) {
        fewest = k;
        pick = v;
      }
    }
    if (fewest == 0) return false;
    const VertexSet open = [&] {
      VertexSet s = 0;
      for (VertexSet t = g.neighbors(pick); t; t &= t - 1)
        if (c[lowest(t)] < 0) s |= singleton(lowest(t));
      return s;
    }();
    for (ColorSet opts = avail[pick]; opts; opts &= opts - 1) {
      const int color = lowest(opts);
      const ColorSet bit = ColorSet{1} << color;
      c[pick] = color;
      VertexSet touched = 0;
      for (VertexSet t = open; t; t &= t - 1) {
        const int u = lowest(t);
        if (avail[u] & bit) {
          avail[u] &= ~bit;
          touched |= singleton(u);
        }
      }
      if (self(self, remaining - 1)) return true;
      for (VertexSet t = touched; t; t &= t - 1) avail[lowest(t)] |= bit;
      c[pick] = -1;
    }
    return false;
  };
  if (!search(search, n)) return std::nullopt;
  return c;
}

bool is_good(const Graph& g, const ListAssignment& l) { return color_from_lists(g, l).has_value(); }

// ---------------------------------------------------------------- search engine

namespace {

constexpr int kMaxChooseVertices = 16;

// Each f-assignment with pot p is viewed as a multiset of p color classes
// S_c = {v : c in L(v)}; vertex v lies in exactly f(v) classes. Classes are
// generated in canonical order (lowest member ascending, then reversed-bit key
// descending), so each color-permutation class is produced once.
//
// Alongside, `reach[j]` holds the family of vertex sets colorable from the
// first j classes, as a bitset indexed by subset mask. The family is closed
// under subsets. A leaf is good iff the full vertex set is reachable.
//
// Good-subtree certificate: if some reachable X leaves V - X peelable, i.e.
// orderable so each vertex has more remaining demand r(v) than neighbours
// later in the order, then every completion is good: color X from old colors,
// then V - X greedily with the r(v) fresh colors each such vertex will receive.
class Engine {
 public:
  enum class Mode { all, first_bad, collect_bad };

  Engine(const Graph& g, std::vector<int> f, int cap, Mode mode, std::uint64_t max_nodes,
         std::atomic<std::uint64_t>& shared_nodes)
      : g_(g),
        n_(g.order()),
        full_(full_set(g.order())),
        words_(std::max<std::size_t>(1, (std::size_t{1} << g.order()) / 64)),
        demand_(std::move(f)),
        cap_(cap),
        mode_(mode),
        max_nodes_(max_nodes),
        shared_nodes_(shared_nodes) {
    reach_.assign(static_cast<std::size_t>(cap_ + 1) * words_, 0);
    scratch_.assign(static_cast<std::size_t>(n_ + 1) * words_, 0);
    classes_.assign(cap_, 0);
    reach_[0] = 1;  // the empty set
  }

  /// Restrict leaves to pots of exactly this size (negative = any size up to cap).
  void set_exact_pot(int p) { exact_pot_ = p; }
  void set_visitor(const std::function<bool(const ListAssignment&)>* v) { visitor_ = v; }

  /// First-level classes (the branches of the root), in canonical order.
  std::vector<VertexSet> root_branches() const {
    std::vector<VertexSet> out;
    const int u = first_open();
    if (u < 0) return out;
    for_each_class(u, 0, [&](VertexSet t) {
      out.push_back(t);
      return true;
    });
    return out;
  }

  /// Explore the whole tree (branch 0) or only the subtree under one root branch.
  void run(VertexSet branch) {
    if (branch == 0) {
      dfs(0);
      return;
    }
    ++stats_.nodes;
    tick();
    if (!root_feasible()) return;
    descend(0, branch);
  }

  bool stopped() const { return stop_; }
  const SearchStats& stats() const { return stats_; }
  std::vector<ListAssignment>& found() { return found_; }

 private:
  int first_open() const {
    for (int v = 0; v < n_; ++v)
      if (demand_[v] > 0) return v;
    return -1;
  }

  bool root_feasible() {
    // Mirror of the checks dfs(0) performs before branching.
    int max_r = 0;
    int sum_r = 0;
    for (int v = 0; v < n_; ++v) max_r = std::max(max_r, demand_[v]), sum_r += demand_[v];
    if (max_r > cap_) return false;
    if (exact_pot_ >= 0 && sum_r < exact_pot_) return false;
    return true;
  }

  std::uint64_t* level(int j) { return reach_.data() + static_cast<std::size_t>(j) * words_; }

  bool reachable(const std::uint64_t* r, VertexSet x) const { return (r[x >> 6] >> (x & 63)) & 1u; }

  // dst |= { X + w : X in src, w not in X }
  void add_vertex(std::uint64_t* dst, const std::uint64_t* src, int w) const {
    if (w >= 6) {
      const std::size_t stride = std::size_t{1} << (w - 6);
      for (std::size_t i = 0; i < words_; ++i)
        if (!(i & stride)) dst[i + stride] |= src[i];
    } else {
      static constexpr std::uint64_t kLow[6] = {0x5555555555555555ULL, 0x3333333333333333ULL, 0x0F0F0F0F0F0F0F0FULL,
                                                0x00FF00FF00FF00FFULL, 0x0000FFFF0000FFFFULL, 0x00000000FFFFFFFFULL};
      const int shift = 1 << w;
      for (std::size_t i = 0; i < words_; ++i) dst[i] |= (src[i] & kLow[w]) << shift;
    }
  }

  // out = union over independent I within s of { X + I : X in cur, X disjoint from I }.
  void extend_independent(std::uint64_t* out, const std::uint64_t* cur, VertexSet cand, int depth) {
    for (VertexSet c = cand; c; c &= c - 1) {
      const int w = lowest(c);
      std::uint64_t* next = scratch_.data() + static_cast<std::size_t>(depth) * words_;
      std::fill(next, next + words_, 0);
      add_vertex(next, cur, w);
      for (std::size_t i = 0; i < words_; ++i) out[i] |= next[i];
      const VertexSet rest = cand & ~g_.neighbors(w) & ~full_set(w + 1);
      if (rest) extend_independent(out, next, rest, depth + 1);
    }
  }

  VertexSet peel(VertexSet u) const {
    bool changed = true;
    while (changed && u) {
      changed = false;
      for (VertexSet t = u; t; t &= t - 1) {
        const int v = lowest(t);
        if (demand_[v] > g_.degree_in(v, u)) {
          u &= ~singleton(v);
          changed = true;
        }
      }
    }
    return u;
  }

  bool certify(const std::uint64_t* r, VertexSet x, VertexSet core, VertexSet excluded, int budget) {
    if (!core) return true;
    if (budget <= 0) return false;
    // Vertices with no remaining demand can only be covered by old colors.
    int pick = -1;
    int worst = 1 << 20;
    for (VertexSet t = core & ~excluded; t; t &= t - 1) {
      const int v = lowest(t);
      const int slack = demand_[v] - g_.degree_in(v, core);
      if (slack < worst) {
        worst = slack;
        pick = v;
      }
    }
    if (pick < 0) return false;
    for (VertexSet t = excluded & core; t; t &= t - 1)
      if (demand_[lowest(t)] == 0) return false;
    if (reachable(r, x | singleton(pick))) {
      const VertexSet nx = x | singleton(pick);
      if (certify(r, nx, peel(core & ~singleton(pick)), excluded, budget - 1)) return true;
    }
    if (demand_[pick] == 0) return false;
    return certify(r, x, core, excluded | singleton(pick), budget - 1);
  }

  template <typename F>
  void for_each_class(int u, VertexSet prev, F&& f) const {
    VertexSet avail = 0;
    for (int v = u + 1; v < n_; ++v)
      if (demand_[v] > 0) avail |= singleton(v);
    const std::uint32_t rev_avail = reverse_bits(avail, n_);
    const bool bounded = prev != 0 && lowest(prev) == u;
    const std::uint32_t limit = bounded ? reverse_bits(prev & ~singleton(u), n_) : 0;
    for (std::uint32_t s = rev_avail;; s = (s - 1) & rev_avail) {
      if (!bounded || s <= limit) {
        if (!f(singleton(u) | reverse_bits(s, n_))) return;
      }
      if (s == 0) break;
    }
  }

  void tick() {
    if (max_nodes_ && shared_nodes_.fetch_add(1, std::memory_order_relaxed) + 1 > max_nodes_)
      throw BudgetExceeded("choosability search exceeded node budget");
  }

  void descend(int j, VertexSet t) {
    for (VertexSet s = t; s; s &= s - 1) --demand_[lowest(s)];
    classes_[j] = t;
    std::uint64_t* next = level(j + 1);
    const std::uint64_t* cur = level(j);
    std::copy(cur, cur + words_, next);
    extend_independent(next, cur, t, 0);
    dfs(j + 1);
    for (VertexSet s = t; s; s &= s - 1) ++demand_[lowest(s)];
  }

  void leaf(int j) {
    ++stats_.assignments;
    if (exact_pot_ >= 0 && j != exact_pot_) return;
    const bool bad = !reachable(level(j), full_);
    if (mode_ == Mode::all) {
      if (!(*visitor_)(assignment(j))) stop_ = true;
      return;
    }
    if (!bad) return;
    found_.push_back(assignment(j));
    if (mode_ == Mode::first_bad) stop_ = true;
  }

  ListAssignment assignment(int j) const {
    ListAssignment l;
    l.lists.assign(n_, 0);
    for (int c = 0; c < j; ++c)
      for (VertexSet s = classes_[c]; s; s &= s - 1) l.lists[lowest(s)] |= ColorSet{1} << c;
    return l;
  }

  void dfs(int j) {
    if (stop_) return;
    ++stats_.nodes;
    tick();
    const int u = first_open();
    if (u < 0) {
      leaf(j);
      return;
    }
    int max_r = 0;
    int sum_r = 0;
    for (int v = 0; v < n_; ++v) max_r = std::max(max_r, demand_[v]), sum_r += demand_[v];
    if (j + max_r > cap_) return;
    if (exact_pot_ >= 0 && j + sum_r < exact_pot_) return;
    if (mode_ != Mode::all) {
      const std::uint64_t* r = level(j);
      if (reachable(r, full_) || certify(r, 0, peel(full_), 0, 4 * n_)) {
        ++stats_.prunes;
        return;
      }
    }
    const VertexSet prev = j > 0 ? classes_[j - 1] : 0;
    for_each_class(u, prev, [&](VertexSet t) {
      descend(j, t);
      return !stop_;
    });
  }

  const Graph& g_;
  int n_;
  VertexSet full_;
  std::size_t words_;
  std::vector<int> demand_;
  int cap_;
  Mode mode_;
  std::uint64_t max_nodes_;
  std::atomic<std::uint64_t>& shared_nodes_;
  int exact_pot_ = -1;
  const std::function<bool(const ListAssignment&)>* visitor_ = nullptr;
  std::vector<std::uint64_t> reach_;
  std::vector<std::uint64_t> scratch_;
  std::vector<VertexSet> classes_;
  SearchStats stats_;
  std::vector<ListAssignment> found_;
  bool stop_ = false;
};

int resolve_cap(const Graph& g, const std::vector<int>& f, const ChooseOptions& options) {
  if (g.order() > kMaxChooseVertices)
    throw InvalidArgument("choosability search supports at most " + std::to_string(kMaxChooseVertices) + " vertices");
  if (static_cast<int>(f.size()) != g.order()) throw InvalidArgument("f does not match the graph");
  const bool small_pot_ok = std::all_of(f.begin(), f.end(), [&](int x) { return x < g.order(); });
  if (!small_pot_ok && !options.exhaustive)
    throw InvalidArgument("f(v) >= |G| for some v: the small-pot cap is unsound, pass the exhaustive flag");
  int cap = options.pot_cap;
  if (cap <= 0) cap = options.exhaustive ? std::accumulate(f.begin(), f.end(), 0) : g.order() - 1;
  const int max_f = f.empty() ? 0 : *std::max_element(f.begin(), f.end());
  cap = std::max(cap, 0);
  if (max_f > 32 || cap > 32) {
    if (max_f > 32) throw InvalidArgument("list sizes above 32 are not supported");
    cap = 32;
  }
  return cap;
}

struct SubtreeResult {
  SearchStats stats;
  std::vector<ListAssignment> found;
};

SearchStats merge(const std::vector<SubtreeResult>& parts) {
  SearchStats s;
  for (const auto& p : parts) {
    s.nodes += p.stats.nodes;
    s.assignments += p.stats.assignments;
    s.prunes += p.stats.prunes;
  }
  return s;
}

// Runs the engine over all root branches in parallel; results stay in branch order.
std::vector<SubtreeResult> run_partitioned(const Graph& g, const std::vector<int>& f, int cap, Engine::Mode mode,
                                           int exact_pot, const ChooseOptions& options) {
  std::atomic<std::uint64_t> shared{0};
  Engine probe(g, f, cap, mode, options.max_nodes, shared);
  probe.set_exact_pot(exact_pot);
  const auto branches = probe.root_branches();
  if (branches.empty()) {
    probe.run(0);
    return {SubtreeResult{probe.stats(), std::move(probe.found())}};
  }
  std::vector<SubtreeResult> parts(branches.size());
  std::atomic<std::size_t> first_hit{branches.size()};
  parallel_for(branches.size(), options.workers, [&](std::size_t i) {
    if (mode == Engine::Mode::first_bad && i > first_hit.load()) return;
    Engine e(g, f, cap, mode, options.max_nodes, shared);
    e.set_exact_pot(exact_pot);
    e.run(branches[i]);
    parts[i].stats = e.stats();
    parts[i].found = std::move(e.found());
    if (mode == Engine::Mode::first_bad && !parts[i].found.empty()) {
      std::size_t cur = first_hit.load();
      while (i < cur && !first_hit.compare_exchange_weak(cur, i)) {
      }
    }
  });
  return parts;
}

ListAssignment fill_lists(const std::vector<int>& f) {
  ListAssignment l;
  for (int k : f) l.lists.push_back(k >= 32 ? ~ColorSet{0} : (ColorSet{1} << k) - 1);
  return l;
}

}  // namespace

SearchStats enumerate_assignments(const Graph& g, const std::vector<int>& f, const ChooseOptions& options,
                                  const std::function<bool(const ListAssignment&)>& visit) {
  const int cap = resolve_cap(g, f, options);
  std::atomic<std::uint64_t> shared{0};
  Engine e(g, f, cap, Engine::Mode::all, options.max_nodes, shared);
  e.set_visitor(&visit);
  e.run(0);
  return e.stats();
}

SearchStats enumerate_assignments(const Graph& g, const FSpec& f, const ChooseOptions& options,
                                  const std::function<bool(const ListAssignment&)>& visit) {
  return enumerate_assignments(g, f.resolve(g), options, visit);
}

Verdict is_f_choosable(const Graph& g, const std::vector<int>& f, const ChooseOptions& options) {
  if (static_cast<int>(f.size()) != g.order()) throw InvalidArgument("f does not match the graph");
  Verdict verdict;
  if (!options.reduce) {
    const int cap = resolve_cap(g, f, options);
    verdict.pot_cap = cap;
    auto parts = run_partitioned(g, f, cap, Engine::Mode::first_bad, -1, options);
    verdict.stats = merge(parts);
    verdict.choosable = true;
    for (auto& p : parts) {
      if (p.found.empty()) continue;
      if (is_good(g, p.found.front())) throw std::logic_error("internal error: witness failed re-verification");
      verdict.choosable = false;
      verdict.witness = p.found.front();
      break;
    }
    return verdict;
  }
  // An empty list can never be colored.
  for (int v = 0; v < g.order(); ++v) {
    if (f[v] > 0) continue;
    ListAssignment w = fill_lists(f);
    verdict.witness = w;
    return verdict;
  }
  // Peel vertices that can always be colored last.
  VertexSet keep = g.vertices();
  for (bool changed = true; changed;) {
    changed = false;
    for (VertexSet t = keep; t; t &= t - 1) {
      const int v = lowest(t);
      if (f[v] > g.degree_in(v, keep)) {
        keep &= ~singleton(v);
        changed = true;
      }
    }
  }
  verdict.choosable = true;
  // Components are independent: G is f-choosable iff each component is.
  for (VertexSet comp : g.components(keep)) {
    const Graph h = induced(g, comp);
    const auto index = members(comp);
    std::vector<int> fh;
    for (int v : index) fh.push_back(f[v]);
    ChooseOptions opt = options;
    opt.exhaustive = true;  // after peeling every f(v) <= d(v) < |H|
    if (options.pot_cap <= 0) opt.pot_cap = h.order() - 1;
    const int cap = resolve_cap(h, fh, opt);
    verdict.pot_cap = std::max(verdict.pot_cap, cap);
    auto parts = run_partitioned(h, fh, cap, Engine::Mode::first_bad, -1, opt);
    const auto stats = merge(parts);
    verdict.stats.nodes += stats.nodes;
    verdict.stats.assignments += stats.assignments;
    verdict.stats.prunes += stats.prunes;
    for (auto& p : parts) {
      if (p.found.empty()) continue;
      // Extend the bad lists of this component to all of G.
      ListAssignment w = fill_lists(f);
      for (std::size_t i = 0; i < index.size(); ++i) w.lists[index[i]] = p.found.front().lists[i];
      if (is_good(g, w)) throw std::logic_error("internal error: witness failed re-verification");
      verdict.choosable = false;
      verdict.witness = w;
      return verdict;
    }
  }
  return verdict;
}

Verdict is_f_choosable(const Graph& g, const FSpec& f, const ChooseOptions& options) {
  return is_f_choosable(g, f.resolve(g), options);
}

Verdict is_d1_choosable(const Graph& g, const ChooseOptions& options) { return is_f_choosable(g, FSpec::d1(), options); }
Verdict is_d0_choosable(const Graph& g, const ChooseOptions& options) { return is_f_choosable(g, FSpec::d0(), options); }

std::vector<ListAssignment> minimal_bad_assignments(const Graph& g, const std::vector<int>& f,
                                                    const ChooseOptions& options) {
  const int cap = resolve_cap(g, f, options);
  for (int p = 0; p <= cap; ++p) {
    auto parts = run_partitioned(g, f, cap, Engine::Mode::collect_bad, p, options);
    std::vector<ListAssignment> out;
    for (auto& part : parts)
      for (auto& l : part.found) out.push_back(std::move(l));
    if (!out.empty()) {
      for (const auto& l : out)
        if (is_good(g, l)) throw std::logic_error("internal error: minimal bad assignment is good");
      return out;
    }
  }
  throw InvalidArgument("graph is f-choosable within the pot cap; no bad assignment exists");
}

std::vector<ListAssignment> minimal_bad_assignments(const Graph& g, const FSpec& f, const ChooseOptions& options) {
  return minimal_bad_assignments(g, f.resolve(g), options);
}

std::vector<ListAssignment> bad_assignments(const Graph& g, const std::vector<int>& f, const ChooseOptions& options) {
  const int cap = resolve_cap(g, f, options);
  auto parts = run_partitioned(g, f, cap, Engine::Mode::collect_bad, -1, options);
  std::vector<ListAssignment> out;
  for (auto& part : parts)
    for (auto& l : part.found) out.push_back(std::move(l));
  return out;
}

int list_chromatic_number(const Graph& g, const ChooseOptions& options) {
  if (g.order() == 0) return 0;
  for (int k = std::max(1, clique_number(g));; ++k) {
    ChooseOptions opt = options;
    opt.exhaustive = true;
    if (is_f_choosable(g, FSpec::constant(k), opt).choosable) return k;
  }
}

}  // namespace clawlab
