#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "clawlab/graph.hpp"
#include "clawlab/solvers.hpp"

namespace clawlab {

/// Color set over the pot 0..31.
using ColorSet = std::uint32_t;

/// Per-vertex color lists. The pot is the union of all lists.
struct ListAssignment {
  std::vector<ColorSet> lists;

  int order() const { return static_cast<int>(lists.size()); }
  ColorSet pot() const;
  int pot_size() const { return popcount(pot()); }
  /// Union of the lists of the vertices in s.
  ColorSet pot_of(VertexSet s) const;
  /// Vertices whose list meets the color set s (the vertex set of G_S).
  VertexSet vertices_meeting(ColorSet s) const;

  /// Lines "v: c1 c2 c3".
  std::string to_string() const;
  static ListAssignment parse(std::string_view text);

  friend bool operator==(const ListAssignment&, const ListAssignment&) = default;
  friend auto operator<=>(const ListAssignment&, const ListAssignment&) = default;
};

/// Relabel colors so that they first appear in ascending order when the lists are
/// read in vertex order; ties inside one list are broken by the later vertices'
/// membership. Two assignments are color-permutation equivalent iff their
/// canonical forms are equal.
ListAssignment canonical_form(const ListAssignment& l);

/// Required list sizes: a base rule plus per-vertex overrides.
class FSpec {
 public:
  enum class Base { d0, d1, constant, explicit_sizes };

  static FSpec d0() { return FSpec(Base::d0); }
  static FSpec d1() { return FSpec(Base::d1); }
  static FSpec constant(int k);
  static FSpec explicit_sizes(std::vector<int> sizes);

  /// f(v) := size for vertex v.
  FSpec& set(int v, int size);
  /// f(v) := d(v) for vertex v (a "low" vertex).
  FSpec& low(int v);

  Base base() const { return base_; }
  /// Resolved f over g; negative values clamp to zero.
  std::vector<int> resolve(const Graph& g) const;

  /// "d1", "d0", "k=4", "f=3,2,2" or any of those followed by "low=2,5".
  std::string to_string() const;
  static FSpec parse(std::string_view text);

 private:
  explicit FSpec(Base b) : base_(b) {}

  Base base_;
  int k_ = 0;
  std::vector<int> sizes_;
  std::map<int, int> overrides_;  // value -1 means "degree"
};

/// A proper coloring with c(v) in L(v) for every v, or nullopt. Backtracking picks the
/// uncolored vertex with the fewest remaining options, ties by index.
std::optional<Coloring> color_from_lists(const Graph& g, const ListAssignment& l);
bool is_good(const Graph& g, const ListAssignment& l);

struct SearchStats {
  std::uint64_t nodes = 0;        ///< partial assignments visited
  std::uint64_t assignments = 0;  ///< complete assignments decided
  std::uint64_t prunes = 0;       ///< subtrees certified good without expansion
};

struct ChooseOptions {
  /// Largest pot considered. Zero selects the default |G| - 1 (Small Pot bound).
  int pot_cap = 0;
  /// Allows f(v) >= |G|; the default cap then becomes sum f(v).
  bool exhaustive = false;
  int workers = 1;
  /// Node budget across the search (0 = unlimited); BudgetExceeded when exceeded.
  std::uint64_t max_nodes = 0;
  /// is_f_choosable only: peel f(v) > d(v) vertices and split components first.
  bool reduce = true;
};

/// Streams every f-assignment with |Pot| <= cap, one per color-permutation class,
/// in canonical form and canonical order. The visitor returns false to stop.
/// Throws InvalidArgument when some f(v) >= |G| and options.exhaustive is false.
SearchStats enumerate_assignments(const Graph& g, const std::vector<int>& f, const ChooseOptions& options,
                                  const std::function<bool(const ListAssignment&)>& visit);
SearchStats enumerate_assignments(const Graph& g, const FSpec& f, const ChooseOptions& options,
                                  const std::function<bool(const ListAssignment&)>& visit);

struct Verdict {
  bool choosable = false;
  /// A bad f-assignment (re-verified by color_from_lists) when not choosable.
  std::optional<ListAssignment> witness;
  SearchStats stats;
  int pot_cap = 0;
};

/// Exact f-choosability. Vertices with f(v) > d(v) are peeled first (they can always
/// be colored last), which keeps the Small Pot cap sound for what remains.
Verdict is_f_choosable(const Graph& g, const std::vector<int>& f, const ChooseOptions& options = {});
Verdict is_f_choosable(const Graph& g, const FSpec& f, const ChooseOptions& options = {});
Verdict is_d1_choosable(const Graph& g, const ChooseOptions& options = {});
Verdict is_d0_choosable(const Graph& g, const ChooseOptions& options = {});

/// All bad f-assignments (canonical) whose pot has the minimum size among bad ones,
/// searching pots up to the cap. Throws InvalidArgument if G is f-choosable.
std::vector<ListAssignment> minimal_bad_assignments(const Graph& g, const std::vector<int>& f,
                                                    const ChooseOptions& options = {});
std::vector<ListAssignment> minimal_bad_assignments(const Graph& g, const FSpec& f, const ChooseOptions& options = {});

/// Every bad f-assignment (canonical) with pot size up to the cap, in canonical order.
std::vector<ListAssignment> bad_assignments(const Graph& g, const std::vector<int>& f, const ChooseOptions& options = {});

/// Least k such that G is k-choosable.
int list_chromatic_number(const Graph& g, const ChooseOptions& options = {});

}  // namespace clawlab
