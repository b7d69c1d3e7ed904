#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "crosscut/element_set.hpp"
#include "crosscut/error.hpp"

namespace crosscut {

// Finite poset over dense element ids 0..n-1 with string labels. Stores the
// full reflexive order relation in both directions plus the Hasse covers
// (transitive reduction). Immutable after construction; all iteration orders
// are ascending-id and therefore deterministic.
class FinitePoset {
 public:
  FinitePoset() = default;

  // Builds from labels and strict relations a < b given as label pairs.
  // Computes the reflexive-transitive closure. Throws: duplicate_label,
  // unknown_label, cycle_detected.
  static FinitePoset from_relations(
      const std::vector<std::string>& labels,
      const std::vector<std::pair<std::string, std::string>>& relations);

  // Builds from a full reflexive leq relation, up_rows[x] = {y : x <= y}.
  // With validate=true checks the partial-order axioms; internal callers that
  // construct inclusion orders pass false.
  static FinitePoset from_leq(std::vector<std::string> labels,
                              std::vector<ElementSet> up_rows, bool validate = true);

  int size() const { return n_; }
  const std::string& label(int x) const { return labels_[x]; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<int> id_of(std::string_view label) const;

  bool leq(int x, int y) const { return up_[x].test(y); }
  bool less(int x, int y) const { return x != y && leq(x, y); }
  bool comparable(int x, int y) const { return leq(x, y) || leq(y, x); }

  // {y : x <= y} and {y : y <= x}, both containing x.
  const ElementSet& up_set(int x) const { return up_[x]; }
  const ElementSet& down_set(int x) const { return down_[x]; }
  ElementSet strict_up(int x) const;
  ElementSet strict_down(int x) const;

  // Hasse covers (a, b) with a covered by b, sorted by (a, b).
  const std::vector<std::pair<int, int>>& covers() const { return covers_; }

  ElementSet all() const { return ElementSet::full(n_); }

 private:
  int n_ = 0;
  std::vector<std::string> labels_;
  std::vector<ElementSet> up_;
  std::vector<ElementSet> down_;
  std::vector<std::pair<int, int>> covers_;
};

FinitePoset opposite(const FinitePoset& p);

// Maximal / minimal elements.
ElementSet mxl(const FinitePoset& p);
ElementSet mnl(const FinitePoset& p);

// Connected components of the induced subposet on s (comparability graph),
// ordered by smallest member.
std::vector<ElementSet> connected_components(const FinitePoset& p, const ElementSet& s);

bool is_chain(const FinitePoset& p, const ElementSet& s);
bool is_antichain(const FinitePoset& p, const ElementSet& s);

// All maximal chains, each as an element set, in lexicographic DFS order.
std::vector<ElementSet> maximal_chains(const FinitePoset& p);

// A subset is bounded when it has a common lower bound or a common upper
// bound. Throws empty_subset on the empty set.
bool is_bounded(const FinitePoset& p, const ElementSet& s);
std::optional<int> meet(const FinitePoset& p, const ElementSet& s);
std::optional<int> join(const FinitePoset& p, const ElementSet& s);

// Order isomorphism search (backtracking with invariant pruning). Returns the
// element mapping p-id -> q-id, or nullopt. Capped at 64 elements.
std::optional<std::vector<int>> is_isomorphic(const FinitePoset& p, const FinitePoset& q);

// Deterministic linear extension: Kahn's algorithm taking the least available
// id at every step.
std::vector<int> linear_extension(const FinitePoset& p);

// Induced subposet together with the map back to ambient ids.
struct InducedPoset {
  FinitePoset poset;
  std::vector<int> ambient_ids;  // new id -> ambient id
};
InducedPoset induced(const FinitePoset& p, const ElementSet& s);

// Map between posets, values[x] = image of x. Monotonicity is checked by
// is_order_preserving, not enforced by the type.
struct MonotoneMap {
  std::vector<int> values;
};

bool is_order_preserving(const FinitePoset& src, const FinitePoset& dst, const MonotoneMap& f);

}  // namespace crosscut
