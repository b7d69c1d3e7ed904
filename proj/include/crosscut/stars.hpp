#pragma once

#include <optional>

#include "crosscut/poset.hpp"

namespace crosscut {

inline constexpr int kDefaultCoherenceGuard = 20;

// st(a) = all elements comparable to a (including a).
ElementSet star(const FinitePoset& p, int a);

// st(A) = intersection of the member stars; equivalently {y : A subseteq st(y)}.
// Throws empty_subset on empty A.
ElementSet star_set(const FinitePoset& p, const ElementSet& a);

// A is astral when st(A) is non-empty.
bool is_astral(const FinitePoset& p, const ElementSet& a);

// I_X(B) = {x in X : B subseteq st(x)}. An empty B yields X.
ElementSet index_set(const FinitePoset& p, const ElementSet& x, const ElementSet& b);

struct CutsetReport {
  bool ok = false;
  // On failure: a chain no member of X completes (empty when X itself is empty).
  std::optional<ElementSet> witness;
};

// X is a cutset when every maximal chain sigma has some a in X with
// sigma ∪ {a} a chain, i.e. sigma ⊆ st(a). A non-empty poset forces X
// non-empty (the empty chain already needs a witness).
CutsetReport is_cutset(const FinitePoset& p, const ElementSet& x);

struct CoherenceReport {
  bool ok = false;
  bool cutset_ok = false;
  // Failing chain when !cutset_ok, otherwise a bounded subset of X with
  // neither meet nor join.
  std::optional<ElementSet> witness;
};

// Coherent cutset: a cutset such that every non-empty bounded subset of X has
// a meet or a join. Enumeration covers subsets of X ∩ up(y) and X ∩ down(y)
// for every y, which are exactly the bounded subsets. Guard on |X|.
CoherenceReport is_coherent_cutset(const FinitePoset& p, const ElementSet& x,
                                   int guard = kDefaultCoherenceGuard);

// Crosscut: an antichain that is a coherent cutset.
bool is_crosscut(const FinitePoset& p, const ElementSet& x, int guard = kDefaultCoherenceGuard);

// For a coherent cutset X and astral sigma ⊆ X, produces z with
// z ∈ st(sigma) and st(sigma) ⊆ st(z); in particular st(sigma) is connected.
// Deterministic choice: bound y = least-id element of st(sigma); split sigma
// at y; prefer the part below y when non-empty; take its meet when it exists,
// its join otherwise. The result is checked against a direct scan before
// returning. Throws hypothesis_violated when preconditions fail.
int astral_star_center(const FinitePoset& p, const ElementSet& x, const ElementSet& sigma,
                       int guard = kDefaultCoherenceGuard);

}  // namespace crosscut
