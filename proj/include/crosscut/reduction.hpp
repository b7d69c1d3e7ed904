#pragma once

#include <string>
#include <vector>

#include "crosscut/homology.hpp"
#include "crosscut/poset.hpp"

namespace crosscut {

// Beat point: the strict up-set has a minimum (up-beat) or the strict
// down-set has a maximum (down-beat). Removal is a strong deformation
// retraction of the finite space.
ElementSet beat_points(const FinitePoset& p);

// Weak point: the strict up-set or the strict down-set is contractible.
// Every beat point is weak; removal preserves weak homotopy type.
ElementSet weak_points(const FinitePoset& p);

enum class RemovalOrder { ascending, descending };

// Core: remove one beat point at a time (first eligible id in the given
// order, rescanning after every removal) until none remain. The core is
// unique up to isomorphism, which the suite checks by comparing orders.
struct CoreResult {
  InducedPoset core;
  // retraction[x] = ambient id of the image of x in the core; identity on
  // core elements; monotone as a map P -> core.
  std::vector<int> retraction;
};
CoreResult core_with_retraction(const FinitePoset& p,
                                RemovalOrder order = RemovalOrder::ascending);
FinitePoset core(const FinitePoset& p, RemovalOrder order = RemovalOrder::ascending);

// Dismantles to a single point?
bool is_contractible(const FinitePoset& p);

enum class Verdict { yes, no, unknown };
const char* verdict_name(Verdict v);

struct Certificate {
  Verdict verdict = Verdict::unknown;
  std::vector<std::string> trail;  // removal steps, then the closing reason
};

// Three-valued weak-contractibility check: strip weak points until stuck;
// a single point certifies yes; otherwise non-trivial reduced homology of the
// remaining order complex certifies no; anything else is unknown.
Certificate is_weakly_contractible(const FinitePoset& p,
                                   std::size_t cap = kDefaultSimplexCap);

}  // namespace crosscut
