#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "crosscut/complex.hpp"
#include "crosscut/poset.hpp"
#include "crosscut/stars.hpp"

namespace crosscut {

inline constexpr std::size_t kDefaultCarrierGuard = 100000;

// The crosscut poset of (P, X): connected components of the non-empty star
// intersections st(A), A a non-empty subset of X, ordered by inclusion.
// carriers[i] is the component as a subset of P; generators[i] is one A with
// carriers[i] a component of st(A). Base labels are "{...}" carrier strings.
struct CrosscutPoset {
  FinitePoset base;
  std::vector<ElementSet> carriers;
  std::vector<ElementSet> generators;

  std::optional<int> carrier_id(const ElementSet& c) const;
};

// Computes the family {st(A)} as the pairwise-intersection closure of the
// single-element stars, discards the empty set, splits into components and
// orders by inclusion. Guard bounds the number of distinct sets handled.
CrosscutPoset crosscut_poset(const FinitePoset& p, const ElementSet& x,
                             std::size_t guard = kDefaultCarrierGuard);

struct MxlCheck {
  bool ok = false;
  // Carrier in the symmetric difference when the characterization fails.
  std::optional<ElementSet> counterexample;
};

// For an antichain X: are the maximal carriers exactly the stars st(a), a in
// X? Throws hypothesis_violated when X is not an antichain.
MxlCheck check_mxl_characterization(const FinitePoset& p, const ElementSet& x);

// Minimum of Gamma_B = {C in Gamma : B ⊆ C} for connected non-empty B: the
// component of st(I_X(B)) containing B. Verified minimal by scanning Gamma_B.
// Throws not_connected / empty_gamma_b.
ElementSet min_component_over(const FinitePoset& p, const ElementSet& x, const ElementSet& b);

// nu(sigma) = st(sigma), a carrier when X is a coherent cutset and sigma a
// non-empty astral subset of X. Throws hypothesis_violated otherwise.
ElementSet nu(const FinitePoset& p, const ElementSet& x, const ElementSet& sigma,
              int guard = kDefaultCoherenceGuard);

// iota(C) = I_X(C) for a carrier C; the returned set is a non-empty astral
// subset of X. Membership of C in Gamma is verified. Throws
// hypothesis_violated.
ElementSet iota(const FinitePoset& p, const ElementSet& x, const ElementSet& carrier);

struct RetractReport {
  bool ok = false;
  int simplex_count = 0;
  int carrier_count = 0;
  std::vector<std::string> violations;
};

// Checks that nu and iota define order-preserving maps between the simplex
// poset of the crosscut complex and the opposite of the crosscut poset, with
// nu ∘ iota = id and iota ∘ nu ≥ id. Requires a coherent cutset.
RetractReport verify_retract(const FinitePoset& p, const ElementSet& x,
                             int guard = kDefaultCoherenceGuard,
                             std::size_t simplex_cap = kDefaultSimplexCap);

// P0 = {max C : C in Gamma(P, mxl(P))} with the comparative retraction
// r(x) = max of the carrier the component of st(I({x})) around x. All stated
// properties (r monotone, r∘i = id, i∘r ≥ id, Gamma ≅ P0 via C ↦ max C) are
// asserted during construction. Throws no_maximum naming the first carrier
// without a maximum.
struct P0Retraction {
  CrosscutPoset gamma;
  InducedPoset p0;                // subposet of P on the carrier maxima
  MonotoneMap retraction;         // P -> p0.poset ids
  std::vector<int> carrier_to_p0; // gamma id -> p0.poset id (the isomorphism)
};
P0Retraction p0_retraction(const FinitePoset& p, std::size_t guard = kDefaultCarrierGuard);

// P_M: all joins of non-empty subsets of mnl(P), as an induced subposet.
// When mnl(P) is a coherent cutset the result is cross-checked against
// {min C : C in Gamma(P, mnl(P))}. Guard on |mnl(P)|.
struct PMResult {
  InducedPoset pm;
  bool cross_checked = false;  // Gamma path compared
};
PMResult p_m(const FinitePoset& p, int guard = kDefaultCoherenceGuard);

// L_K: facets of K closed under pairwise non-empty intersection, ordered by
// inclusion. sets[i] is the vertex set of element i.
struct IntersectionPoset {
  FinitePoset base;
  std::vector<ElementSet> sets;
};
IntersectionPoset l_k(const SimplicialComplex& k);

}  // namespace crosscut
