#pragma once

#include <optional>
#include <string>
#include <vector>

#include "crosscut/complex.hpp"
#include "crosscut/crosscut_poset.hpp"
#include "crosscut/homology.hpp"
#include "crosscut/poset.hpp"
#include "crosscut/reduction.hpp"

namespace crosscut {

inline constexpr int kDefaultFppGuard = 12;

// Iterates f from a comparable starting point (a ≤ f(a) ascends, a ≥ f(a)
// descends) until it stabilizes; finiteness makes the monotone iteration
// terminate. Throws hypothesis_violated when f is not monotone or a and f(a)
// are incomparable.
int abian_brown_fixed_point(const FinitePoset& p, const MonotoneMap& f, int a);

struct FppOptions {
  int guard = kDefaultFppGuard;
  bool core_preprocess = true;
};

struct FppResult {
  bool has_fpp = false;
  // Fixed-point-free monotone endomap when has_fpp is false; always
  // revalidated independently of the search.
  std::optional<MonotoneMap> witness;
};

// Exhaustive backtracking over monotone endomaps with f(x) != x forced,
// assigning along a linear extension with bitset domain propagation. With
// core_preprocess the search runs on the core and lifts the witness through
// the retraction; verdicts agree either way. Guard on |P|.
FppResult has_fpp(const FinitePoset& p, const FppOptions& opt = {});

// Fixed simplex property of K = fixed point property of its face poset.
FppResult has_fsp(const SimplicialComplex& k, const FppOptions& opt = {},
                  std::size_t cap = kDefaultFacePosetCap);

struct TransferReport {
  bool ok = false;
  bool fpp_p = false;
  bool fpp_gamma = false;
  std::optional<MonotoneMap> witness_p;
  std::optional<MonotoneMap> witness_gamma;
};

// P has the fpp iff Gamma(P, mxl(P)) has it, provided every carrier has a
// maximum. Both sides are computed exhaustively and compared. Throws
// no_maximum when the hypothesis fails.
TransferReport verify_fpp_transfer(const FinitePoset& p, const FppOptions& opt = {});

struct FspReport {
  bool ok = false;
  bool fsp = false;
  bool fpp_lk = false;
};

// K has the fsp iff L_K has the fpp; both sides computed exhaustively.
FspReport verify_fsp_equivalence(const SimplicialComplex& k, const FppOptions& opt = {},
                                 std::size_t cap = kDefaultFacePosetCap);

struct PmReport {
  bool ok = false;
  Verdict pm = Verdict::unknown;
  Verdict p = Verdict::unknown;
};

// When mnl(P) is a coherent cutset and P_M certifies weakly contractible,
// P must not certify the opposite. Throws hypothesis_violated when mnl(P) is
// not a coherent cutset.
PmReport verify_pm_contractibility(const FinitePoset& p, int guard = kDefaultCoherenceGuard,
                                   std::size_t cap = kDefaultSimplexCap);

struct MainTheoremReport {
  bool ok = false;
  bool inconclusive = false;
  std::vector<Certificate> carrier_certificates;
  HomologySummary h_p;        // reduced homology of K(P)
  HomologySummary h_gamma;    // reduced homology of K(Gamma(P, X))
  std::string method_note;
};

// Checks the computable consequences of the weak equivalence between P and
// its crosscut poset: X must be a cutset, every carrier must certify weakly
// contractible (a "no" certificate throws hypothesis_violated, an "unknown"
// yields inconclusive), and the reduced homology of the two order complexes
// must agree in every dimension.
MainTheoremReport verify_main_theorem(const FinitePoset& p, const ElementSet& x,
                                      std::size_t guard = kDefaultCarrierGuard,
                                      std::size_t cap = kDefaultSimplexCap);

}  // namespace crosscut
