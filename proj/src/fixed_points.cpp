#include "crosscut/fixed_points.hpp"

#include <algorithm>

namespace crosscut {

int abian_brown_fixed_point(const FinitePoset& p, const MonotoneMap& f, int a) {
  if (!is_order_preserving(p, p, f)) fail(Errc::hypothesis_violated, "map is not monotone");
  if (a < 0 || a >= p.size()) fail(Errc::hypothesis_violated, "start element out of range");
  const bool ascend = p.leq(a, f.values[static_cast<std::size_t>(a)]);
  const bool descend = p.leq(f.values[static_cast<std::size_t>(a)], a);
  if (!ascend && !descend)
    fail(Errc::hypothesis_violated, "start element incomparable with its image");

  int x = a;
  for (int steps = 0; steps <= p.size(); ++steps) {
    int y = f.values[static_cast<std::size_t>(x)];
    if (y == x) return x;
    x = y;
  }
  throw std::logic_error("abian_brown_fixed_point: iteration failed to stabilize");
}

namespace {

// Backtracking search for a fixed-point-free monotone endomap. The next
// element is always the one with the fewest remaining images (ties broken
// towards more unassigned comparables), and assigning f(x)=v narrows every
// unassigned comparable z: images of z above x stay in up(v), below x in
// down(v). Once all elements are assigned, every comparable pair was filtered
// by whichever endpoint was assigned first, so the map is monotone.
std::optional<MonotoneMap> find_fpf_map(const FinitePoset& q) {
  const int n = q.size();

  std::vector<ElementSet> domain(static_cast<std::size_t>(n), ElementSet(n));
  for (int z = 0; z < n; ++z) {
    domain[static_cast<std::size_t>(z)] = ElementSet::full(n);
    domain[static_cast<std::size_t>(z)].reset(z);
  }

  std::vector<int> assign(static_cast<std::size_t>(n), -1);
  // Filtered domains per depth, for backtracking.
  std::vector<std::vector<std::pair<int, ElementSet>>> trail(static_cast<std::size_t>(n));

  auto dfs = [&](auto&& self, int k) -> bool {
    if (k == n) return true;

    int x = -1, best_dom = n + 1, best_deg = -1;
    for (int z = 0; z < n; ++z) {
      if (assign[static_cast<std::size_t>(z)] >= 0) continue;
      int d = domain[static_cast<std::size_t>(z)].count();
      int deg = 0;
      for (int w = 0; w < n; ++w)
        if (w != z && assign[static_cast<std::size_t>(w)] < 0 && q.comparable(z, w)) ++deg;
      if (d < best_dom || (d == best_dom && deg > best_deg)) {
        best_dom = d;
        best_deg = deg;
        x = z;
      }
    }

    ElementSet cands = domain[static_cast<std::size_t>(x)];
    auto& undo = trail[static_cast<std::size_t>(k)];
    for (int v = cands.first(); v >= 0; v = cands.next(v)) {
      bool feasible = true;
      undo.clear();
      for (int z = 0; z < n && feasible; ++z) {
        if (z == x || assign[static_cast<std::size_t>(z)] >= 0) continue;
        ElementSet narrowed = domain[static_cast<std::size_t>(z)];
        if (q.less(x, z))
          narrowed &= q.up_set(v);
        else if (q.less(z, x))
          narrowed &= q.down_set(v);
        else
          continue;
        if (narrowed == domain[static_cast<std::size_t>(z)]) continue;
        undo.push_back({z, domain[static_cast<std::size_t>(z)]});
        domain[static_cast<std::size_t>(z)] = narrowed;
        if (narrowed.empty()) feasible = false;
      }
      if (feasible) {
        assign[static_cast<std::size_t>(x)] = v;
        if (self(self, k + 1)) return true;
        assign[static_cast<std::size_t>(x)] = -1;
      }
      for (auto& [z, old] : undo) domain[static_cast<std::size_t>(z)] = old;
      undo.clear();
    }
    return false;
  };

  if (!dfs(dfs, 0)) return std::nullopt;
  return MonotoneMap{assign};
}

void validate_fpf_witness(const FinitePoset& p, const MonotoneMap& f) {
  if (!is_order_preserving(p, p, f))
    throw std::logic_error("fpp witness failed monotonicity revalidation");
  for (int x = 0; x < p.size(); ++x)
    if (f.values[static_cast<std::size_t>(x)] == x)
      throw std::logic_error("fpp witness has a fixed point");
}

std::optional<int> maximum_of(const FinitePoset& p, const ElementSet& s) {
  for (int m = s.first(); m >= 0; m = s.next(m))
    if (s.is_subset_of(p.down_set(m))) return m;
  return std::nullopt;
}

}  // namespace

FppResult has_fpp(const FinitePoset& p, const FppOptions& opt) {
  if (p.size() > opt.guard)
    fail(Errc::guard_exceeded, "fixed-point search over " + std::to_string(p.size()) +
                                   " elements exceeds guard " + std::to_string(opt.guard));

  if (!opt.core_preprocess) {
    auto w = find_fpf_map(p);
    if (!w) return {true, std::nullopt};
    validate_fpf_witness(p, *w);
    return {false, w};
  }

  // fpp transfers across beat-point removals in both directions, so the
  // verdict on the core is the verdict on P; a witness lifts through the
  // retraction: g fixed-point-free forces i∘g∘r fixed-point-free.
  CoreResult cr = core_with_retraction(p);
  const FinitePoset& q = cr.core.poset;
  auto w = find_fpf_map(q);
  if (!w) return {true, std::nullopt};

  std::vector<int> to_core(static_cast<std::size_t>(p.size()), -1);
  for (std::size_t i = 0; i < cr.core.ambient_ids.size(); ++i)
    to_core[static_cast<std::size_t>(cr.core.ambient_ids[i])] = static_cast<int>(i);

  MonotoneMap f;
  f.values.resize(static_cast<std::size_t>(p.size()));
  for (int x = 0; x < p.size(); ++x) {
    int rq = to_core[static_cast<std::size_t>(cr.retraction[static_cast<std::size_t>(x)])];
    f.values[static_cast<std::size_t>(x)] =
        cr.core.ambient_ids[static_cast<std::size_t>(w->values[static_cast<std::size_t>(rq)])];
  }
  validate_fpf_witness(p, f);
  return {false, f};
}

FppResult has_fsp(const SimplicialComplex& k, const FppOptions& opt, std::size_t cap) {
  return has_fpp(face_poset(k, cap).poset, opt);
}

TransferReport verify_fpp_transfer(const FinitePoset& p, const FppOptions& opt) {
  ElementSet tops = mxl(p);
  if (tops.empty()) fail(Errc::hypothesis_violated, "poset has no maximal elements");
  CrosscutPoset g = crosscut_poset(p, tops);
  for (std::size_t i = 0; i < g.carriers.size(); ++i)
    if (!maximum_of(p, g.carriers[i]))
      fail(Errc::no_maximum,
           "carrier " + g.base.label(static_cast<int>(i)) + " has no maximum");

  TransferReport rep;
  FppResult a = has_fpp(p, opt);
  FppResult b = has_fpp(g.base, opt);
  rep.fpp_p = a.has_fpp;
  rep.fpp_gamma = b.has_fpp;
  rep.witness_p = a.witness;
  rep.witness_gamma = b.witness;
  rep.ok = (a.has_fpp == b.has_fpp);
  return rep;
}

FspReport verify_fsp_equivalence(const SimplicialComplex& k, const FppOptions& opt,
                                 std::size_t cap) {
  FspReport rep;
  rep.fsp = has_fsp(k, opt, cap).has_fpp;
  rep.fpp_lk = has_fpp(l_k(k).base, opt).has_fpp;
  rep.ok = (rep.fsp == rep.fpp_lk);
  return rep;
}

PmReport verify_pm_contractibility(const FinitePoset& p, int guard, std::size_t cap) {
  ElementSet bottoms = mnl(p);
  if (bottoms.empty() || !is_coherent_cutset(p, bottoms, guard).ok)
    fail(Errc::hypothesis_violated, "mnl(P) is not a coherent cutset");

  PmReport rep;
  PMResult pm = p_m(p, guard);
  rep.pm = is_weakly_contractible(pm.pm.poset, cap).verdict;
  rep.p = is_weakly_contractible(p, cap).verdict;
  rep.ok = !(rep.pm == Verdict::yes && rep.p == Verdict::no);
  return rep;
}

MainTheoremReport verify_main_theorem(const FinitePoset& p, const ElementSet& x,
                                      std::size_t guard, std::size_t cap) {
  CutsetReport cut = is_cutset(p, x);
  if (!cut.ok) fail(Errc::hypothesis_violated, "X is not a cutset");

  MainTheoremReport rep;
  rep.method_note =
      "weak homotopy equivalence is checked through computable consequences: every carrier "
      "certifies weakly contractible and the order complexes of P and of the crosscut poset "
      "have equal reduced integer homology in every dimension; no continuous map is "
      "constructed and simple-homotopy claims are replaced by these checks";

  CrosscutPoset g = crosscut_poset(p, x, guard);
  for (std::size_t i = 0; i < g.carriers.size(); ++i) {
    Certificate cert = is_weakly_contractible(induced(p, g.carriers[i]).poset, cap);
    if (cert.verdict == Verdict::no)
      fail(Errc::hypothesis_violated,
           "carrier " + g.base.label(static_cast<int>(i)) + " is not weakly contractible");
    if (cert.verdict == Verdict::unknown) rep.inconclusive = true;
    rep.carrier_certificates.push_back(std::move(cert));
  }

  rep.h_p = homology(order_complex(p), true, cap);
  rep.h_gamma = homology(order_complex(g.base), true, cap);
  rep.ok = !rep.inconclusive && same_homology(rep.h_p, rep.h_gamma);
  return rep;
}

}  // namespace crosscut
