#include "crosscut/crosscut_poset.hpp"

#include <algorithm>
#include <unordered_map>

namespace crosscut {

std::optional<int> CrosscutPoset::carrier_id(const ElementSet& c) const {
  for (std::size_t i = 0; i < carriers.size(); ++i)
    if (carriers[i] == c) return static_cast<int>(i);
  return std::nullopt;
}

namespace {

FinitePoset inclusion_order(const std::vector<ElementSet>& sets,
                            const std::vector<std::string>& ambient_labels) {
  const int n = static_cast<int>(sets.size());
  std::vector<std::string> labels(n);
  std::vector<ElementSet> up(n, ElementSet(n));
  for (int i = 0; i < n; ++i) {
    labels[i] = set_label(sets[i], ambient_labels);
    for (int j = 0; j < n; ++j)
      if (sets[i].is_subset_of(sets[j])) up[i].set(j);
  }
  return FinitePoset::from_leq(std::move(labels), std::move(up), false);
}

void sort_canonical(std::vector<ElementSet>& sets) {
  std::sort(sets.begin(), sets.end(),
            [](const ElementSet& a, const ElementSet& b) { return ElementSet::compare(a, b) < 0; });
}

}  // namespace

CrosscutPoset crosscut_poset(const FinitePoset& p, const ElementSet& x, std::size_t guard) {
  if (x.empty()) fail(Errc::empty_subset, "crosscut poset needs a non-empty X");

  // Pairwise-intersection closure of the generating stars; gen[i] tracks one
  // A with family[i] = st(A) (st(A ∪ B) = st(A) ∩ st(B)).
  std::vector<ElementSet> family;
  std::vector<ElementSet> gen;
  std::unordered_map<std::string, std::size_t> index;

  auto add = [&](const ElementSet& s, const ElementSet& g) -> bool {
    auto [it, fresh] = index.emplace(s.key(), family.size());
    (void)it;
    if (!fresh) return false;
    family.push_back(s);
    gen.push_back(g);
    if (family.size() > guard)
      fail(Errc::guard_exceeded, "star-intersection family exceeds guard " + std::to_string(guard));
    return true;
  };

  for (int a = x.first(); a >= 0; a = x.next(a)) {
    ElementSet s = star(p, a);
    ElementSet g(p.size());
    g.set(a);
    if (!s.empty()) add(s, g);  // stars are never empty (a ∈ st(a))
  }

  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      ElementSet s = family[i] & family[j];
      if (s.empty()) continue;
      add(s, gen[i] | gen[j]);
    }
  }

  // Components, deduplicated; keep the first generator that produced each.
  std::vector<ElementSet> carriers;
  std::vector<ElementSet> carrier_gen;
  std::unordered_map<std::string, std::size_t> cindex;
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (const ElementSet& comp : connected_components(p, family[i])) {
      if (cindex.emplace(comp.key(), carriers.size()).second) {
        carriers.push_back(comp);
        carrier_gen.push_back(gen[i]);
        if (carriers.size() > guard)
          fail(Errc::guard_exceeded, "carrier count exceeds guard " + std::to_string(guard));
      }
    }
  }

  // Canonical carrier order, generators shuffled along.
  std::vector<int> perm(carriers.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
  std::sort(perm.begin(), perm.end(), [&](int a, int b) {
    return ElementSet::compare(carriers[a], carriers[b]) < 0;
  });
  CrosscutPoset out;
  for (int i : perm) {
    out.carriers.push_back(carriers[i]);
    out.generators.push_back(carrier_gen[i]);
  }
  out.base = inclusion_order(out.carriers, p.labels());
  return out;
}

MxlCheck check_mxl_characterization(const FinitePoset& p, const ElementSet& x) {
  if (!is_antichain(p, x))
    fail(Errc::hypothesis_violated, "X must be an antichain for the maximal-carrier law");
  CrosscutPoset g = crosscut_poset(p, x);

  std::vector<ElementSet> star_sets;
  for (int a = x.first(); a >= 0; a = x.next(a)) {
    ElementSet s = star(p, a);
    if (std::find(star_sets.begin(), star_sets.end(), s) == star_sets.end())
      star_sets.push_back(s);
  }
  sort_canonical(star_sets);

  std::vector<ElementSet> maximal;
  ElementSet top = mxl(g.base);
  for (int i = top.first(); i >= 0; i = top.next(i)) maximal.push_back(g.carriers[i]);
  sort_canonical(maximal);

  if (star_sets == maximal) return {true, std::nullopt};
  MxlCheck out;
  out.ok = false;
  for (const auto& s : star_sets)
    if (std::find(maximal.begin(), maximal.end(), s) == maximal.end()) {
      out.counterexample = s;
      return out;
    }
  for (const auto& s : maximal)
    if (std::find(star_sets.begin(), star_sets.end(), s) == star_sets.end()) {
      out.counterexample = s;
      return out;
    }
  return out;
}

namespace {

ElementSet component_around(const FinitePoset& p, const ElementSet& s, const ElementSet& b) {
  for (const ElementSet& comp : connected_components(p, s))
    if (b.is_subset_of(comp)) return comp;
  return ElementSet(p.size());
}

}  // namespace

ElementSet min_component_over(const FinitePoset& p, const ElementSet& x, const ElementSet& b) {
  if (b.empty()) fail(Errc::empty_subset, "B must be non-empty");
  if (connected_components(p, b).size() != 1) fail(Errc::not_connected, "B must be connected");

  CrosscutPoset g = crosscut_poset(p, x);
  std::vector<ElementSet> above;
  for (const auto& c : g.carriers)
    if (b.is_subset_of(c)) above.push_back(c);
  if (above.empty()) fail(Errc::empty_gamma_b, "no carrier contains B");

  ElementSet idx = index_set(p, x, b);
  ElementSet claimed = component_around(p, star_set(p, idx), b);
  for (const auto& c : above)
    if (!claimed.is_subset_of(c))
      throw std::logic_error("min_component_over: claimed minimum not below a member of Gamma_B");
  if (std::find(above.begin(), above.end(), claimed) == above.end())
    throw std::logic_error("min_component_over: claimed minimum not a member of Gamma_B");
  return claimed;
}

ElementSet nu(const FinitePoset& p, const ElementSet& x, const ElementSet& sigma, int guard) {
  if (!is_coherent_cutset(p, x, guard).ok)
    fail(Errc::hypothesis_violated, "X is not a coherent cutset");
  if (sigma.empty() || !sigma.is_subset_of(x))
    fail(Errc::hypothesis_violated, "sigma must be a non-empty subset of X");
  ElementSet st = star_set(p, sigma);
  if (st.empty()) fail(Errc::hypothesis_violated, "sigma is not astral");
  if (connected_components(p, st).size() != 1)
    throw std::logic_error("nu: st(sigma) disconnected under a coherent cutset");
  return st;
}

ElementSet iota(const FinitePoset& p, const ElementSet& x, const ElementSet& carrier) {
  if (carrier.empty()) fail(Errc::hypothesis_violated, "carrier must be non-empty");
  ElementSet idx = index_set(p, x, carrier);
  if (idx.empty()) fail(Errc::hypothesis_violated, "carrier has an empty index set; not in Gamma");
  ElementSet comp = component_around(p, star_set(p, idx), carrier);
  if (!(comp == carrier))
    fail(Errc::hypothesis_violated, "set is not a connected component of st(I_X(.)), not in Gamma");
  return idx;
}

RetractReport verify_retract(const FinitePoset& p, const ElementSet& x, int guard,
                             std::size_t simplex_cap) {
  if (!is_coherent_cutset(p, x, guard).ok)
    fail(Errc::hypothesis_violated, "X is not a coherent cutset");

  CrosscutPoset g = crosscut_poset(p, x);
  SimplicialComplex kc = crosscut_complex(p, x);
  std::vector<ElementSet> simplices = kc.all_simplices(simplex_cap);

  RetractReport rep;
  rep.simplex_count = static_cast<int>(simplices.size());
  rep.carrier_count = static_cast<int>(g.carriers.size());
  auto complain = [&](const std::string& s) { rep.violations.push_back(s); };

  // Simplices live over the X universe; translate to ambient ids.
  std::vector<int> xs = x.members();
  auto ambient = [&](const ElementSet& sigma) {
    ElementSet s(p.size());
    for (int v = sigma.first(); v >= 0; v = sigma.next(v)) s.set(xs[static_cast<std::size_t>(v)]);
    return s;
  };

  std::vector<ElementSet> amb;
  std::vector<int> nu_of;  // simplex index -> carrier id
  for (const auto& sg : simplices) {
    ElementSet sa = ambient(sg);
    amb.push_back(sa);
    ElementSet st = star_set(p, sa);
    auto cid = g.carrier_id(st);
    if (!cid) {
      complain("nu(" + set_label(sa, p.labels()) + ") is not a carrier");
      nu_of.push_back(-1);
      continue;
    }
    nu_of.push_back(*cid);
  }

  std::vector<ElementSet> iota_of;  // carrier id -> index set (ambient)
  for (const auto& c : g.carriers) iota_of.push_back(index_set(p, x, c));

  // nu order-preserving into Gamma^op: sigma ⊆ tau implies st(tau) ⊆ st(sigma).
  for (std::size_t i = 0; i < amb.size(); ++i)
    for (std::size_t j = 0; j < amb.size(); ++j)
      if (i != j && amb[i].is_subset_of(amb[j]) && nu_of[i] >= 0 && nu_of[j] >= 0 &&
          !g.carriers[static_cast<std::size_t>(nu_of[j])].is_subset_of(
              g.carriers[static_cast<std::size_t>(nu_of[i])]))
        complain("nu not order-preserving at " + set_label(amb[i], p.labels()) + " ⊆ " +
                 set_label(amb[j], p.labels()));

  // iota order-preserving from Gamma^op: C ⊆ D implies I(D) ⊆ I(C).
  for (std::size_t i = 0; i < g.carriers.size(); ++i)
    for (std::size_t j = 0; j < g.carriers.size(); ++j)
      if (i != j && g.carriers[i].is_subset_of(g.carriers[j]) &&
          !iota_of[j].is_subset_of(iota_of[i]))
        complain("iota not order-preserving at carriers " + g.base.label(static_cast<int>(i)) +
                 " ⊆ " + g.base.label(static_cast<int>(j)));

  // nu ∘ iota = id on Gamma.
  for (std::size_t i = 0; i < g.carriers.size(); ++i)
    if (!(star_set(p, iota_of[i]) == g.carriers[i]))
      complain("nu(iota(C)) != C at carrier " + g.base.label(static_cast<int>(i)));

  // iota ∘ nu ≥ id on the simplex poset.
  for (std::size_t i = 0; i < amb.size(); ++i)
    if (nu_of[i] >= 0 && !amb[i].is_subset_of(iota_of[static_cast<std::size_t>(nu_of[i])]))
      complain("iota(nu(sigma)) does not contain sigma at " + set_label(amb[i], p.labels()));

  rep.ok = rep.violations.empty();
  return rep;
}

namespace {

std::optional<int> maximum_of(const FinitePoset& p, const ElementSet& s) {
  for (int m = s.first(); m >= 0; m = s.next(m))
    if (s.is_subset_of(p.down_set(m))) return m;
  return std::nullopt;
}

std::optional<int> minimum_of(const FinitePoset& p, const ElementSet& s) {
  for (int m = s.first(); m >= 0; m = s.next(m))
    if (s.is_subset_of(p.up_set(m))) return m;
  return std::nullopt;
}

}  // namespace

P0Retraction p0_retraction(const FinitePoset& p, std::size_t guard) {
  ElementSet tops = mxl(p);
  if (tops.empty()) fail(Errc::hypothesis_violated, "poset has no maximal elements");
  CrosscutPoset g = crosscut_poset(p, tops, guard);

  ElementSet maxima(p.size());
  std::vector<int> max_of_carrier(g.carriers.size());
  for (std::size_t i = 0; i < g.carriers.size(); ++i) {
    auto m = maximum_of(p, g.carriers[i]);
    if (!m)
      fail(Errc::no_maximum,
           "carrier " + g.base.label(static_cast<int>(i)) + " has no maximum");
    max_of_carrier[i] = *m;
    maxima.set(*m);
  }

  P0Retraction out;
  out.gamma = std::move(g);
  out.p0 = induced(p, maxima);

  std::vector<int> to_p0(p.size(), -1);
  for (std::size_t i = 0; i < out.p0.ambient_ids.size(); ++i)
    to_p0[static_cast<std::size_t>(out.p0.ambient_ids[i])] = static_cast<int>(i);

  out.carrier_to_p0.resize(out.gamma.carriers.size());
  for (std::size_t i = 0; i < out.gamma.carriers.size(); ++i)
    out.carrier_to_p0[i] = to_p0[static_cast<std::size_t>(max_of_carrier[i])];

  // r(x) = max of the component of st(I({x})) containing x.
  out.retraction.values.assign(static_cast<std::size_t>(p.size()), -1);
  for (int v = 0; v < p.size(); ++v) {
    ElementSet b(p.size());
    b.set(v);
    ElementSet comp = component_around(p, star_set(p, index_set(p, tops, b)), b);
    auto m = maximum_of(p, comp);
    if (!m) fail(Errc::no_maximum, "carrier around '" + p.label(v) + "' has no maximum");
    out.retraction.values[static_cast<std::size_t>(v)] = to_p0[static_cast<std::size_t>(*m)];
  }

  // Stated properties, all asserted.
  if (!is_order_preserving(p, out.p0.poset, out.retraction))
    throw std::logic_error("p0_retraction: r is not monotone");
  for (std::size_t i = 0; i < out.p0.ambient_ids.size(); ++i)
    if (out.retraction.values[static_cast<std::size_t>(out.p0.ambient_ids[i])] !=
        static_cast<int>(i))
      throw std::logic_error("p0_retraction: r ∘ i != id");
  for (int v = 0; v < p.size(); ++v)
    if (!p.leq(v, out.p0.ambient_ids[static_cast<std::size_t>(out.retraction.values
            [static_cast<std::size_t>(v)])]))
      throw std::logic_error("p0_retraction: i ∘ r is not ≥ id");
  for (std::size_t i = 0; i < out.gamma.carriers.size(); ++i)
    for (std::size_t j = 0; j < out.gamma.carriers.size(); ++j) {
      bool carrier_leq = out.gamma.carriers[i].is_subset_of(out.gamma.carriers[j]);
      bool max_leq = out.p0.poset.leq(out.carrier_to_p0[i], out.carrier_to_p0[j]);
      if (carrier_leq != max_leq)
        throw std::logic_error("p0_retraction: C ↦ max C is not an order isomorphism");
    }
  return out;
}

PMResult p_m(const FinitePoset& p, int guard) {
  ElementSet bottoms = mnl(p);
  if (bottoms.count() > guard)
    fail(Errc::guard_exceeded, "|mnl| = " + std::to_string(bottoms.count()) +
                                   " exceeds guard " + std::to_string(guard));

  ElementSet joins(p.size());
  std::vector<int> mem = bottoms.members();
  // DFS over subsets, carrying the common-upper-bound set.
  auto rec = [&](auto&& self, std::size_t i, bool chosen, const ElementSet& upper) -> void {
    if (i == mem.size()) {
      if (!chosen) return;
      for (int m = upper.first(); m >= 0; m = upper.next(m))
        if (upper.is_subset_of(p.up_set(m))) {
          joins.set(m);
          break;
        }
      return;
    }
    self(self, i + 1, chosen, upper);
    self(self, i + 1, true, upper & p.up_set(mem[i]));
  };
  rec(rec, 0, false, ElementSet::full(p.size()));

  PMResult out{induced(p, joins), false};

  if (!bottoms.empty() && is_coherent_cutset(p, bottoms, guard).ok) {
    CrosscutPoset g = crosscut_poset(p, bottoms);
    ElementSet minima(p.size());
    for (const auto& c : g.carriers) {
      auto m = minimum_of(p, c);
      if (!m) throw std::logic_error("p_m: coherent mnl carrier without minimum");
      minima.set(*m);
    }
    if (!(minima == joins))
      throw std::logic_error("p_m: join enumeration and carrier minima disagree");
    out.cross_checked = true;
  }
  return out;
}

IntersectionPoset l_k(const SimplicialComplex& k) {
  std::vector<ElementSet> sets = k.facets();
  std::unordered_map<std::string, bool> seen;
  for (const auto& s : sets) seen.emplace(s.key(), true);
  for (std::size_t i = 0; i < sets.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) {
      ElementSet s = sets[i] & sets[j];
      if (s.empty()) continue;
      if (seen.emplace(s.key(), true).second) sets.push_back(s);
    }
  sort_canonical(sets);
  IntersectionPoset out;
  out.base = inclusion_order(sets, k.vertex_labels());
  out.sets = std::move(sets);
  return out;
}

}  // namespace crosscut
