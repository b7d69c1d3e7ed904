#include "crosscut/reduction.hpp"

namespace crosscut {

namespace {

// Dominating element of a beat point within the subposet on `alive`, or -1.
int beat_target(const FinitePoset& p, const ElementSet& alive, int x) {
  ElementSet up = p.strict_up(x) & alive;
  if (up.any()) {
    for (int m = up.first(); m >= 0; m = up.next(m))
      if (up.is_subset_of(p.up_set(m))) return m;
  }
  ElementSet down = p.strict_down(x) & alive;
  if (down.any()) {
    for (int m = down.first(); m >= 0; m = down.next(m))
      if (down.is_subset_of(p.down_set(m))) return m;
  }
  return -1;
}

}  // namespace

ElementSet beat_points(const FinitePoset& p) {
  ElementSet out(p.size());
  ElementSet alive = p.all();
  for (int x = 0; x < p.size(); ++x)
    if (beat_target(p, alive, x) >= 0) out.set(x);
  return out;
}

ElementSet weak_points(const FinitePoset& p) {
  ElementSet out(p.size());
  for (int x = 0; x < p.size(); ++x) {
    ElementSet down = p.strict_down(x);
    ElementSet up = p.strict_up(x);
    if ((down.any() && is_contractible(induced(p, down).poset)) ||
        (up.any() && is_contractible(induced(p, up).poset)))
      out.set(x);
  }
  return out;
}

CoreResult core_with_retraction(const FinitePoset& p, RemovalOrder order) {
  const int n = p.size();
  ElementSet alive = p.all();
  std::vector<int> r(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) r[static_cast<std::size_t>(i)] = i;

  bool removed = true;
  while (removed) {
    removed = false;
    for (int k = 0; k < n; ++k) {
      int x = (order == RemovalOrder::ascending) ? k : n - 1 - k;
      if (!alive.test(x)) continue;
      int m = beat_target(p, alive, x);
      if (m < 0) continue;
      alive.reset(x);
      for (int v = 0; v < n; ++v)
        if (r[static_cast<std::size_t>(v)] == x) r[static_cast<std::size_t>(v)] = m;
      removed = true;
      break;  // rescan from the start
    }
  }

  return CoreResult{induced(p, alive), std::move(r)};
}

FinitePoset core(const FinitePoset& p, RemovalOrder order) {
  return core_with_retraction(p, order).core.poset;
}

bool is_contractible(const FinitePoset& p) {
  if (p.size() == 0) return false;
  return core(p).size() == 1;
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::yes: return "yes";
    case Verdict::no: return "no";
    case Verdict::unknown: return "unknown";
  }
  return "unknown";
}

Certificate is_weakly_contractible(const FinitePoset& p, std::size_t cap) {
  Certificate cert;
  if (p.size() == 0) {
    cert.verdict = Verdict::no;
    cert.trail.push_back("empty poset");
    return cert;
  }

  InducedPoset cur{p, {}};
  cur.ambient_ids.resize(static_cast<std::size_t>(p.size()));
  for (int i = 0; i < p.size(); ++i) cur.ambient_ids[static_cast<std::size_t>(i)] = i;

  bool removed = true;
  while (removed && cur.poset.size() > 1) {
    removed = false;
    for (int x = 0; x < cur.poset.size(); ++x) {
      ElementSet down = cur.poset.strict_down(x);
      ElementSet up = cur.poset.strict_up(x);
      const char* why = nullptr;
      if (down.any() && is_contractible(induced(cur.poset, down).poset))
        why = "strict down-set contractible";
      else if (up.any() && is_contractible(induced(cur.poset, up).poset))
        why = "strict up-set contractible";
      if (!why) continue;
      cert.trail.push_back("removed " + p.label(cur.ambient_ids[static_cast<std::size_t>(x)]) +
                           " (" + why + ")");
      ElementSet keep = ElementSet::full(cur.poset.size());
      keep.reset(x);
      InducedPoset nxt = induced(cur.poset, keep);
      for (int& id : nxt.ambient_ids)
        id = cur.ambient_ids[static_cast<std::size_t>(id)];
      cur = std::move(nxt);
      removed = true;
      break;
    }
  }

  if (cur.poset.size() == 1) {
    cert.verdict = Verdict::yes;
    cert.trail.push_back("reduced to a single point");
    return cert;
  }

  HomologySummary h = homology(order_complex(cur.poset), true, cap);
  for (std::size_t d = 0; d < h.betti.size(); ++d) {
    bool tors = d < h.torsion.size() && !h.torsion[d].empty();
    if (h.betti[d] != 0 || tors) {
      cert.verdict = Verdict::no;
      cert.trail.push_back("non-trivial reduced homology in dimension " + std::to_string(d) +
                           " (" + to_string(h) + ")");
      return cert;
    }
  }
  cert.verdict = Verdict::unknown;
  cert.trail.push_back("no weak point left on " + std::to_string(cur.poset.size()) +
                       " elements and reduced homology vanishes");
  return cert;
}

}  // namespace crosscut
