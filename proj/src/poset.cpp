#include "crosscut/poset.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <tuple>
#include <unordered_map>

namespace crosscut {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::duplicate_label: return "DuplicateLabel";
    case Errc::unknown_label: return "UnknownLabel";
    case Errc::cycle_detected: return "CycleDetected";
    case Errc::empty_subset: return "EmptySubset";
    case Errc::guard_exceeded: return "GuardExceeded";
    case Errc::hypothesis_violated: return "HypothesisViolated";
    case Errc::no_maximum: return "NoMaximum";
    case Errc::empty_gamma_b: return "EmptyGammaB";
    case Errc::not_connected: return "NotConnected";
    case Errc::not_a_simplex: return "NotASimplex";
    case Errc::size_guard: return "SizeGuard";
    case Errc::io_error: return "IoError";
    case Errc::usage_error: return "UsageError";
  }
  return "Error";
}

namespace {

std::vector<std::pair<int, int>> transitive_reduction(int n, const std::vector<ElementSet>& up) {
  std::vector<std::pair<int, int>> covers;
  for (int x = 0; x < n; ++x) {
    ElementSet above = up[x];
    above.reset(x);
    for (int y = above.first(); y >= 0; y = above.next(y)) {
      // y covers x iff nothing sits strictly between them.
      bool direct = true;
      for (int z = above.first(); z >= 0 && direct; z = above.next(z))
        if (z != y && up[z].test(y)) direct = false;
      if (direct) covers.emplace_back(x, y);
    }
  }
  std::sort(covers.begin(), covers.end());
  return covers;
}

}  // namespace

FinitePoset FinitePoset::from_relations(
    const std::vector<std::string>& labels,
    const std::vector<std::pair<std::string, std::string>>& relations) {
  const int n = static_cast<int>(labels.size());
  std::unordered_map<std::string, int> id;
  for (int i = 0; i < n; ++i) {
    if (!id.emplace(labels[i], i).second)
      fail(Errc::duplicate_label, "label '" + labels[i] + "' appears twice");
  }

  std::vector<ElementSet> up(n, ElementSet(n));
  for (int i = 0; i < n; ++i) up[i].set(i);
  for (const auto& [a, b] : relations) {
    auto ia = id.find(a);
    auto ib = id.find(b);
    if (ia == id.end()) fail(Errc::unknown_label, "relation references unknown label '" + a + "'");
    if (ib == id.end()) fail(Errc::unknown_label, "relation references unknown label '" + b + "'");
    up[ia->second].set(ib->second);
  }

  // Warshall closure on bit rows.
  for (int k = 0; k < n; ++k)
    for (int x = 0; x < n; ++x)
      if (up[x].test(k)) up[x] |= up[k];

  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      if (up[x].test(y) && up[y].test(x))
        fail(Errc::cycle_detected,
             "'" + labels[x] + "' and '" + labels[y] + "' lie on a cycle");

  return from_leq(labels, std::move(up), false);
}

FinitePoset FinitePoset::from_leq(std::vector<std::string> labels,
                                  std::vector<ElementSet> up_rows, bool validate) {
  const int n = static_cast<int>(labels.size());
  if (validate) {
    for (int x = 0; x < n; ++x) {
      if (!up_rows[x].test(x)) fail(Errc::cycle_detected, "relation is not reflexive");
      for (int y = up_rows[x].next(-1); y >= 0; y = up_rows[x].next(y)) {
        if (y != x && up_rows[y].test(x)) fail(Errc::cycle_detected, "relation is not antisymmetric");
        if (!up_rows[y].is_subset_of(up_rows[x]))
          fail(Errc::cycle_detected, "relation is not transitive");
      }
    }
  }

  FinitePoset p;
  p.n_ = n;
  p.labels_ = std::move(labels);
  p.up_ = std::move(up_rows);
  p.down_.assign(n, ElementSet(n));
  for (int x = 0; x < n; ++x)
    for (int y = p.up_[x].first(); y >= 0; y = p.up_[x].next(y)) p.down_[y].set(x);
  p.covers_ = transitive_reduction(n, p.up_);
  return p;
}

std::optional<int> FinitePoset::id_of(std::string_view label) const {
  for (int i = 0; i < n_; ++i)
    if (labels_[i] == label) return i;
  return std::nullopt;
}

ElementSet FinitePoset::strict_up(int x) const {
  ElementSet s = up_[x];
  s.reset(x);
  return s;
}

ElementSet FinitePoset::strict_down(int x) const {
  ElementSet s = down_[x];
  s.reset(x);
  return s;
}

FinitePoset opposite(const FinitePoset& p) {
  std::vector<ElementSet> up;
  up.reserve(p.size());
  for (int x = 0; x < p.size(); ++x) up.push_back(p.down_set(x));
  return FinitePoset::from_leq(p.labels(), std::move(up), false);
}

ElementSet mxl(const FinitePoset& p) {
  ElementSet s(p.size());
  for (int x = 0; x < p.size(); ++x)
    if (p.strict_up(x).empty()) s.set(x);
  return s;
}

ElementSet mnl(const FinitePoset& p) {
  ElementSet s(p.size());
  for (int x = 0; x < p.size(); ++x)
    if (p.strict_down(x).empty()) s.set(x);
  return s;
}

std::vector<ElementSet> connected_components(const FinitePoset& p, const ElementSet& s) {
  std::vector<ElementSet> out;
  ElementSet todo = s;
  while (!todo.empty()) {
    int seed = todo.first();
    ElementSet comp(p.size());
    ElementSet frontier(p.size());
    frontier.set(seed);
    while (!frontier.empty()) {
      comp |= frontier;
      ElementSet nxt(p.size());
      for (int x = frontier.first(); x >= 0; x = frontier.next(x))
        nxt |= (p.up_set(x) | p.down_set(x));
      nxt &= s;
      nxt -= comp;
      frontier = nxt;
    }
    out.push_back(comp);
    todo -= comp;
  }
  return out;
}

bool is_chain(const FinitePoset& p, const ElementSet& s) {
  for (int x = s.first(); x >= 0; x = s.next(x))
    for (int y = s.next(x); y >= 0; y = s.next(y))
      if (!p.comparable(x, y)) return false;
  return true;
}

bool is_antichain(const FinitePoset& p, const ElementSet& s) {
  for (int x = s.first(); x >= 0; x = s.next(x))
    for (int y = s.next(x); y >= 0; y = s.next(y))
      if (p.comparable(x, y)) return false;
  return true;
}

std::vector<ElementSet> maximal_chains(const FinitePoset& p) {
  const int n = p.size();
  std::vector<std::vector<int>> up_covers(n);
  for (auto [a, b] : p.covers()) up_covers[a].push_back(b);

  std::vector<ElementSet> out;
  std::vector<int> stack;
  // Every maximal chain is a cover path from a minimal to a maximal element.
  auto dfs = [&](auto&& self, int x) -> void {
    stack.push_back(x);
    if (up_covers[x].empty()) {
      ElementSet chain(n);
      for (int v : stack) chain.set(v);
      out.push_back(chain);
    } else {
      for (int y : up_covers[x]) self(self, y);
    }
    stack.pop_back();
  };
  ElementSet bottoms = mnl(p);
  for (int x = bottoms.first(); x >= 0; x = bottoms.next(x)) dfs(dfs, x);
  return out;
}

namespace {

ElementSet common_lower(const FinitePoset& p, const ElementSet& s) {
  ElementSet acc = ElementSet::full(p.size());
  for (int x = s.first(); x >= 0; x = s.next(x)) acc &= p.down_set(x);
  return acc;
}

ElementSet common_upper(const FinitePoset& p, const ElementSet& s) {
  ElementSet acc = ElementSet::full(p.size());
  for (int x = s.first(); x >= 0; x = s.next(x)) acc &= p.up_set(x);
  return acc;
}

}  // namespace

bool is_bounded(const FinitePoset& p, const ElementSet& s) {
  if (s.empty()) fail(Errc::empty_subset, "is_bounded of the empty subset");
  return common_lower(p, s).any() || common_upper(p, s).any();
}

std::optional<int> meet(const FinitePoset& p, const ElementSet& s) {
  if (s.empty()) fail(Errc::empty_subset, "meet of the empty subset");
  ElementSet lower = common_lower(p, s);
  for (int m = lower.first(); m >= 0; m = lower.next(m))
    if (lower.is_subset_of(p.down_set(m))) return m;
  return std::nullopt;
}

std::optional<int> join(const FinitePoset& p, const ElementSet& s) {
  if (s.empty()) fail(Errc::empty_subset, "join of the empty subset");
  ElementSet upper = common_upper(p, s);
  for (int m = upper.first(); m >= 0; m = upper.next(m))
    if (upper.is_subset_of(p.up_set(m))) return m;
  return std::nullopt;
}

namespace {

// Per-element structural signature, refined a few rounds against neighbour
// signatures. Isomorphisms must preserve it.
std::vector<long long> iso_signature(const FinitePoset& p) {
  const int n = p.size();
  std::vector<long long> sig(n);
  for (int x = 0; x < n; ++x)
    sig[x] = p.up_set(x).count() * 1000003LL + p.down_set(x).count();
  for (int round = 0; round < 3; ++round) {
    std::vector<long long> nxt(n);
    for (int x = 0; x < n; ++x) {
      std::vector<long long> ups, downs;
      ElementSet su = p.strict_up(x), sd = p.strict_down(x);
      for (int y = su.first(); y >= 0; y = su.next(y)) ups.push_back(sig[y]);
      for (int y = sd.first(); y >= 0; y = sd.next(y)) downs.push_back(sig[y]);
      std::sort(ups.begin(), ups.end());
      std::sort(downs.begin(), downs.end());
      long long h = sig[x];
      for (long long v : ups) h = h * 1000000007LL + v;
      for (long long v : downs) h = h * 998244353LL + v;
      nxt[x] = h;
    }
    sig = nxt;
  }
  return sig;
}

}  // namespace

std::optional<std::vector<int>> is_isomorphic(const FinitePoset& p, const FinitePoset& q) {
  if (p.size() != q.size()) return std::nullopt;
  const int n = p.size();
  if (n > 64) fail(Errc::guard_exceeded, "isomorphism search capped at 64 elements");
  if (n == 0) return std::vector<int>{};

  auto sp = iso_signature(p);
  auto sq = iso_signature(q);
  {
    auto a = sp, b = sq;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return std::nullopt;
  }

  // Candidate lists by signature, tightest first.
  std::vector<std::vector<int>> cand(n);
  for (int x = 0; x < n; ++x)
    for (int u = 0; u < n; ++u)
      if (sp[x] == sq[u]) cand[x].push_back(u);

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return cand[a].size() < cand[b].size(); });

  std::vector<int> img(n, -1);
  std::vector<bool> used(n, false);

  auto consistent = [&](int x, int u) {
    for (int y = 0; y < n; ++y) {
      if (img[y] < 0 || y == x) continue;
      if (p.leq(x, y) != q.leq(u, img[y])) return false;
      if (p.leq(y, x) != q.leq(img[y], u)) return false;
    }
    return true;
  };

  auto dfs = [&](auto&& self, std::size_t k) -> bool {
    if (k == order.size()) return true;
    int x = order[k];
    for (int u : cand[x]) {
      if (used[u] || !consistent(x, u)) continue;
      img[x] = u;
      used[u] = true;
      if (self(self, k + 1)) return true;
      img[x] = -1;
      used[u] = false;
    }
    return false;
  };

  if (!dfs(dfs, 0)) return std::nullopt;
  return img;
}

std::vector<int> linear_extension(const FinitePoset& p) {
  const int n = p.size();
  std::vector<int> out;
  out.reserve(n);
  ElementSet placed(n);
  while (static_cast<int>(out.size()) < n) {
    for (int x = 0; x < n; ++x) {
      if (placed.test(x)) continue;
      if (p.strict_down(x).is_subset_of(placed)) {
        out.push_back(x);
        placed.set(x);
        break;
      }
    }
  }
  return out;
}

InducedPoset induced(const FinitePoset& p, const ElementSet& s) {
  std::vector<int> ids = s.members();
  const int m = static_cast<int>(ids.size());
  std::vector<std::string> labels(m);
  std::vector<ElementSet> up(m, ElementSet(m));
  for (int i = 0; i < m; ++i) {
    labels[i] = p.label(ids[i]);
    for (int j = 0; j < m; ++j)
      if (p.leq(ids[i], ids[j])) up[i].set(j);
  }
  return InducedPoset{FinitePoset::from_leq(std::move(labels), std::move(up), false), std::move(ids)};
}

bool is_order_preserving(const FinitePoset& src, const FinitePoset& dst, const MonotoneMap& f) {
  if (static_cast<int>(f.values.size()) != src.size()) return false;
  for (int v : f.values)
    if (v < 0 || v >= dst.size()) return false;
  for (auto [a, b] : src.covers())
    if (!dst.leq(f.values[a], f.values[b])) return false;
  return true;
}

}  // namespace crosscut
