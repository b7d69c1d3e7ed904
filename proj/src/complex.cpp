#include "crosscut/complex.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>
#include <unordered_set>

#include "crosscut/stars.hpp"

namespace crosscut {

std::string set_label(const ElementSet& s, const std::vector<std::string>& labels) {
  std::string out = "{";
  bool first = true;
  for (int v = s.first(); v >= 0; v = s.next(v)) {
    if (!first) out += ",";
    out += labels[v];
    first = false;
  }
  out += "}";
  return out;
}

SimplicialComplex SimplicialComplex::from_faces(std::vector<std::string> vertex_labels,
                                                std::vector<ElementSet> faces) {
  const int n = static_cast<int>(vertex_labels.size());
  for (const auto& f : faces) {
    if (f.universe_size() != n) throw std::logic_error("face over wrong vertex universe");
    if (f.empty()) fail(Errc::not_a_simplex, "faces must be non-empty");
  }

  // Keep maximal faces only.
  std::vector<ElementSet> facets;
  for (const auto& f : faces) {
    bool dominated = false;
    for (const auto& g : faces)
      if (!(g == f) && f.is_subset_of(g)) {
        dominated = true;
        break;
      }
    if (!dominated) facets.push_back(f);
  }
  std::sort(facets.begin(), facets.end(),
            [](const ElementSet& a, const ElementSet& b) { return ElementSet::compare(a, b) < 0; });
  facets.erase(std::unique(facets.begin(), facets.end()), facets.end());

  ElementSet used(n);
  for (const auto& f : facets) used |= f;
  if (used.count() != n)
    fail(Errc::not_a_simplex, "every vertex must occur in some face");

  SimplicialComplex k;
  k.vertex_labels_ = std::move(vertex_labels);
  k.facets_ = std::move(facets);
  return k;
}

bool SimplicialComplex::contains(const ElementSet& simplex) const {
  if (simplex.empty()) return false;
  for (const auto& f : facets_)
    if (simplex.is_subset_of(f)) return true;
  return false;
}

int SimplicialComplex::dim() const {
  int d = -1;
  for (const auto& f : facets_) d = std::max(d, f.count() - 1);
  return d;
}

std::vector<ElementSet> SimplicialComplex::all_simplices(std::size_t cap) const {
  std::unordered_set<std::string> seen;
  std::vector<ElementSet> out;
  std::vector<ElementSet> stack = facets_;
  for (const auto& f : facets_) seen.insert(f.key());
  while (!stack.empty()) {
    ElementSet s = stack.back();
    stack.pop_back();
    out.push_back(s);
    if (out.size() > cap)
      fail(Errc::size_guard, "complex has more than " + std::to_string(cap) + " simplices");
    if (s.count() == 1) continue;
    for (int v = s.first(); v >= 0; v = s.next(v)) {
      ElementSet face = s;
      face.reset(v);
      if (seen.insert(face.key()).second) stack.push_back(face);
    }
  }
  std::sort(out.begin(), out.end(), [](const ElementSet& a, const ElementSet& b) {
    if (a.count() != b.count()) return a.count() < b.count();
    return ElementSet::compare(a, b) < 0;
  });
  return out;
}

std::vector<std::vector<ElementSet>> SimplicialComplex::simplices_by_dim(std::size_t cap) const {
  std::vector<std::vector<ElementSet>> by_dim(static_cast<std::size_t>(dim() + 1));
  for (const auto& s : all_simplices(cap)) by_dim[static_cast<std::size_t>(s.count() - 1)].push_back(s);
  return by_dim;
}

std::string SimplicialComplex::canonical_key() const {
  std::vector<std::vector<std::string>> rows;
  rows.reserve(facets_.size());
  for (const auto& f : facets_) {
    std::vector<std::string> row;
    for (int v = f.first(); v >= 0; v = f.next(v)) row.push_back(vertex_labels_[v]);
    std::sort(row.begin(), row.end());
    rows.push_back(std::move(row));
  }
  std::sort(rows.begin(), rows.end());
  std::string key;
  for (const auto& row : rows) {
    for (const auto& l : row) {
      key += l;
      key += '\x1f';
    }
    key += '\x1e';
  }
  return key;
}

bool same_complex(const SimplicialComplex& a, const SimplicialComplex& b) {
  return a.canonical_key() == b.canonical_key();
}

SimplicialComplex order_complex(const FinitePoset& p) {
  if (p.size() == 0) return SimplicialComplex{};
  return SimplicialComplex::from_faces(p.labels(), maximal_chains(p));
}

FacePoset face_poset(const SimplicialComplex& k, std::size_t cap) {
  std::vector<ElementSet> simplices = k.all_simplices(cap);
  const int n = static_cast<int>(simplices.size());

  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) labels[i] = set_label(simplices[i], k.vertex_labels());

  std::vector<ElementSet> up(n, ElementSet(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (simplices[i].is_subset_of(simplices[j])) up[i].set(j);

  return FacePoset{FinitePoset::from_leq(std::move(labels), std::move(up), false),
                   std::move(simplices)};
}

SimplicialComplex crosscut_complex(const FinitePoset& p, const ElementSet& x) {
  if (x.empty()) fail(Errc::empty_subset, "crosscut complex needs a non-empty X");

  // A ⊆ X is astral iff A ⊆ X ∩ st(z) for some z, so the maximal sets of
  // that family are exactly the facets.
  std::vector<ElementSet> candidates;
  std::unordered_set<std::string> seen;
  for (int z = 0; z < p.size(); ++z) {
    ElementSet c = x & star(p, z);
    if (c.empty()) continue;
    if (seen.insert(c.key()).second) candidates.push_back(c);
  }

  // Relabel over the X universe.
  std::vector<int> xs = x.members();
  std::vector<int> to_local(p.size(), -1);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    to_local[xs[i]] = static_cast<int>(i);
    labels.push_back(p.label(xs[i]));
  }
  std::vector<ElementSet> faces;
  for (const auto& c : candidates) {
    ElementSet f(static_cast<int>(xs.size()));
    for (int v = c.first(); v >= 0; v = c.next(v)) f.set(to_local[v]);
    faces.push_back(f);
  }
  return SimplicialComplex::from_faces(std::move(labels), std::move(faces));
}

SimplicialComplex closed_star(const SimplicialComplex& k, const ElementSet& sigma) {
  if (!k.contains(sigma)) fail(Errc::not_a_simplex, "closed star of a non-simplex");

  std::vector<ElementSet> kept;
  ElementSet used(k.vertex_count());
  for (const auto& f : k.facets())
    if (sigma.is_subset_of(f)) {
      kept.push_back(f);
      used |= f;
    }

  std::vector<int> verts = used.members();
  std::vector<int> to_local(k.vertex_count(), -1);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < verts.size(); ++i) {
    to_local[verts[i]] = static_cast<int>(i);
    labels.push_back(k.vertex_labels()[verts[i]]);
  }
  std::vector<ElementSet> faces;
  for (const auto& f : kept) {
    ElementSet g(static_cast<int>(verts.size()));
    for (int v = f.first(); v >= 0; v = f.next(v)) g.set(to_local[v]);
    faces.push_back(g);
  }
  return SimplicialComplex::from_faces(std::move(labels), std::move(faces));
}

std::vector<long long> f_vector(const SimplicialComplex& k, std::size_t cap) {
  std::vector<long long> f(static_cast<std::size_t>(k.dim() + 1), 0);
  for (const auto& s : k.all_simplices(cap)) ++f[static_cast<std::size_t>(s.count() - 1)];
  return f;
}

long long euler_characteristic(const SimplicialComplex& k, std::size_t cap) {
  long long chi = 0;
  long long sign = 1;
  for (long long fd : f_vector(k, cap)) {
    chi += sign * fd;
    sign = -sign;
  }
  return chi;
}

std::optional<int> cone_apex(const SimplicialComplex& k) {
  if (k.facets().empty()) return std::nullopt;
  ElementSet common = k.facets()[0];
  for (const auto& f : k.facets()) common &= f;
  int apex = common.first();
  if (apex < 0) return std::nullopt;
  return apex;
}

}  // namespace crosscut
