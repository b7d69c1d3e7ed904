#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "crosscut/poset.hpp"

namespace crosscut {

inline constexpr std::size_t kDefaultSimplexCap = std::size_t(1) << 20;
inline constexpr std::size_t kDefaultFacePosetCap = 4096;

// Finite abstract simplicial complex stored by facets over a labelled vertex
// universe. Facets are pairwise incomparable, non-empty, kept in canonical
// (member-lexicographic) order, and every vertex occurs in some facet.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  // Maximalizes the given faces. Faces must be non-empty; every vertex must
  // occur in some face.
  static SimplicialComplex from_faces(std::vector<std::string> vertex_labels,
                                      std::vector<ElementSet> faces);

  int vertex_count() const { return static_cast<int>(vertex_labels_.size()); }
  const std::vector<std::string>& vertex_labels() const { return vertex_labels_; }
  const std::vector<ElementSet>& facets() const { return facets_; }

  bool contains(const ElementSet& simplex) const;
  int dim() const;  // -1 for the empty complex

  // All simplices sorted by (dimension, member-lex). Throws size_guard when
  // more than cap simplices exist.
  std::vector<ElementSet> all_simplices(std::size_t cap = kDefaultSimplexCap) const;
  std::vector<std::vector<ElementSet>> simplices_by_dim(std::size_t cap = kDefaultSimplexCap) const;

  // Label-based canonical form: vertex labels sorted, facets as sorted label
  // tuples, facet list sorted. Two complexes are equal as combinatorial
  // objects iff their keys match, regardless of vertex id numbering.
  std::string canonical_key() const;

 private:
  std::vector<std::string> vertex_labels_;
  std::vector<ElementSet> facets_;
};

bool same_complex(const SimplicialComplex& a, const SimplicialComplex& b);

// Order complex K(P): vertices the elements of P, simplices the non-empty
// chains, facets the maximal chains.
SimplicialComplex order_complex(const FinitePoset& p);

// Face poset X(K): all simplices of K ordered by inclusion. Element labels
// are "{v1,v2,...}" built from vertex labels. simplices[i] is the vertex set
// of element i.
struct FacePoset {
  FinitePoset poset;
  std::vector<ElementSet> simplices;
};
FacePoset face_poset(const SimplicialComplex& k, std::size_t cap = kDefaultFacePosetCap);

// Crosscut complex: simplices are the non-empty astral subsets of X, realized
// by maximizing the family {X ∩ st(z) : z in P}. Vertices keep the ambient
// labels; isolated vertices are kept (every x lies in X ∩ st(x)).
SimplicialComplex crosscut_complex(const FinitePoset& p, const ElementSet& x);

// Closed star: faces tau with tau ∪ sigma a simplex; generated by the facets
// containing sigma, restricted to used vertices. Throws not_a_simplex.
SimplicialComplex closed_star(const SimplicialComplex& k, const ElementSet& sigma);

// Face counts by dimension and their alternating sum.
std::vector<long long> f_vector(const SimplicialComplex& k,
                                std::size_t cap = kDefaultSimplexCap);
long long euler_characteristic(const SimplicialComplex& k,
                               std::size_t cap = kDefaultSimplexCap);

// Vertex contained in every facet, if any; such a complex is a cone and in
// particular contractible.
std::optional<int> cone_apex(const SimplicialComplex& k);

// Canonical "{a,b,c}" string for a vertex/element subset.
std::string set_label(const ElementSet& s, const std::vector<std::string>& labels);

}  // namespace crosscut
