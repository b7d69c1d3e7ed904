#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <vector>

#include "crosscut/complex.hpp"

namespace crosscut {

using BigInt = boost::multiprecision::cpp_int;

// Dense integer matrix with arbitrary-precision entries; Smith reduction can
// blow up intermediate values, so fixed-width arithmetic is not used.
struct IntMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<BigInt> a;

  static IntMatrix zero(int r, int c) { return IntMatrix{r, c, std::vector<BigInt>(std::size_t(r) * c)}; }
  BigInt& at(int r, int c) { return a[std::size_t(r) * cols + c]; }
  const BigInt& at(int r, int c) const { return a[std::size_t(r) * cols + c]; }
};

IntMatrix multiply(const IntMatrix& l, const IntMatrix& r);

// Boundary matrices of K: entry (i, j) of the d-th matrix (index d-1) is the
// signed incidence of the i-th (d-1)-simplex in the j-th d-simplex, simplices
// ordered canonically, signs (-1)^position over sorted vertices.
std::vector<IntMatrix> boundary_matrices(const SimplicialComplex& k,
                                         std::size_t cap = kDefaultSimplexCap);

struct SmithResult {
  std::vector<BigInt> factors;  // non-zero invariant factors d1 | d2 | ...
  int rank = 0;
};

SmithResult smith_normal_form(IntMatrix m);

struct HomologySummary {
  bool reduced = false;
  std::vector<long long> betti;                  // by dimension, 0..dim
  std::vector<std::vector<long long>> torsion;   // invariant factors > 1 per dimension

  bool trivial() const;  // all betti zero and no torsion
};

// Integer simplicial homology of K via Smith normal form. reduced=true uses
// the augmented chain complex.
HomologySummary homology(const SimplicialComplex& k, bool reduced,
                         std::size_t cap = kDefaultSimplexCap);

// Equal after zero-extension to a common dimension range.
bool same_homology(const HomologySummary& a, const HomologySummary& b);

std::string to_string(const HomologySummary& h);

}  // namespace crosscut
