#include "crosscut/homology.hpp"

#include <algorithm>
#include <unordered_map>

namespace crosscut {

IntMatrix multiply(const IntMatrix& l, const IntMatrix& r) {
  if (l.cols != r.rows) throw std::logic_error("multiply: shape mismatch");
  IntMatrix out = IntMatrix::zero(l.rows, r.cols);
  for (int i = 0; i < l.rows; ++i)
    for (int k = 0; k < l.cols; ++k) {
      if (l.at(i, k) == 0) continue;
      for (int j = 0; j < r.cols; ++j) out.at(i, j) += l.at(i, k) * r.at(k, j);
    }
  return out;
}

std::vector<IntMatrix> boundary_matrices(const SimplicialComplex& k, std::size_t cap) {
  auto by_dim = k.simplices_by_dim(cap);
  const int top = static_cast<int>(by_dim.size()) - 1;

  std::vector<std::unordered_map<std::string, int>> index(by_dim.size());
  for (std::size_t d = 0; d < by_dim.size(); ++d)
    for (std::size_t i = 0; i < by_dim[d].size(); ++i)
      index[d].emplace(by_dim[d][i].key(), static_cast<int>(i));

  std::vector<IntMatrix> out;
  for (int d = 1; d <= top; ++d) {
    IntMatrix m = IntMatrix::zero(static_cast<int>(by_dim[d - 1].size()),
                                  static_cast<int>(by_dim[d].size()));
    for (std::size_t j = 0; j < by_dim[static_cast<std::size_t>(d)].size(); ++j) {
      const ElementSet& s = by_dim[static_cast<std::size_t>(d)][j];
      int pos = 0;
      for (int v = s.first(); v >= 0; v = s.next(v), ++pos) {
        ElementSet face = s;
        face.reset(v);
        int i = index[static_cast<std::size_t>(d - 1)].at(face.key());
        m.at(i, static_cast<int>(j)) = (pos % 2 == 0) ? 1 : -1;
      }
    }
    out.push_back(std::move(m));
  }
  return out;
}

namespace {

BigInt abs_big(const BigInt& v) { return v < 0 ? BigInt(-v) : v; }

// Repeated (gcd, lcm) sweeps turn any diagonal list into the invariant
// factor chain d1 | d2 | ...
std::vector<BigInt> normalize_divisibility(std::vector<BigInt> d) {
  for (auto& v : d) v = abs_big(v);
  d.erase(std::remove(d.begin(), d.end(), BigInt(0)), d.end());
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < d.size(); ++i) {
      if (d[i + 1] % d[i] == 0) continue;
      BigInt g = boost::multiprecision::gcd(d[i], d[i + 1]);
      BigInt l = d[i] / g * d[i + 1];
      d[i] = g;
      d[i + 1] = l;
      changed = true;
    }
  }
  return d;
}

}  // namespace

SmithResult smith_normal_form(IntMatrix m) {
  const int R = m.rows, C = m.cols;
  std::vector<BigInt> diag;

  // The pivot is re-selected as the globally smallest non-zero entry after
  // every reduction round. Sweeping repeatedly against a stale pivot lets the
  // entries grow with every pass; re-selection keeps the process Euclidean.
  int t = 0;
  while (t < R && t < C) {
    int pr = -1, pc = -1;
    BigInt best;
    for (int i = t; i < R; ++i)
      for (int j = t; j < C; ++j) {
        if (m.at(i, j) == 0) continue;
        BigInt v = abs_big(m.at(i, j));
        if (pr < 0 || v < best) {
          best = v;
          pr = i;
          pc = j;
        }
      }
    if (pr < 0) break;

    for (int j = 0; j < C; ++j) std::swap(m.at(t, j), m.at(pr, j));
    for (int i = 0; i < R; ++i) std::swap(m.at(i, t), m.at(i, pc));

    // One reduction round: leave remainders in place. Any survivor is
    // strictly smaller than the pivot, so the re-selection loop terminates.
    bool dirty = false;
    for (int i = t + 1; i < R; ++i) {
      if (m.at(i, t) == 0) continue;
      BigInt q = m.at(i, t) / m.at(t, t);
      if (q != 0)
        for (int j = t; j < C; ++j) m.at(i, j) -= q * m.at(t, j);
      if (m.at(i, t) != 0) dirty = true;
    }
    for (int j = t + 1; j < C; ++j) {
      if (m.at(t, j) == 0) continue;
      BigInt q = m.at(t, j) / m.at(t, t);
      if (q != 0)
        for (int i = t; i < R; ++i) m.at(i, j) -= q * m.at(i, t);
      if (m.at(t, j) != 0) dirty = true;
    }
    if (dirty) continue;

    // Row and column are clear. If the pivot fails to divide some remaining
    // entry, fold that row in; the next round shrinks the pivot to a common
    // divisor.
    bool divides = true;
    for (int i = t + 1; i < R && divides; ++i)
      for (int j = t + 1; j < C && divides; ++j)
        if (m.at(i, j) % m.at(t, t) != 0) {
          for (int jj = t; jj < C; ++jj) m.at(t, jj) += m.at(i, jj);
          divides = false;
        }
    if (!divides) continue;

    diag.push_back(m.at(t, t));
    ++t;
  }

  SmithResult out;
  out.factors = normalize_divisibility(std::move(diag));
  out.rank = static_cast<int>(out.factors.size());
  return out;
}

bool HomologySummary::trivial() const {
  for (long long b : betti)
    if (b != 0) return false;
  for (const auto& t : torsion)
    if (!t.empty()) return false;
  return true;
}

HomologySummary homology(const SimplicialComplex& k, bool reduced, std::size_t cap) {
  HomologySummary h;
  h.reduced = reduced;
  const int top = k.dim();
  if (top < 0) return h;

  auto f = f_vector(k, cap);
  auto bnd = boundary_matrices(k, cap);

  std::vector<int> rank(static_cast<std::size_t>(top) + 2, 0);
  std::vector<std::vector<long long>> tors(static_cast<std::size_t>(top) + 2);
  for (int d = 1; d <= top; ++d) {
    SmithResult s = smith_normal_form(bnd[static_cast<std::size_t>(d - 1)]);
    rank[static_cast<std::size_t>(d)] = s.rank;
    for (const auto& v : s.factors)
      if (v > 1) tors[static_cast<std::size_t>(d)].push_back(v.convert_to<long long>());
  }
  // Augmentation map: one row of ones, rank 1 whenever there is a vertex.
  int rank0 = (reduced && f[0] > 0) ? 1 : 0;

  h.betti.assign(static_cast<std::size_t>(top) + 1, 0);
  h.torsion.assign(static_cast<std::size_t>(top) + 1, {});
  for (int d = 0; d <= top; ++d) {
    long long cycles = f[static_cast<std::size_t>(d)] -
                       (d == 0 ? rank0 : rank[static_cast<std::size_t>(d)]);
    h.betti[static_cast<std::size_t>(d)] = cycles - rank[static_cast<std::size_t>(d) + 1];
    // Torsion of H_d comes from the (d+1)-boundary's invariant factors.
    h.torsion[static_cast<std::size_t>(d)] = tors[static_cast<std::size_t>(d) + 1];
  }
  return h;
}

bool same_homology(const HomologySummary& a, const HomologySummary& b) {
  std::size_t n = std::max(a.betti.size(), b.betti.size());
  for (std::size_t d = 0; d < n; ++d) {
    long long ba = d < a.betti.size() ? a.betti[d] : 0;
    long long bb = d < b.betti.size() ? b.betti[d] : 0;
    if (ba != bb) return false;
    std::vector<long long> ta = d < a.torsion.size() ? a.torsion[d] : std::vector<long long>{};
    std::vector<long long> tb = d < b.torsion.size() ? b.torsion[d] : std::vector<long long>{};
    if (ta != tb) return false;
  }
  return true;
}

std::string to_string(const HomologySummary& h) {
  std::string out = h.reduced ? "reduced betti (" : "betti (";
  for (std::size_t d = 0; d < h.betti.size(); ++d) {
    if (d) out += ",";
    out += std::to_string(h.betti[d]);
  }
  out += ")";
  for (std::size_t d = 0; d < h.torsion.size(); ++d) {
    if (h.torsion[d].empty()) continue;
    out += ", torsion[" + std::to_string(d) + "]=(";
    for (std::size_t i = 0; i < h.torsion[d].size(); ++i) {
      if (i) out += ",";
      out += std::to_string(h.torsion[d][i]);
    }
    out += ")";
  }
  return out;
}

}  // namespace crosscut
