#pragma once

#include <vector>

#include "oremat/linalg.hpp"
#include "oremat/matrix.hpp"
#include "oremat/rings.hpp"

namespace oremat::testsupport {

// Small construction helpers used across the suites.

inline SkewPolyRing f2_ring() { return SkewPolyRing(FqContext::prime_field(2)); }
inline SkewPolyRing f4_ring() { return SkewPolyRing(FqContext::make(2, {1, 1, 1})); }

template <class Ring>
Mat<Ring> mat_from(const Ring& ring, Orientation orient, int rows, int cols,
                   const std::vector<typename Ring::Elem>& entries) {
  Mat<Ring> m = Mat<Ring>::zero(ring, orient, rows, cols);
  m.a = entries;
  return m;
}

inline Mat<IntegerRing> zmat(const IntegerRing& ring, Orientation orient,
                             const std::vector<std::vector<long>>& rows) {
  int r = static_cast<int>(rows.size());
  int c = r ? static_cast<int>(rows[0].size()) : 0;
  Mat<IntegerRing> m = Mat<IntegerRing>::zero(ring, orient, r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m.at(i, j) = Int(rows[i][j]);
  return m;
}

/// Skew matrix from coefficient lists: each entry is a list of coefficient
/// coordinate vectors (ascending powers of F).
inline Mat<SkewPolyRing> smat(const SkewPolyRing& ring, Orientation orient,
                              const std::vector<std::vector<std::vector<std::vector<std::uint64_t>>>>& rows) {
  int r = static_cast<int>(rows.size());
  int c = r ? static_cast<int>(rows[0].size()) : 0;
  Mat<SkewPolyRing> m = Mat<SkewPolyRing>::zero(ring, orient, r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) {
      std::vector<FqElem> coeffs;
      for (const auto& coords : rows[i][j]) coeffs.emplace_back(ring.field(), coords);
      m.at(i, j) = SkewPoly(ring.field(), std::move(coeffs));
    }
  return m;
}

// ---------------------------------------------------------------------------
// Reference oracles, independent of the library's elimination paths.

/// Plain column-style Hermite reduction over the integers; returns the
/// echelon columns (pivot positive, entries left of a pivot reduced).
inline std::vector<std::vector<Int>> integer_hnf_oracle(std::vector<std::vector<Int>> cols, int nrows) {
  // gcd-reduce columns row by row
  std::size_t next = 0;
  for (int row = 0; row < nrows && next < cols.size(); ++row) {
    while (true) {
      int count = 0;
      std::size_t k = cols.size();
      for (std::size_t j = next; j < cols.size(); ++j) {
        if (cols[j][row] == 0) continue;
        ++count;
        if (k == cols.size() || abs(cols[j][row]) < abs(cols[k][row])) k = j;
      }
      if (count <= 1) {
        if (count == 1) {
          std::swap(cols[k], cols[next]);
          if (cols[next][row] < 0)
            for (auto& x : cols[next]) x = -x;
          for (std::size_t j = 0; j < next; ++j) {
            Int q = floor_div(cols[j][row], cols[next][row]);
            if (q != 0)
              for (int i = 0; i < nrows; ++i) cols[j][i] -= q * cols[next][i];
          }
          ++next;
        }
        break;
      }
      for (std::size_t j = next; j < cols.size(); ++j) {
        if (j == k || cols[j][row] == 0) continue;
        Int q = floor_div(cols[j][row], cols[k][row]);
        if (q == 0) q = (cols[j][row] > 0) == (cols[k][row] > 0) ? 1 : -1;
        for (int i = 0; i < nrows; ++i) cols[j][i] -= q * cols[k][i];
      }
    }
  }
  cols.resize(next);
  return cols;
}

/// 3x3 integer determinant by cofactors.
inline Int det3_oracle(const std::vector<std::vector<Int>>& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

/// Random nonzero ring element.
template <class Ring>
typename Ring::Elem random_nonzero(const Ring& ring, SplitMix64& rng, int size) {
  while (true) {
    auto e = ring.random_elem(rng, size);
    if (!ring.is_zero(e)) return e;
  }
}

/// Random Q element as a left fraction of ring elements.
template <class Ring>
typename Ring::QElem random_q(const Ring& ring, SplitMix64& rng, int size) {
  auto den = random_nonzero(ring, rng, size);
  auto num = ring.random_elem(rng, size);
  return ring.q_mul(ring.q_inv(ring.q_from(den)), ring.q_from(num));
}

template <class Ring>
typename Ring::QElem random_q_nonzero(const Ring& ring, SplitMix64& rng, int size) {
  while (true) {
    auto x = random_q(ring, rng, size);
    if (!ring.q_is_zero(x)) return x;
  }
}

}  // namespace oremat::testsupport
