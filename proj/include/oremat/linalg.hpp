#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "oremat/matrix.hpp"
#include "oremat/numeric.hpp"
#include "oremat/valuation.hpp"

namespace oremat {

// ---------------------------------------------------------------------------
// Elimination over the division ring Q (explicit fraction arithmetic).

namespace detail {

/// Row echelon by left row operations. If `transform` is non-null it must be
/// rows x rows; the same operations are applied to it, so transform_out * A_in
/// = A_out throughout. Returns the rank.
template <class Ring>
int q_row_echelon(QMat<Ring>& w, QMat<Ring>* transform) {
  const Ring& R = w.ring;
  int rank = 0;
  for (int col = 0; col < w.cols && rank < w.rows; ++col) {
    int piv = -1;
    for (int i = rank; i < w.rows; ++i)
      if (!R.q_is_zero(w.at(i, col))) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    for (int j = 0; j < w.cols; ++j) std::swap(w.at(piv, j), w.at(rank, j));
    if (transform)
      for (int j = 0; j < transform->cols; ++j) std::swap(transform->at(piv, j), transform->at(rank, j));
    auto inv = R.q_inv(w.at(rank, col));
    for (int j = 0; j < w.cols; ++j) w.at(rank, j) = R.q_mul(inv, w.at(rank, j));
    if (transform)
      for (int j = 0; j < transform->cols; ++j) transform->at(rank, j) = R.q_mul(inv, transform->at(rank, j));
    for (int i = 0; i < w.rows; ++i) {
      if (i == rank || R.q_is_zero(w.at(i, col))) continue;
      auto f = w.at(i, col);
      for (int j = 0; j < w.cols; ++j) w.at(i, j) = R.q_sub(w.at(i, j), R.q_mul(f, w.at(rank, j)));
      if (transform)
        for (int j = 0; j < transform->cols; ++j)
          transform->at(i, j) = R.q_sub(transform->at(i, j), R.q_mul(f, transform->at(rank, j)));
    }
    ++rank;
  }
  return rank;
}

}  // namespace detail

/// Rank of the right column span (equal to the rank of the left row span).
template <class Ring>
int q_rank(const QMat<Ring>& m) {
  QMat<Ring> w = m;
  return detail::q_row_echelon(w, static_cast<QMat<Ring>*>(nullptr));
}

template <class Ring>
int q_rank(const Mat<Ring>& m) {
  QMat<Ring> w = qmat_of(m);
  return detail::q_row_echelon(w, static_cast<QMat<Ring>*>(nullptr));
}

/// Rows spanning { c in Q^rows : c A = 0 }.
template <class Ring>
QMat<Ring> left_kernel(const QMat<Ring>& m) {
  QMat<Ring> w = m;
  QMat<Ring> e = QMat<Ring>::identity(m.ring, m.rows);
  int rank = detail::q_row_echelon(w, &e);
  QMat<Ring> k{m.ring, m.rows - rank, m.rows, {}};
  for (int i = rank; i < m.rows; ++i)
    for (int j = 0; j < m.rows; ++j) k.a.push_back(e.at(i, j));
  return k;
}

/// Mutual containment of right column spans.
template <class Ring>
bool q_span_equal_columns(const QMat<Ring>& a, const QMat<Ring>& b) {
  if (a.rows != b.rows) return false;
  int ra = q_rank(a), rb = q_rank(b);
  if (ra != rb) return false;
  QMat<Ring> joined{a.ring, a.rows, a.cols + b.cols, {}};
  for (int i = 0; i < a.rows; ++i) {
    for (int j = 0; j < a.cols; ++j) joined.a.push_back(a.at(i, j));
    for (int j = 0; j < b.cols; ++j) joined.a.push_back(b.at(i, j));
  }
  return q_rank(joined) == ra;
}

/// Mutual containment of left row spans.
template <class Ring>
bool q_span_equal_rows(const QMat<Ring>& a, const QMat<Ring>& b) {
  if (a.cols != b.cols) return false;
  int ra = q_rank(a), rb = q_rank(b);
  if (ra != rb) return false;
  QMat<Ring> joined{a.ring, a.rows + b.rows, a.cols, {}};
  joined.a = a.a;
  joined.a.insert(joined.a.end(), b.a.begin(), b.a.end());
  return q_rank(joined) == ra;
}

/// Valuation of the Dieudonne determinant of a square matrix over Q;
/// infinity for a singular matrix. Row/column swaps do not change it and
/// left transvections preserve the determinant class, so it is the sum of
/// the pivot valuations of any full elimination.
template <class Ring>
Valuation dieudonne_val(const QMat<Ring>& m) {
  if (m.rows != m.cols) throw std::invalid_argument("dieudonne_val: matrix must be square");
  const Ring& R = m.ring;
  QMat<Ring> w = m;
  std::int64_t val = 0;
  for (int k = 0; k < w.rows; ++k) {
    int pi = -1, pj = -1;
    for (int i = k; i < w.rows && pi < 0; ++i)
      for (int j = k; j < w.cols; ++j)
        if (!R.q_is_zero(w.at(i, j))) {
          pi = i;
          pj = j;
          break;
        }
    if (pi < 0) return Valuation::infinity();
    for (int j = 0; j < w.cols; ++j) std::swap(w.at(pi, j), w.at(k, j));
    for (int i = 0; i < w.rows; ++i) std::swap(w.at(i, pj), w.at(i, k));
    val += R.q_val(w.at(k, k)).value();
    auto inv = R.q_inv(w.at(k, k));
    for (int i = k + 1; i < w.rows; ++i) {
      if (R.q_is_zero(w.at(i, k))) continue;
      auto f = R.q_mul(w.at(i, k), inv);
      for (int j = k; j < w.cols; ++j) w.at(i, j) = R.q_sub(w.at(i, j), R.q_mul(f, w.at(k, j)));
    }
  }
  return Valuation::finite(val);
}

/// Fraction-free route to the same valuation for matrices over the ring:
/// rows are cleared with common-left-multiple cofactors, and the valuation
/// of every left scaling is subtracted again at the end. Kept alongside the
/// fraction route as an independent cross-check.
template <class Ring>
Valuation dieudonne_val_integral(const Mat<Ring>& m) {
  if (m.rows != m.cols) throw std::invalid_argument("dieudonne_val_integral: matrix must be square");
  const Ring& R = m.ring;
  Mat<Ring> w = m;
  std::int64_t val = 0, offset = 0;
  for (int k = 0; k < w.rows; ++k) {
    int pi = -1, pj = -1;
    Int best = 0;
    for (int i = k; i < w.rows; ++i)
      for (int j = k; j < w.cols; ++j) {
        if (R.is_zero(w.at(i, j))) continue;
        Int size = R.euclid_size(w.at(i, j));
        if (pi < 0 || size < best) {
          pi = i;
          pj = j;
          best = size;
        }
      }
    if (pi < 0) return Valuation::infinity();
    for (int j = 0; j < w.cols; ++j) std::swap(w.at(pi, j), w.at(k, j));
    for (int i = 0; i < w.rows; ++i) std::swap(w.at(i, pj), w.at(i, k));
    for (int i = k + 1; i < w.rows; ++i) {
      if (R.is_zero(w.at(i, k))) continue;
      auto [c1, c2] = R.left_multiple_cofactors(w.at(i, k), w.at(k, k));
      for (int j = k; j < w.cols; ++j)
        w.at(i, j) = R.sub(R.mul(c1, w.at(i, j)), R.mul(c2, w.at(k, j)));
      offset += R.val(c1).value();
    }
    val += R.val(w.at(k, k)).value();
  }
  return Valuation::finite(val - offset);
}

// ---------------------------------------------------------------------------
// Echelon forms over the ring itself (two-sided Euclidean reduction).

namespace detail {

/// Column echelon form by invertible right column operations (Euclidean
/// steps, swaps, unit scalings). Pivot rows strictly increase and each pivot
/// is the only nonzero entry of its row among the pivot columns and the
/// still-active columns. If `transform` is non-null (cols x cols), A_in *
/// transform_out = A_out. Returns the number of pivot columns; the remaining
/// columns are zero.
template <class Ring>
int column_echelon_ring(Mat<Ring>& w, Mat<Ring>* transform, bool reduce_off_pivots) {
  const Ring& R = w.ring;
  auto col_axpy = [&](int dst, int src, const typename Ring::Elem& q) {
    // col_dst -= col_src * q
    for (int i = 0; i < w.rows; ++i) w.at(i, dst) = R.sub(w.at(i, dst), R.mul(w.at(i, src), q));
    if (transform)
      for (int i = 0; i < transform->rows; ++i)
        transform->at(i, dst) = R.sub(transform->at(i, dst), R.mul(transform->at(i, src), q));
  };
  auto col_swap = [&](int a, int b) {
    if (a == b) return;
    for (int i = 0; i < w.rows; ++i) std::swap(w.at(i, a), w.at(i, b));
    if (transform)
      for (int i = 0; i < transform->rows; ++i) std::swap(transform->at(i, a), transform->at(i, b));
  };
  auto col_scale = [&](int c, const typename Ring::Elem& u) {
    for (int i = 0; i < w.rows; ++i) w.at(i, c) = R.mul(w.at(i, c), u);
    if (transform)
      for (int i = 0; i < transform->rows; ++i) transform->at(i, c) = R.mul(transform->at(i, c), u);
  };

  int next = 0;
  for (int row = 0; row < w.rows && next < w.cols; ++row) {
    while (true) {
      int count = 0, k = -1;
      Int best = 0;
      for (int j = next; j < w.cols; ++j) {
        if (R.is_zero(w.at(row, j))) continue;
        ++count;
        Int size = R.euclid_size(w.at(row, j));
        if (k < 0 || size < best) {
          k = j;
          best = size;
        }
      }
      if (count == 0) { k = -1; }
      if (count <= 1) {
        if (k >= 0) {
          col_swap(k, next);
          auto u = R.pivot_unit_right(w.at(row, next));
          if (!R.equal(u, R.one())) col_scale(next, u);
          if (reduce_off_pivots) {
            for (int j = 0; j < next; ++j) {
              if (R.is_zero(w.at(row, j))) continue;
              auto [q, r] = R.divmod_right(w.at(row, j), w.at(row, next));
              (void)r;
              if (!R.is_zero(q)) col_axpy(j, next, q);
            }
          }
          ++next;
        }
        break;
      }
      for (int j = next; j < w.cols; ++j) {
        if (j == k || R.is_zero(w.at(row, j))) continue;
        auto [q, r] = R.divmod_right(w.at(row, j), w.at(row, k));
        (void)r;
        if (!R.is_zero(q)) col_axpy(j, k, q);
      }
    }
  }
  return next;
}

/// Row echelon form by invertible left row operations; mirror image of
/// column_echelon_ring. transform_out * A_in = A_out when tracked.
template <class Ring>
int row_echelon_ring(Mat<Ring>& w, Mat<Ring>* transform, bool reduce_off_pivots) {
  const Ring& R = w.ring;
  auto row_axpy = [&](int dst, int src, const typename Ring::Elem& q) {
    // row_dst -= q * row_src
    for (int j = 0; j < w.cols; ++j) w.at(dst, j) = R.sub(w.at(dst, j), R.mul(q, w.at(src, j)));
    if (transform)
      for (int j = 0; j < transform->cols; ++j)
        transform->at(dst, j) = R.sub(transform->at(dst, j), R.mul(q, transform->at(src, j)));
  };
  auto row_swap = [&](int a, int b) {
    if (a == b) return;
    for (int j = 0; j < w.cols; ++j) std::swap(w.at(a, j), w.at(b, j));
    if (transform)
      for (int j = 0; j < transform->cols; ++j) std::swap(transform->at(a, j), transform->at(b, j));
  };
  auto row_scale = [&](int r, const typename Ring::Elem& u) {
    for (int j = 0; j < w.cols; ++j) w.at(r, j) = R.mul(u, w.at(r, j));
    if (transform)
      for (int j = 0; j < transform->cols; ++j) transform->at(r, j) = R.mul(u, transform->at(r, j));
  };

  int next = 0;
  for (int col = 0; col < w.cols && next < w.rows; ++col) {
    while (true) {
      int count = 0, k = -1;
      Int best = 0;
      for (int i = next; i < w.rows; ++i) {
        if (R.is_zero(w.at(i, col))) continue;
        ++count;
        Int size = R.euclid_size(w.at(i, col));
        if (k < 0 || size < best) {
          k = i;
          best = size;
        }
      }
      if (count <= 1) {
        if (count == 1) {
          row_swap(k, next);
          auto u = R.pivot_unit_left(w.at(next, col));
          if (!R.equal(u, R.one())) row_scale(next, u);
          if (reduce_off_pivots) {
            for (int i = 0; i < next; ++i) {
              if (R.is_zero(w.at(i, col))) continue;
              auto [q, r] = R.divmod_left(w.at(i, col), w.at(next, col));
              (void)r;
              if (!R.is_zero(q)) row_axpy(i, next, q);
            }
          }
          ++next;
        }
        break;
      }
      for (int i = next; i < w.rows; ++i) {
        if (i == k || R.is_zero(w.at(i, col))) continue;
        auto [q, r] = R.divmod_left(w.at(i, col), w.at(k, col));
        (void)r;
        if (!R.is_zero(q)) row_axpy(i, k, q);
      }
    }
  }
  return next;
}

}  // namespace detail

/// Echelon form of a module presentation with zero generators dropped:
/// column echelon for right column modules, row echelon for left row
/// modules. Pivots are normalized per ring (monic / positive / canonical
/// unit orbit) and off-pivot entries are division-reduced.
template <class Ring>
Mat<Ring> hermite_form(const Mat<Ring>& m) {
  Mat<Ring> w = m;
  if (m.orient == Orientation::right_columns) {
    int r = detail::column_echelon_ring(w, static_cast<Mat<Ring>*>(nullptr), true);
    Mat<Ring> out{m.ring, m.orient, m.rows, r, {}};
    for (int i = 0; i < m.rows; ++i)
      for (int j = 0; j < r; ++j) out.a.push_back(w.at(i, j));
    return out;
  }
  int r = detail::row_echelon_ring(w, static_cast<Mat<Ring>*>(nullptr), true);
  Mat<Ring> out{m.ring, m.orient, r, m.cols, {}};
  out.a.assign(w.a.begin(), w.a.begin() + static_cast<std::size_t>(r) * m.cols);
  return out;
}

/// Generators of { x : M x = 0 } (a right column module in ring^cols) for a
/// left-row presentation M. Complete: the columns of the tracked transform
/// under the zero columns of the echelon form generate the full kernel
/// module, not just its Q-span.
template <class Ring>
Mat<Ring> ring_kernel_right(const Mat<Ring>& m) {
  Mat<Ring> w = m;
  Mat<Ring> u = Mat<Ring>::zero(m.ring, Orientation::right_columns, m.cols, m.cols);
  for (int i = 0; i < m.cols; ++i) u.at(i, i) = m.ring.one();
  int r = detail::column_echelon_ring(w, &u, false);
  Mat<Ring> out{m.ring, Orientation::right_columns, m.cols, m.cols - r, {}};
  for (int i = 0; i < m.cols; ++i)
    for (int j = r; j < m.cols; ++j) out.a.push_back(u.at(i, j));
  return out;
}

/// Generators of { c : c M = 0 } (a left row module in ring^rows).
template <class Ring>
Mat<Ring> ring_kernel_left(const Mat<Ring>& m) {
  Mat<Ring> w = m;
  Mat<Ring> e = Mat<Ring>::zero(m.ring, Orientation::left_rows, m.rows, m.rows);
  for (int i = 0; i < m.rows; ++i) e.at(i, i) = m.ring.one();
  int r = detail::row_echelon_ring(w, &e, false);
  Mat<Ring> out{m.ring, Orientation::left_rows, m.rows - r, m.rows, {}};
  for (int i = r; i < m.rows; ++i)
    for (int j = 0; j < m.rows; ++j) out.a.push_back(e.at(i, j));
  return out;
}

/// Orthogonal complement under <phi, psi> = sum_i phi_i psi_i. A right
/// column module maps to the left module of row vectors annihilating it,
/// and vice versa; the result is saturated by construction.
template <class Ring>
Mat<Ring> perp(const Mat<Ring>& m) {
  if (m.orient == Orientation::right_columns) return ring_kernel_left(m);
  return ring_kernel_right(m);
}

/// Saturation N^sat = NQ intersect ring^n, computed as the double
/// orthogonal complement.
template <class Ring>
Mat<Ring> saturate(const Mat<Ring>& m) {
  return perp(perp(m));
}

/// Solves w = sum col_j x_j over the ring against a column-echelon basis.
/// Echelon structure forces each coefficient in turn, so greedy exact
/// division decides membership.
template <class Ring>
bool echelon_member_column(const Mat<Ring>& h, std::vector<typename Ring::Elem> w) {
  const Ring& R = h.ring;
  for (int j = 0; j < h.cols; ++j) {
    int prow = -1;
    for (int i = 0; i < h.rows; ++i)
      if (!R.is_zero(h.at(i, j))) {
        prow = i;
        break;
      }
    if (prow < 0) continue;
    if (R.is_zero(w[prow])) continue;
    auto q = R.exact_right_quotient(h.at(prow, j), w[prow]);
    if (!q) return false;
    for (int i = 0; i < h.rows; ++i) w[i] = R.sub(w[i], R.mul(h.at(i, j), *q));
  }
  for (const auto& x : w)
    if (!R.is_zero(x)) return false;
  return true;
}

/// Mirror of echelon_member_column for left row modules.
template <class Ring>
bool echelon_member_row(const Mat<Ring>& h, std::vector<typename Ring::Elem> w) {
  const Ring& R = h.ring;
  for (int i = 0; i < h.rows; ++i) {
    int pcol = -1;
    for (int j = 0; j < h.cols; ++j)
      if (!R.is_zero(h.at(i, j))) {
        pcol = j;
        break;
      }
    if (pcol < 0) continue;
    if (R.is_zero(w[pcol])) continue;
    auto q = R.exact_left_quotient(h.at(i, pcol), w[pcol]);
    if (!q) return false;
    for (int j = 0; j < h.cols; ++j) w[j] = R.sub(w[j], R.mul(*q, h.at(i, j)));
  }
  for (const auto& x : w)
    if (!R.is_zero(x)) return false;
  return true;
}

/// Every generator of b lies in the module presented by a.
template <class Ring>
bool ring_span_contains(const Mat<Ring>& a, const Mat<Ring>& b) {
  if (a.orient != b.orient || a.ambient() != b.ambient()) return false;
  Mat<Ring> h = hermite_form(a);
  if (a.orient == Orientation::right_columns) {
    for (int j = 0; j < b.cols; ++j) {
      std::vector<typename Ring::Elem> w;
      w.reserve(b.rows);
      for (int i = 0; i < b.rows; ++i) w.push_back(b.at(i, j));
      if (!echelon_member_column(h, std::move(w))) return false;
    }
    return true;
  }
  for (int i = 0; i < b.rows; ++i) {
    std::vector<typename Ring::Elem> w;
    w.reserve(b.cols);
    for (int j = 0; j < b.cols; ++j) w.push_back(b.at(i, j));
    if (!echelon_member_row(h, std::move(w))) return false;
  }
  return true;
}

enum class SpanLevel { q_space, ring_module };

/// Same span: over Q by mutual containment of spans, over the ring by
/// mutual membership of generators (module equality).
template <class Ring>
bool span_equal(const Mat<Ring>& a, const Mat<Ring>& b, SpanLevel level) {
  if (a.orient != b.orient || a.ambient() != b.ambient()) return false;
  if (level == SpanLevel::q_space) {
    QMat<Ring> qa = qmat_of(a), qb = qmat_of(b);
    return a.orient == Orientation::right_columns ? q_span_equal_columns(qa, qb) : q_span_equal_rows(qa, qb);
  }
  return ring_span_contains(a, b) && ring_span_contains(b, a);
}

template <class Ring>
bool is_saturated(const Mat<Ring>& m) {
  return span_equal(m, saturate(m), SpanLevel::ring_module);
}

/// The dual-representation construction: V = NQ, take the orthogonal
/// complement (a left space, presented over the ring by perp), apply the
/// anti-automorphism tau entrywise to turn its rows into columns of a right
/// space, clear denominators per column by a right multiplier, saturate.
template <class Ring>
Mat<Ring> dual_module(const Mat<Ring>& n) {
  const Ring& R = n.ring;
  if (!R.supports_tau()) throw UnsupportedRingError("dual_module: ring without anti-automorphism");
  if (n.orient != Orientation::right_columns)
    throw std::invalid_argument("dual_module: expects a right column module");
  Mat<Ring> j = perp(n);  // left rows, Q-span = V^perp
  const int amb = n.rows, gens = j.rows;
  Mat<Ring> out = Mat<Ring>::zero(R, Orientation::right_columns, amb, gens);
  for (int t = 0; t < gens; ++t) {
    std::vector<typename Ring::QElem> col;
    col.reserve(amb);
    for (int i = 0; i < amb; ++i) col.push_back(R.tau(R.q_from(j.at(t, i))));
    auto [cleared, mult] = R.clear_denominators_right(col);
    (void)mult;
    for (int i = 0; i < amb; ++i) out.at(i, t) = cleared[i];
  }
  return saturate(out);
}

}  // namespace oremat
