#pragma once

#include <stdexcept>
#include <vector>

namespace oremat {

/// Which module the matrix presents. A right column module lives in
/// ring^rows (generators are columns); a left row module lives in
/// ring^cols (generators are rows). The two are never interchangeable
/// over a noncommutative ring, so the tag is part of the type.
enum class Orientation { right_columns, left_rows };

template <class Ring>
struct Mat {
  using Elem = typename Ring::Elem;
  Ring ring;
  Orientation orient = Orientation::right_columns;
  int rows = 0, cols = 0;
  std::vector<Elem> a;  // row-major

  static Mat zero(const Ring& ring, Orientation orient, int rows, int cols) {
    Mat m{ring, orient, rows, cols, {}};
    m.a.assign(static_cast<std::size_t>(rows) * cols, ring.zero());
    return m;
  }
  Elem& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
  const Elem& at(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }
  /// Dimension of the ambient free module.
  int ambient() const { return orient == Orientation::right_columns ? rows : cols; }
  /// Number of generators presented.
  int generators() const { return orient == Orientation::right_columns ? cols : rows; }
};

template <class Ring>
struct QMat {
  using QElem = typename Ring::QElem;
  Ring ring;
  int rows = 0, cols = 0;
  std::vector<QElem> a;

  static QMat zero(const Ring& ring, int rows, int cols) {
    QMat m{ring, rows, cols, {}};
    m.a.assign(static_cast<std::size_t>(rows) * cols, ring.q_zero());
    return m;
  }
  static QMat identity(const Ring& ring, int n) {
    QMat m = zero(ring, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = ring.q_one();
    return m;
  }
  QElem& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
  const QElem& at(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }
};

template <class Ring>
QMat<Ring> qmat_of(const Mat<Ring>& m) {
  QMat<Ring> q{m.ring, m.rows, m.cols, {}};
  q.a.reserve(m.a.size());
  for (const auto& e : m.a) q.a.push_back(m.ring.q_from(e));
  return q;
}

template <class Ring>
QMat<Ring> q_submatrix_rows(const QMat<Ring>& m, const std::vector<int>& rows) {
  QMat<Ring> s{m.ring, static_cast<int>(rows.size()), m.cols, {}};
  for (int i : rows) {
    if (i < 0 || i >= m.rows) throw std::out_of_range("submatrix: row index");
    for (int j = 0; j < m.cols; ++j) s.a.push_back(m.at(i, j));
  }
  return s;
}

template <class Ring>
QMat<Ring> q_submatrix_cols(const QMat<Ring>& m, const std::vector<int>& cols) {
  QMat<Ring> s{m.ring, m.rows, static_cast<int>(cols.size()), {}};
  s.a.reserve(static_cast<std::size_t>(m.rows) * cols.size());
  for (int i = 0; i < m.rows; ++i)
    for (int j : cols) {
      if (j < 0 || j >= m.cols) throw std::out_of_range("submatrix: column index");
      s.a.push_back(m.at(i, j));
    }
  return s;
}

}  // namespace oremat
