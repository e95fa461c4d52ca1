#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "oremat/linalg.hpp"
#include "oremat/matrix.hpp"

namespace oremat {

/// A matroid on ground set {0,...,n-1} given by its bases (bitmask-encoded,
/// n <= 31). Construction validates nothing; use check_basis_exchange or
/// build through an independence oracle.
struct Matroid {
  int n = 0;
  int r = 0;
  std::vector<std::uint32_t> bases;  // sorted ascending as integers

  bool is_basis(std::uint32_t mask) const;
  /// Independent iff contained in some basis.
  bool is_independent(std::uint32_t mask) const;
  bool operator==(const Matroid& o) const { return n == o.n && r == o.r && bases == o.bases; }
  bool operator!=(const Matroid& o) const { return !(*this == o); }
};

std::uint32_t mask_of(const std::vector<int>& set);
std::vector<int> set_of(std::uint32_t mask);

/// Enumerates independent sets depth-first with prefix pruning; the bases
/// are the independent sets of maximal size.
Matroid matroid_from_oracle(int n, const std::function<bool(const std::vector<int>&)>& independent);

Matroid matroid_dual(const Matroid& m);
/// Deletion of S, ground relabeled to {0,...,n-|S|-1} preserving order.
Matroid matroid_delete(const Matroid& m, const std::vector<int>& s);
/// Contraction of S, same relabeling convention.
Matroid matroid_contract(const Matroid& m, const std::vector<int>& s);

bool check_basis_exchange(const Matroid& m);

/// All circuits (minimal dependent sets) as bitmasks.
std::vector<std::uint32_t> matroid_circuits(const Matroid& m);

/// Uniform matroid U_{r,n}.
Matroid uniform_matroid(int r, int n);

/// Independence of ground subsets through ranks over Q. The ground set is
/// the rows of a right column module and the columns of a left row module.
template <class Ring>
bool is_independent_rows(const QMat<Ring>& q, Orientation orient, const std::vector<int>& subset) {
  QMat<Ring> sub =
      orient == Orientation::right_columns ? q_submatrix_rows(q, subset) : q_submatrix_cols(q, subset);
  return q_rank(sub) == static_cast<int>(subset.size());
}

template <class Ring>
Matroid matroid_from_matrix(const QMat<Ring>& q, Orientation orient) {
  int n = orient == Orientation::right_columns ? q.rows : q.cols;
  return matroid_from_oracle(
      n, [&](const std::vector<int>& subset) { return is_independent_rows(q, orient, subset); });
}

template <class Ring>
Matroid matroid_from_matrix(const Mat<Ring>& m) {
  return matroid_from_matrix(qmat_of(m), m.orient);
}

}  // namespace oremat
