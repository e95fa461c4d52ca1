#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "oremat/matroid.hpp"
#include "oremat/numeric.hpp"
#include "oremat/valuation.hpp"

namespace oremat {

/// A matroid with an integer value on each basis (infinity off the bases).
struct ValuatedMatroid {
  Matroid m;
  std::vector<std::int64_t> mu;  // aligned with m.bases

  Valuation value(std::uint32_t mask) const;
  /// Raw values shifted so the minimum over bases is 0.
  ValuatedMatroid normalized() const;
  bool operator==(const ValuatedMatroid& o) const { return m == o.m && mu == o.mu; }
};

/// mu(B) = v(det A[B]) over all r-subsets B of the ground set; finite
/// exactly on the bases.
template <class Ring>
ValuatedMatroid lindstrom_valuation(const Mat<Ring>& a);

bool check_valuated_exchange(const ValuatedMatroid& vm);

/// w*(B) = w(complement of B); dualizes the underlying matroid.
ValuatedMatroid dual_valuation(const ValuatedMatroid& vm);

/// Solves mu2(B) - mu1(B) = sum_{i in B} alpha_i over the rationals;
/// nullopt when the system is infeasible. Requires equal underlying matroids.
std::optional<std::vector<Rat>> differ_by_trivial(const ValuatedMatroid& a, const ValuatedMatroid& b);

/// Common difference mu(S+i) - mu(S+j) over all S making both bases;
/// requires i, j parallel and throws if the difference is not constant.
std::int64_t parallel_constant(const ValuatedMatroid& vm, int i, int j);

/// Minimum of the three pair sums over {a,b,c,d} split against S is attained
/// at least twice (infinity-aware).
bool three_term_check(const ValuatedMatroid& vm, const std::vector<int>& s, const std::array<int, 4>& quad);
/// The same over every (S, quadruple) choice.
bool three_term_check_all(const ValuatedMatroid& vm);

/// Sum of coeff(B) * mu(B) for a coefficient map whose signed incidence sum
/// vanishes on every ground element (so the value is invariant under
/// trivial shifts). Throws std::invalid_argument otherwise.
std::int64_t linear_functional(const ValuatedMatroid& vm, const std::map<std::uint32_t, std::int64_t>& coeffs);

struct ValuatedCircuit {
  std::uint32_t support = 0;
  std::vector<Valuation> gamma;  // length n; infinite off the support
};

/// For each circuit of the matroid of A, the valuations of the unique (up
/// to a left scalar) left dependency among the rows of the circuit.
template <class Ring>
std::vector<ValuatedCircuit> valuated_circuits(const Mat<Ring>& a);

/// mu(C-i) + gamma_j = mu(C-j) + gamma_i for all i, j in each circuit C,
/// with C-i completed to a basis by a fixed independent set disjoint from C.
bool check_circuit_identity(const ValuatedMatroid& vm, const std::vector<ValuatedCircuit>& circuits);

// ---------------------------------------------------------------------------

template <class Ring>
ValuatedMatroid lindstrom_valuation(const Mat<Ring>& a) {
  QMat<Ring> q = qmat_of(a);
  int n = a.ambient();
  int r = q_rank(q);
  ValuatedMatroid vm;
  vm.m.n = n;
  vm.m.r = r;
  std::vector<int> idx(r);
  for (int i = 0; i < r; ++i) idx[i] = i;
  if (r == 0) {
    vm.m.bases = {0};
    vm.mu = {0};
    return vm;
  }
  while (true) {
    QMat<Ring> sub = a.orient == Orientation::right_columns ? q_submatrix_rows(q, idx) : q_submatrix_cols(q, idx);
    Valuation v = dieudonne_val(sub);
    if (v.is_finite()) {
      vm.m.bases.push_back(mask_of(idx));
      vm.mu.push_back(v.value());
    }
    int i = r - 1;
    while (i >= 0 && idx[i] == n - r + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
  // masks arrive in lexicographic order of the index lists; re-sort numerically
  std::vector<std::size_t> order(vm.m.bases.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t x, std::size_t y) { return vm.m.bases[x] < vm.m.bases[y]; });
  Matroid sorted;
  sorted.n = n;
  sorted.r = r;
  std::vector<std::int64_t> mu_sorted;
  for (std::size_t i : order) {
    sorted.bases.push_back(vm.m.bases[i]);
    mu_sorted.push_back(vm.mu[i]);
  }
  vm.m = std::move(sorted);
  vm.mu = std::move(mu_sorted);
  return vm;
}

template <class Ring>
std::vector<ValuatedCircuit> valuated_circuits(const Mat<Ring>& a) {
  if (a.orient != Orientation::right_columns)
    throw std::invalid_argument("valuated_circuits: expects a right column module");
  QMat<Ring> q = qmat_of(a);
  Matroid m = matroid_from_matrix(q, a.orient);
  std::vector<ValuatedCircuit> out;
  for (std::uint32_t cmask : matroid_circuits(m)) {
    std::vector<int> c = set_of(cmask);
    QMat<Ring> sub = q_submatrix_rows(q, c);
    QMat<Ring> ker = left_kernel(sub);
    if (ker.rows != 1) throw ComputeError("valuated_circuits: circuit dependency not one-dimensional");
    ValuatedCircuit vc;
    vc.support = cmask;
    vc.gamma.assign(m.n, Valuation::infinity());
    for (std::size_t t = 0; t < c.size(); ++t) vc.gamma[c[t]] = a.ring.q_val(ker.at(0, static_cast<int>(t)));
    out.push_back(std::move(vc));
  }
  return out;
}

}  // namespace oremat
