#pragma once

#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "oremat/fq.hpp"
#include "oremat/linalg.hpp"
#include "oremat/matroid.hpp"
#include "oremat/valuated.hpp"

namespace oremat {

/// An L-subspace of L^n given by a reduced basis matrix, computed at a
/// shift vector alpha.
struct FlockSlice {
  FqContextPtr field;
  FqMat basis;  // n rows, dim columns
  std::vector<std::int64_t> alpha;
};

struct FlockReport {
  bool ok = true;
  std::int64_t points = 0;
  std::string first_violation;
};

/// Shared state for slice computations over one module: the saturated
/// presentation, its Q-matrix, and (lazily) the Lindstrom valuation for the
/// argmin route.
template <class Ring>
class FlockEngine {
 public:
  explicit FlockEngine(const Mat<Ring>& n) : ring_(n.ring) {
    if (!ring_.supports_flock())
      throw UnsupportedRingError("flock: ring without residue data (quaternion slices are not provided)");
    if (n.orient != Orientation::right_columns)
      throw std::invalid_argument("flock: expects a right column module");
    sat_ = saturate(n);
    q_ = qmat_of(sat_);
    field_ = ring_.residue_field();
  }

  const Mat<Ring>& saturated() const { return sat_; }
  int ambient() const { return sat_.rows; }
  int rank() const { return sat_.cols; }

  /// Reduction of (pi^-alpha V) intersect R^n: scale rows by pi^-alpha_i on
  /// the left, right-scale each column to minimum valuation 0, then while
  /// the residues are dependent, combine columns along a lifted dependency
  /// to strictly raise one column's minimum valuation and rescale. The
  /// valuation of a fixed maximal minor bounds the extracted power, so the
  /// loop terminates; a generous cap guards against bugs.
  FlockSlice slice(const std::vector<std::int64_t>& alpha) const {
    const int n = sat_.rows, r = sat_.cols;
    if (static_cast<int>(alpha.size()) != n) throw std::invalid_argument("flock_slice: alpha length mismatch");
    QMat<Ring> w = q_;
    for (int i = 0; i < n; ++i) {
      if (alpha[i] == 0) continue;
      auto s = ring_.q_uniformizer_pow(-alpha[i]);
      for (int j = 0; j < r; ++j) w.at(i, j) = ring_.q_mul(s, w.at(i, j));
    }
    std::int64_t max_abs = 0;
    for (auto a : alpha) max_abs = std::max(max_abs, a < 0 ? -a : a);
    std::int64_t spread = 0;
    for (int j = 0; j < r; ++j) {
      bool seen = false;
      std::int64_t lo = 0, hi = 0;
      for (int i = 0; i < n; ++i) {
        Valuation v = ring_.q_val(w.at(i, j));
        if (v.is_infinite()) continue;
        if (!seen) {
          lo = hi = v.value();
          seen = true;
        } else {
          lo = std::min(lo, v.value());
          hi = std::max(hi, v.value());
        }
      }
      spread += seen ? hi - lo : 0;
      normalize_column(w, j);
    }
    std::int64_t cap = static_cast<std::int64_t>(n) * r * (1 + max_abs) + spread + n + r + 8;
    FqMat red = residues(w);
    for (std::int64_t iter = 0;; ++iter) {
      std::vector<FqElem> dep = fq_column_dependency(red);
      if (dep.empty()) break;
      if (iter > cap) throw ComputeError("flock_slice: normalization exceeded its iteration cap");
      int t = -1;
      for (int j = r - 1; j >= 0; --j)
        if (!dep[j].is_zero()) {
          t = j;
          break;
        }
      // col_t <- sum_j col_j * lift(dep_j); the residue of the result is the
      // dependency value 0, so the minimum valuation strictly increases
      for (int i = 0; i < n; ++i) {
        auto acc = ring_.q_zero();
        for (int j = 0; j < r; ++j) {
          if (dep[j].is_zero()) continue;
          acc = ring_.q_add(acc, ring_.q_mul(w.at(i, j), q_from_residue(dep[j])));
        }
        w.at(i, t) = acc;
      }
      normalize_column(w, t);
      for (int i = 0; i < n; ++i) red.at(i, t) = residue_of(w.at(i, t));
    }
    return FlockSlice{field_, std::move(red), alpha};
  }

  Matroid matroid_slice(const std::vector<std::int64_t>& alpha) const {
    FlockSlice s = slice(alpha);
    return matroid_of_fq_rows(s.basis);
  }

  Matroid matroid_argmin(const std::vector<std::int64_t>& alpha) const {
    const ValuatedMatroid& vm = valuation();
    Matroid out;
    out.n = vm.m.n;
    out.r = vm.m.r;
    bool seen = false;
    std::int64_t best = 0;
    std::vector<std::pair<std::int64_t, std::uint32_t>> scored;
    for (std::size_t i = 0; i < vm.m.bases.size(); ++i) {
      std::int64_t score = vm.mu[i];
      for (int e = 0; e < vm.m.n; ++e)
        if (vm.m.bases[i] & (1u << e)) score -= alpha[e];
      scored.emplace_back(score, vm.m.bases[i]);
      if (!seen || score < best) {
        best = score;
        seen = true;
      }
    }
    for (auto& [score, mask] : scored)
      if (score == best) out.bases.push_back(mask);
    if (out.bases.empty()) out.bases.push_back(0);
    return out;
  }

  const ValuatedMatroid& valuation() const {
    if (!vm_ready_) {
      vm_ = lindstrom_valuation(sat_);
      vm_ready_ = true;
    }
    return vm_;
  }

  FqElem residue_of(const typename Ring::QElem& x) const { return ring_.residue(x); }

  static Matroid matroid_of_fq_rows(const FqMat& basis) {
    return matroid_from_oracle(basis.rows, [&](const std::vector<int>& subset) {
      FqMat sub{basis.ctx, static_cast<int>(subset.size()), basis.cols, {}};
      for (int i : subset)
        for (int j = 0; j < basis.cols; ++j) sub.a.push_back(basis.at(i, j));
      return fq_rank(sub) == static_cast<int>(subset.size());
    });
  }

 private:
  void normalize_column(QMat<Ring>& w, int j) const {
    bool seen = false;
    std::int64_t lo = 0;
    for (int i = 0; i < w.rows; ++i) {
      Valuation v = ring_.q_val(w.at(i, j));
      if (v.is_infinite()) continue;
      if (!seen || v.value() < lo) {
        lo = v.value();
        seen = true;
      }
    }
    if (!seen) throw ComputeError("flock_slice: zero column in a full-rank presentation");
    if (lo == 0) return;
    auto s = ring_.q_uniformizer_pow(-lo);
    for (int i = 0; i < w.rows; ++i) w.at(i, j) = ring_.q_mul(w.at(i, j), s);
  }

  typename Ring::QElem q_from_residue(const FqElem& c) const {
    return ring_.q_from(ring_.elem_from_residue(c));
  }

  FqMat residues(const QMat<Ring>& w) const {
    FqMat red = FqMat::zero(field_, w.rows, w.cols);
    for (int i = 0; i < w.rows; ++i)
      for (int j = 0; j < w.cols; ++j) red.at(i, j) = ring_.residue(w.at(i, j));
    return red;
  }

  Ring ring_;
  Mat<Ring> sat_{Ring(ring_), Orientation::right_columns, 0, 0, {}};
  QMat<Ring> q_{Ring(ring_), 0, 0, {}};
  FqContextPtr field_;
  mutable ValuatedMatroid vm_;
  mutable bool vm_ready_ = false;
};

template <class Ring>
FlockSlice flock_slice(const Mat<Ring>& n, const std::vector<std::int64_t>& alpha) {
  return FlockEngine<Ring>(n).slice(alpha);
}

enum class FlockMatroidMethod { slice, argmin };

template <class Ring>
Matroid flock_matroid(const Mat<Ring>& n, const std::vector<std::int64_t>& alpha, FlockMatroidMethod method) {
  if (method == FlockMatroidMethod::argmin) {
    // the argmin route needs no residue data, so skip the engine gate
    ValuatedMatroid vm = lindstrom_valuation(saturate(n));
    Matroid out;
    out.n = vm.m.n;
    out.r = vm.m.r;
    bool seen = false;
    std::int64_t best = 0;
    for (std::size_t i = 0; i < vm.m.bases.size(); ++i) {
      std::int64_t score = vm.mu[i];
      for (int e = 0; e < vm.m.n; ++e)
        if (vm.m.bases[i] & (1u << e)) score -= alpha[e];
      if (!seen || score < best) {
        best = score;
        seen = true;
      }
    }
    for (std::size_t i = 0; i < vm.m.bases.size(); ++i) {
      std::int64_t score = vm.mu[i];
      for (int e = 0; e < vm.m.n; ++e)
        if (vm.m.bases[i] & (1u << e)) score -= alpha[e];
      if (score == best) out.bases.push_back(vm.m.bases[i]);
    }
    if (out.bases.empty()) out.bases.push_back(0);
    return out;
  }
  return FlockEngine<Ring>(n).matroid_slice(alpha);
}

namespace detail {

/// Subspace of vectors in the column span whose i-th coordinate vanishes.
inline FqMat slice_quotient(const FqMat& basis, int i) {
  // coefficient solutions of the single equation row_i . c = 0
  FqMat row{basis.ctx, 1, basis.cols, {}};
  for (int j = 0; j < basis.cols; ++j) row.a.push_back(basis.at(i, j));
  std::vector<std::vector<FqElem>> coeffs;
  // kernel of a 1 x cols matrix: free columns off the first nonzero entry
  int piv = -1;
  for (int j = 0; j < basis.cols; ++j)
    if (!row.at(0, j).is_zero()) {
      piv = j;
      break;
    }
  if (piv < 0) {
    for (int j = 0; j < basis.cols; ++j) {
      std::vector<FqElem> c(basis.cols, FqElem::zero(basis.ctx));
      c[j] = FqElem::one(basis.ctx);
      coeffs.push_back(std::move(c));
    }
  } else {
    FqElem inv = row.at(0, piv).inverse();
    for (int j = 0; j < basis.cols; ++j) {
      if (j == piv) continue;
      std::vector<FqElem> c(basis.cols, FqElem::zero(basis.ctx));
      c[j] = FqElem::one(basis.ctx);
      c[piv] = -(inv * row.at(0, j));
      coeffs.push_back(std::move(c));
    }
  }
  FqMat out = FqMat::zero(basis.ctx, basis.rows, static_cast<int>(coeffs.size()));
  for (int t = 0; t < static_cast<int>(coeffs.size()); ++t)
    for (int i2 = 0; i2 < basis.rows; ++i2) {
      FqElem acc = FqElem::zero(basis.ctx);
      for (int j = 0; j < basis.cols; ++j) acc = acc + basis.at(i2, j) * coeffs[t][j];
      out.at(i2, t) = acc;
    }
  return out;
}

inline FqMat slice_delete(const FqMat& basis, int i) {
  FqMat out = basis;
  for (int j = 0; j < out.cols; ++j) out.at(i, j) = FqElem::zero(out.ctx);
  return out;
}

inline std::string alpha_str(const std::vector<std::int64_t>& alpha) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < alpha.size(); ++i) os << (i ? "," : "") << alpha[i];
  os << ")";
  return os.str();
}

/// Enumerates the box [-radius, radius]^n in lexicographic order.
inline std::vector<std::vector<std::int64_t>> alpha_box(int n, int radius) {
  std::vector<std::vector<std::int64_t>> out;
  std::vector<std::int64_t> cur(n, -radius);
  while (true) {
    out.push_back(cur);
    int i = n - 1;
    while (i >= 0 && cur[i] == radius) cur[i--] = -radius;
    if (i < 0) break;
    ++cur[i];
  }
  return out;
}

}  // namespace detail

struct FlockSweepResult {
  std::int64_t points = 0;
  // first violation per check kind, in box (lexicographic) order
  std::map<int, std::string> first_violation;
};

namespace detail {

template <class Work>
void run_chunked(std::size_t total, int threads, Work&& work) {
  if (threads <= 1 || total < 2) {
    work(0, std::size_t{0}, total);
    return;
  }
  std::vector<std::thread> pool;
  std::size_t chunk = (total + threads - 1) / threads;
  for (int t = 0; t < threads; ++t) {
    std::size_t lo = std::min(total, t * chunk);
    std::size_t hi = std::min(total, (t + 1) * chunk);
    if (lo < hi) pool.emplace_back([&work, t, lo, hi] { work(t, lo, hi); });
  }
  for (auto& th : pool) th.join();
}

}  // namespace detail

/// Computes every slice needed for a box sweep once, then visits every box
/// point; both phases run chunk-parallel, and the reported violations are
/// merged in box order so the result is independent of the thread count.
/// `visit(alpha, lookup)` returns (kind, message) pairs for any violations
/// at that point; lookup resolves any computed alpha to its slice.
template <class Ring, class Visit>
FlockSweepResult flock_box_sweep(const FlockEngine<Ring>& eng, int radius, int threads, bool need_neighbors,
                                 Visit&& visit) {
  const int n = eng.ambient();
  auto box = detail::alpha_box(n, radius);
  std::map<std::vector<std::int64_t>, std::size_t> index;
  std::vector<std::vector<std::int64_t>> needed;
  auto require = [&](std::vector<std::int64_t> a) {
    if (index.emplace(a, needed.size()).second) needed.push_back(std::move(a));
  };
  for (const auto& a : box) {
    require(a);
    if (!need_neighbors) continue;
    for (int i = 0; i < n; ++i) {
      auto b = a;
      ++b[i];
      require(std::move(b));
    }
    auto c = a;
    for (auto& x : c) --x;
    require(std::move(c));
  }
  std::vector<FlockSlice> slices(needed.size());
  detail::run_chunked(needed.size(), threads, [&](int, std::size_t lo, std::size_t hi) {
    for (std::size_t t = lo; t < hi; ++t) slices[t] = eng.slice(needed[t]);
  });
  auto lookup = [&](const std::vector<std::int64_t>& a) -> const FlockSlice& {
    return slices[index.at(a)];
  };

  int nchunks = threads <= 1 ? 1 : threads;
  std::vector<std::map<int, std::string>> partial(nchunks);
  detail::run_chunked(box.size(), threads, [&](int tid, std::size_t lo, std::size_t hi) {
    auto& mine = partial[tid];
    for (std::size_t t = lo; t < hi; ++t)
      for (auto& [kind, msg] : visit(box[t], lookup))
        mine.emplace(kind, msg);  // keeps the first within the chunk
  });
  FlockSweepResult out;
  out.points = static_cast<std::int64_t>(box.size());
  for (const auto& part : partial)
    for (const auto& [kind, msg] : part) out.first_violation.emplace(kind, msg);
  return out;
}

struct FlockBoxReport {
  FlockReport axioms;
  FlockReport consistency;
  bool ok() const { return axioms.ok && consistency.ok; }
};

/// One pass over the box verifying, per point, axiom (1):
/// V_alpha / i = V_{alpha+e_i} minus i, axiom (2):
/// V_{alpha-(1,...,1)} = phi(V_alpha), and the slice/argmin matroid
/// agreement. Slices are computed once and shared between the checks.
template <class Ring>
FlockBoxReport check_flock_box(const FlockEngine<Ring>& eng, int radius, int threads, bool axioms,
                               bool consistency) {
  const Ring& ring = eng.saturated().ring;
  if (consistency) eng.valuation();  // force before the parallel phase
  using Violations = std::vector<std::pair<int, std::string>>;
  auto rep = flock_box_sweep(
      eng, radius, threads, axioms, [&](const std::vector<std::int64_t>& a, const auto& lookup) -> Violations {
        Violations found;
        const FlockSlice& here = lookup(a);
        if (axioms) {
          for (int i = 0; i < eng.ambient(); ++i) {
            auto b = a;
            ++b[i];
            FqMat lhs = detail::slice_quotient(here.basis, i);
            FqMat rhs = detail::slice_delete(lookup(b).basis, i);
            if (!fq_same_column_span(lhs, rhs)) {
              found.emplace_back(0, "axiom 1 fails at alpha=" + detail::alpha_str(a) + ", coordinate " +
                                        std::to_string(i));
              break;
            }
          }
          auto c = a;
          for (auto& x : c) --x;
          FqMat twisted = here.basis;
          for (auto& e : twisted.a) e = ring.residue_twist(e, 1);
          if (!fq_same_column_span(lookup(c).basis, twisted))
            found.emplace_back(0, "axiom 2 fails at alpha=" + detail::alpha_str(a));
        }
        if (consistency) {
          Matroid s = FlockEngine<Ring>::matroid_of_fq_rows(here.basis);
          Matroid g = eng.matroid_argmin(a);
          if (s != g)
            found.emplace_back(1, "slice/argmin matroids differ at alpha=" + detail::alpha_str(a));
        }
        return found;
      });
  FlockBoxReport out;
  out.axioms.points = rep.points;
  out.consistency.points = rep.points;
  if (auto it = rep.first_violation.find(0); it != rep.first_violation.end()) {
    out.axioms.ok = false;
    out.axioms.first_violation = it->second;
  }
  if (auto it = rep.first_violation.find(1); it != rep.first_violation.end()) {
    out.consistency.ok = false;
    out.consistency.first_violation = it->second;
  }
  return out;
}

/// Axiom (1): V_alpha / i = V_{alpha+e_i} minus i, and axiom (2):
/// V_{alpha-(1,...,1)} = phi(V_alpha), over the whole box.
template <class Ring>
FlockReport check_flock_axioms(const Mat<Ring>& n, int radius, int threads = 1) {
  FlockEngine<Ring> eng(n);
  return check_flock_box(eng, radius, threads, true, false).axioms;
}

/// Slice matroid equals argmin matroid over the whole box.
template <class Ring>
FlockReport check_flock_valuation_consistency(const Mat<Ring>& n, int radius, int threads = 1) {
  FlockEngine<Ring> eng(n);
  return check_flock_box(eng, radius, threads, false, true).consistency;
}

}  // namespace oremat
