#include "oremat/valuated.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace oremat {

Valuation ValuatedMatroid::value(std::uint32_t mask) const {
  auto it = std::lower_bound(m.bases.begin(), m.bases.end(), mask);
  if (it == m.bases.end() || *it != mask) return Valuation::infinity();
  return Valuation::finite(mu[static_cast<std::size_t>(it - m.bases.begin())]);
}

ValuatedMatroid ValuatedMatroid::normalized() const {
  ValuatedMatroid out = *this;
  if (out.mu.empty()) return out;
  std::int64_t lo = *std::min_element(out.mu.begin(), out.mu.end());
  for (auto& v : out.mu) v -= lo;
  return out;
}

bool check_valuated_exchange(const ValuatedMatroid& vm) {
  for (std::size_t x = 0; x < vm.m.bases.size(); ++x) {
    std::uint32_t b1 = vm.m.bases[x];
    for (std::size_t y = 0; y < vm.m.bases.size(); ++y) {
      std::uint32_t b2 = vm.m.bases[y];
      Valuation lhs = Valuation::finite(vm.mu[x] + vm.mu[y]);
      std::uint32_t only1 = b1 & ~b2, only2 = b2 & ~b1;
      for (int i = 0; i < vm.m.n; ++i) {
        if (!(only1 & (1u << i))) continue;
        bool ok = false;
        for (int j = 0; j < vm.m.n && !ok; ++j) {
          if (!(only2 & (1u << j))) continue;
          Valuation rhs = vm.value((b1 & ~(1u << i)) | (1u << j)) + vm.value((b2 & ~(1u << j)) | (1u << i));
          if (rhs <= lhs) ok = true;
        }
        if (!ok) return false;
      }
    }
  }
  return true;
}

ValuatedMatroid dual_valuation(const ValuatedMatroid& vm) {
  std::uint32_t full = (1u << vm.m.n) - 1;
  ValuatedMatroid out;
  out.m = matroid_dual(vm.m);
  out.mu.resize(out.m.bases.size());
  for (std::size_t i = 0; i < out.m.bases.size(); ++i) {
    Valuation v = vm.value(full & ~out.m.bases[i]);
    out.mu[i] = v.value();
  }
  return out;
}

std::optional<std::vector<Rat>> differ_by_trivial(const ValuatedMatroid& a, const ValuatedMatroid& b) {
  if (a.m != b.m) throw std::invalid_argument("differ_by_trivial: mismatched underlying matroids");
  const int n = a.m.n;
  const int rows = static_cast<int>(a.m.bases.size());
  // augmented system over Q: sum_{i in B} alpha_i = b.mu(B) - a.mu(B)
  std::vector<std::vector<Rat>> sys(rows, std::vector<Rat>(n + 1, Rat(0)));
  for (int e = 0; e < rows; ++e) {
    std::uint32_t mask = a.m.bases[e];
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) sys[e][i] = 1;
    sys[e][n] = Rat(b.mu[e] - a.mu[e]);
  }
  int rank = 0;
  std::vector<int> pivot_of_row;
  for (int col = 0; col < n && rank < rows; ++col) {
    int piv = -1;
    for (int i = rank; i < rows; ++i)
      if (sys[i][col] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(sys[piv], sys[rank]);
    Rat inv = Rat(1) / sys[rank][col];
    for (int j = col; j <= n; ++j) sys[rank][j] *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == rank || sys[i][col] == 0) continue;
      Rat f = sys[i][col];
      for (int j = col; j <= n; ++j) sys[i][j] -= f * sys[rank][j];
    }
    pivot_of_row.push_back(col);
    ++rank;
  }
  for (int i = rank; i < rows; ++i)
    if (sys[i][n] != 0) return std::nullopt;
  std::vector<Rat> alpha(n, Rat(0));
  for (int i = 0; i < rank; ++i) alpha[pivot_of_row[i]] = sys[i][n];
  return alpha;
}

std::int64_t parallel_constant(const ValuatedMatroid& vm, int i, int j) {
  if (i < 0 || j < 0 || i >= vm.m.n || j >= vm.m.n || i == j)
    throw std::invalid_argument("parallel_constant: bad element pair");
  std::uint32_t mi = 1u << i, mj = 1u << j;
  bool parallel = vm.m.is_independent(mi) && vm.m.is_independent(mj) && !vm.m.is_independent(mi | mj);
  if (!parallel) throw std::invalid_argument("parallel_constant: elements are not parallel");
  bool have = false;
  std::int64_t c = 0;
  for (std::size_t x = 0; x < vm.m.bases.size(); ++x) {
    std::uint32_t b = vm.m.bases[x];
    if (!(b & mi) || (b & mj)) continue;
    Valuation other = vm.value((b & ~mi) | mj);
    if (other.is_infinite()) continue;
    std::int64_t diff = vm.mu[x] - other.value();
    if (!have) {
      have = true;
      c = diff;
    } else if (diff != c) {
      throw std::domain_error("parallel_constant: difference is not constant");
    }
  }
  if (!have) throw std::domain_error("parallel_constant: no basis through either element");
  return c;
}

bool three_term_check(const ValuatedMatroid& vm, const std::vector<int>& s, const std::array<int, 4>& quad) {
  if (static_cast<int>(s.size()) != vm.m.r - 2)
    throw std::invalid_argument("three_term_check: |S| must be r - 2");
  std::uint32_t smask = mask_of(s);
  std::uint32_t qmask = 0;
  for (int e : quad) qmask |= (1u << e);
  if (std::popcount(qmask) != 4 || (smask & qmask))
    throw std::invalid_argument("three_term_check: quadruple must be 4 elements disjoint from S");
  auto [a, b, c, d] = quad;
  auto pair_sum = [&](int x, int y, int z, int w) {
    return vm.value(smask | (1u << x) | (1u << y)) + vm.value(smask | (1u << z) | (1u << w));
  };
  Valuation s1 = pair_sum(a, b, c, d), s2 = pair_sum(a, c, b, d), s3 = pair_sum(a, d, b, c);
  Valuation lo = min(min(s1, s2), s3);
  int hits = (s1 == lo) + (s2 == lo) + (s3 == lo);
  return hits >= 2;
}

bool three_term_check_all(const ValuatedMatroid& vm) {
  if (vm.m.r < 2) return true;
  const int n = vm.m.n;
  // iterate S over (r-2)-subsets, then quadruples over the complement
  std::vector<int> idx(vm.m.r - 2);
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
  auto quad_sweep = [&](const std::vector<int>& sset) {
    std::uint32_t smask = mask_of(sset);
    std::vector<int> rest;
    for (int e = 0; e < n; ++e)
      if (!(smask & (1u << e))) rest.push_back(e);
    if (rest.size() < 4) return true;
    for (std::size_t a = 0; a < rest.size(); ++a)
      for (std::size_t b = a + 1; b < rest.size(); ++b)
        for (std::size_t c = b + 1; c < rest.size(); ++c)
          for (std::size_t d = c + 1; d < rest.size(); ++d)
            if (!three_term_check(vm, sset, {rest[a], rest[b], rest[c], rest[d]})) return false;
    return true;
  };
  if (idx.empty()) return quad_sweep({});
  while (true) {
    if (!quad_sweep(idx)) return false;
    int i = static_cast<int>(idx.size()) - 1;
    while (i >= 0 && idx[i] == n - static_cast<int>(idx.size()) + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (std::size_t j = i + 1; j < idx.size(); ++j) idx[j] = idx[j - 1] + 1;
  }
  return true;
}

std::int64_t linear_functional(const ValuatedMatroid& vm, const std::map<std::uint32_t, std::int64_t>& coeffs) {
  std::vector<std::int64_t> incidence(vm.m.n, 0);
  for (const auto& [mask, c] : coeffs) {
    for (int e = 0; e < vm.m.n; ++e)
      if (mask & (1u << e)) incidence[e] += c;
  }
  for (std::int64_t s : incidence)
    if (s != 0) throw std::invalid_argument("linear_functional: coefficient map is not shift-invariant");
  std::int64_t total = 0;
  for (const auto& [mask, c] : coeffs) {
    Valuation v = vm.value(mask);
    if (v.is_infinite()) throw std::invalid_argument("linear_functional: coefficient on a non-basis");
    total += c * v.value();
  }
  return total;
}

bool check_circuit_identity(const ValuatedMatroid& vm, const std::vector<ValuatedCircuit>& circuits) {
  for (const auto& vc : circuits) {
    std::vector<int> c = set_of(vc.support);
    // complete C minus its smallest element to a basis; the completion D is
    // disjoint from C and works for every C - i
    std::uint32_t t = vc.support & ~(1u << c.front());
    std::uint32_t d = 0;
    for (int e = 0; e < vm.m.n && std::popcount(t | d) < vm.m.r; ++e) {
      if (vc.support & (1u << e)) continue;
      if (vm.m.is_independent(t | d | (1u << e))) d |= (1u << e);
    }
    for (int i : c) {
      for (int j : c) {
        Valuation lhs = vm.value((vc.support & ~(1u << i)) | d) + vc.gamma[j];
        Valuation rhs = vm.value((vc.support & ~(1u << j)) | d) + vc.gamma[i];
        if (lhs != rhs) return false;
      }
    }
  }
  return true;
}

}  // namespace oremat
