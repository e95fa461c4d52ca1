#include "oremat/matroid.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace oremat {

bool Matroid::is_basis(std::uint32_t mask) const {
  return std::binary_search(bases.begin(), bases.end(), mask);
}

bool Matroid::is_independent(std::uint32_t mask) const {
  for (std::uint32_t b : bases)
    if ((mask & b) == mask) return true;
  return false;
}

std::uint32_t mask_of(const std::vector<int>& set) {
  std::uint32_t m = 0;
  for (int e : set) {
    if (e < 0 || e >= 31) throw std::out_of_range("ground element out of range");
    m |= (1u << e);
  }
  return m;
}

std::vector<int> set_of(std::uint32_t mask) {
  std::vector<int> s;
  for (int e = 0; e < 31; ++e)
    if (mask & (1u << e)) s.push_back(e);
  return s;
}

namespace {

void enumerate_independent(int n, const std::function<bool(const std::vector<int>&)>& indep,
                           std::vector<int>& current, int next, std::vector<std::uint32_t>& out, int& best) {
  int size = static_cast<int>(current.size());
  if (size > best) {
    best = size;
    out.clear();
  }
  if (size == best) out.push_back(mask_of(current));
  for (int e = next; e < n; ++e) {
    current.push_back(e);
    if (indep(current)) enumerate_independent(n, indep, current, e + 1, out, best);
    current.pop_back();
  }
}

}  // namespace

Matroid matroid_from_oracle(int n, const std::function<bool(const std::vector<int>&)>& independent) {
  if (n < 0 || n >= 31) throw std::invalid_argument("matroid ground set must have 0 <= n < 31 elements");
  Matroid m;
  m.n = n;
  std::vector<int> current;
  int best = 0;
  std::vector<std::uint32_t> bases;
  bases.push_back(0);  // the empty set, in case rank is 0
  enumerate_independent(n, independent, current, 0, bases, best);
  m.r = best;
  std::sort(bases.begin(), bases.end());
  bases.erase(std::unique(bases.begin(), bases.end()), bases.end());
  m.bases = std::move(bases);
  return m;
}

Matroid matroid_dual(const Matroid& m) {
  Matroid d;
  d.n = m.n;
  d.r = m.n - m.r;
  std::uint32_t full = (m.n >= 31) ? 0 : ((1u << m.n) - 1);
  d.bases.reserve(m.bases.size());
  for (std::uint32_t b : m.bases) d.bases.push_back(full & ~b);
  std::sort(d.bases.begin(), d.bases.end());
  return d;
}

namespace {

// relabel a mask on [n] minus s to [n - |s|], order preserved
std::uint32_t relabel_mask(std::uint32_t mask, std::uint32_t smask, int n) {
  std::uint32_t out = 0;
  int pos = 0;
  for (int e = 0; e < n; ++e) {
    if (smask & (1u << e)) continue;
    if (mask & (1u << e)) out |= (1u << pos);
    ++pos;
  }
  return out;
}

void combinations(int n, int k, const std::function<void(std::uint32_t)>& fn) {
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  if (k > n) return;
  while (true) {
    std::uint32_t mask = 0;
    for (int i : idx) mask |= (1u << i);
    fn(mask);
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

Matroid matroid_delete(const Matroid& m, const std::vector<int>& s) {
  std::uint32_t smask = mask_of(s);
  int ns = std::popcount(smask);
  Matroid out;
  out.n = m.n - ns;
  int rr = 0;
  for (std::uint32_t b : m.bases) rr = std::max(rr, std::popcount(b & ~smask));
  out.r = rr;
  // bases: independent subsets of the complement of size rr
  std::vector<std::uint32_t> keep;
  for (int e = 0; e < m.n; ++e)
    if (!(smask & (1u << e))) keep.push_back(1u << e);
  combinations(static_cast<int>(keep.size()), rr, [&](std::uint32_t small) {
    std::uint32_t mask = 0;
    for (int i = 0; i < static_cast<int>(keep.size()); ++i)
      if (small & (1u << i)) mask |= keep[i];
    if (m.is_independent(mask)) out.bases.push_back(relabel_mask(mask, smask, m.n));
  });
  std::sort(out.bases.begin(), out.bases.end());
  if (out.bases.empty()) out.bases.push_back(0);
  return out;
}

Matroid matroid_contract(const Matroid& m, const std::vector<int>& s) {
  std::uint32_t smask = mask_of(s);
  int ns = std::popcount(smask);
  int rs = 0;
  for (std::uint32_t b : m.bases) rs = std::max(rs, std::popcount(b & smask));
  Matroid out;
  out.n = m.n - ns;
  out.r = m.r - rs;
  for (std::uint32_t b : m.bases) {
    if (std::popcount(b & smask) != rs) continue;
    out.bases.push_back(relabel_mask(b & ~smask, smask, m.n));
  }
  std::sort(out.bases.begin(), out.bases.end());
  out.bases.erase(std::unique(out.bases.begin(), out.bases.end()), out.bases.end());
  if (out.bases.empty()) out.bases.push_back(0);
  return out;
}

bool check_basis_exchange(const Matroid& m) {
  if (m.bases.empty()) return false;
  for (std::uint32_t b1 : m.bases) {
    if (std::popcount(b1) != m.r) return false;
    for (std::uint32_t b2 : m.bases) {
      std::uint32_t only1 = b1 & ~b2, only2 = b2 & ~b1;
      for (int i = 0; i < m.n; ++i) {
        if (!(only1 & (1u << i))) continue;
        bool found = false;
        for (int j = 0; j < m.n && !found; ++j) {
          if (!(only2 & (1u << j))) continue;
          if (m.is_basis((b1 & ~(1u << i)) | (1u << j))) found = true;
        }
        if (!found) return false;
      }
    }
  }
  return true;
}

std::vector<std::uint32_t> matroid_circuits(const Matroid& m) {
  std::vector<std::uint32_t> circuits;
  for (int s = 1; s <= m.r + 1 && s <= m.n; ++s) {
    combinations(m.n, s, [&](std::uint32_t mask) {
      if (m.is_independent(mask)) return;
      for (std::uint32_t c : circuits)
        if ((mask & c) == c) return;  // contains a smaller circuit
      circuits.push_back(mask);
    });
  }
  std::sort(circuits.begin(), circuits.end());
  return circuits;
}

Matroid uniform_matroid(int r, int n) {
  Matroid m;
  m.n = n;
  m.r = r;
  combinations(n, r, [&](std::uint32_t mask) { m.bases.push_back(mask); });
  std::sort(m.bases.begin(), m.bases.end());
  if (m.bases.empty()) m.bases.push_back(0);
  return m;
}

}  // namespace oremat
