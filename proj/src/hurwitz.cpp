#include "oremat/hurwitz.hpp"

#include <sstream>
#include <stdexcept>

namespace oremat {

namespace {

Int parity(const Int& x) { return ((x % 2) + 2) % 2; }

bool lex_less(const std::array<Int, 4>& a, const std::array<Int, 4>& b) {
  for (int i = 0; i < 4; ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

// Squared doubled-space distance |W - N t|^2 between W/N and t, scaled by N^2.
Int dist2_scaled(const std::array<Int, 4>& w, const Int& n, const std::array<Int, 4>& t) {
  Int s = 0;
  for (int i = 0; i < 4; ++i) {
    Int d = w[i] - n * t[i];
    s += d * d;
  }
  return s;
}

// Nearest integer of the given parity (0 or 1) to the rational w/n, n > 0;
// an exact midpoint rounds down.
Int nearest_with_parity(const Int& w, const Int& n, int par) {
  // candidates around floor(w/n) with the required parity
  Int f = floor_div(w, n);
  Int lo = f;
  if (parity(lo) != par) lo -= 1;
  Int hi = lo + 2;
  Int dl = w - n * lo;      // >= 0
  Int dh = n * hi - w;      // >= 0
  if (dl <= dh) return lo;  // ties toward the smaller candidate
  return hi;
}

}  // namespace

Hurwitz::Hurwitz(Int A, Int B, Int C, Int D) : c_{std::move(A), std::move(B), std::move(C), std::move(D)} {
  Int par = parity(c_[0]);
  for (int i = 1; i < 4; ++i) {
    if (parity(c_[i]) != par) throw InvariantError("Hurwitz: doubled coordinates must share parity");
  }
}

bool Hurwitz::is_zero() const { return c_[0] == 0 && c_[1] == 0 && c_[2] == 0 && c_[3] == 0; }

Hurwitz Hurwitz::operator+(const Hurwitz& o) const {
  return Hurwitz(c_[0] + o.c_[0], c_[1] + o.c_[1], c_[2] + o.c_[2], c_[3] + o.c_[3]);
}

Hurwitz Hurwitz::operator-(const Hurwitz& o) const {
  return Hurwitz(c_[0] - o.c_[0], c_[1] - o.c_[1], c_[2] - o.c_[2], c_[3] - o.c_[3]);
}

Hurwitz Hurwitz::operator-() const { return Hurwitz(-c_[0], -c_[1], -c_[2], -c_[3]); }

Hurwitz Hurwitz::operator*(const Hurwitz& o) const {
  // product of doubled coordinates carries a factor 2; the order is closed
  // under multiplication, so the halves are exact
  const Int &a = c_[0], &b = c_[1], &c = c_[2], &d = c_[3];
  const Int &e = o.c_[0], &f = o.c_[1], &g = o.c_[2], &h = o.c_[3];
  Int A = a * e - b * f - c * g - d * h;
  Int B = a * f + b * e + c * h - d * g;
  Int C = a * g - b * h + c * e + d * f;
  Int D = a * h + b * g - c * f + d * e;
  if (A % 2 != 0 || B % 2 != 0 || C % 2 != 0 || D % 2 != 0)
    throw std::logic_error("Hurwitz: product not in the order");
  return Hurwitz(A / 2, B / 2, C / 2, D / 2);
}

Hurwitz Hurwitz::conjugate() const { return Hurwitz(c_[0], -c_[1], -c_[2], -c_[3]); }

Int Hurwitz::norm() const {
  Int s = c_[0] * c_[0] + c_[1] * c_[1] + c_[2] * c_[2] + c_[3] * c_[3];
  if (s % 4 != 0) throw std::logic_error("Hurwitz: norm not integral");
  return s / 4;
}

std::string Hurwitz::str() const {
  std::ostringstream os;
  bool half = parity(c_[0]) == 1;
  auto emit = [&](const Int& v, const char* sym, bool& first) {
    if (v == 0) return;
    Int num = half ? v : v / 2;
    if (!first && num >= 0) os << "+";
    first = false;
    if (half) {
      os << num << "/2";
      if (*sym) os << "*" << sym;
    } else {
      if (*sym) {
        if (num == 1)
          os << sym;
        else if (num == -1)
          os << "-" << sym;
        else
          os << num << "*" << sym;
      } else {
        os << num;
      }
    }
  };
  bool first = true;
  emit(c_[0], "", first);
  emit(c_[1], "i", first);
  emit(c_[2], "j", first);
  emit(c_[3], "k", first);
  if (first) os << "0";
  return os.str();
}

std::pair<Hurwitz, Hurwitz> hurwitz_divmod_left(const Hurwitz& a, const Hurwitz& b) {
  if (b.is_zero()) throw std::domain_error("hurwitz_divmod: division by zero");
  // a b^{-1} = a conj(b) / N(b); round the exact rational point
  Hurwitz w = a * b.conjugate();
  Int n = b.norm();
  const auto& wd = w.doubled();
  std::array<Int, 4> even, odd;
  for (int i = 0; i < 4; ++i) {
    even[i] = nearest_with_parity(wd[i], n, 0);
    odd[i] = nearest_with_parity(wd[i], n, 1);
  }
  Int de = dist2_scaled(wd, n, even);
  Int dod = dist2_scaled(wd, n, odd);
  std::array<Int, 4> pick;
  if (de < dod)
    pick = even;
  else if (dod < de)
    pick = odd;
  else
    pick = lex_less(even, odd) ? even : odd;
  Hurwitz q(pick[0], pick[1], pick[2], pick[3]);
  Hurwitz r = a - q * b;
  if (!(r.norm() < b.norm())) throw std::logic_error("hurwitz_divmod: remainder bound violated");
  return {q, r};
}

std::pair<Hurwitz, Hurwitz> hurwitz_divmod_right(const Hurwitz& a, const Hurwitz& b) {
  if (b.is_zero()) throw std::domain_error("hurwitz_divmod: division by zero");
  Hurwitz w = b.conjugate() * a;  // b^{-1} a scaled by N(b)
  Int n = b.norm();
  const auto& wd = w.doubled();
  std::array<Int, 4> even, odd;
  for (int i = 0; i < 4; ++i) {
    even[i] = nearest_with_parity(wd[i], n, 0);
    odd[i] = nearest_with_parity(wd[i], n, 1);
  }
  Int de = dist2_scaled(wd, n, even);
  Int dod = dist2_scaled(wd, n, odd);
  std::array<Int, 4> pick;
  if (de < dod)
    pick = even;
  else if (dod < de)
    pick = odd;
  else
    pick = lex_less(even, odd) ? even : odd;
  Hurwitz q(pick[0], pick[1], pick[2], pick[3]);
  Hurwitz r = a - b * q;
  if (!(r.norm() < b.norm())) throw std::logic_error("hurwitz_divmod: remainder bound violated");
  return {q, r};
}

std::optional<Hurwitz> hurwitz_exact_right_quotient(const Hurwitz& b, const Hurwitz& a) {
  if (a.is_zero()) return Hurwitz::zero();
  if (b.is_zero()) return std::nullopt;
  Hurwitz w = b.conjugate() * a;
  Int n = b.norm();
  std::array<Int, 4> q;
  for (int i = 0; i < 4; ++i) {
    if (w.doubled()[i] % n != 0) return std::nullopt;
    q[i] = w.doubled()[i] / n;
  }
  Int par = ((q[0] % 2) + 2) % 2;
  for (int i = 1; i < 4; ++i)
    if (((q[i] % 2) + 2) % 2 != par) return std::nullopt;
  return Hurwitz(q[0], q[1], q[2], q[3]);
}

std::optional<Hurwitz> hurwitz_exact_left_quotient(const Hurwitz& b, const Hurwitz& a) {
  if (a.is_zero()) return Hurwitz::zero();
  if (b.is_zero()) return std::nullopt;
  Hurwitz w = a * b.conjugate();
  Int n = b.norm();
  std::array<Int, 4> q;
  for (int i = 0; i < 4; ++i) {
    if (w.doubled()[i] % n != 0) return std::nullopt;
    q[i] = w.doubled()[i] / n;
  }
  Int par = ((q[0] % 2) + 2) % 2;
  for (int i = 1; i < 4; ++i)
    if (((q[i] % 2) + 2) % 2 != par) return std::nullopt;
  return Hurwitz(q[0], q[1], q[2], q[3]);
}

const std::array<Hurwitz, 24>& hurwitz_units() {
  static const std::array<Hurwitz, 24> units = [] {
    std::array<Hurwitz, 24> u;
    int idx = 0;
    for (int s = -1; s <= 1; s += 2)
      for (int pos = 0; pos < 4; ++pos) {
        std::array<Int, 4> c{0, 0, 0, 0};
        c[pos] = 2 * s;
        u[idx++] = Hurwitz(c[0], c[1], c[2], c[3]);
      }
    for (int s0 = -1; s0 <= 1; s0 += 2)
      for (int s1 = -1; s1 <= 1; s1 += 2)
        for (int s2 = -1; s2 <= 1; s2 += 2)
          for (int s3 = -1; s3 <= 1; s3 += 2) u[idx++] = Hurwitz(s0, s1, s2, s3);
    return u;
  }();
  return units;
}

Hurwitz hurwitz_unit_normalize_right(const Hurwitz& q) {
  if (q.is_zero()) return q;
  Hurwitz best = q;
  for (const auto& u : hurwitz_units()) {
    Hurwitz cand = q * u;
    if (lex_less(cand.doubled(), best.doubled())) best = cand;
  }
  return best;
}

Hurwitz hurwitz_unit_normalize_left(const Hurwitz& q) {
  if (q.is_zero()) return q;
  Hurwitz best = q;
  for (const auto& u : hurwitz_units()) {
    Hurwitz cand = u * q;
    if (lex_less(cand.doubled(), best.doubled())) best = cand;
  }
  return best;
}

}  // namespace oremat
