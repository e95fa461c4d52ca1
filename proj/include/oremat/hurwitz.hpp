#pragma once

#include <array>
#include <optional>
#include <string>

#include "oremat/numeric.hpp"

namespace oremat {

/// A Hurwitz quaternion (a + bi + cj + dk)/2 stored by its doubled
/// coordinates (A,B,C,D) = (2a,2b,2c,2d). The parity invariant A=B=C=D
/// (mod 2) selects exactly the integer- and half-integer-coordinate points.
class Hurwitz {
 public:
  Hurwitz() : c_{0, 0, 0, 0} {}
  /// From doubled coordinates; enforces the parity invariant.
  Hurwitz(Int A, Int B, Int C, Int D);
  static Hurwitz from_int(const Int& n) { return Hurwitz(2 * n, 0, 0, 0); }
  static Hurwitz zero() { return Hurwitz(); }
  static Hurwitz one() { return from_int(1); }
  static Hurwitz unit_i() { return Hurwitz(0, 2, 0, 0); }

  const std::array<Int, 4>& doubled() const { return c_; }
  bool is_zero() const;

  Hurwitz operator+(const Hurwitz& o) const;
  Hurwitz operator-(const Hurwitz& o) const;
  Hurwitz operator-() const;
  Hurwitz operator*(const Hurwitz& o) const;
  bool operator==(const Hurwitz& o) const { return c_ == o.c_; }
  bool operator!=(const Hurwitz& o) const { return !(*this == o); }

  Hurwitz conjugate() const;
  /// N(q) = (A^2+B^2+C^2+D^2)/4, a nonnegative integer; multiplicative.
  Int norm() const;

  std::string str() const;

 private:
  std::array<Int, 4> c_;  // doubled coordinates
};

/// q ~ a*b^{-1} rounded to the order, r = a - q*b, with N(r) < N(b).
/// Rounding picks the nearer of the best integer- and half-integer-
/// coordinate points; exact ties go to the lexicographically smaller
/// doubled-coordinate tuple. The Hurwitz lattice has covering radius
/// below 1, so the remainder bound always holds.
std::pair<Hurwitz, Hurwitz> hurwitz_divmod_left(const Hurwitz& a, const Hurwitz& b);
/// Same with a = b*q + r.
std::pair<Hurwitz, Hurwitz> hurwitz_divmod_right(const Hurwitz& a, const Hurwitz& b);

/// q with a = b*q exactly in the order, when it exists.
std::optional<Hurwitz> hurwitz_exact_right_quotient(const Hurwitz& b, const Hurwitz& a);
std::optional<Hurwitz> hurwitz_exact_left_quotient(const Hurwitz& b, const Hurwitz& a);

/// The 24 units of the order.
const std::array<Hurwitz, 24>& hurwitz_units();
/// Representative of q * units, minimal in lexicographic doubled order.
Hurwitz hurwitz_unit_normalize_right(const Hurwitz& q);
/// Representative of units * q, minimal in lexicographic doubled order.
Hurwitz hurwitz_unit_normalize_left(const Hurwitz& q);

}  // namespace oremat
