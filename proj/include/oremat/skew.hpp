#pragma once

#include <optional>
#include <string>
#include <vector>

#include "oremat/fq.hpp"
#include "oremat/valuation.hpp"

namespace oremat {

/// A polynomial a_0 + a_1 F + ... + a_d F^d over F_{p^k}, multiplied under
/// the rule F a = a^p F. Coefficients are trimmed, so the representation is
/// canonical.
class SkewPoly {
 public:
  SkewPoly() = default;
  SkewPoly(FqContextPtr ctx, std::vector<FqElem> coeffs);

  static SkewPoly zero(const FqContextPtr& ctx);
  static SkewPoly one(const FqContextPtr& ctx);
  static SkewPoly constant(const FqElem& c);
  /// c * F^e
  static SkewPoly monomial(const FqElem& c, int e);
  static SkewPoly f_power(const FqContextPtr& ctx, int e);

  const FqContextPtr& ctx() const { return ctx_; }
  const std::vector<FqElem>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  FqElem coeff(int i) const;
  FqElem lead() const;

  /// Index of the lowest nonzero coefficient (the F-adic valuation).
  Valuation valuation() const;

  SkewPoly operator+(const SkewPoly& o) const;
  SkewPoly operator-(const SkewPoly& o) const;
  SkewPoly operator-() const;
  SkewPoly operator*(const SkewPoly& o) const;
  bool operator==(const SkewPoly& o) const;
  bool operator!=(const SkewPoly& o) const { return !(*this == o); }

  std::string str() const;

 private:
  FqContextPtr ctx_;
  std::vector<FqElem> c_;
};

/// a = q*b + r with deg r < deg b. Needs only the Frobenius.
std::pair<SkewPoly, SkewPoly> skew_divmod_left(const SkewPoly& a, const SkewPoly& b);
/// a = b*q + r with deg r < deg b. Needs the inverse Frobenius, which
/// exists because the coefficient field is finite.
std::pair<SkewPoly, SkewPoly> skew_divmod_right(const SkewPoly& a, const SkewPoly& b);

/// q with a = b*q, if the division is exact.
std::optional<SkewPoly> skew_exact_right_quotient(const SkewPoly& b, const SkewPoly& a);
/// q with a = q*b, if the division is exact.
std::optional<SkewPoly> skew_exact_left_quotient(const SkewPoly& b, const SkewPoly& a);

struct SkewLclm {
  SkewPoly m;   // the least common left multiple
  SkewPoly c1;  // m = c1 * a
  SkewPoly c2;  // m = c2 * b
};
/// Least common left multiple via the extended Euclidean scheme on right
/// remainders: r_{i+1} = r_{i-1} - q_i r_i with cofactors tracked, so the
/// step after the last nonzero remainder yields u a = -v b of minimal degree.
SkewLclm skew_lclm(const SkewPoly& a, const SkewPoly& b);

struct SkewLcrm {
  SkewPoly m;   // the least common right multiple
  SkewPoly c1;  // m = a * c1
  SkewPoly c2;  // m = b * c2
};
/// Least common right multiple (mirror image of skew_lclm).
SkewLcrm skew_lcrm(const SkewPoly& a, const SkewPoly& b);

/// Greatest common left divisor (computed with right divmod); monic unless zero.
SkewPoly skew_gcld(SkewPoly a, SkewPoly b);

}  // namespace oremat
