#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "oremat/fq.hpp"
#include "oremat/hurwitz.hpp"
#include "oremat/numeric.hpp"
#include "oremat/skew.hpp"
#include "oremat/valuation.hpp"

namespace oremat {

enum class RingKind { skew_poly, integers, hurwitz };

/// Left fraction den^{-1} * num over K[F]. Kept reduced: the greatest
/// common left divisor of num and den is cancelled and den is monic, so
/// valuation and residue read off the parts directly.
struct SkewFraction {
  SkewPoly den;
  SkewPoly num;
};

/// Quaternion fraction num / den with a central positive integer
/// denominator, reduced as far as the parity invariant allows.
struct QuatFraction {
  Hurwitz num;
  Int den;
};

/// Reduced integer fraction with positive denominator. A hand-rolled type
/// rather than a library rational: the flock sweeps hammer these with
/// valuation reads, which stay division-free this way.
struct ZFraction {
  Int num;
  Int den;

  ZFraction() : num(0), den(1) {}
  ZFraction(Int n, Int d) : num(std::move(n)), den(std::move(d)) {
    if (den == 0) throw std::domain_error("ZFraction: zero denominator");
    if (den < 0) {
      den = -den;
      num = -num;
    }
    if (num == 0) {
      den = 1;
      return;
    }
    Int g = gcd_int(num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }
  bool operator==(const ZFraction& o) const { return num == o.num && den == o.den; }
};

// The three ring contexts share one duck-typed surface, consumed by the
// generic linear algebra, valuation, flock and group templates:
//   Elem / QElem types, arithmetic, two-sided Euclidean division,
//   common-multiple cofactors, valuation, tau, residue data, uniformizer.

class SkewPolyRing {
 public:
  using Elem = SkewPoly;
  using QElem = SkewFraction;

  explicit SkewPolyRing(FqContextPtr field);

  static constexpr RingKind kind = RingKind::skew_poly;
  bool supports_tau() const { return true; }
  bool supports_flock() const { return true; }
  bool supports_eval() const { return true; }
  std::uint64_t p() const { return field_->p(); }
  const FqContextPtr& field() const { return field_; }
  bool same(const SkewPolyRing& o) const { return field_->same(*o.field_); }
  std::string name() const;

  Elem zero() const { return SkewPoly::zero(field_); }
  Elem one() const { return SkewPoly::one(field_); }
  Elem from_int(long n) const { return SkewPoly::constant(FqElem::from_int(field_, Int(n))); }
  bool is_zero(const Elem& a) const { return a.is_zero(); }
  bool equal(const Elem& a, const Elem& b) const { return a == b; }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Valuation val(const Elem& a) const { return a.valuation(); }
  Int euclid_size(const Elem& a) const { return Int(a.degree()); }

  std::pair<Elem, Elem> divmod_left(const Elem& a, const Elem& b) const { return skew_divmod_left(a, b); }
  std::pair<Elem, Elem> divmod_right(const Elem& a, const Elem& b) const { return skew_divmod_right(a, b); }
  std::optional<Elem> exact_right_quotient(const Elem& b, const Elem& a) const {
    return skew_exact_right_quotient(b, a);
  }
  std::optional<Elem> exact_left_quotient(const Elem& b, const Elem& a) const {
    return skew_exact_left_quotient(b, a);
  }
  /// (c1, c2) with c1 a = c2 b, both nonzero.
  std::pair<Elem, Elem> left_multiple_cofactors(const Elem& a, const Elem& b) const;
  /// (c1, c2) with a c1 = b c2, both nonzero.
  std::pair<Elem, Elem> right_multiple_cofactors(const Elem& a, const Elem& b) const;
  /// Unit u making pivot * u canonical (monic).
  Elem pivot_unit_right(const Elem& pivot) const;
  /// Unit u making u * pivot canonical (monic).
  Elem pivot_unit_left(const Elem& pivot) const;

  QElem q_zero() const { return {one(), zero()}; }
  QElem q_one() const { return {one(), one()}; }
  QElem q_from(const Elem& a) const { return {one(), a}; }
  bool q_is_zero(const QElem& x) const { return x.num.is_zero(); }
  bool q_equal(const QElem& x, const QElem& y) const;
  QElem q_neg(const QElem& x) const { return {x.den, -x.num}; }
  QElem q_add(const QElem& x, const QElem& y) const;
  QElem q_sub(const QElem& x, const QElem& y) const { return q_add(x, q_neg(y)); }
  QElem q_mul(const QElem& x, const QElem& y) const;
  QElem q_inv(const QElem& x) const;
  Valuation q_val(const QElem& x) const;
  std::optional<Elem> elem_of(const QElem& x) const;
  QElem reduce(QElem x) const;

  QElem tau(const QElem& x) const;

  Elem uniformizer() const { return SkewPoly::f_power(field_, 1); }
  QElem q_uniformizer_pow(std::int64_t e) const;
  FqContextPtr residue_field() const { return field_; }
  FqElem residue(const QElem& x) const;
  FqElem residue_twist(const FqElem& c, std::int64_t e) const { return c.frobenius_pow(e); }
  Elem elem_from_residue(const FqElem& c) const { return SkewPoly::constant(c); }

  /// A right multiplier clearing every denominator in the column, and the
  /// cleared entries.
  std::pair<std::vector<Elem>, Elem> clear_denominators_right(const std::vector<QElem>& column) const;

  Elem random_elem(SplitMix64& rng, int size) const;
  std::string str(const Elem& a) const { return a.str(); }
  std::string q_str(const QElem& x) const;

 private:
  FqContextPtr field_;
};

class IntegerRing {
 public:
  using Elem = Int;
  using QElem = ZFraction;

  explicit IntegerRing(std::uint64_t p);

  static constexpr RingKind kind = RingKind::integers;
  bool supports_tau() const { return true; }
  bool supports_flock() const { return true; }
  bool supports_eval() const { return true; }
  std::uint64_t p() const { return p_; }
  bool same(const IntegerRing& o) const { return p_ == o.p_; }
  std::string name() const;

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem from_int(long n) const { return Int(n); }
  bool is_zero(const Elem& a) const { return a == 0; }
  bool equal(const Elem& a, const Elem& b) const { return a == b; }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Valuation val(const Elem& a) const;
  Int euclid_size(const Elem& a) const { return a < 0 ? -a : a; }

  std::pair<Elem, Elem> divmod_left(const Elem& a, const Elem& b) const;
  std::pair<Elem, Elem> divmod_right(const Elem& a, const Elem& b) const { return divmod_left(a, b); }
  std::optional<Elem> exact_right_quotient(const Elem& b, const Elem& a) const;
  std::optional<Elem> exact_left_quotient(const Elem& b, const Elem& a) const { return exact_right_quotient(b, a); }
  std::pair<Elem, Elem> left_multiple_cofactors(const Elem& a, const Elem& b) const;
  std::pair<Elem, Elem> right_multiple_cofactors(const Elem& a, const Elem& b) const {
    return left_multiple_cofactors(a, b);
  }
  Elem pivot_unit_right(const Elem& pivot) const { return pivot < 0 ? Int(-1) : Int(1); }
  Elem pivot_unit_left(const Elem& pivot) const { return pivot < 0 ? Int(-1) : Int(1); }

  QElem q_zero() const { return {}; }
  QElem q_one() const {
    QElem x;
    x.num = 1;
    return x;
  }
  QElem q_from(const Elem& a) const {
    QElem x;
    x.num = a;
    return x;
  }
  bool q_is_zero(const QElem& x) const { return x.num == 0; }
  bool q_equal(const QElem& x, const QElem& y) const { return x == y; }
  QElem q_neg(const QElem& x) const {
    QElem r = x;
    r.num = -r.num;
    return r;
  }
  QElem q_add(const QElem& x, const QElem& y) const;
  QElem q_sub(const QElem& x, const QElem& y) const { return q_add(x, q_neg(y)); }
  QElem q_mul(const QElem& x, const QElem& y) const;
  QElem q_inv(const QElem& x) const;
  Valuation q_val(const QElem& x) const;
  std::optional<Elem> elem_of(const QElem& x) const;
  QElem reduce(QElem x) const { return x; }

  QElem tau(const QElem& x) const { return x; }

  Elem uniformizer() const { return Int(p_); }
  QElem q_uniformizer_pow(std::int64_t e) const;
  FqContextPtr residue_field() const { return residue_field_; }
  FqElem residue(const QElem& x) const;
  FqElem residue_twist(const FqElem& c, std::int64_t) const { return c; }
  Elem elem_from_residue(const FqElem& c) const { return Int(c.coords()[0]); }

  std::pair<std::vector<Elem>, Elem> clear_denominators_right(const std::vector<QElem>& column) const;

  Elem random_elem(SplitMix64& rng, int size) const;
  std::string str(const Elem& a) const { return a.str(); }
  std::string q_str(const QElem& x) const;

 private:
  std::uint64_t p_;
  FqContextPtr residue_field_;
};

class HurwitzRing {
 public:
  using Elem = Hurwitz;
  using QElem = QuatFraction;

  explicit HurwitzRing(std::uint64_t p);

  static constexpr RingKind kind = RingKind::hurwitz;
  bool supports_tau() const { return true; }
  bool supports_flock() const { return false; }
  bool supports_eval() const { return false; }
  std::uint64_t p() const { return p_; }
  bool same(const HurwitzRing& o) const { return p_ == o.p_; }
  std::string name() const;

  Elem zero() const { return Hurwitz::zero(); }
  Elem one() const { return Hurwitz::one(); }
  Elem from_int(long n) const { return Hurwitz::from_int(Int(n)); }
  bool is_zero(const Elem& a) const { return a.is_zero(); }
  bool equal(const Elem& a, const Elem& b) const { return a == b; }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  /// v(x) = v_p(N(x)); for p = 2 this is the valuation with v(1+i) = 1.
  Valuation val(const Elem& a) const;
  Int euclid_size(const Elem& a) const { return a.norm(); }

  std::pair<Elem, Elem> divmod_left(const Elem& a, const Elem& b) const { return hurwitz_divmod_left(a, b); }
  std::pair<Elem, Elem> divmod_right(const Elem& a, const Elem& b) const { return hurwitz_divmod_right(a, b); }
  std::optional<Elem> exact_right_quotient(const Elem& b, const Elem& a) const {
    return hurwitz_exact_right_quotient(b, a);
  }
  std::optional<Elem> exact_left_quotient(const Elem& b, const Elem& a) const {
    return hurwitz_exact_left_quotient(b, a);
  }
  std::pair<Elem, Elem> left_multiple_cofactors(const Elem& a, const Elem& b) const;
  std::pair<Elem, Elem> right_multiple_cofactors(const Elem& a, const Elem& b) const;
  Elem pivot_unit_right(const Elem& pivot) const;
  Elem pivot_unit_left(const Elem& pivot) const;

  QElem q_zero() const { return {Hurwitz::zero(), Int(1)}; }
  QElem q_one() const { return {Hurwitz::one(), Int(1)}; }
  QElem q_from(const Elem& a) const { return {a, Int(1)}; }
  bool q_is_zero(const QElem& x) const { return x.num.is_zero(); }
  bool q_equal(const QElem& x, const QElem& y) const { return (x.num * Hurwitz::from_int(y.den)) == (y.num * Hurwitz::from_int(x.den)); }
  QElem q_neg(const QElem& x) const { return {-x.num, x.den}; }
  QElem q_add(const QElem& x, const QElem& y) const;
  QElem q_sub(const QElem& x, const QElem& y) const { return q_add(x, q_neg(y)); }
  QElem q_mul(const QElem& x, const QElem& y) const;
  QElem q_inv(const QElem& x) const;
  Valuation q_val(const QElem& x) const;
  std::optional<Elem> elem_of(const QElem& x) const;
  QElem reduce(QElem x) const;

  QElem tau(const QElem& x) const { return reduce({x.num.conjugate(), x.den}); }

  Elem uniformizer() const;
  QElem q_uniformizer_pow(std::int64_t e) const;
  FqContextPtr residue_field() const;
  FqElem residue(const QElem&) const;
  FqElem residue_twist(const FqElem&, std::int64_t) const;
  Elem elem_from_residue(const FqElem&) const;

  std::pair<std::vector<Elem>, Elem> clear_denominators_right(const std::vector<QElem>& column) const;

  Elem random_elem(SplitMix64& rng, int size) const;
  std::string str(const Elem& a) const { return a.str(); }
  std::string q_str(const QElem& x) const;

 private:
  std::uint64_t p_;
};

}  // namespace oremat
