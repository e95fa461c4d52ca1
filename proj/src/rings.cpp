#include "oremat/rings.hpp"

#include <sstream>
#include <stdexcept>

namespace oremat {

// ---------------------------------------------------------------------------
// SkewPolyRing

SkewPolyRing::SkewPolyRing(FqContextPtr field) : field_(std::move(field)) {
  if (!field_) throw std::invalid_argument("SkewPolyRing: null field context");
}

std::string SkewPolyRing::name() const {
  std::ostringstream os;
  os << "F_" << field_->p();
  if (field_->k() > 1) os << "^" << field_->k();
  os << "[F]";
  return os.str();
}

std::pair<SkewPoly, SkewPoly> SkewPolyRing::left_multiple_cofactors(const Elem& a, const Elem& b) const {
  auto l = skew_lclm(a, b);
  return {l.c1, l.c2};
}

std::pair<SkewPoly, SkewPoly> SkewPolyRing::right_multiple_cofactors(const Elem& a, const Elem& b) const {
  auto l = skew_lcrm(a, b);
  return {l.c1, l.c2};
}

SkewPoly SkewPolyRing::pivot_unit_right(const Elem& pivot) const {
  if (pivot.is_zero()) return one();
  FqElem c = pivot.lead().inverse().frobenius_pow(-pivot.degree());
  return SkewPoly::constant(c);
}

SkewPoly SkewPolyRing::pivot_unit_left(const Elem& pivot) const {
  if (pivot.is_zero()) return one();
  return SkewPoly::constant(pivot.lead().inverse());
}

SkewFraction SkewPolyRing::reduce(QElem x) const {
  if (x.den.is_zero()) throw std::domain_error("SkewFraction: zero denominator");
  if (x.num.is_zero()) return {one(), zero()};
  SkewPoly g = skew_gcld(x.num, x.den);
  if (g.degree() > 0 || !g.lead().is_one()) {
    x.num = *skew_exact_right_quotient(g, x.num);
    x.den = *skew_exact_right_quotient(g, x.den);
  }
  if (!x.den.lead().is_one()) {
    SkewPoly c = SkewPoly::constant(x.den.lead().inverse());
    x.den = c * x.den;
    x.num = c * x.num;
  }
  return x;
}

bool SkewPolyRing::q_equal(const QElem& x, const QElem& y) const {
  auto [c1, c2] = left_multiple_cofactors(x.den, y.den);
  return (c1 * x.num) == (c2 * y.num);
}

SkewFraction SkewPolyRing::q_add(const QElem& x, const QElem& y) const {
  if (q_is_zero(x)) return y;
  if (q_is_zero(y)) return x;
  auto [c1, c2] = left_multiple_cofactors(x.den, y.den);
  return reduce({c1 * x.den, c1 * x.num + c2 * y.num});
}

SkewFraction SkewPolyRing::q_mul(const QElem& x, const QElem& y) const {
  if (q_is_zero(x) || q_is_zero(y)) return q_zero();
  // (b1^-1 a1)(b2^-1 a2) = (c1 b1)^-1 (c2 a2) where c1 a1 = c2 b2
  auto [c1, c2] = left_multiple_cofactors(x.num, y.den);
  return reduce({c1 * x.den, c2 * y.num});
}

SkewFraction SkewPolyRing::q_inv(const QElem& x) const {
  if (q_is_zero(x)) throw std::domain_error("Q: inverse of zero");
  return reduce({x.num, x.den});
}

Valuation SkewPolyRing::q_val(const QElem& x) const {
  if (q_is_zero(x)) return Valuation::infinity();
  return x.num.valuation() - x.den.valuation();
}

std::optional<SkewPoly> SkewPolyRing::elem_of(const QElem& x) const {
  if (q_is_zero(x)) return zero();
  return skew_exact_right_quotient(x.den, x.num);
}

SkewFraction SkewPolyRing::tau(const QElem& x) const {
  // tau(sum a_i F^i) = sum F^-i a_i = (F^d)^-1 * sum a_i^(p^(d-i)) F^(d-i)
  auto tau_poly = [this](const SkewPoly& f) -> QElem {
    if (f.is_zero()) return q_zero();
    int d = f.degree();
    std::vector<FqElem> rev(static_cast<std::size_t>(d) + 1, FqElem::zero(field_));
    for (int i = 0; i <= d; ++i) rev[d - i] = f.coeff(i).frobenius_pow(d - i);
    return {SkewPoly::f_power(field_, d), SkewPoly(field_, std::move(rev))};
  };
  if (q_is_zero(x)) return q_zero();
  // tau(den^-1 num) = tau(num) * tau(den)^-1
  return q_mul(tau_poly(x.num), q_inv(tau_poly(x.den)));
}

SkewFraction SkewPolyRing::q_uniformizer_pow(std::int64_t e) const {
  if (e >= 0) return q_from(SkewPoly::f_power(field_, static_cast<int>(e)));
  return {SkewPoly::f_power(field_, static_cast<int>(-e)), one()};
}

FqElem SkewPolyRing::residue(const QElem& x) const {
  Valuation v = q_val(x);
  if (v.is_infinite()) return FqElem::zero(field_);
  if (v.value() < 0) throw std::domain_error("residue: negative valuation");
  if (v.value() > 0) return FqElem::zero(field_);
  // reduced fraction with v = 0 has v(den) = v(num) = 0
  QElem r = reduce(x);
  if (r.den.valuation() != Valuation::finite(0)) {
    // cancel the common F-power explicitly (possible when inputs were not reduced)
    std::int64_t e = std::min(r.den.valuation().value(), r.num.valuation().value());
    r.den = *skew_exact_left_quotient(SkewPoly::f_power(field_, static_cast<int>(e)), r.den);
    r.num = *skew_exact_left_quotient(SkewPoly::f_power(field_, static_cast<int>(e)), r.num);
  }
  return r.den.coeff(0).inverse() * r.num.coeff(0);
}

std::pair<std::vector<SkewPoly>, SkewPoly> SkewPolyRing::clear_denominators_right(
    const std::vector<QElem>& column) const {
  // sequential clearing: after multiplying by each entry's clearing factor,
  // the remaining entries are updated and cleared in turn
  std::vector<QElem> cur = column;
  SkewPoly m = one();
  for (std::size_t i = 0; i < cur.size(); ++i) {
    if (q_is_zero(cur[i])) continue;
    QElem r = reduce(cur[i]);
    if (r.den.degree() == 0) continue;  // already integral up to a unit
    // find t with num * t = den * s, then den^-1 num t = s
    auto [t, s] = right_multiple_cofactors(r.num, r.den);
    (void)s;
    for (auto& x : cur) x = q_mul(x, q_from(t));
    m = m * t;
  }
  std::vector<Elem> out;
  out.reserve(cur.size());
  for (const auto& x : cur) {
    auto e = elem_of(x);
    if (!e) throw ComputeError("clear_denominators_right: entry not integral after clearing");
    out.push_back(*e);
  }
  return {std::move(out), m};
}

SkewPoly SkewPolyRing::random_elem(SplitMix64& rng, int size) const {
  int deg = static_cast<int>(rng.below(static_cast<std::uint64_t>(size) + 1));
  std::vector<FqElem> c;
  for (int i = 0; i <= deg; ++i) {
    std::vector<std::uint64_t> coords(field_->k());
    for (auto& x : coords) x = rng.below(field_->p());
    c.emplace_back(field_, std::move(coords));
  }
  return SkewPoly(field_, std::move(c));
}

std::string SkewPolyRing::q_str(const QElem& x) const {
  if (q_is_zero(x)) return "0";
  QElem r = reduce(x);
  if (r.den.degree() == 0 && r.den.coeff(0).is_one()) return r.num.str();
  return "(" + r.den.str() + ")^-1*(" + r.num.str() + ")";
}

// ---------------------------------------------------------------------------
// IntegerRing

IntegerRing::IntegerRing(std::uint64_t p) : p_(p), residue_field_(FqContext::prime_field(p)) {}

std::string IntegerRing::name() const {
  std::ostringstream os;
  os << "Z (p=" << p_ << ")";
  return os.str();
}

Valuation IntegerRing::val(const Elem& a) const {
  if (a == 0) return Valuation::infinity();
  return Valuation::finite(padic_val(a, Int(p_)));
}

std::pair<Int, Int> IntegerRing::divmod_left(const Elem& a, const Elem& b) const {
  if (b == 0) throw std::domain_error("divmod: division by zero");
  Int q = floor_div(a, b);
  return {q, a - q * b};
}

std::optional<Int> IntegerRing::exact_right_quotient(const Elem& b, const Elem& a) const {
  if (a == 0) return Int(0);
  if (b == 0) return std::nullopt;
  if (a % b != 0) return std::nullopt;
  return a / b;
}

std::pair<Int, Int> IntegerRing::left_multiple_cofactors(const Elem& a, const Elem& b) const {
  if (a == 0 || b == 0) throw std::domain_error("multiple_cofactors: zero input");
  Int g = gcd_int(a, b);
  return {b / g, a / g};
}

ZFraction IntegerRing::q_add(const QElem& x, const QElem& y) const {
  if (x.num == 0) return y;
  if (y.num == 0) return x;
  return ZFraction(x.num * y.den + y.num * x.den, x.den * y.den);
}

ZFraction IntegerRing::q_mul(const QElem& x, const QElem& y) const {
  if (x.num == 0 || y.num == 0) return {};
  return ZFraction(x.num * y.num, x.den * y.den);
}

ZFraction IntegerRing::q_inv(const QElem& x) const {
  if (x.num == 0) throw std::domain_error("Q: inverse of zero");
  return ZFraction(x.den, x.num);
}

Valuation IntegerRing::q_val(const QElem& x) const {
  if (x.num == 0) return Valuation::infinity();
  return Valuation::finite(padic_val(x.num, Int(p_)) - padic_val(x.den, Int(p_)));
}

std::optional<Int> IntegerRing::elem_of(const QElem& x) const {
  if (x.den != 1) return std::nullopt;
  return x.num;
}

ZFraction IntegerRing::q_uniformizer_pow(std::int64_t e) const {
  Int pw = 1;
  std::int64_t n = e >= 0 ? e : -e;
  for (std::int64_t i = 0; i < n; ++i) pw *= Int(p_);
  QElem r;
  if (e >= 0)
    r.num = pw;
  else {
    r.num = 1;
    r.den = pw;
  }
  return r;
}

FqElem IntegerRing::residue(const QElem& x) const {
  if (x.num == 0) return FqElem::zero(residue_field_);
  Valuation v = q_val(x);
  if (v < Valuation::finite(0)) throw std::domain_error("residue: negative valuation");
  if (v > Valuation::finite(0)) return FqElem::zero(residue_field_);
  // v = 0 and the fraction is reduced, so neither part carries p
  if (p_ == 2) return FqElem::one(residue_field_);
  return FqElem::from_int(residue_field_, x.num) * FqElem::from_int(residue_field_, x.den).inverse();
}

std::string IntegerRing::q_str(const QElem& x) const {
  if (x.den == 1) return x.num.str();
  return x.num.str() + "/" + x.den.str();
}

std::pair<std::vector<Int>, Int> IntegerRing::clear_denominators_right(const std::vector<QElem>& column) const {
  Int m = 1;
  for (const auto& x : column) m = m / gcd_int(m, x.den) * x.den;
  std::vector<Int> out;
  out.reserve(column.size());
  for (const auto& x : column) out.push_back(x.num * (m / x.den));
  return {std::move(out), m};
}

Int IntegerRing::random_elem(SplitMix64& rng, int size) const {
  std::int64_t bound = 2 * static_cast<std::int64_t>(size) + 1;
  return Int(static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(bound))) - size);
}

// ---------------------------------------------------------------------------
// HurwitzRing

HurwitzRing::HurwitzRing(std::uint64_t p) : p_(p) {
  if (!is_prime_u64(p)) throw InvariantError("Hurwitz ring: p must be prime");
}

std::string HurwitzRing::name() const {
  std::ostringstream os;
  os << "Hurwitz quaternions (p=" << p_ << ")";
  return os.str();
}

Valuation HurwitzRing::val(const Elem& a) const {
  if (a.is_zero()) return Valuation::infinity();
  return Valuation::finite(padic_val(a.norm(), Int(p_)));
}

std::pair<Hurwitz, Hurwitz> HurwitzRing::left_multiple_cofactors(const Elem& a, const Elem& b) const {
  if (a.is_zero() || b.is_zero()) throw std::domain_error("multiple_cofactors: zero input");
  // (b conj(a)) a = b N(a) = N(a) b
  return {b * a.conjugate(), Hurwitz::from_int(a.norm())};
}

std::pair<Hurwitz, Hurwitz> HurwitzRing::right_multiple_cofactors(const Elem& a, const Elem& b) const {
  if (a.is_zero() || b.is_zero()) throw std::domain_error("multiple_cofactors: zero input");
  // a (conj(a) b) = N(a) b = b N(a)
  return {a.conjugate() * b, Hurwitz::from_int(a.norm())};
}

Hurwitz HurwitzRing::pivot_unit_right(const Elem& pivot) const {
  if (pivot.is_zero()) return one();
  Hurwitz best = hurwitz_unit_normalize_right(pivot);
  for (const auto& u : hurwitz_units()) {
    if (pivot * u == best) return u;
  }
  throw std::logic_error("pivot_unit_right: unit not found");
}

Hurwitz HurwitzRing::pivot_unit_left(const Elem& pivot) const {
  if (pivot.is_zero()) return one();
  Hurwitz best = hurwitz_unit_normalize_left(pivot);
  for (const auto& u : hurwitz_units()) {
    if (u * pivot == best) return u;
  }
  throw std::logic_error("pivot_unit_left: unit not found");
}

QuatFraction HurwitzRing::reduce(QElem x) const {
  if (x.den == 0) throw std::domain_error("QuatFraction: zero denominator");
  if (x.den < 0) {
    x.den = -x.den;
    x.num = -x.num;
  }
  if (x.num.is_zero()) return {Hurwitz::zero(), Int(1)};
  const auto& c = x.num.doubled();
  Int g = gcd_int(gcd_int(gcd_int(c[0], c[1]), gcd_int(c[2], c[3])), x.den);
  // reduce by the odd part of g, then by 2 while the numerator stays in the order
  while (g % 2 == 0) g /= 2;
  if (g > 1) {
    x.num = Hurwitz(c[0] / g, c[1] / g, c[2] / g, c[3] / g);
    x.den /= g;
  }
  while (x.den % 2 == 0) {
    const auto& d = x.num.doubled();
    bool all_even = d[0] % 2 == 0 && d[1] % 2 == 0 && d[2] % 2 == 0 && d[3] % 2 == 0;
    if (!all_even) break;
    std::array<Int, 4> h{d[0] / 2, d[1] / 2, d[2] / 2, d[3] / 2};
    Int par = ((h[0] % 2) + 2) % 2;
    bool ok = true;
    for (int i = 1; i < 4; ++i) ok = ok && (((h[i] % 2) + 2) % 2 == par);
    if (!ok) break;
    x.num = Hurwitz(h[0], h[1], h[2], h[3]);
    x.den /= 2;
  }
  return x;
}

QuatFraction HurwitzRing::q_add(const QElem& x, const QElem& y) const {
  return reduce({x.num * Hurwitz::from_int(y.den) + y.num * Hurwitz::from_int(x.den), x.den * y.den});
}

QuatFraction HurwitzRing::q_mul(const QElem& x, const QElem& y) const {
  return reduce({x.num * y.num, x.den * y.den});
}

QuatFraction HurwitzRing::q_inv(const QElem& x) const {
  if (x.num.is_zero()) throw std::domain_error("Q: inverse of zero");
  return reduce({x.num.conjugate() * Hurwitz::from_int(x.den), x.num.norm()});
}

Valuation HurwitzRing::q_val(const QElem& x) const {
  if (x.num.is_zero()) return Valuation::infinity();
  return Valuation::finite(padic_val(x.num.norm(), Int(p_)) - 2 * padic_val(x.den, Int(p_)));
}

std::optional<Hurwitz> HurwitzRing::elem_of(const QElem& x) const {
  QElem r = reduce(x);
  if (r.den == 1) return r.num;
  return std::nullopt;
}

Hurwitz HurwitzRing::uniformizer() const {
  if (p_ != 2)
    throw UnsupportedRingError("Hurwitz ring: uniformizer only provided at p = 2");
  return Hurwitz(2, 2, 0, 0);  // 1 + i
}

QuatFraction HurwitzRing::q_uniformizer_pow(std::int64_t e) const {
  QElem r = q_one();
  QElem base = e >= 0 ? q_from(uniformizer()) : q_inv(q_from(uniformizer()));
  std::int64_t n = e >= 0 ? e : -e;
  for (std::int64_t i = 0; i < n; ++i) r = q_mul(r, base);
  return r;
}

FqContextPtr HurwitzRing::residue_field() const {
  throw UnsupportedRingError("Hurwitz ring: residue field not provided");
}

FqElem HurwitzRing::residue(const QElem&) const {
  throw UnsupportedRingError("Hurwitz ring: residue map not provided");
}

FqElem HurwitzRing::residue_twist(const FqElem&, std::int64_t) const {
  throw UnsupportedRingError("Hurwitz ring: residue map not provided");
}

Hurwitz HurwitzRing::elem_from_residue(const FqElem&) const {
  throw UnsupportedRingError("Hurwitz ring: residue map not provided");
}

std::pair<std::vector<Hurwitz>, Hurwitz> HurwitzRing::clear_denominators_right(
    const std::vector<QElem>& column) const {
  Int m = 1;
  for (const auto& x : column) {
    QElem r = reduce(x);
    m = m / gcd_int(m, r.den) * r.den;
  }
  std::vector<Elem> out;
  out.reserve(column.size());
  for (const auto& x : column) {
    QElem r = reduce(x);
    out.push_back(r.num * Hurwitz::from_int(m / r.den));
  }
  return {std::move(out), Hurwitz::from_int(m)};
}

Hurwitz HurwitzRing::random_elem(SplitMix64& rng, int size) const {
  std::int64_t bound = 2 * static_cast<std::int64_t>(size) + 1;
  auto draw = [&]() { return static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(bound))) - size; };
  std::int64_t a = draw(), b = draw(), c = draw(), d = draw();
  int par = static_cast<int>(rng.below(2));
  auto fix = [&](std::int64_t v) { return Int(2 * v + par); };
  return Hurwitz(fix(a), fix(b), fix(c), fix(d));
}

std::string HurwitzRing::q_str(const QElem& x) const {
  QElem r = reduce(x);
  if (r.den == 1) return r.num.str();
  return "(" + r.num.str() + ")/" + r.den.str();
}

}  // namespace oremat
