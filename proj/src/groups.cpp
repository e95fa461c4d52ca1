#include "oremat/groups.hpp"

#include <stdexcept>

namespace oremat {

ExtField::ExtField(FqContextPtr base, unsigned s, fqpoly::Poly modulus)
    : base_(std::move(base)), s_(s), modulus_(std::move(modulus)) {}

ExtFieldPtr ExtField::make(FqContextPtr base, unsigned s) {
  if (s == 0) throw std::invalid_argument("ExtField: degree must be >= 1");
  // iterate coefficient tuples over F_q in lexicographic coordinate order
  std::vector<std::uint64_t> counter(static_cast<std::size_t>(s) * base->k(), 0);
  const std::uint64_t p = base->p();
  while (true) {
    fqpoly::Poly m;
    for (unsigned i = 0; i < s; ++i) {
      std::vector<std::uint64_t> coords(counter.begin() + i * base->k(), counter.begin() + (i + 1) * base->k());
      m.emplace_back(base, std::move(coords));
    }
    m.push_back(FqElem::one(base));  // monic
    if (s == 1 || !m[0].is_zero()) {
      if (fqpoly::irreducible(m)) return ExtFieldPtr(new ExtField(base, s, std::move(m)));
    }
    std::size_t i = 0;
    while (i < counter.size() && ++counter[i] == p) counter[i++] = 0;
    if (i == counter.size()) throw ComputeError("ExtField: no irreducible modulus found");
  }
}

ExtField::Elem ExtField::zero() const { return Elem(s_, FqElem::zero(base_)); }

ExtField::Elem ExtField::embed(const FqElem& c) const {
  Elem e = zero();
  e[0] = c;
  return e;
}

bool ExtField::is_zero(const Elem& a) const {
  for (const auto& c : a)
    if (!c.is_zero()) return false;
  return true;
}

bool ExtField::equal(const Elem& a, const Elem& b) const {
  for (unsigned i = 0; i < s_; ++i)
    if (a[i] != b[i]) return false;
  return true;
}

ExtField::Elem ExtField::add(const Elem& a, const Elem& b) const {
  Elem r = a;
  for (unsigned i = 0; i < s_; ++i) r[i] = r[i] + b[i];
  return r;
}

ExtField::Elem ExtField::mul(const Elem& a, const Elem& b) const {
  fqpoly::Poly fa(a.begin(), a.end()), fb(b.begin(), b.end());
  fqpoly::Poly prod = fqpoly::mod(fqpoly::mul(fqpoly::trim(std::move(fa)), fqpoly::trim(std::move(fb))), modulus_);
  Elem r = zero();
  for (std::size_t i = 0; i < prod.size(); ++i) r[i] = prod[i];
  return r;
}

ExtField::Elem ExtField::frobenius_pow(const Elem& a, std::int64_t e) const {
  if (e < 0) throw std::invalid_argument("ExtField: negative Frobenius power");
  Elem r = a;
  const Int p(base_->p());
  for (std::int64_t t = 0; t < e; ++t) {
    // r <- r^p by square-and-multiply on the exponent p
    Elem acc = embed(FqElem::one(base_));
    Elem base_el = r;
    Int exp = p;
    while (exp > 0) {
      if ((exp & 1) != 0) acc = mul(acc, base_el);
      base_el = mul(base_el, base_el);
      exp >>= 1;
    }
    r = std::move(acc);
  }
  return r;
}

ExtField::Elem ExtField::random(SplitMix64& rng) const {
  Elem r = zero();
  for (unsigned i = 0; i < s_; ++i) {
    std::vector<std::uint64_t> coords(base_->k());
    for (auto& x : coords) x = rng.below(base_->p());
    r[i] = FqElem(base_, std::move(coords));
  }
  return r;
}

ExtField::Elem eval_endo_ga(const ExtFieldPtr& k, const SkewPoly& e, const ExtField::Elem& x) {
  ExtField::Elem acc = k->zero();
  ExtField::Elem xp = x;  // x^(p^i) maintained incrementally
  for (int i = 0; i <= e.degree(); ++i) {
    if (i > 0) xp = k->frobenius_pow(xp, 1);
    const FqElem& c = e.coeff(i);
    if (!c.is_zero()) acc = k->add(acc, k->mul(k->embed(c), xp));
  }
  return acc;
}

FqElem eval_endo_gm(const Int& e, const FqElem& t) {
  if (t.is_zero()) throw std::domain_error("eval_endo_gm: zero is not a point of the torus");
  return t.pow(e);
}

std::vector<GaPoint> sample_points_ga(const Mat<SkewPolyRing>& n, int count, std::uint64_t seed, unsigned s) {
  if (n.orient != Orientation::right_columns)
    throw std::invalid_argument("sample_points: expects a right column module");
  ExtFieldPtr k = ExtField::make(n.ring.field(), s);
  SplitMix64 rng(seed);
  std::vector<GaPoint> out;
  out.reserve(count);
  for (int t = 0; t < count; ++t) {
    std::vector<ExtField::Elem> params;
    params.reserve(n.cols);
    for (int j = 0; j < n.cols; ++j) params.push_back(k->random(rng));
    GaPoint pt;
    pt.coords.assign(n.rows, k->zero());
    for (int i = 0; i < n.rows; ++i)
      for (int j = 0; j < n.cols; ++j)
        pt.coords[i] = k->add(pt.coords[i], eval_endo_ga(k, n.at(i, j), params[j]));
    out.push_back(std::move(pt));
  }
  return out;
}

std::vector<GmPoint> sample_points_gm(const Mat<IntegerRing>& n, int count, std::uint64_t seed, std::uint64_t q) {
  if (n.orient != Orientation::right_columns)
    throw std::invalid_argument("sample_points: expects a right column module");
  FqContextPtr f = FqContext::prime_field(q);
  SplitMix64 rng(seed);
  std::vector<GmPoint> out;
  out.reserve(count);
  for (int t = 0; t < count; ++t) {
    std::vector<FqElem> params;
    params.reserve(n.cols);
    for (int j = 0; j < n.cols; ++j) params.push_back(FqElem::from_int(f, Int(1 + rng.below(q - 1))));
    GmPoint pt;
    pt.coords.assign(n.rows, FqElem::one(f));
    for (int i = 0; i < n.rows; ++i)
      for (int j = 0; j < n.cols; ++j) pt.coords[i] = pt.coords[i] * eval_endo_gm(n.at(i, j), params[j]);
    out.push_back(std::move(pt));
  }
  return out;
}

bool verify_annihilator_ga(const Mat<SkewPolyRing>& j, const std::vector<GaPoint>& points) {
  if (j.orient != Orientation::left_rows)
    throw std::invalid_argument("verify_annihilator: expects a left row module");
  if (points.empty()) return true;
  unsigned s = static_cast<unsigned>(points.front().coords.front().size());
  ExtFieldPtr k = ExtField::make(j.ring.field(), s);
  for (const auto& pt : points) {
    if (static_cast<int>(pt.coords.size()) != j.cols)
      throw std::invalid_argument("verify_annihilator: point length mismatch");
    for (int r = 0; r < j.rows; ++r) {
      ExtField::Elem acc = k->zero();
      for (int i = 0; i < j.cols; ++i) acc = k->add(acc, eval_endo_ga(k, j.at(r, i), pt.coords[i]));
      if (!k->is_zero(acc)) return false;
    }
  }
  return true;
}

bool verify_annihilator_gm(const Mat<IntegerRing>& j, const std::vector<GmPoint>& points) {
  if (j.orient != Orientation::left_rows)
    throw std::invalid_argument("verify_annihilator: expects a left row module");
  for (const auto& pt : points) {
    if (static_cast<int>(pt.coords.size()) != j.cols)
      throw std::invalid_argument("verify_annihilator: point length mismatch");
    for (int r = 0; r < j.rows; ++r) {
      FqElem acc = FqElem::one(pt.coords.front().ctx());
      for (int i = 0; i < j.cols; ++i) acc = acc * eval_endo_gm(j.at(r, i), pt.coords[i]);
      if (!acc.is_one()) return false;
    }
  }
  return true;
}

}  // namespace oremat
