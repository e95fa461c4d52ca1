#include "oremat/skew.hpp"

#include <sstream>
#include <stdexcept>

namespace oremat {

namespace {
void check_same(const SkewPoly& a, const SkewPoly& b) {
  if (!a.ctx() || !b.ctx() || !a.ctx()->same(*b.ctx()))
    throw std::invalid_argument("SkewPoly: mismatched field contexts");
}
}  // namespace

SkewPoly::SkewPoly(FqContextPtr ctx, std::vector<FqElem> coeffs) : ctx_(std::move(ctx)), c_(std::move(coeffs)) {
  if (!ctx_) throw std::invalid_argument("SkewPoly: null context");
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

SkewPoly SkewPoly::zero(const FqContextPtr& ctx) { return SkewPoly(ctx, {}); }

SkewPoly SkewPoly::one(const FqContextPtr& ctx) { return SkewPoly(ctx, {FqElem::one(ctx)}); }

SkewPoly SkewPoly::constant(const FqElem& c) { return SkewPoly(c.ctx(), {c}); }

SkewPoly SkewPoly::monomial(const FqElem& c, int e) {
  if (e < 0) throw std::invalid_argument("SkewPoly: negative exponent");
  std::vector<FqElem> v(static_cast<std::size_t>(e) + 1, FqElem::zero(c.ctx()));
  v[e] = c;
  return SkewPoly(c.ctx(), std::move(v));
}

SkewPoly SkewPoly::f_power(const FqContextPtr& ctx, int e) { return monomial(FqElem::one(ctx), e); }

FqElem SkewPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return FqElem::zero(ctx_);
  return c_[i];
}

FqElem SkewPoly::lead() const {
  if (is_zero()) throw std::domain_error("SkewPoly: zero has no leading coefficient");
  return c_.back();
}

Valuation SkewPoly::valuation() const {
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (!c_[i].is_zero()) return Valuation::finite(static_cast<std::int64_t>(i));
  return Valuation::infinity();
}

SkewPoly SkewPoly::operator+(const SkewPoly& o) const {
  check_same(*this, o);
  std::vector<FqElem> r = c_;
  if (o.c_.size() > r.size()) r.resize(o.c_.size(), FqElem::zero(ctx_));
  for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] = r[i] + o.c_[i];
  return SkewPoly(ctx_, std::move(r));
}

SkewPoly SkewPoly::operator-(const SkewPoly& o) const { return *this + (-o); }

SkewPoly SkewPoly::operator-() const {
  std::vector<FqElem> r = c_;
  for (auto& x : r) x = -x;
  return SkewPoly(ctx_, std::move(r));
}

SkewPoly SkewPoly::operator*(const SkewPoly& o) const {
  check_same(*this, o);
  if (is_zero() || o.is_zero()) return zero(ctx_);
  // (sum a_i F^i)(sum b_j F^j) = sum_{i,j} a_i b_j^(p^i) F^(i+j)
  std::vector<FqElem> r(c_.size() + o.c_.size() - 1, FqElem::zero(ctx_));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) {
      if (o.c_[j].is_zero()) continue;
      r[i + j] = r[i + j] + c_[i] * o.c_[j].frobenius_pow(static_cast<std::int64_t>(i));
    }
  }
  return SkewPoly(ctx_, std::move(r));
}

bool SkewPoly::operator==(const SkewPoly& o) const {
  check_same(*this, o);
  return c_ == o.c_;
}

std::string SkewPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    std::string cs = c_[i].str();
    if (i == 0) {
      os << cs;
    } else {
      if (!c_[i].is_one()) os << "(" << cs << ")*";
      os << "F";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

std::pair<SkewPoly, SkewPoly> skew_divmod_left(const SkewPoly& a, const SkewPoly& b) {
  check_same(a, b);
  if (b.is_zero()) throw std::domain_error("skew_divmod: division by zero");
  const auto& ctx = a.ctx();
  SkewPoly q = SkewPoly::zero(ctx);
  SkewPoly r = a;
  const int db = b.degree();
  const FqElem bl = b.lead();
  while (!r.is_zero() && r.degree() >= db) {
    int e = r.degree() - db;
    // leading term of (c F^e) * b is c * bl^(p^e) F^(deg r)
    FqElem c = r.lead() * bl.frobenius_pow(e).inverse();
    SkewPoly t = SkewPoly::monomial(c, e);
    q = q + t;
    r = r - t * b;
  }
  return {q, r};
}

std::pair<SkewPoly, SkewPoly> skew_divmod_right(const SkewPoly& a, const SkewPoly& b) {
  check_same(a, b);
  if (b.is_zero()) throw std::domain_error("skew_divmod: division by zero");
  const auto& ctx = a.ctx();
  SkewPoly q = SkewPoly::zero(ctx);
  SkewPoly r = a;
  const int db = b.degree();
  const FqElem bl = b.lead();
  while (!r.is_zero() && r.degree() >= db) {
    int e = r.degree() - db;
    // leading term of b * (c F^e) is bl * c^(p^db) F^(deg r)
    FqElem c = (bl.inverse() * r.lead()).frobenius_pow(-db);
    SkewPoly t = SkewPoly::monomial(c, e);
    q = q + t;
    r = r - b * t;
  }
  return {q, r};
}

std::optional<SkewPoly> skew_exact_right_quotient(const SkewPoly& b, const SkewPoly& a) {
  if (a.is_zero()) return SkewPoly::zero(b.ctx());
  if (b.is_zero()) return std::nullopt;
  auto [q, r] = skew_divmod_right(a, b);
  if (!r.is_zero()) return std::nullopt;
  return q;
}

std::optional<SkewPoly> skew_exact_left_quotient(const SkewPoly& b, const SkewPoly& a) {
  if (a.is_zero()) return SkewPoly::zero(b.ctx());
  if (b.is_zero()) return std::nullopt;
  auto [q, r] = skew_divmod_left(a, b);
  if (!r.is_zero()) return std::nullopt;
  return q;
}

SkewLclm skew_lclm(const SkewPoly& a, const SkewPoly& b) {
  check_same(a, b);
  if (a.is_zero() || b.is_zero()) throw std::domain_error("skew_lclm: zero input");
  const auto& ctx = a.ctx();
  // r_i = u_i a + v_i b throughout
  SkewPoly r0 = a, r1 = b;
  SkewPoly u0 = SkewPoly::one(ctx), v0 = SkewPoly::zero(ctx);
  SkewPoly u1 = SkewPoly::zero(ctx), v1 = SkewPoly::one(ctx);
  while (!r1.is_zero()) {
    auto [q, r2] = skew_divmod_left(r0, r1);
    SkewPoly u2 = u0 - q * u1;
    SkewPoly v2 = v0 - q * v1;
    r0 = r1;
    u0 = u1;
    v0 = v1;
    r1 = r2;
    u1 = u2;
    v1 = v2;
  }
  // now u1 a + v1 b = 0 and u1 a has minimal degree among common left multiples
  SkewLclm out{u1 * a, u1, -v1};
  // normalize monic
  if (!out.m.is_zero()) {
    FqElem s = out.m.lead().inverse();
    SkewPoly sc = SkewPoly::constant(s);
    out.m = sc * out.m;
    out.c1 = sc * out.c1;
    out.c2 = sc * out.c2;
  }
  return out;
}

SkewLcrm skew_lcrm(const SkewPoly& a, const SkewPoly& b) {
  check_same(a, b);
  if (a.is_zero() || b.is_zero()) throw std::domain_error("skew_lcrm: zero input");
  const auto& ctx = a.ctx();
  // r_i = a u_i + b v_i throughout
  SkewPoly r0 = a, r1 = b;
  SkewPoly u0 = SkewPoly::one(ctx), v0 = SkewPoly::zero(ctx);
  SkewPoly u1 = SkewPoly::zero(ctx), v1 = SkewPoly::one(ctx);
  while (!r1.is_zero()) {
    auto [q, r2] = skew_divmod_right(r0, r1);
    SkewPoly u2 = u0 - u1 * q;
    SkewPoly v2 = v0 - v1 * q;
    r0 = r1;
    u0 = u1;
    v0 = v1;
    r1 = r2;
    u1 = u2;
    v1 = v2;
  }
  SkewLcrm out{a * u1, u1, -v1};
  if (!out.m.is_zero()) {
    FqElem s = out.m.lead().inverse().frobenius_pow(-out.m.degree());
    SkewPoly sc = SkewPoly::constant(s);
    out.m = out.m * sc;
    out.c1 = out.c1 * sc;
    out.c2 = out.c2 * sc;
  }
  return out;
}

SkewPoly skew_gcld(SkewPoly a, SkewPoly b) {
  check_same(a, b);
  while (!b.is_zero()) {
    auto [q, r] = skew_divmod_right(a, b);
    a = b;
    b = r;
  }
  if (!a.is_zero()) {
    // right-multiplying by a unit keeps left-divisor status; the constant is
    // twisted so that lead * c^(p^deg) = 1
    FqElem c = a.lead().inverse().frobenius_pow(-a.degree());
    a = a * SkewPoly::constant(c);
  }
  return a;
}

}  // namespace oremat
