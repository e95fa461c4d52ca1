#include "oremat/fq.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace oremat {

namespace {

std::uint64_t addm(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return (a + b) % p; }
std::uint64_t subm(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return (a + p - b % p) % p; }
std::uint64_t mulm(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}
std::uint64_t powm(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mulm(r, a, p);
    a = mulm(a, a, p);
    e >>= 1;
  }
  return r;
}
}  // namespace

FqContextPtr FqContext::make(std::uint64_t p, std::vector<std::uint64_t> modulus) {
  if (!is_prime_u64(p)) throw InvariantError("field characteristic must be prime");
  if (modulus.size() < 2) throw InvariantError("modulus must have degree >= 1");
  for (auto& c : modulus) {
    if (c >= p) throw SchemaError("modulus coefficient out of range");
  }
  if (modulus.back() != 1) throw InvariantError("modulus must be monic");
  unsigned k = static_cast<unsigned>(modulus.size() - 1);
  auto ctx = FqContextPtr(new FqContext(p, k, std::move(modulus)));
  if (k > 1) {
    // check irreducibility over F_p using the prime field as coefficient base
    auto fp = prime_field(p);
    fqpoly::Poly f;
    for (auto c : ctx->modulus()) f.push_back(FqElem(fp, FqCoords{c}));
    f = fqpoly::trim(std::move(f));
    if (!fqpoly::irreducible(f)) throw InvariantError("modulus is reducible");
  }
  return ctx;
}

FqContextPtr FqContext::prime_field(std::uint64_t p) {
  if (!is_prime_u64(p)) throw InvariantError("field characteristic must be prime");
  return FqContextPtr(new FqContext(p, 1, {0, 1}));
}

FqContextPtr FqContext::default_field(std::uint64_t p, unsigned k) {
  if (k == 0) throw InvariantError("extension degree must be >= 1");
  if (k == 1) return prime_field(p);
  // iterate constant-to-high coefficient tuples; first irreducible wins
  std::vector<std::uint64_t> m(k + 1, 0);
  m[k] = 1;
  while (true) {
    if (m[0] != 0) {  // irreducible needs nonzero constant term for k >= 2
      try {
        return make(p, m);
      } catch (const InvariantError&) {
      }
    }
    unsigned i = 0;
    while (i < k && ++m[i] == p) m[i++] = 0;
    if (i == k) throw ComputeError("no irreducible modulus found");
  }
}

FqElem::FqElem(FqContextPtr ctx, FqCoords coords) : ctx_(std::move(ctx)), c_(std::move(coords)) {
  if (!ctx_) throw std::invalid_argument("FqElem: null context");
  c_.resize(ctx_->k(), 0);
  for (auto& x : c_) x %= ctx_->p();
}

FqElem::FqElem(FqContextPtr ctx, const std::vector<std::uint64_t>& coords)
    : FqElem(std::move(ctx), FqCoords(coords.begin(), coords.end())) {}

FqElem FqElem::zero(const FqContextPtr& ctx) { return FqElem(ctx, FqCoords(ctx->k(), 0)); }

FqElem FqElem::one(const FqContextPtr& ctx) {
  FqCoords c(ctx->k(), 0);
  c[0] = 1 % ctx->p();
  return FqElem(ctx, std::move(c));
}

FqElem FqElem::from_int(const FqContextPtr& ctx, const Int& n) {
  Int r = n % Int(ctx->p());
  if (r < 0) r += Int(ctx->p());
  FqCoords c(ctx->k(), 0);
  c[0] = r.convert_to<std::uint64_t>();
  return FqElem(ctx, std::move(c));
}

FqElem FqElem::generator(const FqContextPtr& ctx) {
  if (ctx->k() < 2) throw std::invalid_argument("generator: prime field has no power-basis generator");
  FqCoords c(ctx->k(), 0);
  c[1] = 1;
  return FqElem(ctx, std::move(c));
}

void FqElem::check_same(const FqElem& o) const {
  if (!ctx_ || !o.ctx_ || !ctx_->same(*o.ctx_)) throw std::invalid_argument("FqElem: mismatched field contexts");
}

bool FqElem::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](std::uint64_t x) { return x == 0; });
}

bool FqElem::is_one() const { return *this == one(ctx_); }

FqElem FqElem::operator+(const FqElem& o) const {
  check_same(o);
  FqElem r = *this;
  for (unsigned i = 0; i < ctx_->k(); ++i) r.c_[i] = addm(r.c_[i], o.c_[i], ctx_->p());
  return r;
}

FqElem FqElem::operator-(const FqElem& o) const {
  check_same(o);
  FqElem r = *this;
  for (unsigned i = 0; i < ctx_->k(); ++i) r.c_[i] = subm(r.c_[i], o.c_[i], ctx_->p());
  return r;
}

FqElem FqElem::operator-() const { return zero(ctx_) - *this; }

FqElem FqElem::operator*(const FqElem& o) const {
  check_same(o);
  const std::uint64_t p = ctx_->p();
  const unsigned k = ctx_->k();
  boost::container::small_vector<std::uint64_t, 8> prod(2 * k - 1, 0);
  for (unsigned i = 0; i < k; ++i) {
    if (c_[i] == 0) continue;
    for (unsigned j = 0; j < k; ++j) prod[i + j] = addm(prod[i + j], mulm(c_[i], o.c_[j], p), p);
  }
  // reduce modulo the monic modulus
  const auto& m = ctx_->modulus();
  for (int d = static_cast<int>(prod.size()) - 1; d >= static_cast<int>(k); --d) {
    std::uint64_t lead = prod[d];
    if (lead == 0) continue;
    prod[d] = 0;
    for (unsigned j = 0; j < k; ++j) prod[d - k + j] = subm(prod[d - k + j], mulm(lead, m[j], p), p);
  }
  prod.resize(k);
  return FqElem(ctx_, FqCoords(prod.begin(), prod.end()));
}

FqElem FqElem::pow(Int e) const {
  if (is_zero()) {
    if (e < 0) throw std::domain_error("F_q: negative power of zero");
    return e == 0 ? one(ctx_) : *this;
  }
  Int order = 1;
  for (unsigned i = 0; i < ctx_->k(); ++i) order *= Int(ctx_->p());
  order -= 1;  // |F_q^*|
  Int r = e % order;
  if (r < 0) r += order;
  FqElem base = *this, acc = one(ctx_);
  while (r > 0) {
    if ((r & 1) != 0) acc = acc * base;
    base = base * base;
    r >>= 1;
  }
  return acc;
}

FqElem FqElem::inverse() const {
  if (is_zero()) throw std::domain_error("F_q: inverse of zero");
  Int order = 1;
  for (unsigned i = 0; i < ctx_->k(); ++i) order *= Int(ctx_->p());
  return pow(order - 2);
}

FqElem FqElem::frobenius() const { return pow(Int(ctx_->p())); }

FqElem FqElem::frobenius_inverse() const { return frobenius_pow(-1); }

FqElem FqElem::frobenius_pow(std::int64_t e) const {
  const std::int64_t k = ctx_->k();
  std::int64_t r = ((e % k) + k) % k;
  FqElem x = *this;
  for (std::int64_t i = 0; i < r; ++i) x = x.frobenius();
  return x;
}

bool FqElem::operator==(const FqElem& o) const {
  check_same(o);
  return c_ == o.c_;
}

std::string FqElem::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (unsigned i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    if (!first) os << "+";
    first = false;
    if (i == 0) {
      os << c_[i];
    } else {
      if (c_[i] != 1) os << c_[i] << "*";
      os << "g";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

FqMat FqMat::zero(const FqContextPtr& ctx, int rows, int cols) {
  FqMat m;
  m.ctx = ctx;
  m.rows = rows;
  m.cols = cols;
  m.a.assign(static_cast<std::size_t>(rows) * cols, FqElem::zero(ctx));
  return m;
}

int fq_rank(const FqMat& m) {
  FqMat w = m;
  int rank = 0;
  for (int col = 0; col < w.cols && rank < w.rows; ++col) {
    int piv = -1;
    for (int i = rank; i < w.rows; ++i)
      if (!w.at(i, col).is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    for (int j = 0; j < w.cols; ++j) std::swap(w.at(piv, j), w.at(rank, j));
    FqElem inv = w.at(rank, col).inverse();
    for (int j = col; j < w.cols; ++j) w.at(rank, j) = w.at(rank, j) * inv;
    for (int i = 0; i < w.rows; ++i) {
      if (i == rank || w.at(i, col).is_zero()) continue;
      FqElem f = w.at(i, col);
      for (int j = col; j < w.cols; ++j) w.at(i, j) = w.at(i, j) - f * w.at(rank, j);
    }
    ++rank;
  }
  return rank;
}

std::vector<FqElem> fq_column_dependency(const FqMat& m) {
  // row-reduce [m] while tracking pivot columns; a free column yields a kernel vector
  FqMat w = m;
  std::vector<int> pivot_col;
  int rank = 0;
  for (int col = 0; col < w.cols && rank < w.rows; ++col) {
    int piv = -1;
    for (int i = rank; i < w.rows; ++i)
      if (!w.at(i, col).is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    for (int j = 0; j < w.cols; ++j) std::swap(w.at(piv, j), w.at(rank, j));
    FqElem inv = w.at(rank, col).inverse();
    for (int j = col; j < w.cols; ++j) w.at(rank, j) = w.at(rank, j) * inv;
    for (int i = 0; i < w.rows; ++i) {
      if (i == rank || w.at(i, col).is_zero()) continue;
      FqElem f = w.at(i, col);
      for (int j = col; j < w.cols; ++j) w.at(i, j) = w.at(i, j) - f * w.at(rank, j);
    }
    pivot_col.push_back(col);
    ++rank;
  }
  // first non-pivot column (if any) gives the dependency
  std::vector<bool> is_pivot(w.cols, false);
  for (int c : pivot_col) is_pivot[c] = true;
  for (int col = 0; col < w.cols; ++col) {
    if (is_pivot[col]) continue;
    std::vector<FqElem> dep(w.cols, FqElem::zero(m.ctx));
    dep[col] = FqElem::one(m.ctx);
    for (int r = 0; r < static_cast<int>(pivot_col.size()); ++r) dep[pivot_col[r]] = -w.at(r, col);
    return dep;
  }
  return {};
}

bool fq_same_column_span(const FqMat& a, const FqMat& b) {
  if (a.rows != b.rows) return false;
  int ra = fq_rank(a), rb = fq_rank(b);
  if (ra != rb) return false;
  FqMat joined = FqMat::zero(a.ctx, a.rows, a.cols + b.cols);
  for (int i = 0; i < a.rows; ++i) {
    for (int j = 0; j < a.cols; ++j) joined.at(i, j) = a.at(i, j);
    for (int j = 0; j < b.cols; ++j) joined.at(i, a.cols + j) = b.at(i, j);
  }
  return fq_rank(joined) == ra;
}

namespace fqpoly {

Poly trim(Poly f) {
  while (!f.empty() && f.back().is_zero()) f.pop_back();
  return f;
}

bool is_zero(const Poly& f) { return f.empty(); }

int degree(const Poly& f) { return static_cast<int>(f.size()) - 1; }

Poly add(const Poly& f, const Poly& g) {
  Poly r = f;
  if (g.size() > r.size()) r.resize(g.size(), FqElem::zero(g[0].ctx()));
  for (std::size_t i = 0; i < g.size(); ++i) r[i] = r[i] + g[i];
  return trim(std::move(r));
}

Poly sub(const Poly& f, const Poly& g) {
  Poly r = f;
  if (g.size() > r.size()) r.resize(g.size(), FqElem::zero(g[0].ctx()));
  for (std::size_t i = 0; i < g.size(); ++i) r[i] = r[i] - g[i];
  return trim(std::move(r));
}

Poly mul(const Poly& f, const Poly& g) {
  if (f.empty() || g.empty()) return {};
  Poly r(f.size() + g.size() - 1, FqElem::zero(f[0].ctx()));
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j) r[i + j] = r[i + j] + f[i] * g[j];
  return trim(std::move(r));
}

Poly mod(const Poly& f, const Poly& g) {
  if (g.empty()) throw std::domain_error("fqpoly: modulus is zero");
  Poly r = f;
  FqElem lead_inv = g.back().inverse();
  while (r.size() >= g.size()) {
    FqElem c = r.back() * lead_inv;
    std::size_t shift = r.size() - g.size();
    for (std::size_t i = 0; i < g.size(); ++i) r[shift + i] = r[shift + i] - c * g[i];
    r = trim(std::move(r));
    if (r.empty()) break;
  }
  return r;
}

Poly powmod(const Poly& f, Int e, const Poly& g) {
  Poly base = mod(f, g);
  Poly acc = {FqElem::one(g[0].ctx())};
  while (e > 0) {
    if ((e & 1) != 0) acc = mod(mul(acc, base), g);
    base = mod(mul(base, base), g);
    e >>= 1;
  }
  return acc;
}

Poly gcd(Poly f, Poly g) {
  f = trim(std::move(f));
  g = trim(std::move(g));
  while (!g.empty()) {
    Poly r = mod(f, g);
    f = std::move(g);
    g = std::move(r);
  }
  if (!f.empty()) {
    FqElem inv = f.back().inverse();
    for (auto& c : f) c = c * inv;
  }
  return f;
}

bool irreducible(const Poly& f) {
  int d = degree(f);
  if (d <= 0) return false;
  if (d == 1) return true;
  const auto& ctx = f[0].ctx();
  Int q = 1;
  for (unsigned i = 0; i < ctx->k(); ++i) q *= Int(ctx->p());
  Poly x = {FqElem::zero(ctx), FqElem::one(ctx)};
  // x^(q^d) == x mod f, and no proper subfield catches a factor
  Poly xq = x;
  Int qi = 1;
  for (int i = 1; i <= d; ++i) {
    qi *= q;
    xq = powmod(x, qi, f);
    Poly diff = sub(xq, x);
    if (i < d && i <= d / 2) {
      if (d % i == 0 && degree(gcd(diff, f)) > 0) return false;
      continue;
    }
    if (i == d && !is_zero(diff)) return false;
  }
  return true;
}

}  // namespace fqpoly

}  // namespace oremat
