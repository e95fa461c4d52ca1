#pragma once

#include <boost/container/small_vector.hpp>

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "oremat/numeric.hpp"

namespace oremat {

class FqContext;
using FqContextPtr = std::shared_ptr<const FqContext>;

/// The finite field F_{p^k} presented as F_p[x]/(m) for a monic irreducible
/// modulus m of degree k. Elements are coefficient vectors in the power
/// basis of x. Contexts are immutable and shared.
class FqContext : public std::enable_shared_from_this<FqContext> {
 public:
  /// Validates primality of p and irreducibility of the modulus.
  static FqContextPtr make(std::uint64_t p, std::vector<std::uint64_t> modulus);
  /// F_p itself (modulus x).
  static FqContextPtr prime_field(std::uint64_t p);
  /// Deterministically searches for the first monic irreducible of degree k
  /// (coefficient tuples in lexicographic order).
  static FqContextPtr default_field(std::uint64_t p, unsigned k);

  std::uint64_t p() const { return p_; }
  unsigned k() const { return k_; }
  const std::vector<std::uint64_t>& modulus() const { return modulus_; }

  bool same(const FqContext& o) const {
    return this == &o || (p_ == o.p_ && k_ == o.k_ && modulus_ == o.modulus_);
  }

 private:
  FqContext(std::uint64_t p, unsigned k, std::vector<std::uint64_t> modulus)
      : p_(p), k_(k), modulus_(std::move(modulus)) {}
  std::uint64_t p_;
  unsigned k_;
  std::vector<std::uint64_t> modulus_;  // ascending, length k+1, monic
};

using FqCoords = boost::container::small_vector<std::uint64_t, 4>;

/// An element of F_{p^k}: k residues mod p in the power basis of the modulus.
class FqElem {
 public:
  FqElem() = default;
  FqElem(FqContextPtr ctx, FqCoords coords);
  FqElem(FqContextPtr ctx, const std::vector<std::uint64_t>& coords);

  static FqElem zero(const FqContextPtr& ctx);
  static FqElem one(const FqContextPtr& ctx);
  /// Residue of an integer (the image of n·1).
  static FqElem from_int(const FqContextPtr& ctx, const Int& n);
  /// The class of x (a generator when k > 1).
  static FqElem generator(const FqContextPtr& ctx);

  const FqContextPtr& ctx() const { return ctx_; }
  const FqCoords& coords() const { return c_; }
  std::vector<std::uint64_t> coords_vec() const { return {c_.begin(), c_.end()}; }
  bool is_zero() const;
  bool is_one() const;

  FqElem operator+(const FqElem& o) const;
  FqElem operator-(const FqElem& o) const;
  FqElem operator-() const;
  FqElem operator*(const FqElem& o) const;
  FqElem inverse() const;
  FqElem pow(Int e) const;
  /// x -> x^p (a field automorphism; k-fold application is the identity).
  FqElem frobenius() const;
  FqElem frobenius_inverse() const;
  /// x -> x^(p^e), e may be negative.
  FqElem frobenius_pow(std::int64_t e) const;

  bool operator==(const FqElem& o) const;
  bool operator!=(const FqElem& o) const { return !(*this == o); }

  std::string str() const;

 private:
  void check_same(const FqElem& o) const;
  FqContextPtr ctx_;
  FqCoords c_;
};

/// Dense matrix over F_q; just enough linear algebra for flock slices.
struct FqMat {
  FqContextPtr ctx;
  int rows = 0, cols = 0;
  std::vector<FqElem> a;  // row-major

  static FqMat zero(const FqContextPtr& ctx, int rows, int cols);
  FqElem& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
  const FqElem& at(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }
};

int fq_rank(const FqMat& m);
/// One nonzero vector c with M·c = 0, or empty when the columns are independent.
std::vector<FqElem> fq_column_dependency(const FqMat& m);
/// dim(A) == dim(B) == dim(A|B), all as column spans.
bool fq_same_column_span(const FqMat& a, const FqMat& b);

/// Plain polynomials over F_q (commutative; used for irreducibility tests
/// and field towers, not for the skew ring).
namespace fqpoly {
using Poly = std::vector<FqElem>;  // ascending coefficients, trimmed
Poly trim(Poly f);
bool is_zero(const Poly& f);
int degree(const Poly& f);
Poly add(const Poly& f, const Poly& g);
Poly sub(const Poly& f, const Poly& g);
Poly mul(const Poly& f, const Poly& g);
Poly mod(const Poly& f, const Poly& g);
Poly powmod(const Poly& f, Int e, const Poly& g);
Poly gcd(Poly f, Poly g);
/// Irreducibility over F_q via gcd(x^(q^i) - x, f) for i <= deg/2.
bool irreducible(const Poly& f);
}  // namespace fqpoly

}  // namespace oremat
