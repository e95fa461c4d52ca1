#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "oremat/fq.hpp"
#include "oremat/linalg.hpp"
#include "oremat/matrix.hpp"
#include "oremat/numeric.hpp"
#include "oremat/rings.hpp"

namespace oremat {

class ExtField;
using ExtFieldPtr = std::shared_ptr<const ExtField>;

/// F_{q^s} built as a tower over a base F_q context, so base-field
/// coefficients embed as constants. Used as the sampling domain for the
/// additive group.
class ExtField : public std::enable_shared_from_this<ExtField> {
 public:
  using Elem = std::vector<FqElem>;  // length s, coefficients over the base

  /// Deterministically picks the first irreducible monic modulus of degree s.
  static ExtFieldPtr make(FqContextPtr base, unsigned s);

  const FqContextPtr& base() const { return base_; }
  unsigned s() const { return s_; }

  Elem zero() const;
  Elem embed(const FqElem& c) const;
  bool is_zero(const Elem& a) const;
  bool equal(const Elem& a, const Elem& b) const;
  Elem add(const Elem& a, const Elem& b) const;
  Elem mul(const Elem& a, const Elem& b) const;
  /// x -> x^(p^e), e >= 0.
  Elem frobenius_pow(const Elem& a, std::int64_t e) const;
  Elem random(SplitMix64& rng) const;

 private:
  ExtField(FqContextPtr base, unsigned s, fqpoly::Poly modulus);
  FqContextPtr base_;
  unsigned s_;
  fqpoly::Poly modulus_;
};

/// Points of G^n at desk scale: additive coordinates in F_{p^(k s)} for the
/// skew ring, multiplicative coordinates in F_q^* for the integer ring.
struct GaPoint {
  std::vector<ExtField::Elem> coords;
};
struct GmPoint {
  std::vector<FqElem> coords;  // all nonzero
};

/// (sum a_i F^i)(x) = sum a_i x^(p^i); a ring action by evaluation.
ExtField::Elem eval_endo_ga(const ExtFieldPtr& k, const SkewPoly& e, const ExtField::Elem& x);
/// a(t) = t^a, exponents acting through the cyclic group F_q^*.
FqElem eval_endo_gm(const Int& e, const FqElem& t);

/// Random parameter tuples mapped through the column generators,
/// reproducible under the seed. s is the sampling extension degree.
std::vector<GaPoint> sample_points_ga(const Mat<SkewPolyRing>& n, int count, std::uint64_t seed, unsigned s = 5);
/// Multiplicative version; q must be an odd prime power of the sampling
/// field (a prime by default).
std::vector<GmPoint> sample_points_gm(const Mat<IntegerRing>& n, int count, std::uint64_t seed,
                                      std::uint64_t q = 10007);

/// Every row phi of J annihilates every point: sum_i phi_i(q_i) = 0.
bool verify_annihilator_ga(const Mat<SkewPolyRing>& j, const std::vector<GaPoint>& points);
/// Multiplicative version: prod_i q_i^(phi_i) = 1.
bool verify_annihilator_gm(const Mat<IntegerRing>& j, const std::vector<GmPoint>& points);

}  // namespace oremat
