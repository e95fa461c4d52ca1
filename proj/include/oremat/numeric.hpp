#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace oremat {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Thrown when an input document is structurally malformed.
struct SchemaError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown when a document parses but violates a ring or matrix invariant
// (reducible modulus, mixed quaternion parity, ...).
struct InvariantError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown when an operation is requested on a ring that does not support it.
struct UnsupportedRingError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown when an internal safety cap trips; not an expected path.
struct ComputeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline Int floor_div(const Int& a, const Int& b) {
  if (b == 0) throw std::domain_error("floor_div: division by zero");
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline Int gcd_int(Int a, Int b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// p-adic valuation of a nonzero integer; caller handles zero separately.
// The 2-adic case reads the least significant bit index directly.
inline std::int64_t padic_val(Int a, const Int& p) {
  if (a == 0) throw std::domain_error("padic_val of zero");
  if (a < 0) a = -a;
  if (p == 2) return static_cast<std::int64_t>(boost::multiprecision::lsb(a));
  std::int64_t v = 0;
  while (a % p == 0) {
    a /= p;
    ++v;
  }
  return v;
}

inline bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// splitmix64; the exact sequence is part of the reproducibility contract
// for seeded sampling.
struct SplitMix64 {
  std::uint64_t state;
  explicit SplitMix64(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }
  // uniform in [0, bound)
  std::uint64_t below(std::uint64_t bound) { return bound ? next() % bound : 0; }
};

}  // namespace oremat
