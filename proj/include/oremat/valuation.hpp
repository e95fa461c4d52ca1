#pragma once

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

namespace oremat {

/// Value of a discrete valuation: a finite integer or the distinguished
/// infinity (valuation of zero / determinant of a singular matrix).
/// Infinity is an explicit state, never an integer sentinel.
class Valuation {
 public:
  Valuation() : inf_(true), v_(0) {}
  static Valuation infinity() { return Valuation(); }
  static Valuation finite(std::int64_t v) {
    Valuation x;
    x.inf_ = false;
    x.v_ = v;
    return x;
  }

  bool is_infinite() const { return inf_; }
  bool is_finite() const { return !inf_; }
  std::int64_t value() const {
    if (inf_) throw std::domain_error("Valuation: infinite value has no integer");
    return v_;
  }

  friend Valuation operator+(const Valuation& a, const Valuation& b) {
    if (a.inf_ || b.inf_) return infinity();
    return finite(a.v_ + b.v_);
  }
  friend Valuation operator-(const Valuation& a, const Valuation& b) {
    if (a.inf_) return infinity();
    if (b.inf_) throw std::domain_error("Valuation: cannot subtract infinity");
    return finite(a.v_ - b.v_);
  }
  friend Valuation min(const Valuation& a, const Valuation& b) { return a < b ? a : b; }

  friend bool operator==(const Valuation& a, const Valuation& b) {
    return a.inf_ == b.inf_ && (a.inf_ || a.v_ == b.v_);
  }
  friend bool operator!=(const Valuation& a, const Valuation& b) { return !(a == b); }
  friend bool operator<(const Valuation& a, const Valuation& b) {
    if (a.inf_) return false;
    if (b.inf_) return true;
    return a.v_ < b.v_;
  }
  friend bool operator<=(const Valuation& a, const Valuation& b) { return a < b || a == b; }
  friend bool operator>(const Valuation& a, const Valuation& b) { return b < a; }
  friend bool operator>=(const Valuation& a, const Valuation& b) { return b <= a; }

  std::string str() const { return inf_ ? "inf" : std::to_string(v_); }
  friend std::ostream& operator<<(std::ostream& os, const Valuation& v) { return os << v.str(); }

 private:
  bool inf_;
  std::int64_t v_;
};

}  // namespace oremat
