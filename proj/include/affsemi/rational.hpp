#pragma once

#include <compare>
#include <ostream>
#include <string>

#include "affsemi/errors.hpp"
#include "affsemi/integer.hpp"

namespace affsemi {

// Exact rational. Invariants: denominator >= 1 and gcd(|num|, den) = 1, kept
// by every constructor and operator. Comparisons are exact cross
// multiplications; there is no floating-point path anywhere.
class Rat {
 public:
  Rat() : num_(0), den_(1) {}
  Rat(Int n) : num_(std::move(n)), den_(1) {}  // NOLINT: implicit on purpose
  Rat(long long n) : num_(n), den_(1) {}       // NOLINT
  Rat(Int n, Int d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }

  const Int& num() const { return num_; }
  const Int& den() const { return den_; }

  bool is_integer() const { return den_ == 1; }
  bool is_zero() const { return num_ == 0; }
  int sign() const { return num_ == 0 ? 0 : (num_ < 0 ? -1 : 1); }

  Int floor() const { return floor_div(num_, den_); }
  Int ceil() const { return -floor_div(-num_, den_); }

  Rat operator-() const { return Rat(unchecked{}, -num_, den_); }

  friend Rat operator+(const Rat& a, const Rat& b) {
    return Rat(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rat operator-(const Rat& a, const Rat& b) {
    return Rat(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rat operator*(const Rat& a, const Rat& b) {
    return Rat(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend Rat operator/(const Rat& a, const Rat& b) {
    if (b.num_ == 0) throw Error("Rat: division by zero");
    return Rat(a.num_ * b.den_, a.den_ * b.num_);
  }

  Rat& operator+=(const Rat& o) { return *this = *this + o; }
  Rat& operator-=(const Rat& o) { return *this = *this - o; }
  Rat& operator*=(const Rat& o) { return *this = *this * o; }
  Rat& operator/=(const Rat& o) { return *this = *this / o; }

  friend bool operator==(const Rat& a, const Rat& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    // Denominators are positive, so the cross product keeps the order.
    Int lhs = a.num_ * b.den_;
    Int rhs = b.num_ * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  std::string str() const {
    if (den_ == 1) return num_.str();
    return num_.str() + "/" + den_.str();
  }

  friend std::ostream& operator<<(std::ostream& os, const Rat& r) {
    return os << r.str();
  }

 private:
  struct unchecked {};
  Rat(unchecked, Int n, Int d) : num_(std::move(n)), den_(std::move(d)) {}

  void normalize() {
    if (den_ == 0) throw Error("Rat: zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    Int g = gcd_int(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  Int num_;
  Int den_;
};

}  // namespace affsemi
