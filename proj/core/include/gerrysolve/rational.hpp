#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <string>
#include <string_view>

#include "gerrysolve/common.hpp"

namespace gerrysolve {

// Exact rational on int64, always normalized (gcd 1, positive denominator).
// Budgets and move costs are compared exactly; no floating point anywhere.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t num, std::int64_t den = 1) : num_(num), den_(den) { normalize(); }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  bool is_integer() const { return den_ == 1; }
  std::int64_t integer_value() const {
    if (!is_integer()) throw ValidationError("rational is not an integer: " + str());
    return num_;
  }
  bool negative() const { return num_ < 0; }
  bool is_zero() const { return num_ == 0; }

  Rational operator+(const Rational& o) const {
    __int128 n = static_cast<__int128>(num_) * o.den_ + static_cast<__int128>(o.num_) * den_;
    __int128 d = static_cast<__int128>(den_) * o.den_;
    return from_wide(n, d);
  }
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational operator-(const Rational& o) const {
    __int128 n = static_cast<__int128>(num_) * o.den_ - static_cast<__int128>(o.num_) * den_;
    __int128 d = static_cast<__int128>(den_) * o.den_;
    return from_wide(n, d);
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
    __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  // "p" when integral, "p/q" otherwise.
  std::string str() const {
    std::string s = std::to_string(num_);
    if (den_ != 1) s += "/" + std::to_string(den_);
    return s;
  }

  // Accepts "p", "p/q", and exact decimals like "1.5".
  static Rational parse(std::string_view text);

 private:
  void normalize() {
    if (den_ == 0) throw ValidationError("rational with zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  static Rational from_wide(__int128 n, __int128 d) {
    if (d < 0) {
      n = -n;
      d = -d;
    }
    __int128 an = n < 0 ? -n : n;
    __int128 g = wide_gcd(an, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    constexpr __int128 lim = INT64_MAX;
    if (n > lim || n < -lim || d > lim)
      throw std::overflow_error("rational arithmetic overflow");
    Rational r;
    r.num_ = static_cast<std::int64_t>(n);
    r.den_ = static_cast<std::int64_t>(d);
    return r;
  }

  static __int128 wide_gcd(__int128 a, __int128 b) {
    while (b != 0) {
      __int128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

// A move cost: a finite nonnegative rational or the absorbing "unmovable"
// marker (a move that cannot be purchased at any budget).
class Cost {
 public:
  constexpr Cost() = default;
  static Cost finite(Rational v) {
    if (v.negative()) throw ValidationError("negative cost");
    Cost c;
    c.value_ = v;
    return c;
  }
  static Cost unmovable() {
    Cost c;
    c.unmovable_ = true;
    return c;
  }

  bool is_unmovable() const { return unmovable_; }
  bool is_finite() const { return !unmovable_; }
  const Rational& value() const {
    if (unmovable_) throw ValidationError("unmovable cost has no finite value");
    return value_;
  }

  Cost operator+(const Cost& o) const {
    if (unmovable_ || o.unmovable_) return unmovable();
    return finite(value_ + o.value_);
  }
  Cost& operator+=(const Cost& o) { return *this = *this + o; }

  friend bool operator==(const Cost& a, const Cost& b) {
    if (a.unmovable_ != b.unmovable_) return false;
    return a.unmovable_ || a.value_ == b.value_;
  }
  // Total order with unmovable as the maximum, used for min-cost tracking.
  friend bool operator<(const Cost& a, const Cost& b) {
    if (a.unmovable_) return false;
    if (b.unmovable_) return true;
    return a.value_ < b.value_;
  }
  friend bool operator<=(const Cost& a, const Cost& b) { return a < b || a == b; }

  std::string str() const { return unmovable_ ? "unmovable" : value_.str(); }

 private:
  bool unmovable_ = false;
  Rational value_;
};

}  // namespace gerrysolve
