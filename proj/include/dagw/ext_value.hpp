#pragma once
#include <compare>
#include <cstdint>
#include <numeric>
#include <string>

namespace dagw {

// Extended integer: a finite signed 64-bit value or +infinity.
// Infinity is absorbing under addition and greater than every finite value;
// this matches the distance arithmetic used by the shortest-path rules
// (inf + w = inf, x > inf is false, inf > finite is true).
class ExtInt {
 public:
  constexpr ExtInt() : v_(0), inf_(false) {}
  static constexpr ExtInt infinity() {
    ExtInt e;
    e.inf_ = true;
    return e;
  }
  static constexpr ExtInt of(int64_t v) {
    ExtInt e;
    e.v_ = v;
    return e;
  }
  constexpr bool is_inf() const { return inf_; }
  // Finite value; only meaningful when !is_inf().
  constexpr int64_t value() const { return v_; }

  friend constexpr ExtInt operator+(ExtInt a, ExtInt b) {
    if (a.inf_ || b.inf_) return infinity();
    return of(a.v_ + b.v_);
  }
  ExtInt& operator+=(ExtInt o) {
    *this = *this + o;
    return *this;
  }
  friend constexpr bool operator==(ExtInt a, ExtInt b) {
    return a.inf_ == b.inf_ && (a.inf_ || a.v_ == b.v_);
  }
  friend constexpr std::strong_ordering operator<=>(ExtInt a, ExtInt b) {
    if (a.inf_ && b.inf_) return std::strong_ordering::equal;
    if (a.inf_) return std::strong_ordering::greater;
    if (b.inf_) return std::strong_ordering::less;
    return a.v_ <=> b.v_;
  }

  std::string str() const { return inf_ ? "inf" : std::to_string(v_); }

 private:
  int64_t v_;
  bool inf_;
};

// Exact rational, reduced on construction. Used for the induced per-node
// state values (state rank divided by node count); arithmetic stays exact.
struct Rational {
  int64_t num = 0;
  int64_t den = 1;

  Rational() = default;
  Rational(int64_t n, int64_t d) : num(n), den(d) {
    int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }
  bool operator==(const Rational&) const = default;
  std::string str() const {
    return den == 1 ? std::to_string(num)
                    : std::to_string(num) + "/" + std::to_string(den);
  }
};

}  // namespace dagw
