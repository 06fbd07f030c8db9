#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "hollow/errors.hpp"

namespace hollow {

/// Exact rational number on int64, normalized (den > 0, gcd = 1).
/// Used by obstruction rules so that certificates are exact; magnitudes
/// stay tiny there, but products go through 128-bit to be safe.
class Rat {
 public:
  constexpr Rat() : num_(0), den_(1) {}
  constexpr Rat(std::int64_t n) : num_(n), den_(1) {}
  Rat(std::int64_t n, std::int64_t d) : num_(n), den_(d) { normalize(); }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  bool is_zero() const { return num_ == 0; }
  bool is_negative() const { return num_ < 0; }
  double to_double() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

  friend Rat operator+(const Rat& a, const Rat& b) {
    return make(i128(a.num_) * b.den_ + i128(b.num_) * a.den_,
                i128(a.den_) * b.den_);
  }
  friend Rat operator-(const Rat& a, const Rat& b) {
    return make(i128(a.num_) * b.den_ - i128(b.num_) * a.den_,
                i128(a.den_) * b.den_);
  }
  friend Rat operator*(const Rat& a, const Rat& b) {
    return make(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
  }
  friend Rat operator/(const Rat& a, const Rat& b) {
    if (b.num_ == 0) throw ParameterError("rational division by zero");
    return make(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
  }
  Rat operator-() const {
    Rat r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }
  friend bool operator==(const Rat& a, const Rat& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator<(const Rat& a, const Rat& b) {
    return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
  }
  friend bool operator<=(const Rat& a, const Rat& b) { return a < b || a == b; }

  std::string str() const {
    std::string s = std::to_string(num_);
    if (den_ != 1) s += "/" + std::to_string(den_);
    return s;
  }

 private:
  using i128 = __int128;

  static Rat make(i128 n, i128 d) {
    if (d < 0) {
      n = -n;
      d = -d;
    }
    i128 g = gcd128(n < 0 ? -n : n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    constexpr i128 lim = INT64_MAX;
    if (n > lim || n < -lim || d > lim)
      throw NumericError("rational overflow");
    Rat r;
    r.num_ = static_cast<std::int64_t>(n);
    r.den_ = static_cast<std::int64_t>(d);
    return r;
  }

  static i128 gcd128(i128 a, i128 b) {
    while (b != 0) {
      i128 t = a % b;
      a = b;
      b = t;
    }
    return a == 0 ? 1 : a;
  }

  void normalize() {
    if (den_ == 0) throw ParameterError("rational with zero denominator");
    *this = make(num_, den_);
  }

  std::int64_t num_;
  std::int64_t den_;
};

}  // namespace hollow
