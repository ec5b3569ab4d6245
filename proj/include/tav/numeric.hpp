#pragma once

// Exact arbitrary-precision scalars. `Int` and `Rat` are thin value types
// over boost::multiprecision backends; they expose only the operations the
// rest of the library needs, which keeps them friendly to Eigen's scalar
// requirements. Rationals are always kept reduced with positive denominator.

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>

#include "tav/errors.hpp"

namespace tav {

namespace mp = boost::multiprecision;

class Int {
 public:
  Int() = default;
  template <std::integral T>
  Int(T value) : v_(value) {}
  explicit Int(const std::string& decimal);

  friend Int operator+(const Int& a, const Int& b) { return Int(a.v_ + b.v_); }
  friend Int operator-(const Int& a, const Int& b) { return Int(a.v_ - b.v_); }
  friend Int operator*(const Int& a, const Int& b) { return Int(a.v_ * b.v_); }
  // Truncated quotient / remainder, matching C++ integer semantics.
  friend Int operator/(const Int& a, const Int& b);
  friend Int operator%(const Int& a, const Int& b);
  Int operator-() const { return Int(-v_); }

  Int& operator+=(const Int& o) { v_ += o.v_; return *this; }
  Int& operator-=(const Int& o) { v_ -= o.v_; return *this; }
  Int& operator*=(const Int& o) { v_ *= o.v_; return *this; }
  Int& operator/=(const Int& o) { return *this = *this / o; }
  Int& operator%=(const Int& o) { return *this = *this % o; }

  friend bool operator==(const Int& a, const Int& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Int& a, const Int& b) {
    if (a.v_ < b.v_) return std::strong_ordering::less;
    if (a.v_ > b.v_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  bool is_zero() const { return v_.is_zero(); }
  int sign() const { return v_.sign(); }
  bool is_odd() const { return mp::bit_test(mp::cpp_int(mp::abs(v_)), 0); }

  std::string str() const { return v_.str(); }
  const mp::cpp_int& raw() const { return v_; }

  friend std::ostream& operator<<(std::ostream& os, const Int& x);

 private:
  explicit Int(mp::cpp_int v) : v_(std::move(v)) {}
  mp::cpp_int v_;

  friend Int abs(const Int&);
  friend Int gcd(const Int&, const Int&);
  friend Int lcm(const Int&, const Int&);
  friend Int sqrt_floor(const Int&);
  friend Int pow(const Int&, const Int&);
  friend class Rat;
};

class Rat {
 public:
  Rat() = default;
  template <std::integral T>
  Rat(T value) : v_(value) {}
  Rat(const Int& value) : v_(value.raw()) {}
  Rat(const Int& num, const Int& den);
  // Parses "p" or "p/q".
  explicit Rat(const std::string& text);

  friend Rat operator+(const Rat& a, const Rat& b) { return Rat(a.v_ + b.v_); }
  friend Rat operator-(const Rat& a, const Rat& b) { return Rat(a.v_ - b.v_); }
  friend Rat operator*(const Rat& a, const Rat& b) { return Rat(a.v_ * b.v_); }
  friend Rat operator/(const Rat& a, const Rat& b);
  Rat operator-() const { return Rat(mp::cpp_rational(-v_)); }

  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o) { return *this = *this / o; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    if (a.v_ < b.v_) return std::strong_ordering::less;
    if (a.v_ > b.v_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  bool is_zero() const { return v_.is_zero(); }
  Int numerator() const { return Int(mp::cpp_int(mp::numerator(v_))); }
  Int denominator() const { return Int(mp::cpp_int(mp::denominator(v_))); }
  bool is_integer() const { return mp::denominator(v_) == 1; }
  // Exact conversion; rejects non-integers.
  Int to_int() const;

  std::string str() const;

  friend std::ostream& operator<<(std::ostream& os, const Rat& x);

 private:
  explicit Rat(mp::cpp_rational v) : v_(std::move(v)) {}
  mp::cpp_rational v_;
};

Int abs(const Int& a);
Int gcd(const Int& a, const Int& b);
Int lcm(const Int& a, const Int& b);

// b != 0; true iff b is a multiple of a (a != 0).
bool divides(const Int& a, const Int& b);

// Floor division and the remainder in [0, |b|); b != 0.
Int floor_div(const Int& a, const Int& b);
Int mod_floor(const Int& a, const Int& b);

// Floor of sqrt; rejects negative input.
Int sqrt_floor(const Int& a);

// 0 counts as a square; negative input is rejected.
bool is_perfect_square(const Int& m);
std::optional<Int> sqrt_exact(const Int& m);

// base^exp with exp >= 0.
Int pow(const Int& base, const Int& exp);

Int binomial(long n, long k);

// Range-checked narrowing for index arithmetic.
long to_long(const Int& a);

Rat abs(const Rat& a);
// r - floor(r), in [0, 1).
Rat fractional_part(const Rat& r);
Int floor(const Rat& r);

// Strict decimal parsing (optional leading '-', digits only).
Int parse_int(const std::string& text);
Rat parse_rat(const std::string& text);

}  // namespace tav
