#include "tav/numeric.hpp"

#include <cctype>
#include <limits>
#include <ostream>

namespace tav {

Int::Int(const std::string& decimal) { *this = parse_int(decimal); }

Int operator/(const Int& a, const Int& b) {
  require(!b.is_zero(), errc::invalid_argument, "division by zero");
  return Int(mp::cpp_int(a.v_ / b.v_));
}

Int operator%(const Int& a, const Int& b) {
  require(!b.is_zero(), errc::invalid_argument, "division by zero");
  return Int(mp::cpp_int(a.v_ % b.v_));
}

std::ostream& operator<<(std::ostream& os, const Int& x) { return os << x.v_; }

Rat::Rat(const Int& num, const Int& den) {
  require(!den.is_zero(), errc::invalid_argument, "zero denominator");
  v_ = mp::cpp_rational(num.raw(), den.raw());
}

Rat::Rat(const std::string& text) { *this = parse_rat(text); }

Rat operator/(const Rat& a, const Rat& b) {
  require(!b.is_zero(), errc::invalid_argument, "division by zero");
  return Rat(mp::cpp_rational(a.v_ / b.v_));
}

Int Rat::to_int() const {
  require(is_integer(), errc::invalid_argument, "rational is not an integer");
  return numerator();
}

std::string Rat::str() const {
  if (is_integer()) return numerator().str();
  return numerator().str() + "/" + denominator().str();
}

std::ostream& operator<<(std::ostream& os, const Rat& x) { return os << x.str(); }

Int abs(const Int& a) { return Int(mp::cpp_int(mp::abs(a.v_))); }

Int gcd(const Int& a, const Int& b) { return Int(mp::cpp_int(mp::gcd(a.v_, b.v_))); }

Int lcm(const Int& a, const Int& b) { return Int(mp::cpp_int(mp::lcm(a.v_, b.v_))); }

bool divides(const Int& a, const Int& b) {
  require(!a.is_zero(), errc::invalid_argument, "divisibility by zero");
  return (b % a).is_zero();
}

Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;
  if (!(a % b).is_zero() && ((a < 0) != (b < 0))) q -= 1;
  return q;
}

Int mod_floor(const Int& a, const Int& b) {
  Int r = a - floor_div(a, abs(b)) * abs(b);
  return r;
}

Int sqrt_floor(const Int& a) {
  require(a >= 0, errc::invalid_argument, "sqrt of negative integer");
  return Int(mp::cpp_int(mp::sqrt(a.raw())));
}

bool is_perfect_square(const Int& m) {
  require(m >= 0, errc::invalid_argument, "perfect-square test on negative input");
  Int r = sqrt_floor(m);
  return r * r == m;
}

std::optional<Int> sqrt_exact(const Int& m) {
  if (m < 0) return std::nullopt;
  Int r = sqrt_floor(m);
  if (r * r == m) return r;
  return std::nullopt;
}

Int pow(const Int& base, const Int& exp) {
  require(exp >= 0, errc::invalid_argument, "negative exponent");
  require(exp <= Int(std::numeric_limits<unsigned>::max()), errc::invalid_argument,
          "exponent too large");
  unsigned e = static_cast<unsigned>(to_long(exp));
  return Int(mp::cpp_int(mp::pow(base.raw(), e)));
}

Int binomial(long n, long k) {
  require(n >= 0 && k >= 0, errc::invalid_argument, "binomial of negative input");
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  Int result = 1;
  for (long i = 1; i <= k; ++i) {
    result *= Int(n - k + i);
    result /= Int(i);
  }
  return result;
}

long to_long(const Int& a) {
  require(a >= Int(std::numeric_limits<long>::min()) &&
              a <= Int(std::numeric_limits<long>::max()),
          errc::invalid_argument, "integer out of machine range");
  return a.raw().convert_to<long>();
}

Rat abs(const Rat& a) { return a < 0 ? -a : a; }

Int floor(const Rat& r) { return floor_div(r.numerator(), r.denominator()); }

Rat fractional_part(const Rat& r) { return r - Rat(floor(r)); }

Int parse_int(const std::string& text) {
  require(!text.empty(), errc::invalid_argument, "empty integer literal");
  std::size_t start = text[0] == '-' ? 1 : 0;
  require(start < text.size(), errc::invalid_argument, "malformed integer literal");
  for (std::size_t i = start; i < text.size(); ++i)
    require(std::isdigit(static_cast<unsigned char>(text[i])), errc::invalid_argument,
            "malformed integer literal: " + text);
  Int result = 0;
  for (std::size_t i = start; i < text.size(); ++i)
    result = result * 10 + Int(text[i] - '0');
  return start == 1 ? -result : result;
}

Rat parse_rat(const std::string& text) {
  std::size_t slash = text.find('/');
  if (slash == std::string::npos) return Rat(parse_int(text));
  Int num = parse_int(text.substr(0, slash));
  Int den = parse_int(text.substr(slash + 1));
  require(!den.is_zero(), errc::invalid_argument, "zero denominator: " + text);
  return Rat(num, den);
}

}  // namespace tav
