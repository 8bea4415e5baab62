#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hatilt {

/// Exact rational number with 64-bit numerator and denominator.
///
/// Intermediate products are formed in 128-bit arithmetic and reduced
/// before narrowing; a result that does not fit throws std::overflow_error
/// instead of wrapping.
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(long long n) : num_(n), den_(1) {}  // NOLINT(implicit)
  Rational(long long n, long long d);

  long long num() const { return num_; }
  long long den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return (num_ > 0) - (num_ < 0); }

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b);
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  Rational inverse() const;
  Rational abs() const { return num_ < 0 ? -*this : *this; }

  /// "p" for integers, "p/q" otherwise.
  std::string to_string() const;
  /// Accepts "p", "-p" and "p/q".
  static Rational parse(std::string_view text);

 private:
  static Rational from_wide(__int128 n, __int128 d);

  long long num_ = 0;
  long long den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace hatilt
