#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include "commprob/perm.hpp"

namespace commprob {

/// Raised when exact arithmetic would leave the 64-bit range.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// Exact fraction over int64 in lowest terms with a positive denominator.
/// Every operation checks for overflow and throws instead of wrapping.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t numerator, std::int64_t denominator = 1);

  std::int64_t numerator() const { return num_; }
  std::int64_t denominator() const { return den_; }

  Rational reciprocal() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  /// Always "numerator/denominator", e.g. "1/1" for one.
  std::string to_string() const;

  /// Accepts "p/q" or a bare integer.
  static Rational parse(std::string_view text);

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace commprob
