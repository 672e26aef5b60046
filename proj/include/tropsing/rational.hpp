#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace tropsing {

using Rational = mpq_class;
using RationalVector = std::vector<Rational>;

/// Parses "p/q" or an integer. Throws Error(ParseError) on anything else,
/// including a zero denominator.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);

/// Point of the real plane with exact rational coordinates.
struct Point2 {
  Rational x;
  Rational y;

  friend bool operator==(const Point2& a, const Point2& b) {
    return a.x == b.x && a.y == b.y;
  }
};

/// Decimal rendering with `digits` fractional digits, rounded half away
/// from zero. Integer arithmetic only.
std::string to_decimal(const Rational& q, int digits);

Rational abs(const Rational& q);

}  // namespace tropsing
