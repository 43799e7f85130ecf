#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace quasiline {

using Rational = mpq_class;

/// Always "p/q" with q >= 1, e.g. "3/1", "-5/2".
std::string to_string(const Rational& value);

/// Accepts "p", "p/q" and finite decimals such as "-1.25". Throws Error(InvalidInput).
Rational parse_rational(std::string_view text);

struct Point2 {
  Rational x;
  Rational y;

  friend bool operator==(const Point2& a, const Point2& b) { return a.x == b.x && a.y == b.y; }
};

/// Sign of the cross product (b - a) x (c - a).
int orientation(const Point2& a, const Point2& b, const Point2& c);

}  // namespace quasiline
