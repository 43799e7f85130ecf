#include "quasiline/rational.hpp"

#include <cctype>

#include "quasiline/error.hpp"

namespace quasiline {

std::string to_string(const Rational& value) {
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  auto fail = [&]() -> Rational {
    throw Error(ErrorKind::InvalidInput, "not a rational number: '" + std::string(text) + "'");
  };
  if (text.empty()) return fail();

  auto is_integer = [](std::string_view s) {
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
  };
  auto to_mpz = [](std::string_view s) {
    if (!s.empty() && s[0] == '+') s.remove_prefix(1);
    return mpz_class(std::string(s), 10);
  };

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    auto num = text.substr(0, slash);
    auto den = text.substr(slash + 1);
    if (!is_integer(num) || !is_integer(den)) return fail();
    mpz_class d = to_mpz(den);
    if (d == 0) return fail();
    Rational r(to_mpz(num), d);
    r.canonicalize();
    return r;
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    auto whole = text.substr(0, dot);
    auto frac = text.substr(dot + 1);
    bool negative = !whole.empty() && whole[0] == '-';
    if (whole == "-" || whole == "+" || whole.empty()) whole = std::string_view("0");
    if (!is_integer(whole) || frac.empty()) return fail();
    for (char c : frac) {
      if (!std::isdigit(static_cast<unsigned char>(c))) return fail();
    }
    mpz_class scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    mpz_class w = to_mpz(whole);
    if (w < 0) w = -w;
    Rational r(w * scale + mpz_class(std::string(frac), 10), scale);
    r.canonicalize();
    return negative ? Rational(-r) : r;
  }
  if (!is_integer(text)) return fail();
  return Rational(to_mpz(text));
}

int orientation(const Point2& a, const Point2& b, const Point2& c) {
  Rational cross = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
  return sgn(cross);
}

}  // namespace quasiline
