#include "helly/rational.hpp"

#include <cctype>

#include "helly/error.hpp"

namespace helly {

Rational make_rational(long numerator, long denominator) {
  if (denominator == 0) throw Error("rational with zero denominator");
  Rational q(numerator, denominator);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_str();
}

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-' || den[0] == '+')
    throw Error("malformed rational '" + std::string(text) + "'");
  std::string n(num[0] == '+' ? num.substr(1) : num);
  mpz_class zn(n), zd{std::string(den)};
  if (zd == 0) throw Error("rational with zero denominator: '" + std::string(text) + "'");
  Rational q(zn, zd);
  q.canonicalize();
  return q;
}

mpz_class denominator(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_den();
}

Rational abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

}  // namespace helly
