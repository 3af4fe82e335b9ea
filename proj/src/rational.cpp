#include "symrig/rational.hpp"

#include <cctype>

namespace symrig {

namespace {

bool valid_integer_literal(const std::string& s, bool allow_sign) {
  std::size_t i = 0;
  if (allow_sign && i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
  if (i >= s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) {
    if (!valid_integer_literal(text, true))
      throw ParseError("malformed rational '" + text + "'");
    return Rational(Integer(text));
  }
  const std::string num = text.substr(0, slash);
  const std::string den = text.substr(slash + 1);
  if (!valid_integer_literal(num, true) || !valid_integer_literal(den, false))
    throw ParseError("malformed rational '" + text + "'");
  Integer q(den);
  if (q == 0) throw ParseError("malformed rational '" + text + "': zero denominator");
  return Rational(Integer(num), q);
}

std::string format_rational(const Rational& r) {
  const Integer num = boost::multiprecision::numerator(r);
  const Integer den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

}  // namespace symrig
