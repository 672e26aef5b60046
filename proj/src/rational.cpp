#include "tropsing/rational.hpp"

#include <cctype>

#include "tropsing/error.hpp"

namespace tropsing {

namespace {

bool is_integer_literal(std::string_view s) {
  std::size_t pos = 0;
  if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
  if (pos == s.size()) return false;
  for (; pos < s.size(); ++pos) {
    if (!std::isdigit(static_cast<unsigned char>(s[pos]))) return false;
  }
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

mpz_class parse_integer(std::string_view s, std::string_view whole) {
  if (!is_integer_literal(s)) {
    throw Error(ErrorCode::ParseError, "malformed rational '" + std::string(whole) + "'");
  }
  std::string digits(s);
  if (digits.front() == '+') digits.erase(0, 1);
  return mpz_class(digits, 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view s = trim(text);
  const auto slash = s.find('/');
  if (slash == std::string_view::npos) {
    return Rational(parse_integer(s, text));
  }
  const mpz_class num = parse_integer(s.substr(0, slash), text);
  const std::string_view den_text = s.substr(slash + 1);
  if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+')) {
    throw Error(ErrorCode::ParseError, "malformed rational '" + std::string(text) + "'");
  }
  const mpz_class den = parse_integer(den_text, text);
  if (den == 0) {
    throw Error(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
  }
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

Rational abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

std::string to_decimal(const Rational& q, int digits) {
  mpz_class scale = 1;
  for (int k = 0; k < digits; ++k) scale *= 10;
  const bool negative = q < 0;
  const Rational magnitude = abs(q);
  // round(|q| * scale) with ties away from zero
  mpz_class scaled = (2 * magnitude.get_num() * scale + magnitude.get_den()) / (2 * magnitude.get_den());
  mpz_class whole = scaled / scale;
  mpz_class frac = scaled % scale;
  std::string out = (negative && scaled != 0) ? "-" : "";
  out += whole.get_str();
  if (digits > 0) {
    std::string f = frac.get_str();
    out += '.';
    out += std::string(static_cast<std::size_t>(digits) - f.size(), '0') + f;
  }
  return out;
}

}  // namespace tropsing
