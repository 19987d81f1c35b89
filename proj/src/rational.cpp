#include "stratsys/rational.hpp"

#include <stdexcept>

namespace stratsys {

std::string to_string(const Rational& value) {
  Rational v = value;
  v.canonicalize();
  if (v.get_den() == 1) return v.get_num().get_str();
  return v.get_num().get_str() + "/" + v.get_den().get_str();
}

namespace {

mpz_class parse_integer(std::string_view text, std::string_view whole) {
  std::string digits(text);
  bool ok = !digits.empty();
  for (std::size_t k = 0; k < digits.size() && ok; ++k) {
    char c = digits[k];
    bool sign = (k == 0 && (c == '-' || c == '+') && digits.size() > 1);
    ok = sign || (c >= '0' && c <= '9');
  }
  if (!ok) throw std::invalid_argument("malformed rational '" + std::string(whole) + "'");
  if (digits[0] == '+') digits.erase(0, 1);
  return mpz_class(digits, 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text, text));
  mpz_class num = parse_integer(text.substr(0, slash), text);
  mpz_class den = parse_integer(text.substr(slash + 1), text);
  if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace stratsys
