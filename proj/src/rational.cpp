#include "causalpoly/rational.hpp"

#include <stdexcept>

namespace causalpoly {

std::string to_string(const Rational& r) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  const auto den = denominator(r);
  if (den == 1) return numerator(r).str();
  return numerator(r).str() + "/" + den.str();
}

Rational parse_rational(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (!text.empty() && text.front() == '"' && text.back() == '"' && text.size() >= 2)
    text = text.substr(1, text.size() - 2);
  auto valid_integer = [](std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  const auto slash = text.find('/');
  const auto num = trim(text.substr(0, slash));
  const auto den = slash == std::string_view::npos ? std::string_view("1") : trim(text.substr(slash + 1));
  if (!valid_integer(num) || !valid_integer(den))
    throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
  using Int = boost::multiprecision::mpz_int;
  Int p(std::string(num.front() == '+' ? num.substr(1) : num));
  Int q(std::string(den.front() == '+' ? den.substr(1) : den));
  if (q == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  return Rational(p, q);
}

}  // namespace causalpoly
