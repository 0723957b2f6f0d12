#include "qalex/rational.hpp"

#include <cctype>
#include <stdexcept>
#include <string>

#include "qalex/errors.hpp"

namespace qalex {

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' || den.front() == '+')
    throw ParseError("malformed rational '" + std::string(text) + "'", 0);
  std::string n(num);
  if (n.front() == '+') n.erase(0, 1);
  Rational q{mpz_class(n), mpz_class(std::string(den))};
  if (q.get_den() == 0) throw ParseError("zero denominator in '" + std::string(text) + "'", 0);
  q.canonicalize();
  return q;
}

Rational binomial(const Rational& x, int k) {
  if (k < 0) throw std::invalid_argument("binomial: negative k");
  Rational out = 1;
  for (int i = 0; i < k; ++i) {
    out *= x - i;
    out /= i + 1;
  }
  return out;
}

}  // namespace qalex
