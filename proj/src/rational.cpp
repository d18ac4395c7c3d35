#include "markov/rational.hpp"

#include <cctype>
#include <cmath>

#include "markov/error.hpp"

namespace markov {

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  text = trim(text);
  const auto slash = text.find('/');
  std::string_view num = trim(text.substr(0, slash));
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : trim(text.substr(slash + 1));
  if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-' || den[0] == '+') {
    throw Error(ErrorKind::Config, "malformed rational '" + std::string(text) + "'");
  }
  std::string n(num);
  if (n[0] == '+') n.erase(0, 1);
  mpz_class p(n, 10);
  mpz_class q(std::string(den), 10);
  if (q == 0) throw Error(ErrorKind::Config, "zero denominator in '" + std::string(text) + "'");
  Rational r(p, q);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& q) { return q.get_str(); }

std::size_t denominator_bits(const Rational& q) {
  return mpz_sizeinbase(q.get_den_mpz_t(), 2);
}

Rational dyadic_ceil(double v, unsigned bits) {
  const double scaled = std::ceil(std::ldexp(v, static_cast<int>(bits)));
  Rational r(mpz_class(scaled), mpz_class(1) << bits);
  r.canonicalize();
  return r;
}

Rational dyadic_floor(double v, unsigned bits) {
  const double scaled = std::floor(std::ldexp(v, static_cast<int>(bits)));
  Rational r(mpz_class(scaled), mpz_class(1) << bits);
  r.canonicalize();
  return r;
}

}  // namespace markov
