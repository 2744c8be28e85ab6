#include "fibmod5/rational.hpp"

#include <stdexcept>

namespace fibmod5 {
namespace {

SeqValue parse_integer(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty integer literal");
  const std::size_t digits_from = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (digits_from == s.size()) throw std::invalid_argument("malformed integer: " + s);
  for (std::size_t i = digits_from; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("malformed integer: " + s);
  }
  if (s[0] == '+') s.erase(0, 1);
  return SeqValue(s, 10);
}

}  // namespace

Rational make_rational(const SeqValue& num, const SeqValue& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

std::string to_string(const Rational& q) {
  if (is_integer(q)) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  const SeqValue num = parse_integer(text.substr(0, slash));
  const SeqValue den = parse_integer(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator in rational literal");
  return make_rational(num, den);
}

Rational rational_pow(const Rational& base, Index exp) {
  const bool invert = exp < 0;
  auto e = static_cast<unsigned long>(invert ? -exp : exp);
  SeqValue num;
  SeqValue den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), e);
  return invert ? make_rational(den, num) : make_rational(num, den);
}

}  // namespace fibmod5
