#include "fibmod5/golden_ring.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

namespace fibmod5 {
namespace {

bool odd(const SeqValue& v) { return mpz_odd_p(v.get_mpz_t()) != 0; }

SeqValue exact_half(const SeqValue& v) {
  SeqValue out;
  mpz_divexact_ui(out.get_mpz_t(), v.get_mpz_t(), 2);
  return out;
}

}  // namespace

GoldenElement::GoldenElement(SeqValue p, SeqValue q) : p_(std::move(p)), q_(std::move(q)) {
  check_parity();
}

void GoldenElement::check_parity() const {
  if (odd(p_) != odd(q_)) {
    throw std::invalid_argument("GoldenElement: p and q must have equal parity (p=" + p_.get_str() +
                                ", q=" + q_.get_str() + ")");
  }
}

GoldenElement GoldenElement::operator-() const { return {-p_, -q_}; }

GoldenElement& GoldenElement::operator+=(const GoldenElement& y) {
  p_ += y.p_;
  q_ += y.q_;
  check_parity();
  return *this;
}

GoldenElement& GoldenElement::operator-=(const GoldenElement& y) {
  p_ -= y.p_;
  q_ -= y.q_;
  check_parity();
  return *this;
}

GoldenElement& GoldenElement::operator*=(const GoldenElement& y) {
  // ((p1 p2 + 5 q1 q2)/2, (p1 q2 + q1 p2)/2); exact by the parity rule.
  SeqValue p = p_ * y.p_ + 5 * q_ * y.q_;
  SeqValue q = p_ * y.q_ + q_ * y.p_;
  p_ = exact_half(p);
  q_ = exact_half(q);
  check_parity();
  return *this;
}

GoldenElement& GoldenElement::operator*=(const SeqValue& m) {
  p_ *= m;
  q_ *= m;
  check_parity();
  return *this;
}

long double GoldenElement::approximate() const {
  return (p_.get_d() + q_.get_d() * std::sqrt(5.0L)) / 2.0L;
}

std::ostream& operator<<(std::ostream& os, const GoldenElement& x) {
  return os << "(" << x.p_.get_str() << " + " << x.q_.get_str() << "*sqrt5)/2";
}

GoldenElement add(const GoldenElement& x, const GoldenElement& y) { return x + y; }
GoldenElement mul(const GoldenElement& x, const GoldenElement& y) { return x * y; }

GoldenElement power_alpha(Index r) { return {lucas(r), fib(r)}; }
GoldenElement power_beta(Index r) { return {lucas(r), -fib(r)}; }

GoldenElement power(GoldenElement x, Index e) {
  if (e < 0) throw std::domain_error("power: negative exponent");
  GoldenElement acc = GoldenElement::from_integer(1);
  while (e > 0) {
    if (e & 1) acc *= x;
    e >>= 1;
    if (e > 0) x *= x;
  }
  return acc;
}

Decomposition decompose(const GoldenElement& x) {
  return {make_rational(x.p(), 2), make_rational(x.q(), 2)};
}

GoldenFraction::GoldenFraction(GoldenElement numerator, SeqValue denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (den_ <= 0) throw std::invalid_argument("GoldenFraction: denominator must be positive");
}

GoldenFraction::GoldenFraction(const Rational& r)
    : num_(GoldenElement::from_integer(r.get_num())), den_(r.get_den()) {}

Rational GoldenFraction::rational_part() const { return make_rational(num_.p(), 2 * den_); }
Rational GoldenFraction::root5_coeff() const { return make_rational(num_.q(), 2 * den_); }

GoldenFraction GoldenFraction::reduced() const {
  SeqValue p = num_.p();
  SeqValue q = num_.q();
  SeqValue d = den_;
  SeqValue g;
  mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
  // Odd common factors always divide out; parity is unchanged by them.
  while (g != 0 && !odd(g)) g /= 2;
  if (g > 1) {
    mpz_divexact(p.get_mpz_t(), p.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(q.get_mpz_t(), q.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(d.get_mpz_t(), d.get_mpz_t(), g.get_mpz_t());
  }
  while (!odd(d) && !odd(p) && !odd(q)) {
    SeqValue hp = exact_half(p);
    SeqValue hq = exact_half(q);
    if (odd(hp) != odd(hq)) break;
    p = std::move(hp);
    q = std::move(hq);
    d = exact_half(d);
  }
  return {GoldenElement(std::move(p), std::move(q)), std::move(d)};
}

GoldenFraction operator+(const GoldenFraction& x, const GoldenFraction& y) {
  if (x.den_ == y.den_) return GoldenFraction(x.num_ + y.num_, x.den_).reduced();
  return GoldenFraction(x.num_ * y.den_ + y.num_ * x.den_, x.den_ * y.den_).reduced();
}

GoldenFraction operator-(const GoldenFraction& x, const GoldenFraction& y) { return x + (-y); }

GoldenFraction operator*(const GoldenFraction& x, const GoldenFraction& y) {
  return GoldenFraction(x.num_ * y.num_, x.den_ * y.den_).reduced();
}

bool operator==(const GoldenFraction& x, const GoldenFraction& y) {
  return x.num_ * y.den_ == y.num_ * x.den_;
}

long double GoldenFraction::approximate() const { return num_.approximate() / den_.get_d(); }

std::ostream& operator<<(std::ostream& os, const GoldenFraction& x) {
  os << x.num_;
  if (x.den_ != 1) os << "/" << x.den_.get_str();
  return os;
}

}  // namespace fibmod5
