#pragma once

#include <iosfwd>

#include "fibmod5/bigint_seq.hpp"
#include "fibmod5/rational.hpp"

namespace fibmod5 {

/// Element (p + q*sqrt5)/2 of Z[(1+sqrt5)/2]. Closure under multiplication
/// requires p == q (mod 2); every constructor and operation enforces it.
///
/// alpha = (1, 1), beta = (1, -1), the integer m = (2m, 0).
class GoldenElement {
 public:
  GoldenElement() = default;  // zero
  /// Throws std::invalid_argument if p and q have different parity.
  GoldenElement(SeqValue p, SeqValue q);

  static GoldenElement from_integer(const SeqValue& m) { return {2 * m, 0}; }
  static GoldenElement alpha() { return {1, 1}; }
  static GoldenElement beta() { return {1, -1}; }
  /// sqrt5 = (0, 2)
  static GoldenElement root5() { return {0, 2}; }

  const SeqValue& p() const { return p_; }
  const SeqValue& q() const { return q_; }
  bool is_zero() const { return p_ == 0 && q_ == 0; }

  GoldenElement operator-() const;
  GoldenElement& operator+=(const GoldenElement& y);
  GoldenElement& operator-=(const GoldenElement& y);
  GoldenElement& operator*=(const GoldenElement& y);
  GoldenElement& operator*=(const SeqValue& m);

  friend GoldenElement operator+(GoldenElement x, const GoldenElement& y) { return x += y; }
  friend GoldenElement operator-(GoldenElement x, const GoldenElement& y) { return x -= y; }
  friend GoldenElement operator*(GoldenElement x, const GoldenElement& y) { return x *= y; }
  friend GoldenElement operator*(GoldenElement x, const SeqValue& m) { return x *= m; }
  friend GoldenElement operator*(const SeqValue& m, GoldenElement x) { return x *= m; }

  friend bool operator==(const GoldenElement& x, const GoldenElement& y) {
    return x.p_ == y.p_ && x.q_ == y.q_;
  }

  /// Debug-only floating approximation.
  long double approximate() const;

  friend std::ostream& operator<<(std::ostream& os, const GoldenElement& x);

 private:
  void check_parity() const;

  SeqValue p_ = 0;
  SeqValue q_ = 0;
};

GoldenElement add(const GoldenElement& x, const GoldenElement& y);
GoldenElement mul(const GoldenElement& x, const GoldenElement& y);

/// alpha^r = (L_r, F_r) for any integer r.
GoldenElement power_alpha(Index r);
/// beta^r = (L_r, -F_r) for any integer r.
GoldenElement power_beta(Index r);
/// x^e by repeated squaring, e >= 0.
GoldenElement power(GoldenElement x, Index e);

struct Decomposition {
  Rational rational_part;
  Rational root5_coeff;
};

/// (p/2, q/2) such that x = rational_part + root5_coeff * sqrt5.
Decomposition decompose(const GoldenElement& x);

/// numerator / denominator with a positive integer denominator: the values
/// the ring itself cannot hold (alpha/2, -beta^2/2, T_n(-alpha/2), ...).
/// Equality is value equality, independent of representation.
class GoldenFraction {
 public:
  GoldenFraction() : den_(1) {}
  GoldenFraction(GoldenElement numerator, SeqValue denominator);
  /// Implicit: a ring element is a fraction over 1.
  GoldenFraction(GoldenElement x) : GoldenFraction(std::move(x), 1) {}  // NOLINT
  explicit GoldenFraction(const Rational& r);

  const GoldenElement& numerator() const { return num_; }
  const SeqValue& denominator() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  /// True when the sqrt5 coefficient is zero.
  bool is_rational() const { return num_.q() == 0; }
  Rational rational_part() const;
  Rational root5_coeff() const;

  /// Removes common factors without breaking the numerator's parity rule.
  GoldenFraction reduced() const;

  GoldenFraction operator-() const { return {-num_, den_}; }
  friend GoldenFraction operator+(const GoldenFraction& x, const GoldenFraction& y);
  friend GoldenFraction operator-(const GoldenFraction& x, const GoldenFraction& y);
  friend GoldenFraction operator*(const GoldenFraction& x, const GoldenFraction& y);
  friend bool operator==(const GoldenFraction& x, const GoldenFraction& y);

  long double approximate() const;
  friend std::ostream& operator<<(std::ostream& os, const GoldenFraction& x);

 private:
  GoldenElement num_;
  SeqValue den_;
};

}  // namespace fibmod5
