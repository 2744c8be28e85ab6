#pragma once

#include <iosfwd>
#include <variant>

#include "fibmod5/golden_ring.hpp"
#include "fibmod5/rational.hpp"

namespace fibmod5 {

/// Evaluation point for Chebyshev polynomials: a plain rational, or a value
/// in Q(sqrt5) carried as a GoldenFraction. Arithmetic stays rational when
/// both sides are rational; mixing promotes to the golden representation.
class ExactScalar {
 public:
  ExactScalar() : value_(Rational(0)) {}
  ExactScalar(Rational r) : value_(std::move(r)) {}         // NOLINT
  ExactScalar(GoldenFraction g) : value_(std::move(g)) {}   // NOLINT
  ExactScalar(GoldenElement g) : value_(GoldenFraction(std::move(g))) {}  // NOLINT
  ExactScalar(long v) : value_(Rational(v)) {}              // NOLINT

  bool is_rational() const { return std::holds_alternative<Rational>(value_); }
  const Rational& as_rational() const { return std::get<Rational>(value_); }
  /// Promoted view (q = 0 for rationals).
  GoldenFraction as_golden() const;

  ExactScalar operator-() const;
  friend ExactScalar operator+(const ExactScalar& x, const ExactScalar& y);
  friend ExactScalar operator-(const ExactScalar& x, const ExactScalar& y);
  friend ExactScalar operator*(const ExactScalar& x, const ExactScalar& y);
  /// Value equality across tags.
  friend bool operator==(const ExactScalar& x, const ExactScalar& y);

  friend std::ostream& operator<<(std::ostream& os, const ExactScalar& x);

 private:
  std::variant<Rational, GoldenFraction> value_;
};

/// T_n(x) by T_{k+1} = 2x T_k - T_{k-1}, T_0 = 1, T_1 = x.
ExactScalar cheb_t(Index n, const ExactScalar& x);
/// U_n(x) by the same recurrence with U_0 = 1, U_1 = 2x.
ExactScalar cheb_u(Index n, const ExactScalar& x);
/// sum_k binom(n, 2k) (x^2 - 1)^k x^(n-2k)
ExactScalar cheb_t_explicit(Index n, const ExactScalar& x);
/// sum_k binom(n+1, 2k+1) (x^2 - 1)^k x^(n-2k)
ExactScalar cheb_u_explicit(Index n, const ExactScalar& x);

enum class Branch { upper, lower };

/// n * sum_{k=0}^{n} (-2)^k/(n+k) binom(n+k, n-k) (1 - s x)^k == s^n T_n(x),
/// s = +1 for the upper branch, -1 for the lower one. Requires n >= 1.
bool check_t_binomial_identity(Index n, const ExactScalar& x, Branch branch);

/// The three U-side binomial identities, all exact at x (n >= 1):
///   sum_{k=1}^{n} (-1)^(n-k) 2^k k/(n+k) binom(n+k,n-k) (1 -+ x)^(k-1) = (-+1)^(n-1) U_{n-1}(x)  (both signs)
///   sum_{k=1}^{n} (-1)^(n-k) 4^k k/(n+k) binom(n+k,n-k) x^(2k-1)       = U_{2n-1}(x)
///   sum_{k=0}^{n} (-1)^(n-k) 4^k binom(n+k,n-k) x^(2k)                 = U_{2n}(x)
bool check_u_binomial_identities(Index n, const ExactScalar& x);

}  // namespace fibmod5
