#include "fibmod5/chebyshev.hpp"

#include <ostream>
#include <stdexcept>
#include <vector>

namespace fibmod5 {
namespace {

void require_non_negative(Index n, const char* what) {
  if (n < 0) throw std::domain_error(std::string(what) + ": n must be non-negative");
}

void require_positive(Index n, const char* what) {
  if (n < 1) throw std::domain_error(std::string(what) + ": n must be positive");
}

ExactScalar scaled(const ExactScalar& x, const Rational& c) { return ExactScalar(c) * x; }

// base^0, base^1, ..., base^count
std::vector<ExactScalar> powers(const ExactScalar& base, Index count) {
  std::vector<ExactScalar> out;
  out.reserve(static_cast<std::size_t>(count + 1));
  out.emplace_back(1L);
  for (Index i = 1; i <= count; ++i) out.push_back(out.back() * base);
  return out;
}

// n/(n+k) binom(n+k, n-k) style weights are rational; build them exactly.
Rational ratio(const SeqValue& num, const SeqValue& den) { return make_rational(num, den); }

}  // namespace

GoldenFraction ExactScalar::as_golden() const {
  if (const auto* r = std::get_if<Rational>(&value_)) return GoldenFraction(*r);
  return std::get<GoldenFraction>(value_);
}

ExactScalar ExactScalar::operator-() const {
  if (const auto* r = std::get_if<Rational>(&value_)) return ExactScalar(Rational(-*r));
  return ExactScalar(-std::get<GoldenFraction>(value_));
}

ExactScalar operator+(const ExactScalar& x, const ExactScalar& y) {
  if (x.is_rational() && y.is_rational()) return ExactScalar(Rational(x.as_rational() + y.as_rational()));
  return ExactScalar(x.as_golden() + y.as_golden());
}

ExactScalar operator-(const ExactScalar& x, const ExactScalar& y) { return x + (-y); }

ExactScalar operator*(const ExactScalar& x, const ExactScalar& y) {
  if (x.is_rational() && y.is_rational()) return ExactScalar(Rational(x.as_rational() * y.as_rational()));
  return ExactScalar(x.as_golden() * y.as_golden());
}

bool operator==(const ExactScalar& x, const ExactScalar& y) {
  if (x.is_rational() && y.is_rational()) return x.as_rational() == y.as_rational();
  return x.as_golden() == y.as_golden();
}

std::ostream& operator<<(std::ostream& os, const ExactScalar& x) {
  if (x.is_rational()) return os << to_string(x.as_rational());
  return os << x.as_golden();
}

namespace {

ExactScalar three_term(Index n, const ExactScalar& x, const ExactScalar& first) {
  ExactScalar prev(1L);
  if (n == 0) return prev;
  ExactScalar cur = first;
  const ExactScalar two_x = scaled(x, 2);
  for (Index k = 1; k < n; ++k) {
    ExactScalar next = two_x * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

}  // namespace

ExactScalar cheb_t(Index n, const ExactScalar& x) {
  require_non_negative(n, "cheb_t");
  return three_term(n, x, x);
}

ExactScalar cheb_u(Index n, const ExactScalar& x) {
  require_non_negative(n, "cheb_u");
  return three_term(n, x, scaled(x, 2));
}

ExactScalar cheb_t_explicit(Index n, const ExactScalar& x) {
  require_non_negative(n, "cheb_t_explicit");
  const auto xp = powers(x, n);
  const auto dp = powers(x * x - ExactScalar(1L), n / 2);
  ExactScalar sum;
  for (Index k = 0; 2 * k <= n; ++k) {
    sum = sum + ExactScalar(Rational(binom(n, 2 * k))) * dp[static_cast<std::size_t>(k)] *
                    xp[static_cast<std::size_t>(n - 2 * k)];
  }
  return sum;
}

ExactScalar cheb_u_explicit(Index n, const ExactScalar& x) {
  require_non_negative(n, "cheb_u_explicit");
  const auto xp = powers(x, n);
  const auto dp = powers(x * x - ExactScalar(1L), n / 2);
  ExactScalar sum;
  for (Index k = 0; 2 * k <= n; ++k) {
    sum = sum + ExactScalar(Rational(binom(n + 1, 2 * k + 1))) * dp[static_cast<std::size_t>(k)] *
                    xp[static_cast<std::size_t>(n - 2 * k)];
  }
  return sum;
}

bool check_t_binomial_identity(Index n, const ExactScalar& x, Branch branch) {
  require_positive(n, "check_t_binomial_identity");
  const int s = branch == Branch::upper ? 1 : -1;
  const auto shifted = powers(ExactScalar(1L) - scaled(x, s), n);
  ExactScalar sum;
  SeqValue minus_two_pow = 1;
  for (Index k = 0; k <= n; ++k) {
    const Rational w = ratio(minus_two_pow * binom(n + k, n - k), n + k);
    sum = sum + ExactScalar(w) * shifted[static_cast<std::size_t>(k)];
    minus_two_pow *= -2;
  }
  const ExactScalar lhs = scaled(sum, n);
  const ExactScalar rhs = (s < 0 && n % 2 == 1) ? -cheb_t(n, x) : cheb_t(n, x);
  return lhs == rhs;
}

bool check_u_binomial_identities(Index n, const ExactScalar& x) {
  require_positive(n, "check_u_binomial_identities");
  const auto sgn = [n](Index k) { return ((n - k) % 2 == 0) ? 1 : -1; };

  for (int s : {1, -1}) {
    const auto shifted = powers(ExactScalar(1L) - scaled(x, s), n);
    ExactScalar sum;
    for (Index k = 1; k <= n; ++k) {
      SeqValue two_pow;
      mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, static_cast<unsigned long>(k));
      const Rational w = ratio(sgn(k) * two_pow * k * binom(n + k, n - k), n + k);
      sum = sum + ExactScalar(w) * shifted[static_cast<std::size_t>(k - 1)];
    }
    // (-s)^(n-1) U_{n-1}(x)
    const bool negate = s > 0 && (n - 1) % 2 == 1;
    const ExactScalar rhs = negate ? -cheb_u(n - 1, x) : cheb_u(n - 1, x);
    if (!(sum == rhs)) return false;
  }

  const auto xp = powers(x, 2 * n);
  ExactScalar odd_sum;
  ExactScalar even_sum;
  for (Index k = 0; k <= n; ++k) {
    SeqValue four_pow;
    mpz_ui_pow_ui(four_pow.get_mpz_t(), 4, static_cast<unsigned long>(k));
    const SeqValue c = sgn(k) * four_pow * binom(n + k, n - k);
    even_sum = even_sum + ExactScalar(Rational(c)) * xp[static_cast<std::size_t>(2 * k)];
    if (k >= 1) {
      odd_sum = odd_sum + ExactScalar(ratio(c * k, n + k)) * xp[static_cast<std::size_t>(2 * k - 1)];
    }
  }
  return odd_sum == cheb_u(2 * n - 1, x) && even_sum == cheb_u(2 * n, x);
}

}  // namespace fibmod5
