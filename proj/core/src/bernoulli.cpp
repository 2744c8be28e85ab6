#include "fibmod5/bernoulli.hpp"

#include <deque>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>

namespace fibmod5 {
namespace {

class BernoulliMemo {
 public:
  BernoulliMemo() { values_.emplace_back(1); }

  Rational get(Index n) {
    const auto idx = static_cast<std::size_t>(n);
    {
      std::shared_lock lock(mutex_);
      if (idx < values_.size()) return values_[idx];
    }
    std::unique_lock lock(mutex_);
    while (values_.size() <= idx) {
      const auto m = static_cast<Index>(values_.size());
      Rational acc = 0;
      for (Index k = 0; k < m; ++k) acc += Rational(binom(m + 1, k)) * values_[static_cast<std::size_t>(k)];
      values_.push_back(Rational(-acc / (m + 1)));
    }
    return values_[idx];
  }

 private:
  std::shared_mutex mutex_;
  std::deque<Rational> values_;
};

}  // namespace

Rational bernoulli_number(Index n) {
  if (n < 0) throw std::domain_error("bernoulli_number: n must be non-negative");
  static BernoulliMemo memo;
  return memo.get(n);
}

Rational bernoulli_poly(Index n, const Rational& t) {
  if (n < 0) throw std::domain_error("bernoulli_poly: n must be non-negative");
  Rational sum = 0;
  Rational t_pow = 1;
  for (Index k = 0; k <= n; ++k) {
    sum += Rational(binom(n, k)) * bernoulli_number(n - k) * t_pow;
    t_pow *= t;
  }
  return sum;
}

bool raabe_check(Index n, Index a, const Rational& x) {
  if (a < 1) throw std::domain_error("raabe_check: a must be positive");
  Rational sum = 0;
  for (Index k = 0; k < a; ++k) sum += bernoulli_poly(n, x + make_rational(k, a));
  return bernoulli_poly(n, Rational(a * x)) == rational_pow(Rational(a), n - 1) * sum;
}

bool difference_check(Index n, const Rational& t) {
  if (n < 1) throw std::domain_error("difference_check: n must be positive");
  return bernoulli_poly(n, Rational(t + 1)) - bernoulli_poly(n, t) == n * rational_pow(t, n - 1);
}

}  // namespace fibmod5
