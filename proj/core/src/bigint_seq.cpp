#include "fibmod5/bigint_seq.hpp"

#include <deque>
#include <limits>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <string>

namespace fibmod5 {
namespace {

// Memo of G_0, G_1, ... for fixed seeds. Entries are never moved once
// appended (deque), so a reference handed out under the shared lock stays
// valid after the lock is released.
class ForwardMemo {
 public:
  ForwardMemo(long g0, long g1) {
    values_.emplace_back(g0);
    values_.emplace_back(g1);
  }

  SeqValue get(Index n) {
    const auto idx = static_cast<std::size_t>(n);
    {
      std::shared_lock lock(mutex_);
      if (idx < values_.size()) return values_[idx];
    }
    std::unique_lock lock(mutex_);
    while (values_.size() <= idx) {
      const std::size_t m = values_.size();
      values_.push_back(values_[m - 1] + values_[m - 2]);
    }
    return values_[idx];
  }

 private:
  std::shared_mutex mutex_;
  std::deque<SeqValue> values_;
};

ForwardMemo& fibonacci_memo() {
  static ForwardMemo memo(0, 1);
  return memo;
}

ForwardMemo& lucas_memo() {
  static ForwardMemo memo(2, 1);
  return memo;
}

Index magnitude(Index n) {
  if (n == std::numeric_limits<Index>::min()) throw std::out_of_range("sequence index out of range");
  return n < 0 ? -n : n;
}

}  // namespace

GibonacciParams fibonacci_seeds() { return {SeqValue(0), SeqValue(1)}; }
GibonacciParams lucas_seeds() { return {SeqValue(2), SeqValue(1)}; }

SeqValue fib(Index n) {
  const Index m = magnitude(n);
  SeqValue v = fibonacci_memo().get(m);
  // F_{-m} = (-1)^{m-1} F_m
  if (n < 0 && m % 2 == 0) v = -v;
  return v;
}

SeqValue lucas(Index n) {
  const Index m = magnitude(n);
  SeqValue v = lucas_memo().get(m);
  // L_{-m} = (-1)^m L_m
  if (n < 0 && m % 2 == 1) v = -v;
  return v;
}

SeqValue gib(const GibonacciParams& params, Index n) {
  SeqValue prev = params.a;
  SeqValue cur = params.b;
  if (n == 0) return prev;
  if (n > 0) {
    // (prev, cur) = (G_{i-1}, G_i)
    for (Index i = 1; i < n; ++i) {
      SeqValue next = prev + cur;
      prev = std::move(cur);
      cur = std::move(next);
    }
    return cur;
  }
  // Backward: G_{i-1} = G_{i+1} - G_i, starting from (G_0, G_1).
  SeqValue lower = params.a;
  SeqValue upper = params.b;
  for (Index i = 0; i > n; --i) {
    SeqValue below = upper - lower;
    upper = std::move(lower);
    lower = std::move(below);
  }
  return lower;
}

SeqValue binom(Index n, Index k) {
  if (n < 0 || k < 0 || k > n) return 0;
  SeqValue out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

SequenceWindow::SequenceWindow(const GibonacciParams& seeds, Index lo, Index hi) : lo_(lo) {
  if (hi < lo) throw std::invalid_argument("SequenceWindow: empty range");
  values_.reserve(static_cast<std::size_t>(hi - lo + 1));
  values_.push_back(gib(seeds, lo));
  if (hi == lo) return;
  values_.push_back(gib(seeds, lo + 1));
  for (Index i = lo + 2; i <= hi; ++i) {
    const std::size_t m = values_.size();
    values_.push_back(values_[m - 1] + values_[m - 2]);
  }
}

const SeqValue& SequenceWindow::at(Index i) const {
  if (!contains(i)) {
    throw std::out_of_range("SequenceWindow: index " + std::to_string(i) + " outside [" +
                            std::to_string(lo_) + ", " + std::to_string(hi()) + "]");
  }
  return (*this)[i];
}

}  // namespace fibmod5
