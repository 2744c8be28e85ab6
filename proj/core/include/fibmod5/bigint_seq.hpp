#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace fibmod5 {

/// Arbitrary-precision signed integer used for every sequence term,
/// binomial coefficient and integer accumulator.
using SeqValue = mpz_class;

/// Subscript / summation index type. Desk-scale sweeps stay far below 2^31.
using Index = std::int64_t;

/// Seeds of a gibonacci sequence: G_0 = a, G_1 = b, G_n = G_{n-1} + G_{n-2}.
struct GibonacciParams {
  SeqValue a;
  SeqValue b;

  friend bool operator==(const GibonacciParams& x, const GibonacciParams& y) {
    return x.a == y.a && x.b == y.b;
  }
};

enum class SequenceKind { fibonacci, lucas, gibonacci };

/// Fibonacci seeds (0, 1) and Lucas seeds (2, 1), i.e. the recurrence-consistent
/// specializations of the gibonacci sequence.
GibonacciParams fibonacci_seeds();
GibonacciParams lucas_seeds();

/// F_n for any integer n (F_{-n} = (-1)^{n-1} F_n). Memoized.
SeqValue fib(Index n);

/// L_n for any integer n (L_{-n} = (-1)^n L_n). Memoized.
SeqValue lucas(Index n);

/// G_n for any integer n; negative indices run the recurrence backward.
SeqValue gib(const GibonacciParams& params, Index n);

/// Binomial coefficient; 0 whenever k < 0, k > n or n < 0.
SeqValue binom(Index n, Index k);

/// Dense table of consecutive gibonacci terms G_lo..G_hi, built once by the
/// recurrence. Used by sweeps that touch every subscript in a range.
class SequenceWindow {
 public:
  SequenceWindow() = default;
  SequenceWindow(const GibonacciParams& seeds, Index lo, Index hi);

  Index lo() const { return lo_; }
  Index hi() const { return lo_ + static_cast<Index>(values_.size()) - 1; }
  bool contains(Index i) const { return !values_.empty() && i >= lo_ && i <= hi(); }

  /// Unchecked access; i must lie in [lo(), hi()].
  const SeqValue& operator[](Index i) const { return values_[static_cast<std::size_t>(i - lo_)]; }
  /// Checked access; throws std::out_of_range.
  const SeqValue& at(Index i) const;

 private:
  Index lo_ = 0;
  std::vector<SeqValue> values_;
};

}  // namespace fibmod5
