#pragma once

#include "fibmod5/bigint_seq.hpp"
#include "fibmod5/rational.hpp"

namespace fibmod5 {

/// B_n from sum_{k=0}^{n} binom(n+1, k) B_k = 0, B_0 = 1 (so B_1 = -1/2,
/// matching z/(e^z - 1)). Memoized; safe to call concurrently.
Rational bernoulli_number(Index n);

/// B_n(t) = sum_k binom(n, k) B_{n-k} t^k
Rational bernoulli_poly(Index n, const Rational& t);

/// Multiplication theorem: B_n(a x) == a^(n-1) sum_{k=0}^{a-1} B_n(x + k/a).
/// Requires a >= 1.
bool raabe_check(Index n, Index a, const Rational& x);

/// B_n(t + 1) - B_n(t) == n t^(n-1). Requires n >= 1.
bool difference_check(Index n, const Rational& t);

}  // namespace fibmod5
