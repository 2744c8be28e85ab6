#pragma once

#include <initializer_list>

#include "fibmod5/bigint_seq.hpp"
#include "fibmod5/golden_ring.hpp"

namespace fibmod5 {

/// Floor division toward -infinity (b > 0).
constexpr Index floor_div(Index a, Index b) {
  const Index q = a / b;
  return (a % b != 0 && a < 0) ? q - 1 : q;
}

/// (-1)^e for any integer e.
constexpr int sign_pow(Index e) { return (e % 2 == 0) ? 1 : -1; }

/// Residue class of n modulo 5, always in {0,...,4}.
struct Mod5Class {
  int residue = 0;

  static constexpr Mod5Class of(Index n) {
    return Mod5Class{static_cast<int>(((n % 5) + 5) % 5)};
  }
  constexpr bool in(std::initializer_list<int> residues) const {
    for (int r : residues) {
      if (r == residue) return true;
    }
    return false;
  }
  friend constexpr bool operator==(Mod5Class, Mod5Class) = default;
};

// The cosine-valued quantities are half-ring values; they come back as
// GoldenFraction with denominator 2 (numerator = twice the value).

/// cos(n*pi/5)
GoldenFraction cos_npi5(Index n);
/// cos(2n*pi/5)
GoldenFraction cos_2npi5(Index n);
/// sin(n*pi/5) / sin(pi/5)
GoldenElement sin_ratio(Index n);
/// sin(3n*pi/5) / sin(3*pi/5)
GoldenElement sin_ratio3(Index n);
/// sin((2n+1)*pi/5) / sin(pi/5)
GoldenElement sin_odd_ratio(Index n);
/// T_n(-alpha/2); n >= 0, throws std::domain_error otherwise.
GoldenFraction cheb_t_at_minus_alpha_half(Index n);
/// T_n(-beta/2); n >= 0.
GoldenFraction cheb_t_at_minus_beta_half(Index n);

}  // namespace fibmod5
