#pragma once

#include <string>
#include <string_view>

#include <gmpxx.h>

#include "fibmod5/bigint_seq.hpp"

namespace fibmod5 {

/// Exact fraction, always in lowest terms with a positive denominator
/// (zero is 0/1). gmpxx keeps results of its arithmetic canonical; values
/// built from a raw numerator/denominator must go through make_rational.
using Rational = mpq_class;

/// num/den in lowest terms; throws std::domain_error when den == 0.
Rational make_rational(const SeqValue& num, const SeqValue& den);

bool is_integer(const Rational& q);

/// "num/den", or just "num" when the denominator is 1.
std::string to_string(const Rational& q);

/// Inverse of to_string; also accepts "-3/6" (normalized on the way in).
/// Throws std::invalid_argument on malformed input.
Rational parse_rational(std::string_view text);

/// base^exp for any integer exp (exp < 0 requires base != 0).
Rational rational_pow(const Rational& base, Index exp);

}  // namespace fibmod5
