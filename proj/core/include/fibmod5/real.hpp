#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/mpfr.hpp>

#include "fibmod5/golden_ring.hpp"
#include "fibmod5/rational.hpp"

namespace fibmod5 {

/// Working precision for every floating-point check, in decimal digits.
/// The half-angle Chebyshev sums cancel from ~10^(0.77 n); 300 digits keeps
/// n <= 350 well inside the budget.
inline constexpr unsigned kRealDigits = 300;

using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<kRealDigits>,
                                           boost::multiprecision::et_off>;

Real to_real(const Rational& q);
Real to_real(const SeqValue& v);
Real to_real(const GoldenFraction& g);

Real pi_real();
Real sqrt5_real();

/// Scientific notation with the given number of significant digits.
std::string to_decimal(const Real& x, int significant_digits = 25);
/// Throws std::invalid_argument on malformed text.
Real parse_real(std::string_view text);

/// Neumaier-compensated accumulator.
class CompensatedSum {
 public:
  void add(const Real& term);
  Real value() const { return sum_ + compensation_; }
  /// Largest |term| seen; a cancellation estimate for the final value.
  const Real& max_magnitude() const { return max_magnitude_; }

 private:
  Real sum_ = 0;
  Real compensation_ = 0;
  Real max_magnitude_ = 0;
};

}  // namespace fibmod5
