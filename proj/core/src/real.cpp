#include "fibmod5/real.hpp"

#include <sstream>
#include <stdexcept>

#include <boost/math/constants/constants.hpp>

namespace fibmod5 {

Real to_real(const Rational& q) {
  Real out;
  mpfr_set_q(out.backend().data(), q.get_mpq_t(), MPFR_RNDN);
  return out;
}

Real to_real(const SeqValue& v) {
  Real out;
  mpfr_set_z(out.backend().data(), v.get_mpz_t(), MPFR_RNDN);
  return out;
}

Real to_real(const GoldenFraction& g) {
  return to_real(g.rational_part()) + to_real(g.root5_coeff()) * sqrt5_real();
}

Real pi_real() {
  static const Real value = boost::math::constants::pi<Real>();
  return value;
}

Real sqrt5_real() {
  static const Real value = boost::multiprecision::sqrt(Real(5));
  return value;
}

std::string to_decimal(const Real& x, int significant_digits) {
  return x.str(significant_digits, std::ios_base::scientific);
}

Real parse_real(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty real literal");
  Real out;
  std::string s(text);
  if (mpfr_set_str(out.backend().data(), s.c_str(), 10, MPFR_RNDN) != 0) {
    if (s == "nan" || s == "NaN") return std::numeric_limits<Real>::quiet_NaN();
    throw std::invalid_argument("malformed real literal: " + s);
  }
  return out;
}

void CompensatedSum::add(const Real& term) {
  const Real t = sum_ + term;
  if (abs(sum_) >= abs(term)) {
    compensation_ += (sum_ - t) + term;
  } else {
    compensation_ += (term - t) + sum_;
  }
  sum_ = t;
  if (abs(term) > max_magnitude_) max_magnitude_ = abs(term);
}

}  // namespace fibmod5
