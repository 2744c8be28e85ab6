#include "fibmod5/series.hpp"

#include <array>
#include <cmath>

#include "fibmod5/bernoulli.hpp"
#include "fibmod5/quintic_trig.hpp"

namespace fibmod5 {
namespace {

enum class Limit { sign_m_minus_one, zero, sign_m, sign_m_alpha, sign_m_beta, neg_beta_sq_half, root5_beta };
enum class Shape { bernoulli, last1, last2, last2_bernoulli };

struct FamilyInfo {
  SeriesFamily family;
  std::string_view id;
  std::string_view anchor;
  std::string_view description;
  Shape shape;
  int offset_halves;  // Bernoulli argument 5m/2 + offset_halves/2
  bool half_coeff;    // 2^(2k) instead of 2^(2k+1)
  int t_multiple;     // t = t_multiple * pi/5
  Limit limit;
  std::string_view limit_label;
};

constexpr std::array<FamilyInfo, 13> kFamilies{{
    {SeriesFamily::ber_5m2, "ber-5m2", "Theorem (Bernoulli series at pi/5)",
     "B_{2k+1}(5m/2) series at t = pi/5", Shape::bernoulli, 0, false, 1, Limit::sign_m_minus_one, "(-1)^(m-1)"},
    {SeriesFamily::ber_5m2_half, "ber-5m2-half", "Theorem (Bernoulli series at pi/5)",
     "B_{2k+1}(5m/2 + 1/2) series with 2^(2k) at t = pi/5", Shape::bernoulli, 1, true, 1, Limit::zero, "0"},
    {SeriesFamily::ber_5m2_one, "ber-5m2-one", "Theorem (Bernoulli series at pi/5)",
     "B_{2k+1}(5m/2 + 1) series at t = pi/5", Shape::bernoulli, 2, false, 1, Limit::sign_m, "(-1)^m"},
    {SeriesFamily::series1_ber, "series1-ber", "Theorem (Bernoulli series at pi/5)",
     "B_{2k+1}(5m/2 + 3/2) series at t = pi/5", Shape::bernoulli, 3, false, 1, Limit::sign_m_alpha, "(-1)^m alpha"},
    {SeriesFamily::series2_ber, "series2-ber", "Theorem (Bernoulli series at pi/5)",
     "B_{2k+1}(5m/2 + 2) series at t = pi/5", Shape::bernoulli, 4, false, 1, Limit::sign_m_alpha, "(-1)^m alpha"},
    {SeriesFamily::ber2_5m2, "ber2-5m2", "Theorem (Bernoulli series at 3pi/5)",
     "B_{2k+1}(5m/2) series with 9^k at t = 3pi/5", Shape::bernoulli, 0, false, 3, Limit::sign_m_minus_one, "(-1)^(m-1)"},
    {SeriesFamily::ber2_5m2_half, "ber2-5m2-half", "Theorem (Bernoulli series at 3pi/5)",
     "B_{2k+1}(5m/2 + 1/2) series with 2^(2k) 9^k at t = 3pi/5", Shape::bernoulli, 1, true, 3, Limit::zero, "0"},
    {SeriesFamily::ber2_5m2_one, "ber2-5m2-one", "Theorem (Bernoulli series at 3pi/5)",
     "B_{2k+1}(5m/2 + 1) series with 9^k at t = 3pi/5", Shape::bernoulli, 2, false, 3, Limit::sign_m, "(-1)^m"},
    {SeriesFamily::series1_ber2, "series1-ber2", "Theorem (Bernoulli series at 3pi/5)",
     "B_{2k+1}(5m/2 + 3/2) series with 9^k at t = 3pi/5", Shape::bernoulli, 3, false, 3, Limit::sign_m_beta, "(-1)^m beta"},
    {SeriesFamily::series2_ber2, "series2-ber2", "Theorem (Bernoulli series at 3pi/5)",
     "B_{2k+1}(5m/2 + 2) series as printed (no 9^k factor)", Shape::bernoulli, 4, false, 1, Limit::sign_m_beta, "(-1)^m beta"},
    {SeriesFamily::last1, "last1", "Cosine series at pi/5", "sum_{k>=1} (-1)^k (pi/5)^(2k)/(2k)!", Shape::last1, 0, false, 1,
     Limit::neg_beta_sq_half, "-beta^2/2"},
    {SeriesFamily::last2, "last2", "Cosine series at pi/5", "sum_{k>=1} (-1)^k 2^(2k+1) (pi/5)^(2k)/(2k)!", Shape::last2, 0,
     false, 1, Limit::root5_beta, "sqrt5 beta"},
    {SeriesFamily::last2_bernoulli, "last2-bernoulli", "Cosine series at pi/5 (Bernoulli form)",
     "sum_{k>=1} (-1)^k 2^(4k+1)/(2k+1)! (pi/5)^(2k) B_{2k+1}(3/2)", Shape::last2_bernoulli, 0, false, 1,
     Limit::root5_beta, "sqrt5 beta"},
}};

const FamilyInfo& info(SeriesFamily family) {
  for (const auto& f : kFamilies) {
    if (f.family == family) return f;
  }
  throw std::invalid_argument("unknown series family");
}

SeqValue factorial(Index n) {
  SeqValue out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

SeqValue pow_ui(long base, Index e) {
  SeqValue out;
  mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(e));
  return out;
}

// Exact coefficient c_j of the j-th term, the term being c_j * pi^(2k(j)).
// Returns k(j) through the out parameter.
Rational exact_coefficient(const SeriesTarget& target, Index j, bool corrected, Index& pi_power) {
  const FamilyInfo& f = info(target.family);
  const int sign_k = (j % 2 == 0) ? 1 : -1;
  switch (f.shape) {
    case Shape::bernoulli: {
      const int t_mult = (target.family == SeriesFamily::series2_ber2 && corrected) ? 3 : f.t_multiple;
      const Rational x(5 * target.m + f.offset_halves - 1);
      Rational c = sin_ratio_series_coefficient(x, j);
      if (f.half_coeff) c /= 2;
      c *= make_rational(pow_ui(t_mult * t_mult, j), pow_ui(25, j));
      pi_power = 2 * j;
      return c;
    }
    case Shape::last1: {
      const Index k = j + 1;
      pi_power = 2 * k;
      return make_rational(-sign_k, factorial(2 * k) * pow_ui(25, k));
    }
    case Shape::last2: {
      const Index k = j + 1;
      pi_power = 2 * k;
      return make_rational(-sign_k * pow_ui(2, 2 * k + 1), factorial(2 * k) * pow_ui(25, k));
    }
    case Shape::last2_bernoulli: {
      const Index k = j + 1;
      pi_power = 2 * k;
      return make_rational(-sign_k * pow_ui(2, 4 * k + 1), factorial(2 * k + 1) * pow_ui(25, k)) *
             bernoulli_poly(2 * k + 1, make_rational(3, 2));
    }
  }
  throw std::logic_error("unreachable");
}

}  // namespace

std::span<const SeriesFamily> all_series_families() {
  static const std::array<SeriesFamily, kFamilies.size()> families = [] {
    std::array<SeriesFamily, kFamilies.size()> out{};
    for (std::size_t i = 0; i < kFamilies.size(); ++i) out[i] = kFamilies[i].family;
    return out;
  }();
  return families;
}

std::string_view series_id(SeriesFamily family) { return info(family).id; }

std::optional<SeriesFamily> parse_series_id(std::string_view id) {
  for (const auto& f : kFamilies) {
    if (f.id == id) return f.family;
  }
  return std::nullopt;
}

std::string_view series_anchor(SeriesFamily family) { return info(family).anchor; }
std::string_view series_description(SeriesFamily family) { return info(family).description; }
bool series_uses_m(SeriesFamily family) { return info(family).shape == Shape::bernoulli; }
std::string_view series_expected_label(SeriesFamily family) { return info(family).limit_label; }

GoldenFraction series_expected(const SeriesTarget& target) {
  const int sm = sign_pow(target.m);
  switch (info(target.family).limit) {
    case Limit::sign_m_minus_one: return GoldenElement::from_integer(-sm);
    case Limit::zero: return GoldenElement();
    case Limit::sign_m: return GoldenElement::from_integer(sm);
    case Limit::sign_m_alpha: return sm > 0 ? GoldenElement::alpha() : -GoldenElement::alpha();
    case Limit::sign_m_beta: return sm > 0 ? GoldenElement::beta() : -GoldenElement::beta();
    case Limit::neg_beta_sq_half:
      return GoldenFraction(-(GoldenElement::beta() * GoldenElement::beta()), 2);
    case Limit::root5_beta: return GoldenElement::root5() * GoldenElement::beta();
  }
  throw std::logic_error("unreachable");
}

Rational sin_ratio_series_coefficient(const Rational& x, Index k) {
  const Rational arg = (1 + x) / 2;
  const int sign = (k % 2 == 0) ? 1 : -1;
  return make_rational(sign * pow_ui(2, 2 * k + 1), factorial(2 * k + 1)) * bernoulli_poly(2 * k + 1, arg);
}

Real sin_ratio_series_partial(const Rational& x, const Real& t, Index terms) {
  if (terms < 1) throw std::domain_error("sin_ratio_series_partial: need at least one term");
  if (abs(t) >= pi_real()) throw std::domain_error("sin_ratio_series_partial: |t| must be below pi");
  CompensatedSum sum;
  const Real t2 = t * t;
  Real t_pow = 1;
  for (Index k = 0; k < terms; ++k) {
    sum.add(to_real(sin_ratio_series_coefficient(x, k)) * t_pow);
    t_pow *= t2;
  }
  return sum.value();
}

Real series_term(const SeriesTarget& target, Index j, bool corrected) {
  Index pi_power = 0;
  const Rational c = exact_coefficient(target, j, corrected, pi_power);
  if (c == 0) return Real(0);
  return to_real(c) * pow(pi_real(), static_cast<long>(pi_power));
}

std::vector<Real> series_partial_sums(const SeriesTarget& target, Index terms, bool corrected) {
  if (terms < 1) throw std::domain_error("series_partial_sums: need at least one term");
  std::vector<Real> out;
  out.reserve(static_cast<std::size_t>(terms));
  CompensatedSum sum;
  for (Index j = 0; j < terms; ++j) {
    sum.add(series_term(target, j, corrected));
    out.push_back(sum.value());
  }
  return out;
}

SeriesResult series_verify(const SeriesTarget& target, Index terms, double tol) {
  if (!(tol > 0)) throw std::domain_error("series_verify: tolerance must be positive");
  if (target.m < 0) throw std::domain_error("series_verify: m must be non-negative");

  SeriesResult out;
  out.target = target;
  out.terms = terms;
  out.tol = tol;
  out.partial_sum = series_partial_sums(target, terms).back();
  out.expected = to_real(series_expected(target));
  out.error = abs(out.partial_sum - out.expected);
  out.tail_bound = abs(series_term(target, terms));
  if (out.tail_bound > tol) {
    throw TailBoundError(std::string(series_id(target.family)) + ": first omitted term " +
                             to_decimal(out.tail_bound, 6) + " exceeds tolerance; increase the term count",
                         out.tail_bound);
  }
  out.pass = out.error <= tol;

  if (!out.pass && target.family == SeriesFamily::series2_ber2) {
    const Real corrected_sum = series_partial_sums(target, terms, true).back();
    const Real corrected_tail = abs(series_term(target, terms, true));
    out.corrected_error = abs(corrected_sum - out.expected);
    out.corrected_pass = corrected_tail <= tol && *out.corrected_error <= tol;
  }
  return out;
}

}  // namespace fibmod5
