#include <gtest/gtest.h>

#include "fibmod5/series.hpp"

using namespace fibmod5;

namespace {

double as_double(const Real& x) { return static_cast<double>(x); }

// Closed-form limit straight from sin(x t)/sin(t): the Bernoulli argument
// 5m/2 + s corresponds to x = 5m + 2s - 1.
Real bernoulli_family_limit(Index m, int offset_halves, bool half_coeff, int t_multiple) {
  const Real t = pi_real() * t_multiple / 5;
  const Real x = Real(5 * m + offset_halves - 1);
  Real value = sin(x * t) / sin(t);
  if (half_coeff) value /= 2;
  return value;
}

struct BernoulliShape {
  SeriesFamily family;
  int offset_halves;
  bool half_coeff;
  int t_multiple;
};

constexpr BernoulliShape kShapes[] = {
    {SeriesFamily::ber_5m2, 0, false, 1},      {SeriesFamily::ber_5m2_half, 1, true, 1},
    {SeriesFamily::ber_5m2_one, 2, false, 1},  {SeriesFamily::series1_ber, 3, false, 1},
    {SeriesFamily::series2_ber, 4, false, 1},  {SeriesFamily::ber2_5m2, 0, false, 3},
    {SeriesFamily::ber2_5m2_half, 1, true, 3}, {SeriesFamily::ber2_5m2_one, 2, false, 3},
    {SeriesFamily::series1_ber2, 3, false, 3},
};

}  // namespace

TEST(Series, Registry) {
  EXPECT_EQ(all_series_families().size(), 13u);
  for (auto f : all_series_families()) {
    const auto parsed = parse_series_id(series_id(f));
    ASSERT_TRUE(parsed.has_value());
    EXPECT_EQ(*parsed, f);
    EXPECT_FALSE(series_anchor(f).empty());
    EXPECT_FALSE(series_expected_label(f).empty());
  }
  EXPECT_FALSE(parse_series_id("nope").has_value());
  EXPECT_FALSE(series_uses_m(SeriesFamily::last1));
  EXPECT_TRUE(series_uses_m(SeriesFamily::series2_ber2));
}

TEST(Series, SineRatioPartialExamples) {
  EXPECT_EQ(sin_ratio_series_partial(1, Real("0.37"), 1), Real(1));
  const Real alpha = to_real(GoldenFraction(GoldenElement::alpha()));
  EXPECT_LT(as_double(abs(sin_ratio_series_partial(3, pi_real() / 5, 40) - alpha)), 1e-15);
  for (Index k = 1; k <= 40; ++k) EXPECT_EQ(sin_ratio_series_partial(0, pi_real() / 5, k), Real(0));
  EXPECT_THROW(sin_ratio_series_partial(1, pi_real(), 3), std::domain_error);
  EXPECT_THROW(sin_ratio_series_partial(1, Real(1), 0), std::domain_error);
}

TEST(Series, SineRatioConvergesToSineQuotient) {
  for (int xi = -4; xi <= 6; ++xi) {
    for (const char* tv : {"0.3", "1.1", "-0.8", "2.0"}) {
      const Real t(tv);
      const Real expected = sin(Real(xi) * t) / sin(t);
      EXPECT_LT(as_double(abs(sin_ratio_series_partial(xi, t, 120) - expected)), 1e-12) << xi << " " << tv;
    }
  }
}

TEST(Series, ExpectedLimitsMatchSineQuotients) {
  for (const auto& s : kShapes) {
    for (Index m = 0; m <= 3; ++m) {
      const Real oracle = bernoulli_family_limit(m, s.offset_halves, s.half_coeff, s.t_multiple);
      EXPECT_LT(as_double(abs(to_real(series_expected({s.family, m})) - oracle)), 1e-40)
          << series_id(s.family) << " m=" << m;
    }
  }
  // The misprinted sibling shares its limit with the corrected 9^k form.
  for (Index m = 0; m <= 3; ++m) {
    EXPECT_LT(as_double(abs(to_real(series_expected({SeriesFamily::series2_ber2, m})) -
                            bernoulli_family_limit(m, 4, false, 3))),
              1e-40);
  }
  const Real pi5 = pi_real() / 5;
  EXPECT_LT(as_double(abs(to_real(series_expected({SeriesFamily::last1})) - (cos(pi5) - 1))), 1e-40);
  EXPECT_LT(as_double(abs(to_real(series_expected({SeriesFamily::last2})) - 2 * (cos(2 * pi5) - 1))), 1e-40);
}

TEST(Series, SignAlternatesWithM) {
  for (Index m = 0; m <= 3; ++m) {
    const int sm = m % 2 == 0 ? 1 : -1;
    EXPECT_EQ(series_expected({SeriesFamily::series1_ber, m}), GoldenFraction(GoldenElement::alpha() * mpz_class(sm)));
    EXPECT_EQ(series_expected({SeriesFamily::series1_ber2, m}), GoldenFraction(GoldenElement::beta() * mpz_class(sm)));
    EXPECT_EQ(series_expected({SeriesFamily::ber_5m2, m}), GoldenFraction(GoldenElement::from_integer(-sm)));
    EXPECT_EQ(series_expected({SeriesFamily::ber_5m2_one, m}), GoldenFraction(GoldenElement::from_integer(sm)));
  }
}

TEST(Series, VerifyExamples) {
  const auto last1 = series_verify({SeriesFamily::last1}, 30, 1e-12);
  EXPECT_TRUE(last1.pass);
  EXPECT_LT(as_double(last1.error), 1e-12);
  EXPECT_TRUE(series_verify({SeriesFamily::series1_ber, 0}, 40, 1e-12).pass);
  EXPECT_TRUE(series_verify({SeriesFamily::series1_ber2, 1}, 40, 1e-10).pass);
  for (Index m = 0; m <= 2; ++m) {
    const auto r = series_verify({SeriesFamily::series1_ber, m}, 40, 1e-10);
    EXPECT_TRUE(r.pass) << m;
    EXPECT_LT(as_double(r.error), 1e-10);
  }
}

TEST(Series, EveryFamilyConverges) {
  for (auto f : all_series_families()) {
    for (Index m = 0; m <= 3; ++m) {
      if (f == SeriesFamily::series2_ber2) continue;
      const auto r = series_verify({f, m}, 80, 1e-12);
      EXPECT_TRUE(r.pass) << series_id(f) << " m=" << m << " error " << to_decimal(r.error, 6);
      if (!series_uses_m(f)) break;
    }
  }
}

TEST(Series, PrintedSiblingFailsAndCorrectedFormHolds) {
  for (Index m = 0; m <= 3; ++m) {
    const auto r = series_verify({SeriesFamily::series2_ber2, m}, 80, 1e-12);
    EXPECT_FALSE(r.pass) << m;
    ASSERT_TRUE(r.corrected_error.has_value());
    EXPECT_TRUE(r.corrected_pass) << m;
    EXPECT_TRUE(r.resolved());
    EXPECT_GT(as_double(r.error), 0.1);
  }
}

TEST(Series, TailBoundSignalsTooFewTerms) {
  EXPECT_THROW(series_verify({SeriesFamily::series1_ber2, 0}, 3, 1e-12), TailBoundError);
  try {
    series_verify({SeriesFamily::last1}, 2, 1e-12);
    FAIL() << "expected TailBoundError";
  } catch (const TailBoundError& e) {
    EXPECT_GT(as_double(e.bound()), 1e-12);
  }
  EXPECT_THROW(series_verify({SeriesFamily::last1}, 30, 0), std::domain_error);
}

TEST(Series, ErrorDecreasesOnceTermsShrink) {
  for (auto f : all_series_families()) {
    for (Index m = 0; m <= 3; ++m) {
      const SeriesTarget target{f, m};
      const Real limit = to_real(series_expected(target));
      const bool corrected = f == SeriesFamily::series2_ber2;
      const auto sums = series_partial_sums(target, 60, corrected);
      // From the first index where |term| starts to decrease for good.
      Index start = 0;
      for (Index j = 1; j < 60; ++j) {
        if (abs(series_term(target, j, corrected)) > abs(series_term(target, j - 1, corrected))) start = j;
      }
      for (std::size_t k = static_cast<std::size_t>(start) + 1; k < sums.size(); ++k) {
        EXPECT_LE(abs(sums[k] - limit), abs(sums[k - 1] - limit)) << series_id(f) << " m=" << m << " K=" << k;
      }
      if (!series_uses_m(f)) break;
    }
  }
}

TEST(Series, PartialSumsAreCumulative) {
  const SeriesTarget target{SeriesFamily::series2_ber, 2};
  const auto sums = series_partial_sums(target, 12);
  Real acc = 0;
  for (Index j = 0; j < 12; ++j) {
    acc += series_term(target, j);
    EXPECT_LT(as_double(abs(sums[static_cast<std::size_t>(j)] - acc)), 1e-250);
  }
}
