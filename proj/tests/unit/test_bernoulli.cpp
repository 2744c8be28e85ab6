#include <gtest/gtest.h>

#include <random>
#include <thread>
#include <vector>

#include "fibmod5/bernoulli.hpp"
#include "oracle.hpp"

using namespace fibmod5;

namespace {

// Akiyama-Tanigawa algorithm; yields the B_1 = +1/2 convention.
std::vector<mpq_class> akiyama_tanigawa(int count) {
  std::vector<mpq_class> a(static_cast<std::size_t>(count));
  std::vector<mpq_class> out;
  for (int m = 0; m < count; ++m) {
    a[static_cast<std::size_t>(m)] = mpq_class(1, m + 1);
    for (int j = m; j >= 1; --j) {
      auto& aj = a[static_cast<std::size_t>(j - 1)];
      aj = j * (aj - a[static_cast<std::size_t>(j)]);
      aj.canonicalize();
    }
    out.push_back(a[0]);
  }
  return out;
}

}  // namespace

TEST(Bernoulli, NumberExamples) {
  EXPECT_EQ(bernoulli_number(0), 1);
  EXPECT_EQ(bernoulli_number(1), mpq_class(-1, 2));
  EXPECT_EQ(bernoulli_number(2), mpq_class(1, 6));
  EXPECT_EQ(bernoulli_number(3), 0);
  EXPECT_EQ(bernoulli_number(12), mpq_class(-691, 2730));
  EXPECT_THROW(bernoulli_number(-1), std::domain_error);
}

TEST(Bernoulli, MatchesAkiyamaTanigawa) {
  const auto reference = akiyama_tanigawa(61);
  for (Index n = 0; n <= 60; ++n) {
    const mpq_class expected = n == 1 ? -reference[1] : reference[static_cast<std::size_t>(n)];
    EXPECT_EQ(bernoulli_number(n), expected) << n;
  }
}

TEST(Bernoulli, OddNumbersVanish) {
  for (Index k = 1; k <= 20; ++k) EXPECT_EQ(bernoulli_number(2 * k + 1), 0) << k;
}

TEST(Bernoulli, PolynomialExamples) {
  for (Index n = 0; n <= 20; ++n) EXPECT_EQ(bernoulli_poly(n, 0), bernoulli_number(n));
  EXPECT_EQ(bernoulli_poly(3, mpq_class(3, 2)), mpq_class(3, 4));
  EXPECT_EQ(bernoulli_poly(1, mpq_class(1, 2)), 0);
  // B_2(t) = t^2 - t + 1/6
  std::mt19937_64 rng(1);
  for (int i = 0; i < 50; ++i) {
    const auto t = oracle::random_rational(rng);
    EXPECT_EQ(bernoulli_poly(2, t), t * t - t + mpq_class(1, 6));
    EXPECT_EQ(bernoulli_poly(1, t), t - mpq_class(1, 2));
  }
}

TEST(Bernoulli, EndpointsAgree) {
  for (Index n = 2; n <= 40; ++n) EXPECT_EQ(bernoulli_poly(n, 1), bernoulli_poly(n, 0)) << n;
}

TEST(Bernoulli, OddValuesAtThreeHalves) {
  for (Index k = 0; k <= 15; ++k) {
    mpq_class expected(2 * k + 1);
    expected /= mpq_class(mpz_class(1) << static_cast<mp_bitcnt_t>(2 * k));
    EXPECT_EQ(bernoulli_poly(2 * k + 1, mpq_class(3, 2)), expected) << k;
  }
}

TEST(Bernoulli, OddValuesAtOneHalfVanish) {
  for (Index k = 0; k <= 15; ++k) EXPECT_EQ(bernoulli_poly(2 * k + 1, mpq_class(1, 2)), 0);
}

TEST(Bernoulli, RaabeExamples) {
  EXPECT_TRUE(raabe_check(7, 1, mpq_class(2, 9)));
  EXPECT_TRUE(raabe_check(3, 2, 1));
  EXPECT_EQ(bernoulli_poly(3, 2), 4 * (bernoulli_poly(3, 1) + bernoulli_poly(3, mpq_class(3, 2))));
  EXPECT_TRUE(raabe_check(4, 3, mpq_class(2, 5)));
  EXPECT_THROW(raabe_check(2, 0, 1), std::domain_error);
}

TEST(Bernoulli, RaabeGrid) {
  std::mt19937_64 rng(12);
  std::vector<mpq_class> points;
  for (int i = 0; i < 5; ++i) points.push_back(oracle::random_rational(rng, 20, 9));
  for (Index n = 0; n <= 12; ++n) {
    for (Index a = 1; a <= 4; ++a) {
      for (const auto& x : points) EXPECT_TRUE(raabe_check(n, a, x)) << n << " " << a << " " << x;
    }
  }
}

TEST(Bernoulli, ForwardDifference) {
  EXPECT_TRUE(difference_check(1, 0));
  EXPECT_TRUE(difference_check(5, mpq_class(1, 2)));
  EXPECT_TRUE(difference_check(3, mpq_class(1, 2)));
  EXPECT_THROW(difference_check(0, 1), std::domain_error);
  std::mt19937_64 rng(13);
  for (Index n = 1; n <= 20; ++n) {
    for (int i = 0; i < 5; ++i) EXPECT_TRUE(difference_check(n, oracle::random_rational(rng)));
  }
}

TEST(Bernoulli, ConcurrentMemo) {
  const auto reference = akiyama_tanigawa(81);
  std::vector<std::thread> pool;
  std::vector<int> mismatches(4, 0);
  for (int w = 0; w < 4; ++w) {
    pool.emplace_back([&, w] {
      for (Index n = 80 - w; n >= 2; n -= 2) {
        if (bernoulli_number(n) != reference[static_cast<std::size_t>(n)]) ++mismatches[static_cast<std::size_t>(w)];
      }
    });
  }
  for (auto& t : pool) t.join();
  for (int m : mismatches) EXPECT_EQ(m, 0);
}
