#include <gtest/gtest.h>

#include <thread>
#include <vector>

#include "fibmod5/bigint_seq.hpp"
#include "oracle.hpp"

using namespace fibmod5;

TEST(BigintSeq, FibonacciExamples) {
  EXPECT_EQ(fib(0), 0);
  EXPECT_EQ(fib(-3), 2);
  EXPECT_EQ(fib(10), 55);
}

TEST(BigintSeq, LucasExamples) {
  EXPECT_EQ(lucas(0), 2);
  EXPECT_EQ(lucas(1), 1);
  EXPECT_EQ(lucas(-2), 3);
}

TEST(BigintSeq, GibonacciExamples) {
  // 3, 7, 10, 17, 27
  EXPECT_EQ(gib({3, 7}, 4), 27);
  EXPECT_EQ(gib({3, 7}, -1), 4);
  EXPECT_EQ(gib({3, 7}, -2), -1);
}

TEST(BigintSeq, BinomialExamples) {
  EXPECT_EQ(binom(0, 0), 1);
  EXPECT_EQ(binom(5, 2), 10);
  EXPECT_EQ(binom(3, 5), 0);
  EXPECT_EQ(binom(3, -1), 0);
  EXPECT_EQ(binom(-4, 2), 0);
}

TEST(BigintSeq, MatchesGmpOverWideRange) {
  for (Index n = -500; n <= 500; ++n) {
    ASSERT_EQ(fib(n), oracle::fib(n)) << n;
    ASSERT_EQ(lucas(n), oracle::lucas(n)) << n;
  }
}

TEST(BigintSeq, LargeIndices) {
  EXPECT_EQ(fib(5000), oracle::fib(5000));
  EXPECT_EQ(lucas(-4001), oracle::lucas(-4001));
}

TEST(BigintSeq, RecurrenceHolds) {
  for (Index n = -40; n <= 40; ++n) {
    EXPECT_EQ(fib(n + 2), fib(n + 1) + fib(n));
    EXPECT_EQ(lucas(n + 2), lucas(n + 1) + lucas(n));
  }
}

TEST(BigintSeq, Reflection) {
  for (Index n = -40; n <= 40; ++n) {
    EXPECT_EQ(fib(-n), oracle::sign(n - 1) * fib(n));
    EXPECT_EQ(lucas(-n), oracle::sign(n) * lucas(n));
  }
}

TEST(BigintSeq, LucasFromFibonacci) {
  for (Index n = 0; n <= 60; ++n) EXPECT_EQ(lucas(n), fib(n - 1) + fib(n + 1));
}

TEST(BigintSeq, GibonacciSpecializes) {
  for (Index n = -60; n <= 60; ++n) {
    EXPECT_EQ(gib(fibonacci_seeds(), n), fib(n));
    EXPECT_EQ(gib(lucas_seeds(), n), lucas(n));
  }
}

TEST(BigintSeq, GibonacciMatchesLinearForm) {
  const std::vector<GibonacciParams> seeds{{3, 7}, {-2, 5}, {0, 0}, {11, -13}, {mpz_class("123456789123456789"), 1}};
  for (const auto& s : seeds) {
    for (Index n = -80; n <= 80; ++n) ASSERT_EQ(gib(s, n), oracle::gib(s.a, s.b, n)) << n;
  }
}

TEST(BigintSeq, PascalRule) {
  for (Index n = 1; n <= 30; ++n) {
    for (Index k = 0; k <= n; ++k) EXPECT_EQ(binom(n, k), binom(n - 1, k - 1) + binom(n - 1, k));
  }
  for (Index n = 0; n <= 80; ++n) {
    for (Index k = -2; k <= n + 2; ++k) ASSERT_EQ(binom(n, k), oracle::binom(n, k));
  }
}

TEST(BigintSeq, SequenceWindowMatchesPointQueries) {
  SequenceWindow w(GibonacciParams{3, 7}, -30, 45);
  EXPECT_EQ(w.lo(), -30);
  EXPECT_EQ(w.hi(), 45);
  EXPECT_TRUE(w.contains(0));
  EXPECT_FALSE(w.contains(46));
  for (Index i = -30; i <= 45; ++i) EXPECT_EQ(w[i], oracle::gib(3, 7, i));
  EXPECT_THROW(w.at(-31), std::out_of_range);
  EXPECT_THROW(w.at(46), std::out_of_range);

  SequenceWindow high(lucas_seeds(), 900, 910);
  for (Index i = 900; i <= 910; ++i) EXPECT_EQ(high[i], oracle::lucas(i));
}

TEST(BigintSeq, ConcurrentCallersAgree) {
  std::vector<std::thread> pool;
  std::vector<bool> ok(4, true);
  for (int w = 0; w < 4; ++w) {
    pool.emplace_back([w, &ok] {
      for (Index n = -300 + w; n <= 1200; n += 3) {
        if (fib(n) != oracle::fib(n) || lucas(n) != oracle::lucas(n)) ok[static_cast<std::size_t>(w)] = false;
      }
    });
  }
  for (auto& t : pool) t.join();
  for (bool b : ok) EXPECT_TRUE(b);
}
