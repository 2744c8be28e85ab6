#include <gtest/gtest.h>

#include <set>

#include "family_oracles.hpp"
#include "fibmod5/identity_catalog.hpp"
#include "fibmod5/mutation.hpp"

using namespace fibmod5;

namespace {

const IdentityFamily& family(std::string_view id) {
  const auto* f = find_family(id);
  if (!f) throw std::runtime_error("unknown family " + std::string(id));
  return *f;
}

const std::vector<GibonacciParams>& seeds() {
  static const std::vector<GibonacciParams> s{{0, 1}, {2, 1}, {3, 7}, {-2, 5}};
  return s;
}

std::optional<GibonacciParams> seed_for(const IdentityFamily& f, const GibonacciParams& s) {
  return f.uses_gibonacci ? std::optional(s) : std::nullopt;
}

}  // namespace

TEST(IdentityCatalog, RegistryHoldsEveryRequiredId) {
  const std::vector<std::string> required{
      "thm1-lucas",    "thm1-fib",       "cor1-fib-f2k",  "cor1-fib-delta", "cor2-lucas-m1",   "cor2-lucas-p1",
      "cor2-lucas-0",  "waring1-lucas",  "waring2-fib",   "cor3-lucas-even", "cor3-fib-even",  "cor4-fib-one",
      "cor4-fib-zero", "th7-fib",        "th7-lucas",     "cor5-fib-0",     "cor5-lucas-0",    "cor5-fib-1",
      "cor5-lucas-1",  "thm8-mixed-a",   "thm8-mixed-b",  "cor6-mixed-delta", "th11-lucas",    "th11-fib",
      "cor7-fib-zero", "xyz123-lucas",   "xyz123-fib",    "cor8-fib-zero",  "cor9-equalities", "thm12-lucas",
      "thm12-fib",     "gib-thm1",       "gib-th7",       "gib-th11"};
  std::multiset<std::string> ids;
  for (const auto& f : list_families()) ids.insert(f.id);
  for (const auto& id : required) EXPECT_EQ(ids.count(id), 1u) << id;
  EXPECT_GE(list_families().size(), 30u);
  for (std::size_t i = 1; i < list_families().size(); ++i) EXPECT_LT(list_families()[i - 1].id, list_families()[i].id);
}

TEST(IdentityCatalog, ArmsPartitionResidues) {
  for (const auto& f : list_families()) {
    for (int r = 0; r < 5; ++r) {
      int covering = 0;
      for (const auto& arm : f.rhs) covering += arm.covers(r) ? 1 : 0;
      EXPECT_EQ(covering, 1) << f.id << " residue " << r;
    }
    EXPECT_FALSE(f.anchor.empty());
    EXPECT_FALSE(f.description.empty());
  }
}

TEST(IdentityCatalog, LookupAndGlobs) {
  EXPECT_EQ(find_family("nope"), nullptr);
  EXPECT_EQ(match_families("gib-*").size(), 3u);
  EXPECT_EQ(match_families("thm1-*").size(), 2u);
  EXPECT_TRUE(match_families("zzz*").empty());
  EXPECT_EQ(family("thm1-lucas").anchor, "Theorem 1");
}

TEST(IdentityCatalog, EvalExamples) {
  EXPECT_EQ(eval_lhs(family("thm1-lucas"), 2, 0), 4);
  EXPECT_EQ(eval_rhs(family("thm1-lucas"), 2, 0), 4);
  EXPECT_EQ(eval_lhs(family("th11-lucas"), 1, 0), mpq_class(-1, 2));
  EXPECT_EQ(eval_lhs(family("waring2-fib"), 6, 0), -1);
  EXPECT_EQ(eval_rhs(family("waring2-fib"), 4, 17), 0);
  EXPECT_EQ(eval_rhs(family("th7-fib"), 5, 0), 0);
  EXPECT_EQ(eval_lhs(family("th11-fib"), 1, 0), mpq_class(1, 2));
  EXPECT_EQ(eval_lhs(family("gib-th7"), 5, 0, GibonacciParams{3, 7}), 6);
  EXPECT_EQ(eval_rhs(family("gib-th7"), 5, 0, GibonacciParams{3, 7}), 6);
  EXPECT_EQ(family("thm1-lucas").arm_for(2).label, "n≡2 or 3");
  EXPECT_EQ(family("th11-fib").arm_for(1).label, "n≡1 or 4");
}

TEST(IdentityCatalog, EmptySumAtSmallestN) {
  // floor(1/2) = 0: the sum is empty and the closed form must collapse too.
  EXPECT_EQ(eval_lhs(family("thm1-lucas"), 1, 3), 0);
  EXPECT_EQ(eval_rhs(family("thm1-lucas"), 1, 3), 0);
}

TEST(IdentityCatalog, FixedFamiliesMatchDirectLoops) {
  const auto oracles = oracle::fixed_family_oracles();
  std::set<std::string> covered;
  for (const auto& f : list_families()) {
    if (f.uses_gibonacci) continue;
    const auto it = oracles.find(f.id);
    ASSERT_NE(it, oracles.end()) << "no oracle for " << f.id;
    covered.insert(f.id);
    for (Index n = f.n_min; n <= 45; ++n) {
      for (Index t = -6; t <= 6; ++t) {
        const Index tt = f.uses_t ? t : 0;
        const mpq_class lhs = it->second.lhs(n, tt);
        const mpq_class rhs = it->second.rhs(n, tt);
        ASSERT_EQ(lhs, rhs) << "oracle disagrees with itself: " << f.id << " n=" << n << " t=" << tt;
        ASSERT_EQ(eval_lhs(f, n, t), lhs) << f.id << " n=" << n << " t=" << t;
        ASSERT_EQ(eval_rhs(f, n, t), rhs) << f.id << " n=" << n << " t=" << t;
        if (!f.uses_t) break;
      }
    }
  }
  EXPECT_EQ(covered.size(), oracles.size());
}

TEST(IdentityCatalog, GibonacciFamiliesMatchDirectLoops) {
  const auto oracles = oracle::gibonacci_family_oracles();
  for (const auto& [id, make] : oracles) {
    const auto& f = family(id);
    for (const auto& s : seeds()) {
      const auto o = make(oracle::gib_seq(s.a.get_si(), s.b.get_si()));
      for (Index n = f.n_min; n <= 35; ++n) {
        for (Index t = -5; t <= 5; ++t) {
          ASSERT_EQ(eval_lhs(f, n, t, s), o.lhs(n, t)) << id << " n=" << n << " t=" << t;
          ASSERT_EQ(eval_rhs(f, n, t, s), o.rhs(n, t)) << id << " n=" << n << " t=" << t;
        }
      }
    }
  }
}

TEST(IdentityCatalog, VerifyExamples) {
  const auto thm1 = verify_family(family("thm1-fib"), {1, 50}, {-10, 10});
  EXPECT_TRUE(thm1.ok());
  EXPECT_EQ(thm1.checked, 50 * 21);
  EXPECT_FALSE(thm1.first_counterexample);

  const auto& cor7 = family("cor7-fib-zero");
  const auto zero = verify_family(cor7, {1, 50}, {0, 0});
  EXPECT_TRUE(zero.ok());
  for (Index n = 1; n <= 50; ++n) EXPECT_EQ(eval_lhs(cor7, n, 0), 0);

  const auto gib = verify_family(family("gib-thm1"), {1, 30}, {-5, 5}, GibonacciParams{3, 7});
  EXPECT_TRUE(gib.ok());
  EXPECT_EQ(gib.checked, 30 * 11);
}

TEST(IdentityCatalog, EveryFamilyVerifiesOnModerateGrid) {
  for (const auto& f : list_families()) {
    if (f.uses_gibonacci) {
      for (const auto& s : seeds()) EXPECT_TRUE(verify_family(f, {f.n_min, 120}, {-25, 25}, s, 2).ok()) << f.id;
    } else {
      const auto r = verify_family(f, {f.n_min, 120}, {-25, 25}, std::nullopt, 2);
      EXPECT_TRUE(r.ok()) << f.id;
      EXPECT_EQ(r.passed, r.checked);
      EXPECT_EQ(r.t_range, (f.uses_t ? IntRange{-25, 25} : IntRange{0, 0}));
    }
  }
}

TEST(IdentityCatalog, ZeroFamiliesVanish) {
  for (Index n = 4; n <= 199; n += 5) {
    for (Index t = -50; t <= 50; t += 7) {
      EXPECT_EQ(eval_lhs(family("waring1-lucas"), n, t), 0);
      EXPECT_EQ(eval_lhs(family("waring2-fib"), n, t), 0);
    }
    EXPECT_EQ(eval_lhs(family("cor4-fib-one"), n, 0), 0);
  }
  for (Index n = 1; n <= 120; ++n) {
    EXPECT_EQ(eval_lhs(family("cor4-fib-zero"), n, 0), 0);
    EXPECT_EQ(eval_lhs(family("cor7-fib-zero"), n, 0), 0);
    EXPECT_EQ(eval_lhs(family("cor8-fib-zero"), n, 0), 0);
  }
}

TEST(IdentityCatalog, SpecializationCoherence) {
  static constexpr int kCor1[5] = {0, -1, 1, 1, -1};
  static constexpr int kCor7[5] = {0, 1, -1, -1, 1};
  static constexpr int kCor8[5] = {0, 2, 1, 1, 2};
  for (Index n = 1; n <= 80; ++n) {
    const int r = oracle::mod5(n);
    // First theorem at t = delta reproduces the shifted corollary.
    EXPECT_EQ(eval_lhs(family("thm1-fib"), n, kCor1[r]), eval_lhs(family("cor1-fib-delta"), n, 0));
    EXPECT_EQ(eval_lhs(family("cor1-fib-delta"), n, 0), mpq_class(oracle::fib(n + kCor1[r])));
    // At t = 0 the Lucas form gives the unshifted second corollary.
    EXPECT_EQ(eval_lhs(family("thm1-lucas"), n, 0), eval_lhs(family("cor2-lucas-0"), n, 0));
    EXPECT_EQ(eval_lhs(family("thm1-lucas"), n, -1), eval_lhs(family("cor2-lucas-m1"), n, 0));
    EXPECT_EQ(eval_lhs(family("thm1-lucas"), n, 1), eval_lhs(family("cor2-lucas-p1"), n, 0));
    // The ninth-theorem sum vanishes at its delta and is n(-1)^n times the corollary sum.
    EXPECT_EQ(eval_rhs(family("th11-fib"), n, kCor7[r]), 0);
    EXPECT_EQ(eval_lhs(family("th11-fib"), n, kCor7[r]),
              oracle::sign(n) * n * eval_lhs(family("cor7-fib-zero"), n, 0));
    // The tenth-theorem sum vanishes at minus its delta.
    EXPECT_EQ(eval_rhs(family("xyz123-fib"), n, -kCor8[r]), 0);
    EXPECT_EQ(eval_lhs(family("xyz123-fib"), n, -kCor8[r]), -eval_lhs(family("cor8-fib-zero"), n, 0));
    // The sixth-theorem sums at t = 0 and t = 1 are the fifth corollary.
    EXPECT_EQ(eval_lhs(family("th7-fib"), n, 0), eval_lhs(family("cor5-fib-0"), n, 0));
    EXPECT_EQ(eval_lhs(family("th7-lucas"), n, 1), eval_lhs(family("cor5-lucas-1"), n, 0));
  }
}

TEST(IdentityCatalog, SumEqualitiesOnGrid) {
  for (const char* id : {"cor9-equalities", "cor9-equalities-fib"}) {
    EXPECT_TRUE(verify_family(family(id), {1, 100}, {-20, 20}, std::nullopt, 2).ok()) << id;
  }
}

TEST(IdentityCatalog, WaringSignFactorsAgreeWherePrintedDifferently) {
  for (Index n = 0; n <= 1000; ++n) {
    const int r = oracle::mod5(n);
    if (r == 1 || r == 2) {
      EXPECT_EQ(oracle::floor_div(n, 5), oracle::floor_div(n + 1, 5));
    }
  }
  for (Index n = 1; n <= 200; n += 5) {
    EXPECT_EQ(sign_factor_value(SignFactor::floor_n_5, n), sign_factor_value(SignFactor::floor_n1_5, n));
    EXPECT_EQ(sign_factor_value(SignFactor::floor_n_5, n + 1), sign_factor_value(SignFactor::floor_n1_5, n + 1));
  }
}

TEST(IdentityCatalog, ScaleMakesValuesIntegral) {
  for (const auto& f : list_families()) {
    const GibonacciParams s{3, 7};
    for (Index n = f.n_min; n <= 60; ++n) {
      for (Index t = -5; t <= 5; ++t) {
        const mpq_class l = f.scale * eval_lhs(f, n, t, seed_for(f, s));
        const mpq_class r = f.scale * eval_rhs(f, n, t, seed_for(f, s));
        ASSERT_EQ(l.get_den(), 1) << f.id << " n=" << n << " t=" << t;
        ASSERT_EQ(r.get_den(), 1) << f.id << " n=" << n << " t=" << t;
      }
    }
  }
}

TEST(IdentityCatalog, GibonacciLinearity) {
  const GibonacciParams s1{3, 7};
  const GibonacciParams s2{-2, 5};
  const GibonacciParams sum{s1.a + s2.a, s1.b + s2.b};
  const GibonacciParams scaled{3 * s1.a, 3 * s1.b};
  for (const auto* f : match_families("gib-*")) {
    for (Index n = 1; n <= 30; ++n) {
      for (Index t = -4; t <= 4; ++t) {
        EXPECT_EQ(eval_lhs(*f, n, t, sum), eval_lhs(*f, n, t, s1) + eval_lhs(*f, n, t, s2));
        EXPECT_EQ(eval_rhs(*f, n, t, sum), eval_rhs(*f, n, t, s1) + eval_rhs(*f, n, t, s2));
        EXPECT_EQ(eval_lhs(*f, n, t, scaled), 3 * eval_lhs(*f, n, t, s1));
      }
    }
  }
}

TEST(IdentityCatalog, GibonacciSeedsReproduceFixedFamilies) {
  for (Index n = 1; n <= 40; ++n) {
    for (Index t = -3; t <= 3; ++t) {
      EXPECT_EQ(eval_lhs(family("gib-thm1"), n, t, lucas_seeds()), eval_lhs(family("thm1-lucas"), n, t));
      EXPECT_EQ(eval_lhs(family("gib-th7"), n, t, fibonacci_seeds()), eval_lhs(family("th7-fib"), n, t));
      EXPECT_EQ(eval_lhs(family("gib-th11"), n, t, lucas_seeds()), eval_lhs(family("th11-lucas"), n, t));
    }
  }
}

TEST(IdentityCatalog, TermBreakdownAddsUp) {
  for (const auto& f : list_families()) {
    const auto s = seed_for(f, GibonacciParams{3, 7});
    for (Index n = std::max<Index>(f.n_min, 1); n <= 12; ++n) {
      mpq_class total = 0;
      for (const auto& term : lhs_terms(f, n, 2, s)) {
        EXPECT_EQ(term.value, term.coeff * mpq_class(term.sequence_value));
        total += term.value;
      }
      EXPECT_EQ(total, eval_lhs(f, n, 2, s)) << f.id << " n=" << n;
    }
  }
}

TEST(IdentityCatalog, TFreeFamiliesIgnoreT) {
  for (const auto& f : list_families()) {
    if (f.uses_t) continue;
    for (Index n = f.n_min; n <= 20; ++n) EXPECT_EQ(eval_lhs(f, n, 9), eval_lhs(f, n, 0)) << f.id;
  }
}

TEST(IdentityCatalog, DomainErrors) {
  EXPECT_THROW(eval_lhs(family("thm1-lucas"), 0, 0), DomainError);
  EXPECT_NO_THROW(eval_lhs(family("thm12-lucas"), 0, 0));
  EXPECT_THROW(eval_rhs(family("thm12-lucas"), -1, 0), DomainError);
  EXPECT_THROW(eval_lhs(family("gib-thm1"), 3, 0), DomainError);
  EXPECT_THROW(eval_lhs(family("thm1-fib"), 3, 0, GibonacciParams{1, 1}), DomainError);
  EXPECT_THROW(verify_family(family("thm1-fib"), {0, 5}, {0, 0}), DomainError);
  EXPECT_THROW(verify_family(family("thm1-fib"), {5, 4}, {0, 0}), DomainError);
  EXPECT_THROW(verify_family(family("thm1-fib"), {1, 4}, {1, 0}), DomainError);
  EXPECT_THROW(lhs_terms(family("gib-th7"), 2, 0), DomainError);
}

TEST(IdentityCatalog, ReportsAreIndependentOfWorkerCount) {
  const auto& base = family("th11-lucas");
  const auto mutations = enumerate_mutations(base);
  ASSERT_FALSE(mutations.empty());
  for (const auto& m : mutations) {
    const auto mutant = apply_mutation(base, m);
    const auto one = verify_family(mutant, {1, 40}, {-6, 6}, std::nullopt, 1);
    const auto four = verify_family(mutant, {1, 40}, {-6, 6}, std::nullopt, 4);
    EXPECT_EQ(one, four) << m.description;
  }
  EXPECT_EQ(verify_family(base, {1, 60}, {-8, 8}, std::nullopt, 1), verify_family(base, {1, 60}, {-8, 8}, std::nullopt, 3));
}

TEST(IdentityCatalog, FirstCounterexampleFollowsGridOrder) {
  const auto& base = family("thm12-fib");
  Mutation flip;
  flip.kind = Mutation::Kind::negate_arm;
  flip.arm = 0;
  for (std::size_t i = 0; i < base.rhs.size(); ++i) {
    if (base.rhs[i].covers(1)) flip.arm = i;
  }
  const auto mutant = apply_mutation(base, flip);
  const auto report = verify_family(mutant, {0, 30}, {-4, 4}, std::nullopt, 3);
  EXPECT_FALSE(report.ok());
  ASSERT_TRUE(report.first_counterexample);
  // Smallest (n, t) in n-major order where the flipped arm's value is nonzero.
  std::optional<std::pair<Index, Index>> expected;
  for (Index n = 0; n <= 30 && !expected; ++n) {
    for (Index t = -4; t <= 4; ++t) {
      if (eval_lhs(mutant, n, t) != eval_rhs(mutant, n, t)) {
        expected = {n, t};
        break;
      }
    }
  }
  ASSERT_TRUE(expected);
  EXPECT_EQ(report.first_counterexample->n, expected->first);
  EXPECT_EQ(report.first_counterexample->t, expected->second);
  EXPECT_EQ(report.first_counterexample->lhs, eval_lhs(mutant, expected->first, expected->second));
  EXPECT_EQ(report.first_counterexample->rhs, eval_rhs(mutant, expected->first, expected->second));
}
