#include <gtest/gtest.h>

#include "fibmod5/identity_catalog.hpp"
#include "fibmod5/mutation.hpp"
#include "oracle.hpp"

using namespace fibmod5;

namespace {

std::optional<GibonacciParams> seed_for(const IdentityFamily& f) {
  return f.uses_gibonacci ? std::optional(GibonacciParams{3, 7}) : std::nullopt;
}

bool detected(const IdentityFamily& mutant) {
  const IntRange t = mutant.uses_t ? IntRange{-5, 5} : IntRange{0, 0};
  return !verify_family(mutant, {mutant.n_min, 20}, t, seed_for(mutant)).ok();
}

}  // namespace

TEST(Mutation, EnumerationCoversArmsTermsAndSubscripts) {
  const auto* f = find_family("thm1-lucas");
  ASSERT_NE(f, nullptr);
  const auto mutations = enumerate_mutations(*f);
  int arms = 0;
  int shifts = 0;
  for (const auto& m : mutations) {
    if (m.kind == Mutation::Kind::negate_arm) ++arms;
    if (m.kind == Mutation::Kind::shift_subscript) ++shifts;
    EXPECT_FALSE(m.description.empty());
  }
  EXPECT_EQ(arms, static_cast<int>(f->rhs.size()));
  EXPECT_GT(shifts, 0);
}

TEST(Mutation, ApplyChangesOnlyTheTarget) {
  const auto& base = *find_family("waring2-fib");
  const auto mutations = enumerate_mutations(base);
  for (const auto& m : mutations) {
    const auto mutant = apply_mutation(base, m);
    EXPECT_EQ(mutant.id, "waring2-fib~mutant");
    EXPECT_EQ(mutant.scale, base.scale);
    if (m.on_lhs) {
      EXPECT_EQ(mutant.rhs, base.rhs);
      EXPECT_NE(mutant.lhs, base.lhs);
    } else {
      EXPECT_EQ(mutant.lhs, base.lhs);
      for (std::size_t a = 0; a < base.rhs.size(); ++a) {
        if (a == m.arm) {
          EXPECT_NE(mutant.rhs[a], base.rhs[a]);
        } else {
          EXPECT_EQ(mutant.rhs[a], base.rhs[a]);
        }
      }
    }
  }
  Mutation bad;
  bad.arm = 99;
  EXPECT_THROW(apply_mutation(base, bad), std::out_of_range);
}

TEST(Mutation, NegatedArmEvaluatesToMinusOriginal) {
  const auto& base = *find_family("th11-fib");
  for (const auto& m : enumerate_mutations(base)) {
    if (m.kind != Mutation::Kind::negate_arm) continue;
    const auto mutant = apply_mutation(base, m);
    for (Index n = 1; n <= 25; ++n) {
      if (&base.arm_for(n) != &base.rhs[m.arm]) continue;
      EXPECT_EQ(eval_rhs(mutant, n, 2), -eval_rhs(base, n, 2));
    }
  }
}

// Mutants that no grid can reveal: on the n = 0 mod 5 arm of the sum
// equalities both sides vanish identically, so negating or shifting inside
// that arm leaves it zero.
TEST(Mutation, SurvivorsAreExactlyTheVanishingArm) {
  std::size_t total = 0;
  std::vector<std::string> survivors;
  for (const auto& f : list_families()) {
    for (const auto& m : enumerate_mutations(f)) {
      ++total;
      if (detected(apply_mutation(f, m))) continue;
      survivors.push_back(f.id + ": " + m.description);
      EXPECT_TRUE(f.id == "cor9-equalities" || f.id == "cor9-equalities-fib") << f.id << " " << m.description;
      EXPECT_FALSE(m.on_lhs);
      EXPECT_TRUE(f.rhs[m.arm].covers(0));
      EXPECT_FALSE(f.rhs[m.arm].covers(1));
      for (Index n = 5; n <= 200; n += 5) {
        for (Index t = -10; t <= 10; ++t) {
          EXPECT_EQ(eval_lhs(f, n, t), 0);
          EXPECT_EQ(eval_rhs(f, n, t), 0);
        }
      }
    }
  }
  EXPECT_GT(total, 300u);
  EXPECT_EQ(survivors.size(), 6u);
}

TEST(Mutation, EveryOtherMutantIsCaughtOnTheSmallGrid) {
  for (const auto& f : list_families()) {
    if (f.id.rfind("cor9-", 0) == 0) continue;
    for (const auto& m : enumerate_mutations(f)) {
      EXPECT_TRUE(detected(apply_mutation(f, m))) << f.id << ": " << m.description;
    }
  }
}
