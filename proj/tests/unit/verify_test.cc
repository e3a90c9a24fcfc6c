#include "fairdiv/verify.h"

#include <gtest/gtest.h>

#include "fairdiv/errors.h"
#include "fairdiv/generators.h"
#include "fairdiv/limits.h"
#include "testing/brute_force.h"

namespace fairdiv {
namespace {

namespace brute = ::fairdiv::testing;

constexpr int kA = 0;
constexpr int kB = 1;
constexpr int kC = 2;

Allocation Alloc(std::initializer_list<Bundle> bundles) {
  return Allocation(3, bundles);
}

TEST(VerifyTest, AlphaEfxOnExampleOne) {
  const Instance inst = Example1();
  const Allocation x = Alloc({Bundle{kA}, Bundle{kB, kC}});
  const GuaranteeReport full = IsAlphaEfx(inst, x, Ratio(1));
  ASSERT_FALSE(full.pass);
  ASSERT_TRUE(full.witness.has_value());
  EXPECT_EQ(full.witness->i, 0);
  EXPECT_EQ(full.witness->j, 1);
  EXPECT_EQ(full.witness->item, kB);
  EXPECT_EQ(full.witness->lhs, Ratio(1));
  EXPECT_EQ(full.witness->rhs, Ratio(2));
  EXPECT_TRUE(ReplayWitness(inst, x, full));
  EXPECT_TRUE(IsAlphaEfx(inst, x, Ratio(1, 2)).pass);
}

TEST(VerifyTest, Ef1OnExampleOne) {
  const Instance inst = Example1();
  EXPECT_TRUE(IsEf1(inst, Alloc({Bundle{kA}, Bundle{kB, kC}})).pass);
  EXPECT_TRUE(IsEf1(inst, Alloc({Bundle{kA}, Bundle{}})).pass);
  const Allocation bad = Alloc({Bundle{}, Bundle{kA, kB, kC}});
  const GuaranteeReport report = IsEf1(inst, bad);
  EXPECT_FALSE(report.pass);
  EXPECT_TRUE(ReplayWitness(inst, bad, report));
}

TEST(VerifyTest, SeparationOnExampleOne) {
  const Instance inst = Example1();
  EXPECT_TRUE(IsGammaSeparated(inst, Alloc({Bundle{kA}, Bundle{kC}}), Ratio(1))
                  .pass);
  const Allocation x = Alloc({Bundle{kA}, Bundle{kB}});
  const GuaranteeReport report = IsGammaSeparated(inst, x, Ratio(1));
  ASSERT_FALSE(report.pass);
  EXPECT_EQ(report.witness->i, 0);
  EXPECT_EQ(report.witness->item, kC);
  EXPECT_TRUE(ReplayWitness(inst, x, report));
  EXPECT_THROW(IsGammaSeparated(inst, x, Ratio(2)), PreconditionError);
}

TEST(VerifyTest, BetaMnwAgainstReference) {
  const Instance inst = Example1();
  const Allocation x = Alloc({Bundle{kA}, Bundle{kB, kC}});
  EXPECT_TRUE(IsBetaMnw(inst, x, Ratio(3, 4), Ratio(4)).pass);
  EXPECT_FALSE(IsBetaMnw(inst, x, Ratio(1), Ratio(4)).pass);
  EXPECT_TRUE(IsBetaMnwPower(inst, x, Ratio(3, 4), Ratio(4)).pass);
  EXPECT_FALSE(IsBetaMnwPower(inst, x, Ratio(4, 5), Ratio(4)).pass);
  EXPECT_THROW(IsBetaMnw(inst, x, Ratio(0), Ratio(4)), PreconditionError);
}

TEST(VerifyTest, BetaMnwOnTheoremFourBestEfx) {
  const Instance inst = Theorem4(Ratio(1, 2), Ratio(1, 100), 2);
  const Allocation efx = Alloc({Bundle{0}, Bundle{2}});
  const Ratio optimum(301, 100);
  EXPECT_TRUE(IsBetaMnw(inst, efx, Ratio(2, 3), optimum).pass);
  // (7/10)^2 * 301/100 < 201/100, so this passes as well.
  EXPECT_TRUE(IsBetaMnw(inst, efx, Ratio(7, 10), optimum).pass);
  EXPECT_FALSE(IsBetaMnw(inst, efx, Ratio(9, 10), optimum).pass);
}

TEST(VerifyTest, MmsSharesOnExampleOne) {
  const Instance inst = Example1();
  EXPECT_EQ(MmsShare(inst, 0, 2, Bundle::Full(3)), Ratio(2));
  EXPECT_EQ(MmsShare(inst, 0, 3, Bundle::Full(3)), Ratio(1));
  EXPECT_EQ(MmsShare(inst, 0, 1, Bundle{kB, kC}), Ratio(3));
  EXPECT_EQ(MmsShare(inst, 0, 4, Bundle::Full(3)), Ratio(0));
}

TEST(VerifyTest, MaximinFamilyOnExampleOne) {
  const Instance inst = Example1();
  const Allocation x = Alloc({Bundle{kA, kB}, Bundle{kC}});
  EXPECT_TRUE(IsAlphaPmms(inst, x, Ratio(1)).pass);
  EXPECT_TRUE(IsAlphaMms(inst, x, Ratio(1)).pass);
  EXPECT_TRUE(IsAlphaGmms(inst, x, Ratio(1)).pass);
  const Allocation y = Alloc({Bundle{kA}, Bundle{kB, kC}});
  const GuaranteeReport mms = IsAlphaMms(inst, y, Ratio(1));
  ASSERT_FALSE(mms.pass);
  EXPECT_EQ(mms.witness->i, 0);
  EXPECT_TRUE(ReplayWitness(inst, y, mms));
  EXPECT_TRUE(IsAlphaMms(inst, y, Ratio(1, 2)).pass);
}

TEST(VerifyTest, GmmsRefusesTooManyAgents) {
  const int n = GlobalLimits().max_gmms_agents + 1;
  const Instance inst = RandomAdditive(n, 2, 5, 1);
  EXPECT_THROW(IsAlphaGmms(inst, Allocation::Empty(n, 2), Ratio(1)),
               CapacityError);
}

TEST(VerifyTest, RejectsIncompatibleAllocation) {
  const Instance inst = Example1();
  EXPECT_THROW(IsAlphaEfx(inst, Allocation::Empty(3, 3), Ratio(1)),
               PreconditionError);
}

TEST(VerifyTest, PropertyNames) {
  EXPECT_EQ(PropertyName(Property::kAlphaEfx), "alpha-efx");
  EXPECT_EQ(PropertyName(Property::kEf1), "ef1");
}

// Every checker agrees with the direct definition on random partial
// allocations, and every failure carries a replayable witness.
TEST(VerifyTest, AgreesWithBruteForce) {
  const Ratio alphas[] = {Ratio(0), Ratio(1, 3), Ratio(1, 2), Ratio(1)};
  int failures = 0;
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const int n = 2 + seed % 3;
    const int m = 2 + seed % 4;
    const Instance inst = seed % 2 == 0 ? RandomAdditive(n, m, 6, seed)
                                        : RandomXos(n, m, 2, seed, 6);
    std::vector<int> labels(m);
    for (int g = 0; g < m; ++g) {
      labels[g] = static_cast<int>((seed * 7 + g * 3) % (n + 1)) - 1;
    }
    const Allocation x = brute::FromLabels(n, m, labels);
    for (const Ratio& alpha : alphas) {
      const GuaranteeReport efx = IsAlphaEfx(inst, x, alpha);
      EXPECT_EQ(efx.pass, brute::BruteForceEfx(inst, x, alpha)) << seed;
      const GuaranteeReport mms = IsAlphaMms(inst, x, alpha);
      EXPECT_EQ(mms.pass, brute::BruteForceMmsCheck(inst, x, alpha)) << seed;
      const GuaranteeReport pmms = IsAlphaPmms(inst, x, alpha);
      EXPECT_EQ(pmms.pass, brute::BruteForcePmms(inst, x, alpha)) << seed;
      const GuaranteeReport gmms = IsAlphaGmms(inst, x, alpha);
      EXPECT_EQ(gmms.pass, brute::BruteForceGmms(inst, x, alpha)) << seed;
      for (const GuaranteeReport* r : {&efx, &mms, &pmms, &gmms}) {
        if (!r->pass) {
          ++failures;
          EXPECT_TRUE(ReplayWitness(inst, x, *r)) << seed;
        }
      }
    }
    const GuaranteeReport ef1 = IsEf1(inst, x);
    EXPECT_EQ(ef1.pass, brute::BruteForceEf1(inst, x)) << seed;
    if (!ef1.pass) EXPECT_TRUE(ReplayWitness(inst, x, ef1));
  }
  EXPECT_GT(failures, 0);
}

TEST(VerifyTest, ReplayRejectsTamperedWitness) {
  const Instance inst = Example1();
  const Allocation x = Alloc({Bundle{kA}, Bundle{kB, kC}});
  GuaranteeReport report = IsAlphaEfx(inst, x, Ratio(1));
  ASSERT_FALSE(report.pass);
  report.witness->item = kC;
  EXPECT_FALSE(ReplayWitness(inst, x, report));
}

}  // namespace
}  // namespace fairdiv
