#include "fairdiv/instance.h"

#include <vector>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "fairdiv/errors.h"
#include "fairdiv/generators.h"
#include "fairdiv/instance_json.h"

namespace fairdiv {
namespace {

std::vector<Ratio> Table(std::initializer_list<int> values) {
  std::vector<Ratio> out;
  for (int v : values) out.emplace_back(v);
  return out;
}

TEST(InstanceTest, ExampleOneValues) {
  const Instance inst = Example1();
  EXPECT_EQ(inst.n(), 2);
  EXPECT_EQ(inst.m(), 3);
  EXPECT_TRUE(inst.all_additive());
  EXPECT_EQ(inst.Value(0, Bundle{0, 1}), Ratio(2));
  EXPECT_EQ(inst.Value(1, Bundle{0, 1, 2}), Ratio(4));
  EXPECT_EQ(inst.Value(1, 2), Ratio(2));
  EXPECT_EQ(inst.ItemName(1), "b");
}

TEST(InstanceTest, TheoremFourValues) {
  const Instance inst = Theorem4(Ratio(1, 2), Ratio(1, 100), 2);
  EXPECT_EQ(inst.m(), 3);
  EXPECT_EQ(inst.Value(0, Bundle{0}), Ratio(201, 100));
  EXPECT_EQ(inst.Value(0, Bundle{1}), Ratio(1));
  EXPECT_EQ(inst.Value(0, Bundle{2}), Ratio(0));
  EXPECT_EQ(inst.Value(1, Bundle{2}), Ratio(1));
}

TEST(InstanceTest, ExplicitValuationLooksUpTable) {
  const Instance inst(2, {Valuation::Explicit(2, Table({0, 3, 4, 5}))},
                      ValuationClass::kSubadditive);
  EXPECT_FALSE(inst.all_additive());
  EXPECT_EQ(inst.Value(0, Bundle{0}), Ratio(3));
  EXPECT_EQ(inst.Value(0, Bundle{0, 1}), Ratio(5));
  EXPECT_TRUE(CheckClass(inst).ok());
}

TEST(InstanceTest, RejectsBadShapes) {
  EXPECT_THROW(Instance(2, {Valuation::Additive(Table({1}))},
                        ValuationClass::kAdditive),
               MalformedInstanceError);
  EXPECT_THROW(Instance(1, {Valuation::Additive(Table({-1}))},
                        ValuationClass::kAdditive),
               MalformedInstanceError);
  EXPECT_THROW(Instance(2, {Valuation::Explicit(2, Table({0, 1, 1}))},
                        ValuationClass::kMonotone),
               MalformedInstanceError);
  EXPECT_THROW(Instance(2, {Valuation::Explicit(2, Table({0, 1, 1, 2}))},
                        ValuationClass::kAdditive),
               MalformedInstanceError);
}

TEST(InstanceTest, CheckClassFindsNonMonotone) {
  const Instance inst(2, {Valuation::Explicit(2, Table({0, 3, 1, 2}))},
                      ValuationClass::kMonotone);
  const ClassReport report = CheckClass(inst);
  EXPECT_EQ(report.verdict, ClassReport::Verdict::kNotMonotone);
  EXPECT_EQ(report.agent, 0);
  EXPECT_GT(inst.Value(0, report.s), inst.Value(0, report.s | report.t));
  EXPECT_EQ(report.t.size(), 1);
}

TEST(InstanceTest, CheckClassFindsNonzeroEmptyValue) {
  const Instance inst(1, {Valuation::Explicit(1, Table({1, 2}))},
                      ValuationClass::kMonotone);
  EXPECT_EQ(CheckClass(inst).verdict, ClassReport::Verdict::kMalformed);
}

TEST(InstanceTest, TheoremFiveIsMonotoneButNotSubadditive) {
  const Instance inst = Theorem5(16);
  EXPECT_TRUE(CheckClass(inst, ValuationClass::kMonotone).ok());
  const ClassReport report = CheckClass(inst, ValuationClass::kSubadditive);
  ASSERT_EQ(report.verdict, ClassReport::Verdict::kNotSubadditive);
  EXPECT_FALSE(report.s.Intersects(report.t));
  EXPECT_GT(inst.Value(report.agent, report.s | report.t),
            inst.Value(report.agent, report.s) +
                inst.Value(report.agent, report.t));
  EXPECT_THROW(RequireClass(inst, ValuationClass::kSubadditive),
               MalformedInstanceError);
}

TEST(InstanceTest, ClassNames) {
  EXPECT_EQ(ClassName(ValuationClass::kAdditive), "additive");
  EXPECT_EQ(ParseClassName("subadditive"), ValuationClass::kSubadditive);
  EXPECT_EQ(ParseClassName("monotone"), ValuationClass::kMonotone);
  EXPECT_THROW(ParseClassName("convex"), MalformedInstanceError);
}

TEST(InstanceJsonTest, RatiosFromNumbersAndStrings) {
  EXPECT_EQ(RatioFromJson(nlohmann::json(3)), Ratio(3));
  EXPECT_EQ(RatioFromJson(nlohmann::json(0.25)), Ratio(1, 4));
  EXPECT_EQ(RatioFromJson(nlohmann::json("2/6")), Ratio(1, 3));
  EXPECT_THROW(RatioFromJson(nlohmann::json("x")), MalformedInstanceError);
  EXPECT_THROW(RatioFromJson(nlohmann::json::array()), MalformedInstanceError);
  EXPECT_EQ(RatioToJson(Ratio(4)), nlohmann::json(4));
  EXPECT_EQ(RatioToJson(Ratio(1, 3)), nlohmann::json("1/3"));
}

TEST(InstanceJsonTest, AdditiveRoundTrip) {
  const Instance inst = Theorem4(Ratio(1, 3), Ratio(1, 7), 3);
  const Instance back = InstanceFromJson(InstanceToJson(inst));
  ASSERT_EQ(back.n(), inst.n());
  ASSERT_EQ(back.m(), inst.m());
  for (int i = 0; i < inst.n(); ++i) {
    for (int g = 0; g < inst.m(); ++g) {
      EXPECT_EQ(back.Value(i, g), inst.Value(i, g));
    }
  }
  EXPECT_EQ(InstanceToJson(back), InstanceToJson(inst));
}

TEST(InstanceJsonTest, ExplicitRoundTrip) {
  const Instance inst = RandomXos(2, 4, 2, 11);
  const Instance back = InstanceFromJson(InstanceToJson(inst));
  for (int i = 0; i < inst.n(); ++i) {
    for (std::uint64_t s = 0; s < 16; ++s) {
      EXPECT_EQ(back.Value(i, Bundle(s)), inst.Value(i, Bundle(s)));
    }
  }
  EXPECT_EQ(back.declared_class(), ValuationClass::kSubadditive);
}

TEST(InstanceJsonTest, ParsesDocumentedFormat) {
  const nlohmann::json j = nlohmann::json::parse(R"({
    "n": 2, "m": 2, "class": "subadditive",
    "valuations": [{"additive": [1, "1/2"]},
                   {"table": {"0": 0, "1": 1, "2": 1, "3": 1}}],
    "items": ["x", "y"]})");
  const Instance inst = InstanceFromJson(j);
  EXPECT_EQ(inst.Value(0, Bundle{0, 1}), Ratio(3, 2));
  EXPECT_EQ(inst.Value(1, Bundle{0, 1}), Ratio(1));
  EXPECT_EQ(inst.ItemName(1), "y");
}

TEST(InstanceJsonTest, RejectsMalformedDocuments) {
  const char* bad[] = {
      R"({"n": 1, "m": 2, "class": "additive", "valuations": [{"additive": [1]}]})",
      R"({"n": 2, "m": 1, "class": "additive", "valuations": [{"additive": [1]}]})",
      R"({"n": 1, "m": 1, "class": "whatever", "valuations": [{"additive": [1]}]})",
      R"({"n": 1, "m": 2, "class": "monotone", "valuations": [{"table": {"0": 0, "1": 1, "2": 1}}]})",
      R"({"n": 1, "m": 2, "class": "subadditive", "valuations": [{"table": {"0": 0, "1": 1, "2": 1, "3": 3}}]})",
      R"({"n": 1, "m": 1, "class": "additive", "valuations": [{"additive": [-1]}]})",
  };
  for (const char* text : bad) {
    EXPECT_THROW(InstanceFromJson(nlohmann::json::parse(text)),
                 MalformedInstanceError)
        << text;
  }
}

TEST(InstanceJsonTest, AllocationRoundTrip) {
  const Allocation x(4, {Bundle{0, 3}, Bundle{}, Bundle{2}});
  const nlohmann::json j = AllocationToJson(x);
  EXPECT_EQ(j["bundles"], nlohmann::json::parse("[[0, 3], [], [2]]"));
  EXPECT_EQ(AllocationFromJson(j, 4), x);
  EXPECT_THROW(AllocationFromJson(nlohmann::json::parse(
                                      R"({"bundles": [[0], [0]]})"),
                                  2),
               std::exception);
}

}  // namespace
}  // namespace fairdiv
