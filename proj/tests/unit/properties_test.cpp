#include <gtest/gtest.h>

#include "ispace/error.hpp"
#include "ispace/properties.hpp"
#include "ispace/search.hpp"
#include "support/oracles.hpp"
#include "support/suite.hpp"

namespace ispace {
namespace {

TEST(Properties, ChainHasEverything) {
  const auto s = suite::l3();
  EXPECT_TRUE(is_point_transitive(s));
  EXPECT_TRUE(is_point_antisymmetric(s));
  EXPECT_TRUE(is_interval_transitive(s));
  EXPECT_TRUE(is_interval_convex(s));
  EXPECT_TRUE(is_stiff(s));
  EXPECT_TRUE(is_interval_antisymmetric(s));
}

TEST(Properties, SinglePointIsVacuous) {
  const auto s = linear_order_space(1);
  for (const auto& name : property_names()) {
    EXPECT_TRUE(evaluate_property(name, s).holds()) << name;
  }
}

TEST(Properties, K23FailsIntervalConvexity) {
  const auto s = suite::k23();
  const auto o = interval_convexity(s);
  ASSERT_TRUE(o.fails());
  ASSERT_TRUE(o.witness);
  const auto& p = o.witness->points;
  ASSERT_EQ(p.size(), 5U);
  EXPECT_EQ(p[0], 2U);
  EXPECT_EQ(p[1], 3U);
  // u, v in [2,3] with w between them but outside [2,3].
  const auto i23 = interval(s, 2, 3);
  EXPECT_TRUE(i23.contains(p[2]));
  EXPECT_TRUE(i23.contains(p[4]));
  EXPECT_TRUE(holds(s, p[2], p[3], p[4]));
  EXPECT_FALSE(i23.contains(p[3]));
  EXPECT_FALSE(is_interval_transitive(s));
}

TEST(Properties, NonStiffWitness) {
  const auto o = stiffness(suite::non_stiff3());
  ASSERT_TRUE(o.fails());
  EXPECT_EQ(o.witness->points, (std::vector<PointId>{0, 1, 2, 0}));
}

TEST(Properties, RationalLineIsStiff) {
  const std::vector<RationalPoint> line{RationalPoint{0}, RationalPoint{1}, RationalPoint{2}, RationalPoint{3}};
  const auto s = vector_space_on_points(line);
  EXPECT_TRUE(holds(s, 0, 1, 2));
  EXPECT_TRUE(holds(s, 1, 2, 3));
  EXPECT_TRUE(holds(s, 0, 1, 3));
  EXPECT_TRUE(is_stiff(s));
}

// Each checker agrees with the direct definition on every space with n <= 4.
TEST(Properties, CheckersMatchDefinitionsExhaustively) {
  for (std::size_t n = 1; n <= 4; ++n) {
    for_each_space(n, [&](std::uint64_t index, const FiniteIntervalSpace& s) {
      const oracle::Table r(s);
      ASSERT_EQ(is_point_transitive(s), oracle::point_transitive(r)) << n << "/" << index;
      ASSERT_EQ(is_point_antisymmetric(s), oracle::point_antisymmetric(r)) << n << "/" << index;
      ASSERT_EQ(is_interval_transitive(s), oracle::interval_transitive(r)) << n << "/" << index;
      ASSERT_EQ(is_interval_antisymmetric(s), oracle::interval_antisymmetric(r)) << n << "/" << index;
      ASSERT_EQ(is_interval_convex(s), oracle::interval_convex(r)) << n << "/" << index;
      ASSERT_EQ(is_stiff(s), oracle::stiff(r)) << n << "/" << index;
    });
  }
}

TEST(Properties, CheckersMatchDefinitionsOnSuite) {
  for (const auto& [name, s] : suite::regression_suite()) {
    SCOPED_TRACE(name);
    const oracle::Table r(s);
    EXPECT_EQ(is_point_transitive(s), oracle::point_transitive(r));
    EXPECT_EQ(is_point_antisymmetric(s), oracle::point_antisymmetric(r));
    EXPECT_EQ(is_interval_transitive(s), oracle::interval_transitive(r));
    EXPECT_EQ(is_interval_antisymmetric(s), oracle::interval_antisymmetric(r));
    EXPECT_EQ(is_interval_convex(s), oracle::interval_convex(r));
    EXPECT_EQ(is_stiff(s), oracle::stiff(r));
  }
}

// A reported witness must actually falsify the definition.
TEST(Properties, WitnessesAreSound) {
  for (std::uint64_t i = 0; i < 300; ++i) {
    const auto s = random_space(5, 9000 + i, 0.3);
    const oracle::Table r(s);
    if (auto o = point_transitivity(s); o.fails()) {
      const auto& p = o.witness->points;  // a, x, y, z
      EXPECT_TRUE(r(p[0], p[1], p[2]) && r(p[0], p[2], p[3]) && !r(p[0], p[1], p[3]));
    }
    if (auto o = point_antisymmetry(s); o.fails()) {
      const auto& p = o.witness->points;  // a, x, y
      EXPECT_TRUE(p[1] != p[2] && r(p[0], p[1], p[2]) && r(p[0], p[2], p[1]));
    }
    if (auto o = stiffness(s); o.fails()) {
      const auto& p = o.witness->points;  // a, b, c, d
      EXPECT_TRUE(r(p[0], p[1], p[2]) && p[1] != p[2] && r(p[1], p[2], p[3]) && !r(p[0], p[1], p[3]));
    }
    if (auto o = interval_transitivity(s); o.fails()) {
      const auto& p = o.witness->points;  // a, b, x, y, z
      const auto ab = oracle::interval(r, p[0], p[1]);
      EXPECT_TRUE(oracle::base(r, ab, p[2], p[3]) && oracle::base(r, ab, p[3], p[4]) &&
                  !oracle::base(r, ab, p[2], p[4]));
    }
    if (auto o = interval_antisymmetry(s); o.fails()) {
      const auto& p = o.witness->points;  // a, b, x, y
      const auto ab = oracle::interval(r, p[0], p[1]);
      EXPECT_TRUE(p[2] != p[3] && !oracle::in(ab, p[2]) && !oracle::in(ab, p[3]) &&
                  oracle::base(r, ab, p[2], p[3]) && oracle::base(r, ab, p[3], p[2]));
    }
    if (auto o = interval_convexity(s); o.fails()) {
      const auto& p = o.witness->points;  // a, b, u, w, v
      const auto ab = oracle::interval(r, p[0], p[1]);
      EXPECT_TRUE(oracle::in(ab, p[2]) && oracle::in(ab, p[4]) && r(p[2], p[3], p[4]) && !oracle::in(ab, p[3]));
    }
  }
}

TEST(Properties, IntervalTransitiveImpliesPointTransitive) {
  for_each_space(4, [](std::uint64_t, const FiniteIntervalSpace& s) {
    if (is_interval_transitive(s)) ASSERT_TRUE(is_point_transitive(s));
  });
}

TEST(Conditions, ChainAllTrue) {
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto s = linear_order_space(n);
    EXPECT_EQ(transitivity_conditions(s).signature(), "111111111") << n;
    EXPECT_EQ(antisymmetry_conditions(s).signature(), "11111") << n;
  }
}

TEST(Conditions, K23AllFalse) {
  const auto v = transitivity_conditions(suite::k23());
  EXPECT_EQ(v.signature(), "000000000");
  EXPECT_THROW(antisymmetry_conditions(suite::k23()), HypothesisViolated);
  AntisymmetryOptions lenient;
  lenient.allow_non_interval_transitive = true;
  EXPECT_FALSE(antisymmetry_conditions(suite::k23(), lenient).hypothesis_met);
}

TEST(Conditions, LabelsAndCaps) {
  EXPECT_EQ(ConditionVector::label(Theorem::Transitivity, 0), "C1");
  EXPECT_EQ(ConditionVector::label(Theorem::Antisymmetry, 4), "D5");
  const auto v = transitivity_conditions(linear_order_space(11));
  EXPECT_EQ(v.signature(), "111--1111");
  EXPECT_TRUE(v.consistent());
}

TEST(Conditions, WeakeningsHold) {
  for_each_space(4, [](std::uint64_t, const FiniteIntervalSpace& s) {
    const auto v = transitivity_conditions(s);
    if (v.values[4].holds()) ASSERT_TRUE(v.values[3].holds());
    if (v.values[2].holds()) ASSERT_TRUE(v.values[1].holds());
  });
}

TEST(Conditions, NonStiffThreePointSpace) {
  const auto s = suite::non_stiff3();
  ASSERT_TRUE(is_interval_transitive(s));
  EXPECT_EQ(antisymmetry_conditions(s).signature(), "00000");
}

TEST(Propositions, HoldOnChain) {
  const auto s = suite::l3();
  EXPECT_TRUE(check_base_interval_transitivity_prop(s));
  EXPECT_TRUE(check_base_interval_antisymmetry_prop(s));
  EXPECT_TRUE(check_stiff_implies_convex_antisymmetry(s));
}

TEST(Propositions, VacuousWhenHypothesisFails) {
  for_each_space(4, [](std::uint64_t, const FiniteIntervalSpace& s) {
    if (!is_point_transitive(s)) ASSERT_TRUE(check_base_interval_antisymmetry_prop(s));
    if (!is_stiff(s)) ASSERT_TRUE(check_stiff_implies_convex_antisymmetry(s));
  });
}

TEST(Report, NamesAndNotes) {
  EXPECT_THROW(evaluate_property("no-such-property", suite::l3()), std::invalid_argument);
  const auto report = check_properties(suite::k23(), {"interval-convex", "D2"});
  EXPECT_FALSE(report.flag("interval-convex"));
  EXPECT_FALSE(report.notes.empty());
}

}  // namespace
}  // namespace ispace
