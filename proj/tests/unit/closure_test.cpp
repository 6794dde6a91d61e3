#include <gtest/gtest.h>

#include "ispace/closure.hpp"
#include "ispace/error.hpp"
#include "ispace/properties.hpp"
#include "ispace/search.hpp"
#include "support/oracles.hpp"
#include "support/suite.hpp"

namespace ispace {
namespace {

TEST(ClosureSystem, ChainSystem) {
  const auto cs = convex_closure_system(suite::l3());
  EXPECT_EQ(cs.closed_sets().size(), 7U);
  EXPECT_TRUE(cs.is_closed(PointSet{0, 1, 2}));
  EXPECT_TRUE(cs.empty_is_closed());
  EXPECT_EQ(cl(cs, PointSet{0, 2}), (PointSet{0, 1, 2}));
  EXPECT_EQ(cl(cs, PointSet{}), PointSet{});
}

TEST(ClosureSystem, SinglePoint) {
  const auto cs = convex_closure_system(linear_order_space(1));
  EXPECT_EQ(cs.closed_sets(), (std::vector<PointSet>{{}, {0}}));
}

TEST(ClosureSystem, RejectsNonMooreFamilies) {
  EXPECT_THROW(ClosureSystem(3, {PointSet{0, 1}}), ModelError);
  EXPECT_THROW(ClosureSystem(3, {PointSet{0, 1}, PointSet{1, 2}, PointSet{0, 1, 2}}), ModelError);
  EXPECT_THROW(ClosureSystem(2, {PointSet{0, 1}, PointSet{5}}), ModelError);
  // X alone is a Moore family; the empty set need not be closed.
  const ClosureSystem top(2, {PointSet{0, 1}});
  EXPECT_FALSE(top.empty_is_closed());
  EXPECT_EQ(cl(top, PointSet{}), (PointSet{0, 1}));
}

TEST(ClosureSystem, ClosureIsIdempotentOnClosedSets) {
  for (const auto& [name, s] : suite::regression_suite()) {
    SCOPED_TRACE(name);
    const auto cs = convex_closure_system(s);
    for (PointSet c : cs.closed_sets()) EXPECT_EQ(cl(cs, c), c);
    EXPECT_TRUE(cs.is_closed(s.universe()));
  }
}

TEST(Entailment, Basics) {
  const auto cs = convex_closure_system(suite::l3());
  EXPECT_TRUE(entails(cs, PointSet{0}, 2, 1));
  for (PointId x = 0; x < 3; ++x) EXPECT_TRUE(entails(cs, PointSet{0}, x, x));
  for (PointId x = 0; x < 3; ++x) EXPECT_TRUE(entails(cs, PointSet{0, 1}, x, 0));
  EXPECT_THROW(entails(cs, PointSet{0, 2}, 1, 1), HypothesisViolated);
  EXPECT_TRUE(entails(cs, PointSet{0, 2}, 1, 1, BaseSet::AnySubset));
}

TEST(Entailment, ReverseOfBetween) {
  const auto s = suite::l3();
  EXPECT_TRUE(entailment_is_reverse_of_between(s, PointSet{0}));
  EXPECT_TRUE(entailment_is_reverse_of_between(s, s.universe()));
  EXPECT_THROW(entailment_is_reverse_of_between(s, PointSet{}), HypothesisViolated);
  EXPECT_THROW(entailment_is_reverse_of_between(s, PointSet{0, 2}), HypothesisViolated);
  EXPECT_THROW(entailment_is_reverse_of_between(suite::k23(), PointSet{0}), HypothesisViolated);
}

// For A empty the reversal fails in every space with two or more points:
// cl({c}) = {c} holds c, while [A, c] is empty.
TEST(Entailment, EmptyBaseIsNotCovered) {
  const auto s = linear_order_space(2);
  const auto cs = convex_closure_system(s);
  EXPECT_TRUE(entails(cs, PointSet{}, 1, 1));
  EXPECT_FALSE(set_between(s, PointSet{}, 1, PointSet{1}));
}

TEST(Entailment, ExhaustiveOnIntervalTransitiveSpaces) {
  for (std::size_t n = 1; n <= 4; ++n) {
    for_each_space(n, [](std::uint64_t, const FiniteIntervalSpace& s) {
      if (!is_interval_transitive(s)) return;
      const auto cs = convex_closure_system(s);
      for (PointSet a : cs.closed_sets()) {
        if (!a.empty()) ASSERT_TRUE(entailment_is_reverse_of_between(s, cs, a));
      }
    });
  }
}

TEST(Antimatroid, ChainAndNonStiff) {
  const auto chain = convex_closure_system(suite::l3());
  EXPECT_TRUE(is_antiexchange(chain));
  EXPECT_TRUE(is_combinatorial(chain));
  EXPECT_TRUE(is_antimatroid(chain));

  const auto bad = convex_closure_system(suite::non_stiff3());
  const auto o = antiexchange(bad);
  ASSERT_TRUE(o.fails());
  EXPECT_FALSE(is_antimatroid(bad));
  const auto report = antimatroid(bad);
  EXPECT_TRUE(report.combinatorial.holds());
  EXPECT_TRUE(report.empty_closed);
  EXPECT_EQ(report.outcome().witness->kind, "antiexchange");
}

TEST(Antimatroid, AntiexchangeWitnessIsSound) {
  for (std::uint64_t i = 0; i < 200; ++i) {
    const auto s = random_space(5, 4000 + i, 0.3);
    const auto cs = convex_closure_system(s);
    const auto o = antiexchange(cs);
    if (!o.fails()) continue;
    const PointId x = o.witness->points[0];
    const PointId y = o.witness->points[1];
    const PointSet a = o.witness->sets[0];
    EXPECT_TRUE(cs.is_closed(a));
    EXPECT_NE(x, y);
    EXPECT_FALSE(a.contains(x));
    EXPECT_FALSE(a.contains(y));
    EXPECT_TRUE(cl(cs, a.with(x)).contains(y));
    EXPECT_TRUE(cl(cs, a.with(y)).contains(x));
  }
}

TEST(Combinatorial, AlwaysTrueOnFiniteSystems) {
  for (std::size_t n = 1; n <= 4; ++n) {
    for_each_space(n, [](std::uint64_t, const FiniteIntervalSpace& s) { ASSERT_TRUE(verify_combinatorial_prop(s)); });
  }
  EXPECT_TRUE(verify_combinatorial_prop(suite::k23()));
  EXPECT_TRUE(is_combinatorial(ClosureSystem(2, {PointSet{0, 1}})));
}

}  // namespace
}  // namespace ispace
