#include <gtest/gtest.h>

#include <set>

#include "ispace/error.hpp"
#include "ispace/properties.hpp"
#include "ispace/search.hpp"
#include "support/suite.hpp"

namespace ispace {
namespace {

TEST(Encoding, OrbitCounts) {
  EXPECT_EQ(FreeOrbitEncoding(1).orbit_count(), 0U);
  EXPECT_EQ(FreeOrbitEncoding(3).orbit_count(), 3U);
  EXPECT_EQ(FreeOrbitEncoding(4).orbit_count(), 12U);
  EXPECT_EQ(FreeOrbitEncoding(8).orbit_count(), 168U);
  EXPECT_EQ(space_count(1), 1U);
  EXPECT_EQ(space_count(3), 8U);
  EXPECT_EQ(space_count(4), 4096U);
}

TEST(Encoding, RoundTrip) {
  const FreeOrbitEncoding e4(4);
  for (std::uint64_t i = 0; i < space_count(4); ++i) ASSERT_EQ(e4.encode_index(e4.decode_index(i)), i);
  const FreeOrbitEncoding e7(7);
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto s = random_space(7, seed, 0.5);
    ASSERT_EQ(e7.decode(e7.encode(s)), s);
  }
}

TEST(Enumeration, DistinctAndComplete) {
  EXPECT_EQ(enumerate_spaces(1).size(), 1U);
  EXPECT_EQ(enumerate_spaces(3).size(), 8U);
  const auto all = enumerate_spaces(4);
  ASSERT_EQ(all.size(), 4096U);
  std::set<std::vector<bool>> seen;
  const FreeOrbitEncoding e(4);
  for (const auto& s : all) seen.insert(e.encode(s));
  EXPECT_EQ(seen.size(), 4096U);
  EXPECT_EQ(enumerate_spaces(3).front(), random_space(3, 0, 0.0));
}

TEST(Enumeration, Caps) {
  EXPECT_THROW(check_exhaustive(5, false), CapExceeded);
  EXPECT_NO_THROW(check_exhaustive(5, true));
  EXPECT_THROW(check_exhaustive(7, true), CapExceeded);
}

TEST(RandomSpace, Extremes) {
  const auto lo = random_space(5, 1, 0.0);
  const auto hi = random_space(5, 1, 1.0);
  const FreeOrbitEncoding e(5);
  for (bool b : e.encode(lo)) EXPECT_FALSE(b);
  for (bool b : e.encode(hi)) EXPECT_TRUE(b);
  EXPECT_THROW(random_space(5, 1, 1.5), std::invalid_argument);
}

TEST(RandomSpace, Deterministic) {
  EXPECT_EQ(random_space(5, 42, 0.5), random_space(5, 42, 0.5));
  EXPECT_NE(random_space(6, 42, 0.5), random_space(6, 43, 0.5));
}

TEST(Population, SamplesDependOnIndexOnly) {
  const auto p = Population::sampled(5, 10, 20);
  const auto q = Population::sampled(5, 15, 20);
  EXPECT_EQ(p.at(7), q.at(2));
  EXPECT_EQ(p.size(), 20U);
  EXPECT_EQ(Population::all(4).size(), 4096U);
}

TEST(Census, TransitivityExhaustive) {
  const auto r3 = verify_transitivity_theorem(Population::all(3));
  EXPECT_TRUE(r3.ok());
  EXPECT_EQ(r3.spaces, 8U);
  // Frozen regression value from the first verified run.
  EXPECT_EQ(r3.true_counts.at("C1"), 8U);

  const auto r4 = verify_transitivity_theorem(Population::all(4));
  EXPECT_TRUE(r4.ok());
  EXPECT_EQ(r4.spaces, 4096U);
  EXPECT_EQ(r4.true_counts.at("C1"), 400U);
  EXPECT_TRUE(r4.skipped_counts.empty());
}

TEST(Census, AntisymmetryExcludedCount) {
  const auto t4 = verify_transitivity_theorem(Population::all(4));
  const auto a4 = verify_antisymmetry_theorem(Population::all(4));
  EXPECT_TRUE(a4.ok());
  EXPECT_EQ(a4.evaluated, t4.true_counts.at("C1"));
  EXPECT_EQ(a4.excluded, 4096U - t4.true_counts.at("C1"));
  EXPECT_EQ(a4.true_counts.at("D1"), 83U);
}

TEST(Census, MergeIsOrderIndependent) {
  const auto whole = verify_propositions(Population::sampled(5, 3, 300));
  RunOptions four;
  four.workers = 4;
  EXPECT_EQ(verify_propositions(Population::sampled(5, 3, 300), four), whole);
  EXPECT_TRUE(whole.ok());
}

TEST(Search, EmptyRequestReturnsFirstSpace) {
  const auto r = find_separating({}, {});
  ASSERT_TRUE(r.space);
  EXPECT_EQ(r.examined, 1U);
  EXPECT_EQ(*r.space, linear_order_space(1));
}

TEST(Search, IntervalTransitiveImpliesPointTransitive) {
  SearchBudget budget;
  budget.max_spaces = 20000;
  const auto r = find_separating({"interval-transitive"}, {"point-transitive"}, budget);
  EXPECT_FALSE(r.space);
  EXPECT_EQ(r.examined, 20000U);
}

// Frozen regression value: first point-transitive space that is not
// interval-transitive under the default budget.
TEST(Search, PointTransitiveButNotIntervalTransitive) {
  const auto r = find_separating({"point-transitive"}, {"interval-transitive"});
  ASSERT_TRUE(r.space);
  EXPECT_EQ(r.phase, "sampled");
  EXPECT_EQ(r.n, 5U);
  EXPECT_EQ(r.index, 39U);
  EXPECT_EQ(r.examined, 4146U);
  EXPECT_TRUE(is_point_transitive(*r.space));
  EXPECT_FALSE(is_interval_transitive(*r.space));
}

TEST(Search, RejectsUnknownNames) {
  EXPECT_THROW(find_separating({"bogus"}, {}), std::invalid_argument);
}

}  // namespace
}  // namespace ispace
