#include <gtest/gtest.h>

#include "ispace/error.hpp"
#include "ispace/models.hpp"
#include "ispace/properties.hpp"
#include "support/oracles.hpp"
#include "support/suite.hpp"

namespace ispace {
namespace {

TEST(Rational, Parse) {
  EXPECT_EQ(parse_rational("3"), Rational(3));
  EXPECT_EQ(parse_rational("-6/4"), Rational(-3, 2));
  EXPECT_EQ(parse_rational("+1/3"), Rational(1, 3));
  EXPECT_THROW(parse_rational("1/0"), ModelError);
  EXPECT_THROW(parse_rational("x"), ModelError);
  EXPECT_THROW(parse_rational("1/"), ModelError);
  EXPECT_THROW(parse_rational(""), ModelError);
}

TEST(Rational, Betweenness) {
  EXPECT_TRUE(rational_between({0, 0}, {1, 2}, {2, 4}));
  EXPECT_FALSE(rational_between({0, 0}, {3, 0}, {2, 0}));
  EXPECT_TRUE(rational_between({1, 1}, {1, 1}, {1, 1}));
  EXPECT_FALSE(rational_between({1, 1}, {1, 2}, {1, 1}));
  EXPECT_TRUE(rational_between({0, 0}, {2, 0}, {4, 0}));
  EXPECT_FALSE(rational_between({0, 0}, {1, 1}, {4, 0}));
  EXPECT_THROW(rational_between({0}, {0, 0}, {0}), ModelError);
}

TEST(Rational, BetweennessMatchesOracle) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto pts = suite::random_configuration(2 + seed % 2, 6, seed);
    for (const auto& x : pts)
      for (const auto& y : pts)
        for (const auto& z : pts) ASSERT_EQ(rational_between(x, y, z), oracle::segment_between(x, y, z));
  }
}

TEST(VectorSpace, CollinearPointsFormAChain) {
  const std::vector<RationalPoint> line{RationalPoint{0}, RationalPoint{1}, RationalPoint{2}, RationalPoint{3}};
  EXPECT_EQ(vector_space_on_points(line), linear_order_space(4));
  // Scrambled order along a slanted line in Q^2.
  const std::vector<RationalPoint> slanted{RationalPoint{0, 0}, RationalPoint{2, 1}, RationalPoint{4, 2}};
  EXPECT_EQ(vector_space_on_points(slanted), linear_order_space(3));
}

TEST(VectorSpace, TriangleSample) {
  const auto s = suite::triangle();
  EXPECT_TRUE(holds(s, 0, 4, 1));
  EXPECT_EQ(hull(s, PointSet{0, 1, 2}), (PointSet{0, 1, 2, 4}));
  EXPECT_TRUE(is_point_transitive(s));
  EXPECT_TRUE(is_point_antisymmetric(s));
  EXPECT_TRUE(is_stiff(s));
}

TEST(VectorSpace, RejectsBadInput) {
  EXPECT_THROW(vector_space_on_points(std::vector<RationalPoint>{}), ModelError);
  EXPECT_THROW(vector_space_on_points(std::vector<RationalPoint>{RationalPoint{0}, RationalPoint{0, 1}}), ModelError);
  EXPECT_THROW(vector_space_on_points(std::vector<RationalPoint>{RationalPoint{1}, RationalPoint{1}}), ModelError);
}

TEST(VectorSpace, SmallSamplesAreIntervalConvex) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto pts = suite::random_configuration(2, 2, seed);
    EXPECT_TRUE(is_interval_convex(vector_space_on_points(pts)));
  }
}

TEST(Graph, Construction) {
  Graph g(3);
  g.add_edge(0, 1);
  EXPECT_THROW(g.add_edge(1, 0), ModelError);
  EXPECT_THROW(g.add_edge(2, 2), ModelError);
  EXPECT_THROW(g.add_edge(0, 3), ModelError);
  EXPECT_FALSE(g.connected());
  EXPECT_THROW(geodesic_space_from_graph(g), ModelError);
}

TEST(Graph, DistancesMatchOracle) {
  const std::vector<Graph> graphs{path_graph(6), cycle_graph(7), complete_graph(5), complete_bipartite_graph(2, 3),
                                  complete_bipartite_graph(3, 4)};
  for (const auto& g : graphs) {
    EXPECT_EQ(g.distances(), oracle::distances(g));
  }
}

TEST(Graph, GeodesicSpaceMatchesOracle) {
  for (const auto& g : {cycle_graph(6), complete_bipartite_graph(2, 3), path_graph(5), complete_graph(4)}) {
    const auto d = oracle::distances(g);
    const auto s = geodesic_space_from_graph(g);
    for (PointId a = 0; a < s.size(); ++a)
      for (PointId x = 0; x < s.size(); ++x)
        for (PointId c = 0; c < s.size(); ++c) ASSERT_EQ(holds(s, a, x, c), oracle::geodesic_between(d, a, x, c));
  }
}

TEST(Graph, NamedModels) {
  EXPECT_EQ(geodesic_space_from_graph(path_graph(4)), linear_order_space(4));
  const auto k3 = geodesic_space_from_graph(complete_graph(3));
  for (PointId a = 0; a < 3; ++a)
    for (PointId c = 0; c < 3; ++c) EXPECT_EQ(interval(k3, a, c), (PointSet{a, c}));
  for (const auto& name : property_names()) EXPECT_TRUE(evaluate_property(name, k3).holds()) << name;
  EXPECT_FALSE(is_interval_convex(suite::k23()));
}

TEST(LinearOrder, SmallCases) {
  EXPECT_EQ(linear_order_space(3), suite::l3());
  const auto l5 = linear_order_space(5);
  EXPECT_EQ(interval(l5, 4, 1), (PointSet{1, 2, 3, 4}));
  EXPECT_THROW(linear_order_space(0), ModelError);
}

}  // namespace
}  // namespace ispace
