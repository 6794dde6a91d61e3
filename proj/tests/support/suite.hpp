#pragma once

// Named spaces shared by the unit tests and the acceptance runner.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "ispace/models.hpp"
#include "ispace/search.hpp"
#include "ispace/space.hpp"

namespace ispace::suite {

struct Named {
  std::string name;
  FiniteIntervalSpace space;
};

inline FiniteIntervalSpace l3() { return linear_order_space(3); }

/// K2,3 with parts {0,1} and {2,3,4}.
inline FiniteIntervalSpace k23() { return geodesic_space_from_graph(complete_bipartite_graph(2, 3)); }

/// Three points with both orbits <0,1,2> and <1,2,0> set.
inline FiniteIntervalSpace non_stiff3() {
  BetweennessTable t(3);
  t.add_forced();
  t.set(0, 1, 2);
  t.set(2, 1, 0);
  t.set(1, 2, 0);
  t.set(0, 2, 1);
  return FiniteIntervalSpace::from_table(t);
}

inline std::vector<RationalPoint> triangle_points() {
  return {RationalPoint{0, 0}, RationalPoint{4, 0}, RationalPoint{0, 4}, RationalPoint{1, 1}, RationalPoint{2, 0}};
}

inline FiniteIntervalSpace triangle() { return vector_space_on_points(triangle_points()); }

/// `count` distinct points in Q^dim. Each point is either a fresh point with
/// small rational coordinates or an affine combination of two earlier points,
/// so collinear triples occur often.
inline std::vector<RationalPoint> random_configuration(std::size_t dim, std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto pick = [&](long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); };
  std::vector<RationalPoint> out;
  while (out.size() < count) {
    std::vector<Rational> coords;
    if (out.size() >= 2 && pick(0, 2) > 0) {
      const auto& p = out[static_cast<std::size_t>(pick(0, static_cast<long>(out.size()) - 1))];
      const auto& q = out[static_cast<std::size_t>(pick(0, static_cast<long>(out.size()) - 1))];
      const Rational t(pick(-4, 8), pick(1, 4));
      for (std::size_t i = 0; i < dim; ++i) coords.push_back(p[i] + t * (q[i] - p[i]));
    } else {
      for (std::size_t i = 0; i < dim; ++i) coords.emplace_back(pick(-6, 6), pick(1, 3));
    }
    RationalPoint candidate(std::move(coords));
    bool fresh = true;
    for (const auto& p : out) fresh = fresh && !(p == candidate);
    if (fresh) out.push_back(std::move(candidate));
  }
  return out;
}

/// Fixed regression suite: chains, graph models, the named small spaces,
/// rational samples and seeded random spaces, all with n <= 8.
inline std::vector<Named> regression_suite() {
  std::vector<Named> out;
  for (std::size_t n = 1; n <= 8; ++n) out.push_back({"L" + std::to_string(n), linear_order_space(n)});
  for (std::size_t n = 4; n <= 8; ++n) out.push_back({"C" + std::to_string(n), geodesic_space_from_graph(cycle_graph(n))});
  for (std::size_t n = 2; n <= 6; ++n) out.push_back({"K" + std::to_string(n), geodesic_space_from_graph(complete_graph(n))});
  out.push_back({"K2,3", k23()});
  out.push_back({"K3,3", geodesic_space_from_graph(complete_bipartite_graph(3, 3))});
  out.push_back({"K2,4", geodesic_space_from_graph(complete_bipartite_graph(2, 4))});
  out.push_back({"K1,5", geodesic_space_from_graph(complete_bipartite_graph(1, 5))});
  {
    Graph g(7);  // two triangles joined by a path
    for (auto [u, v] : {std::pair{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 4}}) g.add_edge(u, v);
    out.push_back({"bowtie-path", geodesic_space_from_graph(g)});
  }
  out.push_back({"non-stiff-3", non_stiff3()});
  out.push_back({"triangle", triangle()});
  for (std::uint64_t s = 0; s < 3; ++s) {
    out.push_back({"Q2-" + std::to_string(s), vector_space_on_points(random_configuration(2, 6, 100 + s))});
    out.push_back({"Q3-" + std::to_string(s), vector_space_on_points(random_configuration(3, 7, 200 + s))});
  }
  for (std::size_t n = 5; n <= 8; ++n) {
    for (double density : {0.05, 0.2, 0.5, 0.9}) {
      const std::uint64_t seed = 1000 * n + static_cast<std::uint64_t>(density * 100);
      out.push_back({"random-" + std::to_string(n) + "-" + std::to_string(seed), random_space(n, seed, density)});
    }
  }
  return out;
}

}  // namespace ispace::suite
