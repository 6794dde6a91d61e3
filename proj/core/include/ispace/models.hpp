#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "ispace/space.hpp"

namespace ispace {

/// Exact rational, always in lowest terms with a positive denominator.
using Rational = boost::multiprecision::cpp_rational;

/// Parses "p" or "p/q" with decimal integers; throws ModelError on bad input or q == 0.
Rational parse_rational(std::string_view text);

/// A point of Q^d.
class RationalPoint {
 public:
  RationalPoint() = default;
  explicit RationalPoint(std::vector<Rational> coords) : coords_(std::move(coords)) {}
  RationalPoint(std::initializer_list<long long> coords);

  std::size_t dimension() const { return coords_.size(); }
  const std::vector<Rational>& coords() const { return coords_; }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }

  std::string to_string() const;

  friend bool operator==(const RationalPoint&, const RationalPoint&) = default;

 private:
  std::vector<Rational> coords_;
};

/// The vector interval relation: y = x + t (z - x) for some rational t in [0, 1].
/// Throws ModelError when the dimensions differ.
bool rational_between(const RationalPoint& x, const RationalPoint& y, const RationalPoint& z);

/// Interval space of a finite point sample of Q^d under the vector interval
/// relation. Point i of the space is points[i]. Throws ModelError on an
/// empty list, mixed dimensions or duplicate points.
FiniteIntervalSpace vector_space_on_points(std::span<const RationalPoint> points);

/// Simple undirected graph on vertices [0, n).
class Graph {
 public:
  explicit Graph(std::size_t vertices);

  /// Throws ModelError on loops, repeated edges or out-of-range endpoints.
  void add_edge(std::size_t u, std::size_t v);

  std::size_t vertex_count() const { return adjacency_.size(); }
  const std::vector<std::size_t>& neighbors(std::size_t v) const { return adjacency_[v]; }
  const std::vector<std::pair<std::size_t, std::size_t>>& edges() const { return edges_; }

  /// Unweighted shortest-path distances; unreachable pairs hold SIZE_MAX.
  std::vector<std::vector<std::size_t>> distances() const;
  bool connected() const;

 private:
  std::vector<std::vector<std::size_t>> adjacency_;
  std::vector<std::pair<std::size_t, std::size_t>> edges_;
};

Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph complete_graph(std::size_t n);
/// Parts {0..p-1} and {p..p+q-1}.
Graph complete_bipartite_graph(std::size_t p, std::size_t q);

/// <a,x,c> iff d(a,x) + d(x,c) = d(a,c). Throws ModelError on a disconnected graph.
FiniteIntervalSpace geodesic_space_from_graph(const Graph& graph);

/// The chain 0 < 1 < ... < n-1: <a,x,c> iff x lies between a and c.
FiniteIntervalSpace linear_order_space(std::size_t n);

}  // namespace ispace
