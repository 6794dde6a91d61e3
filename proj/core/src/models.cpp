#include "ispace/models.hpp"

#include <algorithm>
#include <limits>
#include <queue>

#include "ispace/error.hpp"

namespace ispace {

namespace {

boost::multiprecision::cpp_int parse_integer(std::string_view text, std::string_view whole) {
  std::string_view digits = text;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char ch) { return ch >= '0' && ch <= '9'; })) {
    throw ModelError("malformed rational '" + std::string(whole) + "'");
  }
  const boost::multiprecision::cpp_int value{std::string(digits)};
  return text.front() == '-' ? boost::multiprecision::cpp_int(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const auto num = parse_integer(text.substr(0, slash), text);
  if (slash == std::string_view::npos) return Rational(num);
  const auto den = parse_integer(text.substr(slash + 1), text);
  if (den == 0) throw ModelError("zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

RationalPoint::RationalPoint(std::initializer_list<long long> coords) {
  for (long long c : coords) coords_.emplace_back(c);
}

std::string RationalPoint::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) out += ',';
    out += coords_[i].str();
  }
  return out + ")";
}

bool rational_between(const RationalPoint& x, const RationalPoint& y, const RationalPoint& z) {
  if (x.dimension() != y.dimension() || x.dimension() != z.dimension()) {
    throw ModelError("dimension mismatch in betweenness test");
  }
  const std::size_t d = x.dimension();
  std::size_t pivot = d;
  for (std::size_t i = 0; i < d; ++i) {
    if (z[i] != x[i]) {
      pivot = i;
      break;
    }
  }
  if (pivot == d) return y == x;

  const Rational t = (y[pivot] - x[pivot]) / (z[pivot] - x[pivot]);
  if (t < 0 || t > 1) return false;
  for (std::size_t i = 0; i < d; ++i) {
    if (y[i] != x[i] + t * (z[i] - x[i])) return false;
  }
  return true;
}

FiniteIntervalSpace vector_space_on_points(std::span<const RationalPoint> points) {
  if (points.empty()) throw ModelError("point list is empty");
  if (points.size() > kMaxPoints) throw ModelError("too many points");
  const std::size_t dim = points.front().dimension();
  for (const auto& p : points) {
    if (p.dimension() != dim) throw ModelError("points have mixed dimensions");
  }
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      if (points[i] == points[j]) {
        throw ModelError("duplicate point " + points[i].to_string() + " at indices " + std::to_string(i) + " and " +
                         std::to_string(j));
      }
    }
  }
  const std::size_t n = points.size();
  BetweennessTable t(n);
  for (PointId a = 0; a < n; ++a)
    for (PointId x = 0; x < n; ++x)
      for (PointId c = 0; c < n; ++c) t.set(a, x, c, rational_between(points[a], points[x], points[c]));
  return FiniteIntervalSpace::from_table(t);
}

Graph::Graph(std::size_t vertices) : adjacency_(vertices) {}

void Graph::add_edge(std::size_t u, std::size_t v) {
  if (u >= vertex_count() || v >= vertex_count()) throw ModelError("edge endpoint out of range");
  if (u == v) throw ModelError("loop at vertex " + std::to_string(u));
  if (std::find(adjacency_[u].begin(), adjacency_[u].end(), v) != adjacency_[u].end()) {
    throw ModelError("repeated edge " + std::to_string(u) + "-" + std::to_string(v));
  }
  adjacency_[u].push_back(v);
  adjacency_[v].push_back(u);
  edges_.emplace_back(std::min(u, v), std::max(u, v));
}

std::vector<std::vector<std::size_t>> Graph::distances() const {
  constexpr auto kUnreached = std::numeric_limits<std::size_t>::max();
  const std::size_t n = vertex_count();
  std::vector<std::vector<std::size_t>> dist(n, std::vector<std::size_t>(n, kUnreached));
  for (std::size_t s = 0; s < n; ++s) {
    auto& row = dist[s];
    std::queue<std::size_t> frontier;
    row[s] = 0;
    frontier.push(s);
    while (!frontier.empty()) {
      const std::size_t u = frontier.front();
      frontier.pop();
      for (std::size_t v : adjacency_[u]) {
        if (row[v] != kUnreached) continue;
        row[v] = row[u] + 1;
        frontier.push(v);
      }
    }
  }
  return dist;
}

bool Graph::connected() const {
  if (vertex_count() == 0) return false;
  const auto dist = distances();
  return std::none_of(dist[0].begin(), dist[0].end(),
                      [](std::size_t d) { return d == std::numeric_limits<std::size_t>::max(); });
}

Graph path_graph(std::size_t n) {
  Graph g(n);
  for (std::size_t i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph cycle_graph(std::size_t n) {
  Graph g = path_graph(n);
  if (n >= 3) g.add_edge(n - 1, 0);
  return g;
}

Graph complete_graph(std::size_t n) {
  Graph g(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

Graph complete_bipartite_graph(std::size_t p, std::size_t q) {
  Graph g(p + q);
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = p; j < p + q; ++j) g.add_edge(i, j);
  return g;
}

FiniteIntervalSpace geodesic_space_from_graph(const Graph& graph) {
  const std::size_t n = graph.vertex_count();
  if (n == 0) throw ModelError("graph has no vertices");
  if (n > kMaxPoints) throw ModelError("too many vertices");
  if (!graph.connected()) throw ModelError("graph is disconnected");
  const auto d = graph.distances();
  BetweennessTable t(n);
  for (PointId a = 0; a < n; ++a)
    for (PointId x = 0; x < n; ++x)
      for (PointId c = 0; c < n; ++c) t.set(a, x, c, d[a][x] + d[x][c] == d[a][c]);
  return FiniteIntervalSpace::from_table(t);
}

FiniteIntervalSpace linear_order_space(std::size_t n) {
  if (n == 0) throw ModelError("linear order needs at least one point");
  if (n > kMaxPoints) throw ModelError("too many points");
  BetweennessTable t(n);
  for (PointId a = 0; a < n; ++a)
    for (PointId x = 0; x < n; ++x)
      for (PointId c = 0; c < n; ++c) t.set(a, x, c, std::min(a, c) <= x && x <= std::max(a, c));
  return FiniteIntervalSpace::from_table(t);
}

}  // namespace ispace
