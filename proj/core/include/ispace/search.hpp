#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ispace/limits.hpp"
#include "ispace/space.hpp"

namespace ispace {

/// Parametrizes the valid spaces on n points by one bit per free orbit.
///
/// The axioms fix every triple with a repeated id; the remaining triples
/// (a,b,c) with pairwise distinct ids come in middle-symmetric pairs
/// {(a,b,c),(c,b,a)}. Each pair is one orbit, stored with a < c.
class FreeOrbitEncoding {
 public:
  explicit FreeOrbitEncoding(std::size_t n);

  std::size_t points() const { return n_; }
  std::size_t orbit_count() const { return orbits_.size(); }
  const std::vector<std::array<PointId, 3>>& orbits() const { return orbits_; }

  FiniteIntervalSpace decode(const std::vector<bool>& bits) const;
  std::vector<bool> encode(const FiniteIntervalSpace& space) const;

  /// Bit k of the index is orbit k. Requires orbit_count() <= 64.
  FiniteIntervalSpace decode_index(std::uint64_t index) const;
  std::uint64_t encode_index(const FiniteIntervalSpace& space) const;

 private:
  std::size_t n_;
  std::vector<std::array<PointId, 3>> orbits_;
};

/// Largest n enumerated without allow_large.
inline constexpr std::size_t kExhaustiveCap = 4;
/// Largest n whose spaces can be indexed by 64 bits at all.
inline constexpr std::size_t kIndexableCap = 6;

/// 2^(n(n-1)(n-2)/2). Requires n <= kIndexableCap.
std::uint64_t space_count(std::size_t n);

/// Throws CapExceeded when n > kExhaustiveCap and !allow_large, or n > kIndexableCap.
void check_exhaustive(std::size_t n, bool allow_large);

/// Every valid labeled space on n points, each once, in ascending index order.
void for_each_space(std::size_t n, const std::function<void(std::uint64_t, const FiniteIntervalSpace&)>& visit,
                    bool allow_large = false);
std::vector<FiniteIntervalSpace> enumerate_spaces(std::size_t n, bool allow_large = false);

/// Each free orbit is set independently with probability `density`, drawn from
/// a generator seeded by `seed` alone. Throws std::invalid_argument for
/// density outside [0, 1].
FiniteIntervalSpace random_space(std::size_t n, std::uint64_t seed, double density);

/// A reproducible list of spaces: all spaces on n points, or `count` seeded samples.
///
/// Sample i is random_space(n, seed + i, density_i), where density_i is the
/// fixed density if one is given and otherwise a uniform draw derived from
/// seed + i. Each sample depends on its own index only.
struct Population {
  std::size_t n = 3;
  bool exhaustive = true;
  std::uint64_t seed = 0;
  std::uint64_t count = 0;
  std::optional<double> density;

  static Population all(std::size_t n) { return {n, true, 0, 0, std::nullopt}; }
  static Population sampled(std::size_t n, std::uint64_t seed, std::uint64_t count,
                            std::optional<double> density = std::nullopt) {
    return {n, false, seed, count, density};
  }

  std::uint64_t size() const;
  FiniteIntervalSpace at(std::uint64_t index) const;
  double density_at(std::uint64_t index) const;
  std::string describe() const;
};

struct RunOptions {
  std::size_t workers = 1;
  Limits limits;
  /// Permits exhaustive populations above kExhaustiveCap.
  bool allow_large = false;
};

struct CensusViolation {
  std::uint64_t index = 0;
  /// Condition signature (theorems) or the failing proposition names.
  std::string detail;

  friend bool operator==(const CensusViolation&, const CensusViolation&) = default;
};

/// Aggregated outcome of a verification run. Merging is associative and
/// commutative, so results do not depend on how the population was split.
struct CensusReport {
  std::string subject;
  std::size_t n = 0;
  std::string population;
  /// Spaces visited.
  std::uint64_t spaces = 0;
  /// Spaces meeting the hypothesis (all of them for the transitivity theorem).
  std::uint64_t evaluated = 0;
  /// Spaces excluded by the hypothesis.
  std::uint64_t excluded = 0;
  /// Per condition: how many evaluated spaces satisfy it.
  std::map<std::string, std::uint64_t> true_counts;
  /// Per condition: how many evaluations were skipped by a cap.
  std::map<std::string, std::uint64_t> skipped_counts;
  /// Signature ("1111..." etc.) frequencies.
  std::map<std::string, std::uint64_t> signatures;
  /// Sorted by index.
  std::vector<CensusViolation> violations;

  void merge(const CensusReport& other);
  bool ok() const { return violations.empty(); }

  friend bool operator==(const CensusReport&, const CensusReport&) = default;
};

/// Computes all nine transitivity conditions on every space and lists the
/// spaces where the evaluated ones disagree.
CensusReport verify_transitivity_theorem(const Population& population, const RunOptions& options = {});

/// Computes the five antisymmetry conditions on every interval-transitive
/// space; other spaces are counted in `excluded`.
CensusReport verify_antisymmetry_theorem(const Population& population, const RunOptions& options = {});

/// Checks the five universally valid propositions (both base-interval
/// propositions, stiff-implies-convex-antisymmetry, entailment reversal and
/// the combinatorial property) on every space.
CensusReport verify_propositions(const Population& population, const RunOptions& options = {});

struct SearchBudget {
  /// Reproducible bound on the number of candidates examined.
  std::uint64_t max_spaces = 100000;
  /// Optional wall-clock bound, checked between rounds; not reproducible.
  std::optional<double> max_seconds;
  std::uint64_t seed = 0;
  /// Exhaustive phase covers n = 1..exhaustive_max_n.
  std::size_t exhaustive_max_n = kExhaustiveCap;
  /// Sampled phase draws from Population::sampled(sample_n, seed, ...).
  std::size_t sample_n = 5;
};

struct SearchResult {
  std::optional<FiniteIntervalSpace> space;
  /// Candidates examined up to and including the hit.
  std::uint64_t examined = 0;
  /// Where the hit came from: "exhaustive" or "sampled".
  std::string phase;
  std::size_t n = 0;
  std::uint64_t index = 0;
};

/// First space, in the fixed candidate order (exhaustive n ascending, then
/// seeded samples), that has every property in `want` and fails every
/// property in `want_not`. A Skipped evaluation counts as neither. Throws
/// std::invalid_argument for unknown property names.
SearchResult find_separating(const std::vector<std::string>& want, const std::vector<std::string>& want_not,
                             const SearchBudget& budget = {}, const RunOptions& options = {});

}  // namespace ispace
