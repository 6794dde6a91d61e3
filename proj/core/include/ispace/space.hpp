#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "ispace/error.hpp"
#include "ispace/limits.hpp"
#include "ispace/point_set.hpp"

namespace ispace {

/// A raw ternary relation on n labeled points. May violate the axioms.
class BetweennessTable {
 public:
  BetweennessTable() = default;
  /// All-false table on n points.
  explicit BetweennessTable(std::size_t n);

  std::size_t size() const { return n_; }
  bool get(PointId a, PointId x, PointId c) const { return rel_[index(a, x, c)] != 0; }
  void set(PointId a, PointId x, PointId c, bool value = true) { rel_[index(a, x, c)] = value ? 1 : 0; }

  /// Sets every entry the axioms force: <x,x,a> and <a,x,x> true, <x,y,x> false for y != x.
  void add_forced();

  friend bool operator==(const BetweennessTable&, const BetweennessTable&) = default;

 private:
  std::size_t index(PointId a, PointId x, PointId c) const;

  std::size_t n_ = 0;
  std::vector<unsigned char> rel_;
};

enum class Axiom { Reflexivity, MiddleSymmetry, Thinness };

std::string_view to_string(Axiom axiom);

struct AxiomViolation {
  Axiom axiom;
  /// (a, x, c) such that the entry <a,x,c> falsifies the axiom.
  std::array<PointId, 3> witness;

  friend bool operator==(const AxiomViolation&, const AxiomViolation&) = default;
};

/// A binary relation on [0, n), stored as one row mask per point.
class BinaryRelation {
 public:
  BinaryRelation() = default;
  explicit BinaryRelation(std::size_t n) : rows_(n) {}
  explicit BinaryRelation(std::vector<PointSet> rows) : rows_(std::move(rows)) {}

  std::size_t size() const { return rows_.size(); }
  bool operator()(PointId x, PointId y) const { return rows_[x].contains(y); }
  void set(PointId x, PointId y) { rows_[x].insert(y); }
  /// { y | R(x, y) }
  PointSet row(PointId x) const { return rows_[x]; }

  bool empty() const;
  bool is_reflexive() const;

  /// First (x, y, z) in lexicographic order with R(x,y), R(y,z) and not R(x,z).
  std::optional<std::array<PointId, 3>> transitivity_violation() const;
  bool is_transitive() const { return !transitivity_violation(); }

  /// First (x, y) in lexicographic order, both in `domain`, x != y, with R(x,y) and R(y,x).
  std::optional<std::array<PointId, 2>> antisymmetry_violation(PointSet domain) const;
  bool is_antisymmetric_on(PointSet domain) const { return !antisymmetry_violation(domain); }

  bool is_partial_order() const;

  friend bool operator==(const BinaryRelation&, const BinaryRelation&) = default;

 private:
  std::vector<PointSet> rows_;
};

class FiniteIntervalSpace;
struct ValidationResult;

/// Raised by FiniteIntervalSpace::from_table when the axioms fail.
class AxiomError : public Error {
 public:
  explicit AxiomError(std::vector<AxiomViolation> violations);
  const std::vector<AxiomViolation>& violations() const { return violations_; }

 private:
  std::vector<AxiomViolation> violations_;
};

/// An immutable, validated interval space on the points [0, n).
///
/// The relation is stored as the n*n interval table [a,c]; every other query
/// is derived from it. Copies are cheap enough for tests and share nothing.
class FiniteIntervalSpace {
 public:
  /// Validates the table; throws AxiomError listing every violation.
  static FiniteIntervalSpace from_table(const BetweennessTable& table);

  std::size_t size() const { return n_; }
  PointSet universe() const { return PointSet::universe(n_); }

  /// <a, x, c>. Throws std::out_of_range for ids outside [0, n).
  bool holds(PointId a, PointId x, PointId c) const;
  /// [a, c] = { x | <a,x,c> }. Throws std::out_of_range.
  PointSet interval(PointId a, PointId c) const;

  /// Unchecked accessors for the inner loops of the checkers.
  PointSet interval_unchecked(PointId a, PointId c) const { return intervals_[a * n_ + c]; }
  bool holds_unchecked(PointId a, PointId x, PointId c) const { return intervals_[a * n_ + c].contains(x); }
  /// { y | <a, x, y> }: the points that x is "in front of" seen from a.
  PointSet ahead_unchecked(PointId a, PointId x) const { return ahead_[a * n_ + x]; }

  /// Throws std::out_of_range if `s` has a member outside [0, n).
  void check_subset(PointSet s) const;
  void check_point(PointId p) const;

  BetweennessTable table() const;

  friend bool operator==(const FiniteIntervalSpace& a, const FiniteIntervalSpace& b) {
    return a.n_ == b.n_ && a.intervals_ == b.intervals_;
  }

 private:
  explicit FiniteIntervalSpace(const BetweennessTable& table);
  friend ValidationResult validate(const BetweennessTable& table);

  std::size_t n_ = 0;
  std::vector<PointSet> intervals_;
  std::vector<PointSet> ahead_;
};

/// Outcome of validate(): either a space or every axiom violation found.
struct ValidationResult {
  std::optional<FiniteIntervalSpace> space;
  std::vector<AxiomViolation> violations;

  bool ok() const { return space.has_value(); }
};

/// Checks the three interval-space axioms. Throws ModelError for n == 0 or
/// n > kMaxPoints. Violations are listed in (axiom, witness) order.
ValidationResult validate(const BetweennessTable& table);

bool holds(const FiniteIntervalSpace& space, PointId a, PointId x, PointId c);
PointSet interval(const FiniteIntervalSpace& space, PointId a, PointId c);

/// <A, x, C>: some a in A and c in C have <a,x,c>.
bool set_between(const FiniteIntervalSpace& space, PointSet a_set, PointId x, PointSet c_set);

/// [A, C] = { x | <A, x, C> }.
PointSet set_interval(const FiniteIntervalSpace& space, PointSet a_set, PointSet c_set);

/// [S, S] is contained in S.
bool is_convex(const FiniteIntervalSpace& space, PointSet s);

/// Smallest convex superset, by iterating S -> S | [S,S] to a fixpoint.
PointSet hull(const FiniteIntervalSpace& space, PointSet a_set);

/// Every convex subset in ascending mask order. Gated by limits.subset_enumeration.
std::vector<PointSet> convex_sets(const FiniteIntervalSpace& space, const Limits& limits = {});

/// R(x, y) <=> <a, x, y>.
BinaryRelation base_point_order(const FiniteIntervalSpace& space, PointId a);

/// R(x, y) <=> exists a in A with <a, x, y>.
BinaryRelation base_set_order(const FiniteIntervalSpace& space, PointSet a_set);

/// Induced space on the members of `s`, relabeled 0..|s|-1 in ascending order.
FiniteIntervalSpace restrict(const FiniteIntervalSpace& space, PointSet s);

}  // namespace ispace
