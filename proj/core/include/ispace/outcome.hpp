#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ispace/point_set.hpp"

namespace ispace {

/// A counterexample to a universally quantified condition.
///
/// The layout of `points` and `sets` is fixed per condition and documented
/// next to the checker that produces it. `kind` distinguishes the sub-clause
/// that failed when a condition is a conjunction.
struct Witness {
  std::vector<PointId> points;
  std::vector<PointSet> sets;
  std::string kind;

  std::string to_string() const;
  friend bool operator==(const Witness&, const Witness&) = default;
};

enum class Status { True, False, Skipped };

std::string_view to_string(Status status);

/// Result of evaluating one condition on one space.
struct Outcome {
  Status status = Status::True;
  /// Present exactly when status == False.
  std::optional<Witness> witness;
  /// Reason for Skipped.
  std::string note;

  static Outcome pass() { return {}; }
  static Outcome fail(Witness w) { return {Status::False, std::move(w), {}}; }
  static Outcome skipped(std::string why) { return {Status::Skipped, std::nullopt, std::move(why)}; }

  bool holds() const { return status == Status::True; }
  bool fails() const { return status == Status::False; }
  bool evaluated() const { return status != Status::Skipped; }
};

}  // namespace ispace
