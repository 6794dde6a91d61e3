#pragma once

#include <cstddef>
#include <vector>

#include "ispace/limits.hpp"
#include "ispace/outcome.hpp"
#include "ispace/point_set.hpp"
#include "ispace/space.hpp"

namespace ispace {

/// A Moore family on [0, n): contains the universe and is closed under
/// nonempty intersection. The empty set may or may not be a member.
class ClosureSystem {
 public:
  /// Builds a standalone system. Duplicates are dropped. Throws ModelError if
  /// a member leaves [0, n), the universe is missing, or some pairwise
  /// intersection is not a member.
  ClosureSystem(std::size_t n, std::vector<PointSet> closed_sets);

  std::size_t size() const { return n_; }
  PointSet universe() const { return PointSet::universe(n_); }
  /// Members in ascending mask order.
  const std::vector<PointSet>& closed_sets() const { return closed_; }
  bool is_closed(PointSet s) const;
  bool empty_is_closed() const { return !closed_.empty() && closed_.front().empty(); }

 private:
  std::size_t n_;
  std::vector<PointSet> closed_;
};

/// The convex sets of a space as a closure system. Gated by limits.subset_enumeration.
ClosureSystem convex_closure_system(const FiniteIntervalSpace& space, const Limits& limits = {});

/// Intersection of every closed superset of `a_set`.
PointSet cl(const ClosureSystem& cs, PointSet a_set);

enum class BaseSet { MustBeClosed, AnySubset };

/// x |-_A y, i.e. y lies in cl(A + x). Throws HypothesisViolated when A is
/// not closed, unless `base` is AnySubset.
bool entails(const ClosureSystem& cs, PointSet a_set, PointId x, PointId y, BaseSet base = BaseSet::MustBeClosed);

/// For an interval-transitive space and a nonempty convex A: c |-_A b holds
/// exactly when <A, b, c>, for every b, c.
///
/// Throws HypothesisViolated if the space is not interval-transitive, A is
/// not convex, or A is empty. For A = {} the two relations differ on the
/// diagonal (cl({c}) = {c} while [{}, {c}] = {}), so the statement needs A
/// to be nonempty.
bool entailment_is_reverse_of_between(const FiniteIntervalSpace& space, PointSet a_set, const Limits& limits = {});
bool entailment_is_reverse_of_between(const FiniteIntervalSpace& space, const ClosureSystem& convex, PointSet a_set);

/// Runs entailment_is_reverse_of_between over every nonempty convex set.
/// Vacuously true when the space is not interval-transitive.
/// Witness: sets = (A), points = (b, c).
Outcome entailment_reverse_prop(const FiniteIntervalSpace& space, const Limits& limits = {});

/// For every closed A, |-_A is antisymmetric on X \ A.
/// Witness: sets = (A), points = (x, y) with x != y outside A, each entailing the other.
Outcome antiexchange(const ClosureSystem& cs);
bool is_antiexchange(const ClosureSystem& cs);

/// Every union of a nonempty chain of closed sets is closed. On a finite
/// system this always holds; the check is real and compares each pair of
/// comparable members.
/// Witness: sets = (A, B) with A a subset of B and A | B not closed.
Outcome combinatorial(const ClosureSystem& cs);
bool is_combinatorial(const ClosureSystem& cs);

struct AntimatroidReport {
  Outcome combinatorial;
  Outcome antiexchange;
  bool empty_closed = false;

  bool holds() const { return combinatorial.holds() && antiexchange.holds() && empty_closed; }
  /// Folds the three conjuncts into one outcome, witness from the first failing one.
  Outcome outcome() const;
};

AntimatroidReport antimatroid(const ClosureSystem& cs);
bool is_antimatroid(const ClosureSystem& cs);

/// The convex sets of the space form a combinatorial closure system.
bool verify_combinatorial_prop(const FiniteIntervalSpace& space, const Limits& limits = {});

}  // namespace ispace
