#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "ispace/limits.hpp"
#include "ispace/outcome.hpp"
#include "ispace/space.hpp"

namespace ispace {

// Checkers return the lexicographically smallest counterexample they meet.
// The witness layout of each checker is given in its comment; "points" are
// listed in the order of the quantifiers.

/// <a,x,y> and <a,y,z> imply <a,x,z>. Witness points: (a, x, y, z).
Outcome point_transitivity(const FiniteIntervalSpace& space);
bool is_point_transitive(const FiniteIntervalSpace& space);

/// <a,x,y> and <a,y,x> imply x = y, over all of X. Witness points: (a, x, y).
Outcome point_antisymmetry(const FiniteIntervalSpace& space);
bool is_point_antisymmetric(const FiniteIntervalSpace& space);

/// Every base-interval order <[a,b],.,.> is transitive. Witness points: (a, b, x, y, z).
Outcome interval_transitivity(const FiniteIntervalSpace& space);
bool is_interval_transitive(const FiniteIntervalSpace& space);

/// Every [a,b] is convex. Witness points: (a, b, u, w, v) with u, v in [a,b],
/// w in [u,v] and w outside [a,b].
Outcome interval_convexity(const FiniteIntervalSpace& space);
bool is_interval_convex(const FiniteIntervalSpace& space);

/// <a,b,c>, b != c and <b,c,d> imply <a,b,d>. Witness points: (a, b, c, d).
Outcome stiffness(const FiniteIntervalSpace& space);
bool is_stiff(const FiniteIntervalSpace& space);

/// Every <[a,b],.,.> is antisymmetric on X \ [a,b]. Witness points: (a, b, x, y).
Outcome interval_antisymmetry(const FiniteIntervalSpace& space);
bool is_interval_antisymmetric(const FiniteIntervalSpace& space);

enum class Theorem { Transitivity, Antisymmetry };

std::string_view to_string(Theorem theorem);

/// The conditions of one of the two equivalence theorems, in order.
struct ConditionVector {
  Theorem theorem = Theorem::Transitivity;
  std::vector<Outcome> values;
  /// False only for an antisymmetry vector computed on a space that is not
  /// interval-transitive (allowed by override).
  bool hypothesis_met = true;

  /// "C1".."C9" or "D1".."D5".
  static std::string label(Theorem theorem, std::size_t index);
  std::string label(std::size_t index) const { return label(theorem, index); }

  /// True when every evaluated value agrees.
  bool consistent() const;
  /// One character per condition: '1', '0' or '-' (skipped).
  std::string signature() const;
};

/// C1..C9:
///  C1 interval-transitive (witness as interval_transitivity)
///  C2 [{a},[b,c]] within [[a,b],{c}]; points (a, b, c, x), x on the left only
///  C3 [{a},[b,c]] = [[a,b],{c}]; points (a, b, c, x), x in exactly one side
///  C4 [[A,B],C] = [A,[B,C]] for all subsets; sets (A, B, C)
///  C5 C4 and [A,B] = [B,A]; sets (A, B, C) kind "associativity" or (A, B) kind "commutativity"
///  C6 interval-convex and every convex A has transitive <A,.,.>; kind "interval-convex"
///     (witness as interval_convexity) or kind "convex-base" with sets (A), points (x, y, z)
///  C7 [A,B] convex for convex A, B; sets (A, B), points (u, w, v) as in interval_convexity
///  C8 [[a,b],{c}] convex; points (a, b, c, u, w, v)
///  C9 co({a,b,c}) = [[a,b],{c}]; points (a, b, c, x), x in exactly one side
/// C4/C5 are Skipped above limits.subset_triples, C6/C7 above limits.subset_enumeration.
ConditionVector transitivity_conditions(const FiniteIntervalSpace& space, const Limits& limits = {});

struct AntisymmetryOptions {
  /// Evaluate even when the space is not interval-transitive.
  bool allow_non_interval_transitive = false;
  Limits limits;
};

/// D1..D5:
///  D1 interval-antisymmetric (witness as interval_antisymmetry)
///  D2 stiff (witness as stiffness)
///  D3 every convex A has <A,.,.> antisymmetric on X \ A; sets (A), points (x, y)
///  D4 convex sets form an antiexchange space (witness as closure antiexchange)
///  D5 convex sets form an antimatroid (witness from the failing conjunct)
/// Throws HypothesisViolated on a space that is not interval-transitive
/// unless overridden; D3..D5 are Skipped above limits.subset_enumeration.
ConditionVector antisymmetry_conditions(const FiniteIntervalSpace& space, const AntisymmetryOptions& options = {});

/// Whenever <[a,b],.,.> is transitive, [{a},[b,c]] lies within [[a,b],{c}]
/// for every c. Witness points: (a, b, c, x).
Outcome base_interval_transitivity_prop(const FiniteIntervalSpace& space);
bool check_base_interval_transitivity_prop(const FiniteIntervalSpace& space);

/// On a point-transitive space, whenever <[a,d],.,.> is antisymmetric on
/// X \ [a,d], the stiffness implication holds for that a and d. Vacuous when
/// the space is not point-transitive. Witness points: (a, b, c, d).
Outcome base_interval_antisymmetry_prop(const FiniteIntervalSpace& space);
bool check_base_interval_antisymmetry_prop(const FiniteIntervalSpace& space);

/// A stiff space has <A,.,.> antisymmetric on X \ A for every convex A.
/// Vacuous when not stiff. Witness: sets (A), points (x, y).
Outcome stiff_implies_convex_antisymmetry(const FiniteIntervalSpace& space, const Limits& limits = {});
bool check_stiff_implies_convex_antisymmetry(const FiniteIntervalSpace& space, const Limits& limits = {});

/// Every named property plus both condition vectors for one space.
struct PropertyReport {
  std::map<std::string, Outcome> entries;
  /// Free-form remarks, e.g. that the antisymmetry vector ran without its hypothesis.
  std::vector<std::string> notes;

  bool flag(const std::string& name) const { return entries.at(name).holds(); }
};

/// Names understood by evaluate_property and accepted by the search module.
const std::vector<std::string>& property_names();

/// Evaluates one property by name. Throws std::invalid_argument for unknown names.
/// Antisymmetry conditions D1..D5 are evaluated without the interval-transitivity hypothesis.
Outcome evaluate_property(const std::string& name, const FiniteIntervalSpace& space, const Limits& limits = {});

/// Every registered property on one space.
PropertyReport check_properties(const FiniteIntervalSpace& space, const std::vector<std::string>& names,
                                 const Limits& limits = {});

}  // namespace ispace
