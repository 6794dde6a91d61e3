#include "ispace/properties.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>

#include "ispace/closure.hpp"
#include "ispace/error.hpp"

namespace ispace {
namespace {

// (u, w, v) with u, v in s, w in [u,v] and w outside s.
std::optional<std::array<PointId, 3>> convexity_breach(const FiniteIntervalSpace& space, PointSet s) {
  for (PointId u : s) {
    for (PointId v : s - PointSet::universe(u + 1)) {
      const PointSet escape = space.interval_unchecked(u, v) - s;
      if (!escape.empty()) return std::array<PointId, 3>{u, *escape.begin(), v};
    }
  }
  return std::nullopt;
}

PointSet pair_interval_with(const FiniteIntervalSpace& space, PointSet lhs, PointId c) {
  PointSet out;
  for (PointId a : lhs) out |= space.interval_unchecked(a, c);
  return out;
}

// [{a},[b,c]] and [[a,b],{c}].
std::pair<PointSet, PointSet> peano_sides(const FiniteIntervalSpace& space, PointId a, PointId b, PointId c) {
  return {pair_interval_with(space, space.interval_unchecked(b, c), a),
          pair_interval_with(space, space.interval_unchecked(a, b), c)};
}

bool subset_enumeration_allowed(const FiniteIntervalSpace& space, const Limits& limits) {
  return space.size() <= limits.subset_enumeration && space.size() <= Limits::unlimited().subset_enumeration;
}

Outcome skipped_enumeration(const FiniteIntervalSpace& space, const Limits& limits) {
  return Outcome::skipped("n = " + std::to_string(space.size()) + " exceeds subset enumeration cap " +
                          std::to_string(limits.subset_enumeration));
}

// Memoized [A,B] for every pair of subsets, indexed by mask.
class SubsetIntervalTable {
 public:
  explicit SubsetIntervalTable(const FiniteIntervalSpace& space)
      : n_(space.size()), count_(std::size_t{1} << n_), table_(count_ * count_) {
    // Rows for singletons {a} first, then [A,B] = [A - {low}, B] | [{low}, B].
    std::vector<PointSet::Bits> single(n_ * count_);
    for (PointId a = 0; a < n_; ++a) {
      PointSet::Bits* row = &single[a * count_];
      for (std::size_t b = 1; b < count_; ++b) {
        const auto low = static_cast<PointId>(std::countr_zero(b));
        row[b] = row[b & (b - 1)] | space.interval_unchecked(a, low).bits();
      }
    }
    for (std::size_t a = 1; a < count_; ++a) {
      const auto low = static_cast<PointId>(std::countr_zero(a));
      const PointSet::Bits* rest = &table_[(a & (a - 1)) * count_];
      const PointSet::Bits* row = &single[low * count_];
      PointSet::Bits* out = &table_[a * count_];
      for (std::size_t b = 0; b < count_; ++b) out[b] = rest[b] | row[b];
    }
  }

  std::size_t count() const { return count_; }
  std::size_t at(std::size_t a, std::size_t b) const { return static_cast<std::size_t>(table_[a * count_ + b]); }

 private:
  std::size_t n_;
  std::size_t count_;
  std::vector<PointSet::Bits> table_;
};

bool subset_triples_allowed(const FiniteIntervalSpace& space, const Limits& limits) {
  return space.size() <= limits.subset_triples && space.size() <= Limits::unlimited().subset_triples;
}

Outcome skipped_triples(const FiniteIntervalSpace& space, const Limits& limits) {
  return Outcome::skipped("n = " + std::to_string(space.size()) + " exceeds subset-triple cap " +
                          std::to_string(limits.subset_triples));
}

Outcome associativity(const SubsetIntervalTable& t) {
  const std::size_t m = t.count();
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      const std::size_t ab = t.at(a, b);
      for (std::size_t c = 0; c < m; ++c) {
        if (t.at(ab, c) != t.at(a, t.at(b, c))) {
          return Outcome::fail({{}, {PointSet::from_bits(a), PointSet::from_bits(b), PointSet::from_bits(c)}, {}});
        }
      }
    }
  }
  return Outcome::pass();
}

Outcome commutativity(const SubsetIntervalTable& t) {
  const std::size_t m = t.count();
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = a + 1; b < m; ++b) {
      if (t.at(a, b) != t.at(b, a)) {
        return Outcome::fail({{}, {PointSet::from_bits(a), PointSet::from_bits(b)}, "commutativity"});
      }
    }
  }
  return Outcome::pass();
}

Outcome with_kind(Outcome o, std::string kind) {
  if (o.witness) o.witness->kind = std::move(kind);
  return o;
}

// --- Transitivity conditions --------------------------------------------

Outcome condition_c2(const FiniteIntervalSpace& space) {
  const std::size_t n = space.size();
  for (PointId a = 0; a < n; ++a)
    for (PointId b = 0; b < n; ++b)
      for (PointId c = 0; c < n; ++c) {
        const auto [left, right] = peano_sides(space, a, b, c);
        const PointSet extra = left - right;
        if (!extra.empty()) return Outcome::fail({{a, b, c, *extra.begin()}, {}, {}});
      }
  return Outcome::pass();
}

Outcome condition_c3(const FiniteIntervalSpace& space) {
  const std::size_t n = space.size();
  for (PointId a = 0; a < n; ++a)
    for (PointId b = 0; b < n; ++b)
      for (PointId c = 0; c < n; ++c) {
        const auto [left, right] = peano_sides(space, a, b, c);
        const PointSet diff = (left - right) | (right - left);
        if (!diff.empty()) return Outcome::fail({{a, b, c, *diff.begin()}, {}, {}});
      }
  return Outcome::pass();
}

Outcome condition_c4(const FiniteIntervalSpace& space, const Limits& limits) {
  if (!subset_triples_allowed(space, limits)) return skipped_triples(space, limits);
  return associativity(SubsetIntervalTable(space));
}

Outcome condition_c5(const FiniteIntervalSpace& space, const Limits& limits) {
  if (!subset_triples_allowed(space, limits)) return skipped_triples(space, limits);
  const SubsetIntervalTable t(space);
  Outcome comm = commutativity(t);
  if (!comm.holds()) return comm;
  return with_kind(associativity(t), "associativity");
}

Outcome condition_c6(const FiniteIntervalSpace& space, const std::vector<PointSet>* convex) {
  Outcome ic = interval_convexity(space);
  if (!ic.holds()) return with_kind(std::move(ic), "interval-convex");
  for (PointSet a_set : *convex) {
    if (auto bad = base_set_order(space, a_set).transitivity_violation()) {
      return Outcome::fail({{(*bad)[0], (*bad)[1], (*bad)[2]}, {a_set}, "convex-base"});
    }
  }
  return Outcome::pass();
}

Outcome condition_c7(const FiniteIntervalSpace& space, const std::vector<PointSet>& convex) {
  for (PointSet a_set : convex) {
    for (PointSet b_set : convex) {
      const PointSet between = set_interval(space, a_set, b_set);
      if (auto bad = convexity_breach(space, between)) {
        return Outcome::fail({{(*bad)[0], (*bad)[1], (*bad)[2]}, {a_set, b_set}, {}});
      }
    }
  }
  return Outcome::pass();
}

Outcome condition_c8(const FiniteIntervalSpace& space) {
  const std::size_t n = space.size();
  for (PointId a = 0; a < n; ++a)
    for (PointId b = 0; b < n; ++b)
      for (PointId c = 0; c < n; ++c) {
        const PointSet s = pair_interval_with(space, space.interval_unchecked(a, b), c);
        if (auto bad = convexity_breach(space, s)) {
          return Outcome::fail({{a, b, c, (*bad)[0], (*bad)[1], (*bad)[2]}, {}, {}});
        }
      }
  return Outcome::pass();
}

Outcome condition_c9(const FiniteIntervalSpace& space) {
  const std::size_t n = space.size();
  for (PointId a = 0; a < n; ++a)
    for (PointId b = 0; b < n; ++b)
      for (PointId c = 0; c < n; ++c) {
        const PointSet s = pair_interval_with(space, space.interval_unchecked(a, b), c);
        const PointSet co = hull(space, PointSet{a, b, c});
        const PointSet diff = (s - co) | (co - s);
        if (!diff.empty()) return Outcome::fail({{a, b, c, *diff.begin()}, {}, {}});
      }
  return Outcome::pass();
}

// --- Antisymmetry conditions --------------------------------------------

Outcome condition_d3(const FiniteIntervalSpace& space, const std::vector<PointSet>& convex) {
  for (PointSet a_set : convex) {
    if (auto bad = base_set_order(space, a_set).antisymmetry_violation(space.universe() - a_set)) {
      return Outcome::fail({{(*bad)[0], (*bad)[1]}, {a_set}, {}});
    }
  }
  return Outcome::pass();
}

}  // namespace

Outcome point_transitivity(const FiniteIntervalSpace& space) {
  for (PointId a = 0; a < space.size(); ++a) {
    if (auto bad = base_point_order(space, a).transitivity_violation()) {
      return Outcome::fail({{a, (*bad)[0], (*bad)[1], (*bad)[2]}, {}, {}});
    }
  }
  return Outcome::pass();
}

bool is_point_transitive(const FiniteIntervalSpace& space) { return point_transitivity(space).holds(); }

Outcome point_antisymmetry(const FiniteIntervalSpace& space) {
  for (PointId a = 0; a < space.size(); ++a) {
    if (auto bad = base_point_order(space, a).antisymmetry_violation(space.universe())) {
      return Outcome::fail({{a, (*bad)[0], (*bad)[1]}, {}, {}});
    }
  }
  return Outcome::pass();
}

bool is_point_antisymmetric(const FiniteIntervalSpace& space) { return point_antisymmetry(space).holds(); }

Outcome interval_transitivity(const FiniteIntervalSpace& space) {
  const std::size_t n = space.size();
  for (PointId a = 0; a < n; ++a) {
    for (PointId b = 0; b < n; ++b) {
      if (auto bad = base_set_order(space, space.interval_unchecked(a, b)).transitivity_violation()) {
        return Outcome::fail({{a, b, (*bad)[0], (*bad)[1], (*bad)[2]}, {}, {}});
      }
    }
  }
  return Outcome::pass();
}

bool is_interval_transitive(const FiniteIntervalSpace& space) { return interval_transitivity(space).holds(); }

Outcome interval_convexity(const FiniteIntervalSpace& space) {
  const std::size_t n = space.size();
  for (PointId a = 0; a < n; ++a) {
    for (PointId b = 0; b < n; ++b) {
      if (auto bad = convexity_breach(space, space.interval_unchecked(a, b))) {
        return Outcome::fail({{a, b, (*bad)[0], (*bad)[1], (*bad)[2]}, {}, {}});
      }
    }
  }
  return Outcome::pass();
}

bool is_interval_convex(const FiniteIntervalSpace& space) { return interval_convexity(space).holds(); }

Outcome stiffness(const FiniteIntervalSpace& space) {
  const std::size_t n = space.size();
  for (PointId a = 0; a < n; ++a) {
    for (PointId b = 0; b < n; ++b) {
      for (PointId c : space.ahead_unchecked(a, b) - PointSet::singleton(b)) {
        const PointSet bad = space.ahead_unchecked(b, c) - space.ahead_unchecked(a, b);
        if (!bad.empty()) return Outcome::fail({{a, b, c, *bad.begin()}, {}, {}});
      }
    }
  }
  return Outcome::pass();
}

bool is_stiff(const FiniteIntervalSpace& space) { return stiffness(space).holds(); }

Outcome interval_antisymmetry(const FiniteIntervalSpace& space) {
  const std::size_t n = space.size();
  for (PointId a = 0; a < n; ++a) {
    for (PointId b = 0; b < n; ++b) {
      const PointSet base = space.interval_unchecked(a, b);
      if (auto bad = base_set_order(space, base).antisymmetry_violation(space.universe() - base)) {
        return Outcome::fail({{a, b, (*bad)[0], (*bad)[1]}, {}, {}});
      }
    }
  }
  return Outcome::pass();
}

bool is_interval_antisymmetric(const FiniteIntervalSpace& space) { return interval_antisymmetry(space).holds(); }

std::string_view to_string(Theorem theorem) {
  return theorem == Theorem::Transitivity ? "transitivity" : "antisymmetry";
}

std::string ConditionVector::label(Theorem theorem, std::size_t index) {
  return (theorem == Theorem::Transitivity ? "C" : "D") + std::to_string(index + 1);
}

bool ConditionVector::consistent() const {
  std::optional<bool> seen;
  for (const Outcome& o : values) {
    if (!o.evaluated()) continue;
    if (!seen) seen = o.holds();
    if (*seen != o.holds()) return false;
  }
  return true;
}

std::string ConditionVector::signature() const {
  std::string out;
  for (const Outcome& o : values) out += o.status == Status::True ? '1' : o.status == Status::False ? '0' : '-';
  return out;
}

ConditionVector transitivity_conditions(const FiniteIntervalSpace& space, const Limits& limits) {
  ConditionVector v;
  v.theorem = Theorem::Transitivity;
  const bool enumerate = subset_enumeration_allowed(space, limits);
  std::vector<PointSet> convex;
  if (enumerate) convex = convex_sets(space, limits);

  std::optional<SubsetIntervalTable> table;
  if (subset_triples_allowed(space, limits)) table.emplace(space);

  v.values.push_back(interval_transitivity(space));
  v.values.push_back(condition_c2(space));
  v.values.push_back(condition_c3(space));
  if (table) {
    Outcome assoc = associativity(*table);
    v.values.push_back(assoc);
    Outcome comm = commutativity(*table);
    v.values.push_back(comm.holds() ? with_kind(assoc, "associativity") : comm);
  } else {
    v.values.push_back(skipped_triples(space, limits));
    v.values.push_back(skipped_triples(space, limits));
  }
  v.values.push_back(enumerate ? condition_c6(space, &convex) : skipped_enumeration(space, limits));
  v.values.push_back(enumerate ? condition_c7(space, convex) : skipped_enumeration(space, limits));
  v.values.push_back(condition_c8(space));
  v.values.push_back(condition_c9(space));
  return v;
}

ConditionVector antisymmetry_conditions(const FiniteIntervalSpace& space, const AntisymmetryOptions& options) {
  ConditionVector v;
  v.theorem = Theorem::Antisymmetry;
  v.hypothesis_met = is_interval_transitive(space);
  if (!v.hypothesis_met && !options.allow_non_interval_transitive) {
    throw HypothesisViolated("antisymmetry conditions require an interval-transitive space");
  }
  v.values.push_back(interval_antisymmetry(space));
  v.values.push_back(stiffness(space));
  if (subset_enumeration_allowed(space, options.limits)) {
    const ClosureSystem cs = convex_closure_system(space, options.limits);
    v.values.push_back(condition_d3(space, cs.closed_sets()));
    v.values.push_back(antiexchange(cs));
    v.values.push_back(antimatroid(cs).outcome());
  } else {
    for (int i = 0; i < 3; ++i) v.values.push_back(skipped_enumeration(space, options.limits));
  }
  return v;
}

Outcome base_interval_transitivity_prop(const FiniteIntervalSpace& space) {
  const std::size_t n = space.size();
  for (PointId a = 0; a < n; ++a) {
    for (PointId b = 0; b < n; ++b) {
      if (!base_set_order(space, space.interval_unchecked(a, b)).is_transitive()) continue;
      for (PointId c = 0; c < n; ++c) {
        const auto [left, right] = peano_sides(space, a, b, c);
        const PointSet extra = left - right;
        if (!extra.empty()) return Outcome::fail({{a, b, c, *extra.begin()}, {}, {}});
      }
    }
  }
  return Outcome::pass();
}

bool check_base_interval_transitivity_prop(const FiniteIntervalSpace& space) {
  return base_interval_transitivity_prop(space).holds();
}

Outcome base_interval_antisymmetry_prop(const FiniteIntervalSpace& space) {
  if (!is_point_transitive(space)) return Outcome::pass();
  const std::size_t n = space.size();
  for (PointId a = 0; a < n; ++a) {
    for (PointId d = 0; d < n; ++d) {
      const PointSet base = space.interval_unchecked(a, d);
      if (!base_set_order(space, base).is_antisymmetric_on(space.universe() - base)) continue;
      for (PointId b = 0; b < n; ++b) {
        for (PointId c = 0; c < n; ++c) {
          if (b != c && space.holds_unchecked(a, b, c) && space.holds_unchecked(b, c, d) &&
              !space.holds_unchecked(a, b, d)) {
            return Outcome::fail({{a, b, c, d}, {}, {}});
          }
        }
      }
    }
  }
  return Outcome::pass();
}

bool check_base_interval_antisymmetry_prop(const FiniteIntervalSpace& space) {
  return base_interval_antisymmetry_prop(space).holds();
}

Outcome stiff_implies_convex_antisymmetry(const FiniteIntervalSpace& space, const Limits& limits) {
  if (!is_stiff(space)) return Outcome::pass();
  return condition_d3(space, convex_sets(space, limits));
}

bool check_stiff_implies_convex_antisymmetry(const FiniteIntervalSpace& space, const Limits& limits) {
  return stiff_implies_convex_antisymmetry(space, limits).holds();
}

// --- Registry -------------------------------------------------------------

namespace {

using Evaluator = std::function<Outcome(const FiniteIntervalSpace&, const Limits&)>;

Outcome closure_outcome(const FiniteIntervalSpace& space, const Limits& limits,
                        const std::function<Outcome(const ClosureSystem&)>& f) {
  if (!subset_enumeration_allowed(space, limits)) return skipped_enumeration(space, limits);
  return f(convex_closure_system(space, limits));
}

const std::vector<std::pair<std::string, Evaluator>>& registry() {
  static const std::vector<std::pair<std::string, Evaluator>> entries = {
      {"point-transitive", [](const auto& s, const auto&) { return point_transitivity(s); }},
      {"point-antisymmetric", [](const auto& s, const auto&) { return point_antisymmetry(s); }},
      {"interval-transitive", [](const auto& s, const auto&) { return interval_transitivity(s); }},
      {"interval-convex", [](const auto& s, const auto&) { return interval_convexity(s); }},
      {"stiff", [](const auto& s, const auto&) { return stiffness(s); }},
      {"interval-antisymmetric", [](const auto& s, const auto&) { return interval_antisymmetry(s); }},
      {"antiexchange", [](const auto& s, const auto& l) { return closure_outcome(s, l, antiexchange); }},
      {"combinatorial", [](const auto& s, const auto& l) { return closure_outcome(s, l, combinatorial); }},
      {"antimatroid",
       [](const auto& s, const auto& l) {
         return closure_outcome(s, l, [](const ClosureSystem& cs) { return antimatroid(cs).outcome(); });
       }},
      {"C1", [](const auto& s, const auto&) { return interval_transitivity(s); }},
      {"C2", [](const auto& s, const auto&) { return condition_c2(s); }},
      {"C3", [](const auto& s, const auto&) { return condition_c3(s); }},
      {"C4", [](const auto& s, const auto& l) { return condition_c4(s, l); }},
      {"C5", [](const auto& s, const auto& l) { return condition_c5(s, l); }},
      {"C6",
       [](const auto& s, const auto& l) {
         if (!subset_enumeration_allowed(s, l)) return skipped_enumeration(s, l);
         const auto convex = convex_sets(s, l);
         return condition_c6(s, &convex);
       }},
      {"C7",
       [](const auto& s, const auto& l) {
         if (!subset_enumeration_allowed(s, l)) return skipped_enumeration(s, l);
         return condition_c7(s, convex_sets(s, l));
       }},
      {"C8", [](const auto& s, const auto&) { return condition_c8(s); }},
      {"C9", [](const auto& s, const auto&) { return condition_c9(s); }},
      {"D1", [](const auto& s, const auto&) { return interval_antisymmetry(s); }},
      {"D2", [](const auto& s, const auto&) { return stiffness(s); }},
      {"D3",
       [](const auto& s, const auto& l) {
         if (!subset_enumeration_allowed(s, l)) return skipped_enumeration(s, l);
         return condition_d3(s, convex_sets(s, l));
       }},
      {"D4", [](const auto& s, const auto& l) { return closure_outcome(s, l, antiexchange); }},
      {"D5",
       [](const auto& s, const auto& l) {
         return closure_outcome(s, l, [](const ClosureSystem& cs) { return antimatroid(cs).outcome(); });
       }},
      {"prop-base-interval-transitivity",
       [](const auto& s, const auto&) { return base_interval_transitivity_prop(s); }},
      {"prop-base-interval-antisymmetry",
       [](const auto& s, const auto&) { return base_interval_antisymmetry_prop(s); }},
      {"prop-stiff-convex-antisymmetry",
       [](const auto& s, const auto& l) {
         if (!subset_enumeration_allowed(s, l)) return skipped_enumeration(s, l);
         return stiff_implies_convex_antisymmetry(s, l);
       }},
      {"prop-entailment-reverse",
       [](const auto& s, const auto& l) {
         if (!subset_enumeration_allowed(s, l)) return skipped_enumeration(s, l);
         return entailment_reverse_prop(s, l);
       }},
      {"prop-combinatorial", [](const auto& s, const auto& l) { return closure_outcome(s, l, combinatorial); }},
  };
  return entries;
}

}  // namespace

const std::vector<std::string>& property_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, f] : registry()) out.push_back(name);
    return out;
  }();
  return names;
}

Outcome evaluate_property(const std::string& name, const FiniteIntervalSpace& space, const Limits& limits) {
  for (const auto& [key, f] : registry()) {
    if (key == name) return f(space, limits);
  }
  throw std::invalid_argument("unknown property '" + name + "'");
}

PropertyReport check_properties(const FiniteIntervalSpace& space, const std::vector<std::string>& names,
                                const Limits& limits) {
  PropertyReport report;
  for (const std::string& name : names) report.entries.emplace(name, evaluate_property(name, space, limits));
  const bool wants_d = std::any_of(names.begin(), names.end(), [](const std::string& s) { return !s.empty() && s[0] == 'D'; });
  if (wants_d && !is_interval_transitive(space)) {
    report.notes.push_back("space is not interval-transitive; D1..D5 are evaluated outside their theorem's hypothesis");
  }
  return report;
}

}  // namespace ispace
