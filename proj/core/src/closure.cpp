#include "ispace/closure.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

#include "ispace/error.hpp"
#include "ispace/properties.hpp"

namespace ispace {

ClosureSystem::ClosureSystem(std::size_t n, std::vector<PointSet> closed_sets) : n_(n), closed_(std::move(closed_sets)) {
  if (n == 0 || n > kMaxPoints) throw ModelError("closure system universe size out of range");
  std::sort(closed_.begin(), closed_.end());
  closed_.erase(std::unique(closed_.begin(), closed_.end()), closed_.end());
  const PointSet x = universe();
  for (PointSet s : closed_) {
    if (!s.subset_of(x)) throw ModelError("closed set " + s.to_string() + " leaves the universe");
  }
  if (!is_closed(x)) throw ModelError("closure system must contain the universe");

  std::unordered_set<PointSet::Bits> members;
  members.reserve(closed_.size() * 2);
  for (PointSet s : closed_) members.insert(s.bits());
  // Closure under pairwise intersection implies closure under every finite
  // nonempty intersection.
  for (std::size_t i = 0; i < closed_.size(); ++i) {
    for (std::size_t j = i + 1; j < closed_.size(); ++j) {
      const PointSet meet = closed_[i] & closed_[j];
      if (!members.contains(meet.bits())) {
        throw ModelError("not intersection-closed: " + closed_[i].to_string() + " & " + closed_[j].to_string() +
                         " = " + meet.to_string());
      }
    }
  }
}

bool ClosureSystem::is_closed(PointSet s) const { return std::binary_search(closed_.begin(), closed_.end(), s); }

ClosureSystem convex_closure_system(const FiniteIntervalSpace& space, const Limits& limits) {
  return ClosureSystem(space.size(), convex_sets(space, limits));
}

PointSet cl(const ClosureSystem& cs, PointSet a_set) {
  if (!a_set.subset_of(cs.universe())) throw std::out_of_range("set " + a_set.to_string() + " leaves the universe");
  PointSet out = cs.universe();
  for (PointSet s : cs.closed_sets()) {
    if (a_set.subset_of(s)) out &= s;
  }
  return out;
}

bool entails(const ClosureSystem& cs, PointSet a_set, PointId x, PointId y, BaseSet base) {
  if (x >= cs.size() || y >= cs.size()) throw std::out_of_range("entailment point outside universe");
  if (base == BaseSet::MustBeClosed && !cs.is_closed(a_set)) {
    throw HypothesisViolated("entailment base " + a_set.to_string() + " is not closed");
  }
  return cl(cs, a_set.with(x)).contains(y);
}

bool entailment_is_reverse_of_between(const FiniteIntervalSpace& space, const ClosureSystem& convex, PointSet a_set) {
  space.check_subset(a_set);
  if (a_set.empty()) throw HypothesisViolated("entailment reversal needs a nonempty base set");
  if (!is_convex(space, a_set)) throw HypothesisViolated("base set " + a_set.to_string() + " is not convex");
  if (!is_interval_transitive(space)) throw HypothesisViolated("space is not interval-transitive");
  const std::size_t n = space.size();
  for (PointId c = 0; c < n; ++c) {
    const PointSet entailed_by_c = cl(convex, a_set.with(c));
    for (PointId b = 0; b < n; ++b) {
      if (entailed_by_c.contains(b) != set_between(space, a_set, b, PointSet::singleton(c))) return false;
    }
  }
  return true;
}

bool entailment_is_reverse_of_between(const FiniteIntervalSpace& space, PointSet a_set, const Limits& limits) {
  return entailment_is_reverse_of_between(space, convex_closure_system(space, limits), a_set);
}

Outcome entailment_reverse_prop(const FiniteIntervalSpace& space, const Limits& limits) {
  if (!is_interval_transitive(space)) return Outcome::pass();
  const ClosureSystem convex = convex_closure_system(space, limits);
  const std::size_t n = space.size();
  for (PointSet a_set : convex.closed_sets()) {
    if (a_set.empty()) continue;
    for (PointId b = 0; b < n; ++b) {
      for (PointId c = 0; c < n; ++c) {
        const bool entailed = cl(convex, a_set.with(c)).contains(b);
        if (entailed != set_between(space, a_set, b, PointSet::singleton(c))) {
          return Outcome::fail({{b, c}, {a_set}, {}});
        }
      }
    }
  }
  return Outcome::pass();
}

Outcome antiexchange(const ClosureSystem& cs) {
  const std::size_t n = cs.size();
  std::vector<PointSet> closure_with(n);
  for (PointSet a_set : cs.closed_sets()) {
    const PointSet outside = cs.universe() - a_set;
    for (PointId x : outside) closure_with[x] = cl(cs, a_set.with(x));
    for (PointId x : outside) {
      for (PointId y : (closure_with[x] & outside) - PointSet::singleton(x)) {
        if (closure_with[y].contains(x)) return Outcome::fail({{x, y}, {a_set}, {}});
      }
    }
  }
  return Outcome::pass();
}

bool is_antiexchange(const ClosureSystem& cs) { return antiexchange(cs).holds(); }

Outcome combinatorial(const ClosureSystem& cs) {
  const auto& sets = cs.closed_sets();
  for (PointSet lo : sets) {
    for (PointSet hi : sets) {
      if (lo.subset_of(hi) && !cs.is_closed(lo | hi)) return Outcome::fail({{}, {lo, hi}, {}});
    }
  }
  return Outcome::pass();
}

bool is_combinatorial(const ClosureSystem& cs) { return combinatorial(cs).holds(); }

Outcome AntimatroidReport::outcome() const {
  if (!combinatorial.holds()) {
    Outcome o = combinatorial;
    if (o.witness) o.witness->kind = "combinatorial";
    return o;
  }
  if (!antiexchange.holds()) {
    Outcome o = antiexchange;
    if (o.witness) o.witness->kind = "antiexchange";
    return o;
  }
  if (!empty_closed) return Outcome::fail({{}, {PointSet{}}, "empty-set-closed"});
  return Outcome::pass();
}

AntimatroidReport antimatroid(const ClosureSystem& cs) {
  return {combinatorial(cs), antiexchange(cs), cs.empty_is_closed()};
}

bool is_antimatroid(const ClosureSystem& cs) { return antimatroid(cs).holds(); }

bool verify_combinatorial_prop(const FiniteIntervalSpace& space, const Limits& limits) {
  return is_combinatorial(convex_closure_system(space, limits));
}

}  // namespace ispace
