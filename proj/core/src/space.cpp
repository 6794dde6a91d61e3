#include "ispace/space.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <tuple>

namespace ispace {

BetweennessTable::BetweennessTable(std::size_t n) : n_(n), rel_(n * n * n, 0) {}

std::size_t BetweennessTable::index(PointId a, PointId x, PointId c) const {
  if (a >= n_ || x >= n_ || c >= n_) throw std::out_of_range("betweenness table index out of range");
  return (a * n_ + x) * n_ + c;
}

void BetweennessTable::add_forced() {
  for (PointId a = 0; a < n_; ++a) {
    for (PointId x = 0; x < n_; ++x) {
      set(x, x, a);
      set(a, x, x);
      if (x != a) set(a, x, a, false);
    }
  }
}

std::string_view to_string(Axiom axiom) {
  switch (axiom) {
    case Axiom::Reflexivity:
      return "reflexivity";
    case Axiom::MiddleSymmetry:
      return "middle-symmetry";
    case Axiom::Thinness:
      return "thinness";
  }
  return "unknown";
}

bool BinaryRelation::empty() const {
  return std::all_of(rows_.begin(), rows_.end(), [](PointSet r) { return r.empty(); });
}

bool BinaryRelation::is_reflexive() const {
  for (PointId x = 0; x < rows_.size(); ++x) {
    if (!rows_[x].contains(x)) return false;
  }
  return true;
}

std::optional<std::array<PointId, 3>> BinaryRelation::transitivity_violation() const {
  for (PointId x = 0; x < rows_.size(); ++x) {
    PointSet reach;
    for (PointId y : rows_[x]) reach |= rows_[y];
    PointSet missing = reach - rows_[x];
    if (missing.empty()) continue;
    // Smallest y first, then smallest z for that y.
    for (PointId y : rows_[x]) {
      PointSet bad = rows_[y] - rows_[x];
      if (!bad.empty()) return std::array<PointId, 3>{x, y, *bad.begin()};
    }
  }
  return std::nullopt;
}

std::optional<std::array<PointId, 2>> BinaryRelation::antisymmetry_violation(PointSet domain) const {
  for (PointId x : domain) {
    if (x >= rows_.size()) break;
    for (PointId y : rows_[x] & domain) {
      if (y != x && rows_[y].contains(x)) return std::array<PointId, 2>{x, y};
    }
  }
  return std::nullopt;
}

bool BinaryRelation::is_partial_order() const {
  return is_reflexive() && is_transitive() && is_antisymmetric_on(PointSet::universe(rows_.size()));
}

namespace {

std::string describe(const std::vector<AxiomViolation>& violations) {
  std::string out = "interval-space axioms violated:";
  const std::size_t shown = std::min<std::size_t>(violations.size(), 8);
  for (std::size_t i = 0; i < shown; ++i) {
    const auto& v = violations[i];
    out += " " + std::string(to_string(v.axiom)) + " (" + std::to_string(v.witness[0]) + "," +
           std::to_string(v.witness[1]) + "," + std::to_string(v.witness[2]) + ")";
  }
  if (shown < violations.size()) out += " ... (" + std::to_string(violations.size()) + " total)";
  return out;
}

}  // namespace

AxiomError::AxiomError(std::vector<AxiomViolation> violations)
    : Error(describe(violations)), violations_(std::move(violations)) {}

ValidationResult validate(const BetweennessTable& table) {
  const std::size_t n = table.size();
  if (n == 0) throw ModelError("an interval space needs at least one point");
  if (n > kMaxPoints) throw ModelError("at most " + std::to_string(kMaxPoints) + " points are supported");

  ValidationResult result;
  auto& out = result.violations;
  for (PointId a = 0; a < n; ++a) {
    for (PointId x = 0; x < n; ++x) {
      if (!table.get(a, x, x)) out.push_back({Axiom::Reflexivity, {a, x, x}});
      if (!table.get(x, x, a) && a != x) out.push_back({Axiom::Reflexivity, {x, x, a}});
    }
  }
  for (PointId x = 0; x < n; ++x) {
    for (PointId a = 0; a < n; ++a) {
      for (PointId z = 0; z < n; ++z) {
        if (table.get(x, a, z) && !table.get(z, a, x)) out.push_back({Axiom::MiddleSymmetry, {x, a, z}});
      }
    }
  }
  for (PointId x = 0; x < n; ++x) {
    for (PointId y = 0; y < n; ++y) {
      if (y != x && table.get(x, y, x)) out.push_back({Axiom::Thinness, {x, y, x}});
    }
  }
  std::sort(out.begin(), out.end(), [](const AxiomViolation& l, const AxiomViolation& r) {
    return std::tie(l.axiom, l.witness) < std::tie(r.axiom, r.witness);
  });
  if (out.empty()) result.space = FiniteIntervalSpace(table);
  return result;
}

FiniteIntervalSpace::FiniteIntervalSpace(const BetweennessTable& table)
    : n_(table.size()), intervals_(n_ * n_), ahead_(n_ * n_) {
  for (PointId a = 0; a < n_; ++a) {
    for (PointId x = 0; x < n_; ++x) {
      for (PointId c = 0; c < n_; ++c) {
        if (!table.get(a, x, c)) continue;
        intervals_[a * n_ + c].insert(x);
        ahead_[a * n_ + x].insert(c);
      }
    }
  }
}

FiniteIntervalSpace FiniteIntervalSpace::from_table(const BetweennessTable& table) {
  ValidationResult result = validate(table);
  if (!result.ok()) throw AxiomError(std::move(result.violations));
  return std::move(*result.space);
}

void FiniteIntervalSpace::check_point(PointId p) const {
  if (p >= n_) {
    throw std::out_of_range("point " + std::to_string(p) + " outside universe of size " + std::to_string(n_));
  }
}

void FiniteIntervalSpace::check_subset(PointSet s) const {
  if (!s.subset_of(universe())) {
    throw std::out_of_range("set " + s.to_string() + " not contained in universe of size " + std::to_string(n_));
  }
}

bool FiniteIntervalSpace::holds(PointId a, PointId x, PointId c) const {
  check_point(a);
  check_point(x);
  check_point(c);
  return holds_unchecked(a, x, c);
}

PointSet FiniteIntervalSpace::interval(PointId a, PointId c) const {
  check_point(a);
  check_point(c);
  return interval_unchecked(a, c);
}

BetweennessTable FiniteIntervalSpace::table() const {
  BetweennessTable t(n_);
  for (PointId a = 0; a < n_; ++a) {
    for (PointId c = 0; c < n_; ++c) {
      for (PointId x : intervals_[a * n_ + c]) t.set(a, x, c);
    }
  }
  return t;
}

bool holds(const FiniteIntervalSpace& space, PointId a, PointId x, PointId c) { return space.holds(a, x, c); }

PointSet interval(const FiniteIntervalSpace& space, PointId a, PointId c) { return space.interval(a, c); }

bool set_between(const FiniteIntervalSpace& space, PointSet a_set, PointId x, PointSet c_set) {
  space.check_point(x);
  space.check_subset(a_set);
  space.check_subset(c_set);
  for (PointId a : a_set) {
    if (!(space.ahead_unchecked(a, x) & c_set).empty()) return true;
  }
  return false;
}

PointSet set_interval(const FiniteIntervalSpace& space, PointSet a_set, PointSet c_set) {
  space.check_subset(a_set);
  space.check_subset(c_set);
  PointSet out;
  for (PointId a : a_set) {
    for (PointId c : c_set) out |= space.interval_unchecked(a, c);
  }
  return out;
}

bool is_convex(const FiniteIntervalSpace& space, PointSet s) {
  space.check_subset(s);
  for (PointId a : s) {
    // [a,c] = [c,a], so pairs with c > a suffice.
    for (PointId c : s - PointSet::universe(a + 1)) {
      if (!space.interval_unchecked(a, c).subset_of(s)) return false;
    }
  }
  return true;
}

PointSet hull(const FiniteIntervalSpace& space, PointSet a_set) {
  space.check_subset(a_set);
  PointSet current = a_set;
  for (;;) {
    PointSet next = current | set_interval(space, current, current);
    if (next == current) return current;
    current = next;
  }
}

std::vector<PointSet> convex_sets(const FiniteIntervalSpace& space, const Limits& limits) {
  const std::size_t n = space.size();
  if (n > limits.subset_enumeration || n > Limits::unlimited().subset_enumeration) {
    throw CapExceeded("subset enumeration over " + std::to_string(n) + " points exceeds cap of " +
                      std::to_string(limits.subset_enumeration));
  }
  std::vector<PointSet> out;
  const std::uint64_t count = std::uint64_t{1} << n;
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    PointSet s = PointSet::from_bits(mask);
    if (is_convex(space, s)) out.push_back(s);
  }
  return out;
}

BinaryRelation base_point_order(const FiniteIntervalSpace& space, PointId a) {
  space.check_point(a);
  return base_set_order(space, PointSet::singleton(a));
}

BinaryRelation base_set_order(const FiniteIntervalSpace& space, PointSet a_set) {
  space.check_subset(a_set);
  std::vector<PointSet> rows(space.size());
  for (PointId x = 0; x < space.size(); ++x) {
    for (PointId a : a_set) rows[x] |= space.ahead_unchecked(a, x);
  }
  return BinaryRelation(std::move(rows));
}

FiniteIntervalSpace restrict(const FiniteIntervalSpace& space, PointSet s) {
  space.check_subset(s);
  if (s.empty()) throw ModelError("cannot restrict a space to the empty set");
  const std::vector<PointId> ids = s.to_vector();
  BetweennessTable t(ids.size());
  for (PointId i = 0; i < ids.size(); ++i) {
    for (PointId j = 0; j < ids.size(); ++j) {
      for (PointId k = 0; k < ids.size(); ++k) {
        if (space.holds_unchecked(ids[i], ids[j], ids[k])) t.set(i, j, k);
      }
    }
  }
  return FiniteIntervalSpace::from_table(t);
}

}  // namespace ispace
