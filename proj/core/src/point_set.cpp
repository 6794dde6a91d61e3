#include "ispace/point_set.hpp"

#include <stdexcept>

namespace ispace {

PointSet::PointSet(std::initializer_list<PointId> ids) {
  for (PointId id : ids) insert(id);
}

PointSet::PointSet(std::span<const PointId> ids) {
  for (PointId id : ids) insert(id);
}

void PointSet::insert(PointId id) {
  if (id >= kMaxPoints) throw std::out_of_range("point id " + std::to_string(id) + " exceeds PointSet capacity");
  bits_ |= Bits{1} << id;
}

std::vector<PointId> PointSet::to_vector() const { return {begin(), end()}; }

std::string PointSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for (PointId id : *this) {
    if (!first) out += ',';
    out += std::to_string(id);
    first = false;
  }
  out += '}';
  return out;
}

}  // namespace ispace
