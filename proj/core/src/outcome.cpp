#include "ispace/outcome.hpp"

namespace ispace {

std::string Witness::to_string() const {
  std::string out;
  if (!kind.empty()) out += kind + ": ";
  out += "points=(";
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(points[i]);
  }
  out += ")";
  if (!sets.empty()) {
    out += " sets=(";
    for (std::size_t i = 0; i < sets.size(); ++i) {
      if (i) out += ',';
      out += sets[i].to_string();
    }
    out += ")";
  }
  return out;
}

std::string_view to_string(Status status) {
  switch (status) {
    case Status::True:
      return "true";
    case Status::False:
      return "false";
    case Status::Skipped:
      return "skipped";
  }
  return "unknown";
}

}  // namespace ispace
