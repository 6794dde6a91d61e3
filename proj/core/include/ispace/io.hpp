#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "ispace/models.hpp"
#include "ispace/point_set.hpp"
#include "ispace/space.hpp"

namespace ispace {

// Three line-oriented text formats. Blank lines and lines starting with '#'
// are ignored; tokens are separated by whitespace.
//
//   ispace v1          graph v1           qpoints v1
//   points N           vertices N         dim D
//   triple a x c       edge u v           point n1/d1 ... nD/dD
//
// An ispace file lists betweenness triples; the loader adds every triple the
// axioms force and the middle-symmetric partner of each listed triple, and
// rejects a listed triple <x,y,x> with y != x.

enum class FileFormat { IntervalTable, Graph, RationalPoints };

std::string_view to_string(FileFormat format);

/// Header and body of one space file, before any model is built.
struct SpaceFile {
  FileFormat format = FileFormat::IntervalTable;
  int version = 1;
  /// Points, vertices, or the number of `point` records.
  std::size_t points = 0;
  /// qpoints only.
  std::size_t dimension = 0;
  /// `triple` or `edge` records as read.
  std::vector<std::vector<std::size_t>> records;
  /// qpoints only.
  std::vector<RationalPoint> coordinates;
};

/// Throws ParseError with the offending line.
SpaceFile parse_space_file(std::string_view text);

/// Builds the space through the matching model builder. Axiom violations in
/// an ispace file raise AxiomError; model errors raise ModelError.
FiniteIntervalSpace build_space(const SpaceFile& file);

FiniteIntervalSpace parse_space(std::string_view text);
FiniteIntervalSpace load(const std::filesystem::path& path);
/// Reads and parses a file without building the space.
SpaceFile load_file(const std::filesystem::path& path);

/// Minimal ispace text: one triple per middle-symmetric pair with pairwise
/// distinct ids, listed with a < c. Reloading it gives back the same table.
std::string write_ispace(const FiniteIntervalSpace& space);

/// "0,2,5" or "-" for the empty set. Throws ParseError.
PointSet parse_point_set(std::string_view text);

}  // namespace ispace
