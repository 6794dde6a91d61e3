#include "ispace/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "ispace/error.hpp"

namespace ispace {

namespace {

std::vector<std::string_view> tokenize(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

std::size_t parse_count(std::string_view token, std::size_t line, std::string_view what) {
  std::size_t value = 0;
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw ParseError(line, "expected a non-negative integer for " + std::string(what) + ", got '" +
                               std::string(token) + "'");
  }
  return value;
}

struct Line {
  std::size_t number;
  std::vector<std::string_view> tokens;
};

std::vector<Line> significant_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = text.find('\n', pos);
    const std::string_view raw = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
    ++number;
    auto tokens = tokenize(raw);
    if (!tokens.empty() && tokens.front().front() != '#') out.push_back({number, std::move(tokens)});
    if (eol == std::string_view::npos) break;
    pos = eol + 1;
  }
  return out;
}

void expect_arity(const Line& line, std::size_t arity) {
  if (line.tokens.size() != arity) {
    throw ParseError(line.number, "'" + std::string(line.tokens.front()) + "' takes " + std::to_string(arity - 1) +
                                      " argument(s)");
  }
}

}  // namespace

std::string_view to_string(FileFormat format) {
  switch (format) {
    case FileFormat::IntervalTable:
      return "ispace";
    case FileFormat::Graph:
      return "graph";
    case FileFormat::RationalPoints:
      return "qpoints";
  }
  return "unknown";
}

SpaceFile parse_space_file(std::string_view text) {
  const auto lines = significant_lines(text);
  if (lines.empty()) throw ParseError(0, "empty file");

  SpaceFile file;
  const Line& header = lines.front();
  const std::string_view tag = header.tokens.front();
  if (tag == "ispace") {
    file.format = FileFormat::IntervalTable;
  } else if (tag == "graph") {
    file.format = FileFormat::Graph;
  } else if (tag == "qpoints") {
    file.format = FileFormat::RationalPoints;
  } else {
    throw ParseError(header.number, "unknown format tag '" + std::string(tag) + "'");
  }
  expect_arity(header, 2);
  if (header.tokens[1] != "v1") {
    throw ParseError(header.number, "unsupported version '" + std::string(header.tokens[1]) + "'");
  }

  if (lines.size() < 2) throw ParseError(header.number, "missing size line");
  const Line& sizing = lines[1];
  const std::string_view size_key = file.format == FileFormat::IntervalTable ? "points"
                                    : file.format == FileFormat::Graph        ? "vertices"
                                                                              : "dim";
  if (sizing.tokens.front() != size_key) {
    throw ParseError(sizing.number, "expected '" + std::string(size_key) + " <count>'");
  }
  expect_arity(sizing, 2);
  const std::size_t count = parse_count(sizing.tokens[1], sizing.number, size_key);
  if (count == 0) throw ParseError(sizing.number, std::string(size_key) + " must be positive");
  if (file.format == FileFormat::RationalPoints) {
    file.dimension = count;
  } else {
    if (count > kMaxPoints) throw ParseError(sizing.number, "at most " + std::to_string(kMaxPoints) + " points");
    file.points = count;
  }

  const std::string_view record_key = file.format == FileFormat::IntervalTable ? "triple"
                                      : file.format == FileFormat::Graph        ? "edge"
                                                                                : "point";
  for (std::size_t i = 2; i < lines.size(); ++i) {
    const Line& line = lines[i];
    if (line.tokens.front() != record_key) {
      throw ParseError(line.number, "unexpected record '" + std::string(line.tokens.front()) + "'");
    }
    if (file.format == FileFormat::RationalPoints) {
      expect_arity(line, file.dimension + 1);
      std::vector<Rational> coords;
      for (std::size_t k = 1; k < line.tokens.size(); ++k) {
        try {
          coords.push_back(parse_rational(line.tokens[k]));
        } catch (const ModelError& e) {
          throw ParseError(line.number, e.what());
        }
      }
      file.coordinates.emplace_back(std::move(coords));
      file.records.push_back({line.number});
      continue;
    }
    const std::size_t arity = file.format == FileFormat::IntervalTable ? 4 : 3;
    expect_arity(line, arity);
    std::vector<std::size_t> ids;
    for (std::size_t k = 1; k < arity; ++k) {
      const std::size_t id = parse_count(line.tokens[k], line.number, "a point id");
      if (id >= file.points) {
        throw ParseError(line.number, "id " + std::to_string(id) + " out of range [0," + std::to_string(file.points) + ")");
      }
      ids.push_back(id);
    }
    if (file.format == FileFormat::IntervalTable && ids[0] == ids[2] && ids[1] != ids[0]) {
      throw ParseError(line.number, "thinness breach: <" + std::to_string(ids[0]) + "," + std::to_string(ids[1]) + "," +
                                        std::to_string(ids[2]) + "> would force " + std::to_string(ids[1]) +
                                        " = " + std::to_string(ids[0]));
    }
    ids.push_back(line.number);
    file.records.push_back(std::move(ids));
  }
  if (file.format == FileFormat::RationalPoints) {
    if (file.coordinates.empty()) throw ParseError(sizing.number, "no points listed");
    if (file.coordinates.size() > kMaxPoints) throw ParseError(0, "at most " + std::to_string(kMaxPoints) + " points");
    file.points = file.coordinates.size();
  }
  return file;
}

FiniteIntervalSpace build_space(const SpaceFile& file) {
  switch (file.format) {
    case FileFormat::IntervalTable: {
      BetweennessTable t(file.points);
      t.add_forced();
      for (const auto& r : file.records) {
        t.set(r[0], r[1], r[2]);
        t.set(r[2], r[1], r[0]);
      }
      return FiniteIntervalSpace::from_table(t);
    }
    case FileFormat::Graph: {
      Graph g(file.points);
      for (const auto& r : file.records) {
        try {
          g.add_edge(r[0], r[1]);
        } catch (const ModelError& e) {
          throw ParseError(r[2], e.what());
        }
      }
      return geodesic_space_from_graph(g);
    }
    case FileFormat::RationalPoints:
      return vector_space_on_points(file.coordinates);
  }
  throw ModelError("unknown file format");
}

FiniteIntervalSpace parse_space(std::string_view text) { return build_space(parse_space_file(text)); }

SpaceFile load_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, "cannot open '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_space_file(buffer.str());
}

FiniteIntervalSpace load(const std::filesystem::path& path) { return build_space(load_file(path)); }

std::string write_ispace(const FiniteIntervalSpace& space) {
  std::string out = "ispace v1\npoints " + std::to_string(space.size()) + "\n";
  for (PointId a = 0; a < space.size(); ++a) {
    for (PointId c = a + 1; c < space.size(); ++c) {
      for (PointId x : space.interval_unchecked(a, c)) {
        if (x == a || x == c) continue;
        out += "triple " + std::to_string(a) + " " + std::to_string(x) + " " + std::to_string(c) + "\n";
      }
    }
  }
  return out;
}

PointSet parse_point_set(std::string_view text) {
  if (text == "-") return {};
  if (text.empty()) throw ParseError(0, "empty point list (write '-' for the empty set)");
  PointSet out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = text.find(',', pos);
    const std::string_view item = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    const std::size_t id = parse_count(item, 0, "a point id");
    if (id >= kMaxPoints) throw ParseError(0, "point id " + std::to_string(id) + " too large");
    out.insert(id);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

}  // namespace ispace
