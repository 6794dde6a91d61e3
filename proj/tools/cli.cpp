#include "cli.hpp"

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ispace/closure.hpp"
#include "ispace/error.hpp"
#include "ispace/io.hpp"
#include "ispace/properties.hpp"
#include "ispace/search.hpp"
#include "ispace/space.hpp"

namespace ispace::cli {

namespace {

using nlohmann::ordered_json;

ordered_json set_json(PointSet s) { return s.to_vector(); }

ordered_json witness_json(const Witness& w) {
  ordered_json j;
  if (!w.kind.empty()) j["kind"] = w.kind;
  j["points"] = w.points;
  ordered_json sets = ordered_json::array();
  for (PointSet s : w.sets) sets.push_back(set_json(s));
  j["sets"] = std::move(sets);
  return j;
}

ordered_json outcome_json(const Outcome& o) {
  ordered_json j;
  j["status"] = std::string(to_string(o.status));
  if (o.witness) j["witness"] = witness_json(*o.witness);
  if (!o.note.empty()) j["note"] = o.note;
  return j;
}

ordered_json census_json(const CensusReport& r) {
  ordered_json j;
  j["subject"] = r.subject;
  j["population"] = r.population;
  j["n"] = r.n;
  j["spaces"] = r.spaces;
  j["evaluated"] = r.evaluated;
  j["excluded"] = r.excluded;
  j["true_counts"] = r.true_counts;
  j["skipped_counts"] = r.skipped_counts;
  j["signatures"] = r.signatures;
  ordered_json violations = ordered_json::array();
  for (const auto& v : r.violations) violations.push_back({{"index", v.index}, {"detail", v.detail}});
  j["violations"] = std::move(violations);
  return j;
}

std::vector<std::string> split_names(const std::string& text) {
  std::vector<std::string> out;
  if (text.empty() || text == "-") return out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::string render_set(const ordered_json& j) {
  std::string out = "{";
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(j[i].get<std::size_t>());
  }
  return out + "}";
}

std::string render_witness(const ordered_json& w) {
  std::string out;
  if (w.contains("kind")) out += w["kind"].get<std::string>() + ": ";
  out += "points=(";
  for (std::size_t i = 0; i < w["points"].size(); ++i) {
    if (i) out += ',';
    out += std::to_string(w["points"][i].get<std::size_t>());
  }
  out += ")";
  if (!w["sets"].empty()) {
    out += " sets=(";
    for (std::size_t i = 0; i < w["sets"].size(); ++i) {
      if (i) out += ',';
      out += render_set(w["sets"][i]);
    }
    out += ")";
  }
  return out;
}

void render_outcomes(std::ostream& out, const ordered_json& flags) {
  std::size_t width = 0;
  for (const auto& [name, v] : flags.items()) width = std::max(width, name.size());
  for (const auto& [name, v] : flags.items()) {
    out << std::left << std::setw(static_cast<int>(width) + 2) << name << v["status"].get<std::string>();
    if (v.contains("witness")) out << "  witness " << render_witness(v["witness"]);
    if (v.contains("note")) out << "  (" << v["note"].get<std::string>() << ")";
    out << '\n';
  }
}

void render_census(std::ostream& out, const ordered_json& c) {
  out << "subject: " << c["subject"].get<std::string>() << '\n';
  out << "population: " << c["population"].get<std::string>() << '\n';
  out << "violations: " << c["violations"].size() << ", spaces: " << c["spaces"].get<std::uint64_t>() << '\n';
  out << "evaluated: " << c["evaluated"].get<std::uint64_t>() << ", excluded: " << c["excluded"].get<std::uint64_t>()
      << '\n';
  out << "true counts:\n";
  for (const auto& [k, v] : c["true_counts"].items()) out << "  " << k << " " << v.get<std::uint64_t>() << '\n';
  if (!c["skipped_counts"].empty()) {
    out << "skipped counts:\n";
    for (const auto& [k, v] : c["skipped_counts"].items()) out << "  " << k << " " << v.get<std::uint64_t>() << '\n';
  }
  if (!c["signatures"].empty()) {
    out << "signatures:\n";
    for (const auto& [k, v] : c["signatures"].items()) out << "  " << k << " " << v.get<std::uint64_t>() << '\n';
  }
  for (const auto& v : c["violations"]) {
    out << "violation: index " << v["index"].get<std::uint64_t>() << " " << v["detail"].get<std::string>() << '\n';
  }
}

// Human rendering of each command's document.
void render_human(std::ostream& out, const ordered_json& doc) {
  const std::string command = doc["command"];
  if (command == "check") {
    out << "format: " << doc["format"].get<std::string>() << ", points: " << doc["points"].get<std::size_t>() << '\n';
    render_outcomes(out, doc["properties"]);
    for (const auto& note : doc["notes"]) out << "note: " << note.get<std::string>() << '\n';
  } else if (command == "interval" || command == "set-interval" || command == "hull") {
    out << render_set(doc["result"]) << '\n';
  } else if (command == "order") {
    const auto& rows = doc["relation"];
    for (std::size_t x = 0; x < rows.size(); ++x) {
      out << x << ": " << render_set(rows[x]) << '\n';
    }
    out << "reflexive: " << doc["reflexive"].get<bool>() << '\n';
    out << "transitive: " << doc["transitive"].get<bool>() << '\n';
    out << "antisymmetric: " << doc["antisymmetric"].get<bool>() << '\n';
    out << "antisymmetric off base: " << doc["antisymmetric_off_base"].get<bool>() << '\n';
  } else if (command == "enumerate") {
    out << "spaces: " << doc["spaces"].get<std::uint64_t>() << '\n';
    if (doc.contains("space")) out << doc["space"].get<std::string>();
    if (doc.contains("orbits")) {
      for (const auto& row : doc["orbits"]) out << row.get<std::string>() << '\n';
    }
  } else if (command == "verify") {
    render_census(out, doc["census"]);
  } else if (command == "search") {
    if (doc["found"].get<bool>()) {
      out << "found: n=" << doc["n"].get<std::size_t>() << " index=" << doc["index"].get<std::uint64_t>() << " ("
          << doc["phase"].get<std::string>() << "), examined: " << doc["examined"].get<std::uint64_t>() << '\n';
      out << doc["space"].get<std::string>();
    } else {
      out << "found: none, examined: " << doc["examined"].get<std::uint64_t>() << '\n';
    }
  }
}

struct Global {
  std::string format = "human";
  bool allow_large = false;
  std::size_t enumeration_cap = Limits{}.subset_enumeration;
  std::size_t triple_cap = Limits{}.subset_triples;

  Limits limits() const {
    if (allow_large) return Limits::unlimited();
    return Limits{enumeration_cap, triple_cap};
  }
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite interval spaces: axioms, convexity, and the interval-transitivity and "
               "interval-antisymmetry criteria",
               "ispace"};
  app.require_subcommand(1);
  app.fallthrough();
  Global global;
  app.add_option("--format", global.format, "Output mode")
      ->check(CLI::IsMember({"human", "structured"}))
      ->capture_default_str();
  app.add_flag("--allow-large", global.allow_large, "Lift the enumeration caps");
  app.add_option("--subset-cap", global.enumeration_cap, "Largest n for subset enumeration")->capture_default_str();
  app.add_option("--triple-cap", global.triple_cap, "Largest n for subset-triple scans")->capture_default_str();

  std::string file;
  std::string properties = "all";
  auto* check = app.add_subcommand("check", "Evaluate properties and theorem conditions of a space");
  check->add_option("file", file, "ispace, graph or qpoints file")->required();
  check->add_option("--properties", properties, "'all' or a comma-separated list of property names");

  std::size_t a_id = 0;
  std::size_t c_id = 0;
  auto* interval_cmd = app.add_subcommand("interval", "Print the interval [a,c]");
  interval_cmd->add_option("file", file)->required();
  interval_cmd->add_option("--a", a_id)->required();
  interval_cmd->add_option("--c", c_id)->required();

  std::string a_text;
  std::string c_text;
  auto* set_interval_cmd = app.add_subcommand("set-interval", "Print the set interval [A,C]");
  set_interval_cmd->add_option("file", file)->required();
  set_interval_cmd->add_option("--A", a_text, "Comma-separated ids, '-' for the empty set")->required();
  set_interval_cmd->add_option("--C", c_text, "Comma-separated ids, '-' for the empty set")->required();

  std::string set_text;
  auto* hull_cmd = app.add_subcommand("hull", "Print the convex hull of a set");
  hull_cmd->add_option("file", file)->required();
  hull_cmd->add_option("--set", set_text, "Comma-separated ids, '-' for the empty set")->required();

  std::optional<std::size_t> base_point;
  auto* order_cmd = app.add_subcommand("order", "Print the base-point or base-set order");
  order_cmd->add_option("file", file)->required();
  auto* base_opt = order_cmd->add_option("--base", base_point, "Base point a for <a,.,.>");
  order_cmd->add_option("--A", a_text, "Base set A for <A,.,.>")->excludes(base_opt);

  std::size_t n = 3;
  std::optional<std::uint64_t> index;
  bool list = false;
  auto* enumerate_cmd = app.add_subcommand("enumerate", "Count or list the labeled interval spaces on n points");
  enumerate_cmd->add_option("--n", n)->required();
  enumerate_cmd->add_option("--index", index, "Print this space in ispace format");
  enumerate_cmd->add_flag("--list", list, "List the orbit bits of every space");

  std::string theorem = "transitivity";
  bool exhaustive = false;
  std::optional<std::uint64_t> samples;
  std::uint64_t seed = 0;
  std::optional<double> density;
  std::size_t workers = 1;
  auto* verify_cmd = app.add_subcommand("verify", "Check a theorem or the propositions over a population");
  verify_cmd->add_option("--theorem", theorem)
      ->check(CLI::IsMember({"transitivity", "antisymmetry", "propositions"}))
      ->capture_default_str();
  verify_cmd->add_option("--n", n)->required();
  auto* exhaustive_flag = verify_cmd->add_flag("--exhaustive", exhaustive, "Every space on n points");
  verify_cmd->add_option("--samples", samples, "Number of seeded random spaces")->excludes(exhaustive_flag);
  verify_cmd->add_option("--seed", seed)->capture_default_str();
  verify_cmd->add_option("--density", density, "Fixed orbit density; default draws one per sample")
      ->check(CLI::Range(0.0, 1.0));
  verify_cmd->add_option("--workers", workers)->check(CLI::PositiveNumber)->capture_default_str();

  std::string want_text;
  std::string want_not_text;
  SearchBudget budget;
  std::optional<double> max_seconds;
  auto* search_cmd = app.add_subcommand("search", "Find a space separating two property sets");
  search_cmd->add_option("--want", want_text, "Properties the space must have");
  search_cmd->add_option("--want-not", want_not_text, "Properties the space must fail");
  search_cmd->add_option("--max-spaces", budget.max_spaces)->capture_default_str();
  search_cmd->add_option("--max-seconds", max_seconds);
  search_cmd->add_option("--seed", budget.seed)->capture_default_str();
  search_cmd->add_option("--sample-n", budget.sample_n)->capture_default_str();
  search_cmd->add_option("--exhaustive-max-n", budget.exhaustive_max_n)->capture_default_str();
  search_cmd->add_option("--workers", workers)->check(CLI::PositiveNumber)->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err) == 0 ? kSuccess : kUsageError;
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err) == 0 ? kSuccess : kUsageError;
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    err << app.help();
    return kUsageError;
  }

  const Limits limits = global.limits();
  ordered_json doc;
  int code = kSuccess;
  try {
    if (check->parsed()) {
      const SpaceFile input = load_file(file);
      const FiniteIntervalSpace space = build_space(input);
      doc["command"] = "check";
      doc["format"] = std::string(to_string(input.format));
      doc["points"] = space.size();
      const auto names = properties == "all" ? property_names() : split_names(properties);
      const PropertyReport report = check_properties(space, names, limits);
      ordered_json flags = ordered_json::object();
      for (const auto& name : names) flags[name] = outcome_json(report.entries.at(name));
      doc["properties"] = std::move(flags);
      auto notes = report.notes;
      if (input.format == FileFormat::RationalPoints) {
        notes.push_back("properties of the " + std::to_string(space.size()) + "-point sample in Q^" +
                        std::to_string(input.dimension) +
                        ", not of Q^d itself; existential conditions need not survive restriction");
      }
      doc["notes"] = std::move(notes);
    } else if (interval_cmd->parsed()) {
      const FiniteIntervalSpace space = load(file);
      doc["command"] = "interval";
      doc["points"] = space.size();
      doc["result"] = set_json(interval(space, a_id, c_id));
    } else if (set_interval_cmd->parsed()) {
      const FiniteIntervalSpace space = load(file);
      doc["command"] = "set-interval";
      doc["points"] = space.size();
      doc["result"] = set_json(set_interval(space, parse_point_set(a_text), parse_point_set(c_text)));
    } else if (hull_cmd->parsed()) {
      const FiniteIntervalSpace space = load(file);
      doc["command"] = "hull";
      doc["points"] = space.size();
      doc["result"] = set_json(hull(space, parse_point_set(set_text)));
    } else if (order_cmd->parsed()) {
      const FiniteIntervalSpace space = load(file);
      if (!base_point && a_text.empty()) throw CLI::RequiredError("--base or --A");
      const PointSet base = base_point ? PointSet::singleton(*base_point) : parse_point_set(a_text);
      if (base_point) space.check_point(*base_point);
      const BinaryRelation r = base_point ? base_point_order(space, *base_point) : base_set_order(space, base);
      doc["command"] = "order";
      doc["points"] = space.size();
      doc["base"] = set_json(base);
      ordered_json rows = ordered_json::array();
      for (PointId x = 0; x < r.size(); ++x) rows.push_back(set_json(r.row(x)));
      doc["relation"] = std::move(rows);
      doc["reflexive"] = r.is_reflexive();
      doc["transitive"] = r.is_transitive();
      doc["antisymmetric"] = r.is_antisymmetric_on(space.universe());
      doc["antisymmetric_off_base"] = r.is_antisymmetric_on(space.universe() - base);
    } else if (enumerate_cmd->parsed()) {
      doc["command"] = "enumerate";
      doc["n"] = n;
      check_exhaustive(n, global.allow_large);
      doc["spaces"] = space_count(n);
      const FreeOrbitEncoding encoding(n);
      if (index) {
        if (*index >= space_count(n)) throw std::out_of_range("index beyond the number of spaces");
        doc["index"] = *index;
        doc["space"] = write_ispace(encoding.decode_index(*index));
      }
      if (list) {
        ordered_json rows = ordered_json::array();
        for (std::uint64_t i = 0; i < space_count(n); ++i) {
          std::string bits;
          for (std::size_t k = 0; k < encoding.orbit_count(); ++k) bits += ((i >> k) & 1U) ? '1' : '0';
          rows.push_back(std::to_string(i) + " " + bits);
        }
        doc["orbits"] = std::move(rows);
      }
    } else if (verify_cmd->parsed()) {
      if (!exhaustive && !samples) throw CLI::RequiredError("--exhaustive or --samples");
      const Population population =
          exhaustive ? Population::all(n) : Population::sampled(n, seed, *samples, density);
      RunOptions options{workers, limits, global.allow_large};
      CensusReport census;
      if (theorem == "transitivity") {
        census = verify_transitivity_theorem(population, options);
      } else if (theorem == "antisymmetry") {
        census = verify_antisymmetry_theorem(population, options);
      } else {
        census = verify_propositions(population, options);
      }
      doc["command"] = "verify";
      doc["theorem"] = theorem;
      doc["census"] = census_json(census);
      if (!census.ok()) code = kVerificationFailed;
    } else if (search_cmd->parsed()) {
      budget.max_seconds = max_seconds;
      RunOptions options{workers, limits, global.allow_large};
      const auto want = split_names(want_text);
      const auto want_not = split_names(want_not_text);
      const SearchResult result = find_separating(want, want_not, budget, options);
      doc["command"] = "search";
      doc["want"] = want;
      doc["want_not"] = want_not;
      doc["found"] = result.space.has_value();
      doc["examined"] = result.examined;
      if (result.space) {
        doc["phase"] = result.phase;
        doc["n"] = result.n;
        doc["index"] = result.index;
        doc["space"] = write_ispace(*result.space);
      }
    }
  } catch (const CLI::Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const AxiomError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  if (global.format == "structured") {
    out << doc.dump(2) << '\n';
  } else {
    render_human(out, doc);
  }
  return code;
}

}  // namespace ispace::cli
