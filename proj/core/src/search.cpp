#include "ispace/search.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <mutex>
#include <exception>

#include "ispace/closure.hpp"
#include "ispace/error.hpp"
#include "ispace/properties.hpp"

namespace ispace {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Uniform in [0, 1) from the top 53 bits; identical on every platform.
double unit_interval(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

// Runs `work` over [0, total) in fixed chunks. Chunk k goes to worker
// k % workers; results come back in chunk order.
template <typename Result, typename Work>
std::vector<Result> run_chunked(std::uint64_t total, std::size_t workers, std::uint64_t chunk, Work work) {
  const std::uint64_t chunks = total == 0 ? 0 : (total + chunk - 1) / chunk;
  std::vector<Result> results(chunks);
  auto worker = [&](std::size_t w, std::size_t stride) {
    for (std::uint64_t k = w; k < chunks; k += stride) {
      results[k] = work(k * chunk, std::min(total, (k + 1) * chunk));
    }
  };
  workers = std::max<std::size_t>(1, std::min<std::uint64_t>(workers, std::max<std::uint64_t>(chunks, 1)));
  if (workers == 1) {
    worker(0, 1);
    return results;
  }
  std::vector<std::thread> pool;
  std::exception_ptr failure;
  std::mutex failure_lock;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        worker(w, workers);
      } catch (...) {
        std::lock_guard<std::mutex> guard(failure_lock);
        if (!failure) failure = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return results;
}

constexpr std::uint64_t kChunk = 1024;

template <typename PerSpace>
CensusReport census(const std::string& subject, const Population& population, const RunOptions& options,
                    PerSpace per_space) {
  if (population.exhaustive) check_exhaustive(population.n, options.allow_large);
  auto parts = run_chunked<CensusReport>(population.size(), options.workers, kChunk,
                                         [&](std::uint64_t begin, std::uint64_t end) {
                                           CensusReport part;
                                           for (std::uint64_t i = begin; i < end; ++i) {
                                             per_space(i, population.at(i), part);
                                           }
                                           return part;
                                         });
  CensusReport out;
  out.subject = subject;
  out.n = population.n;
  out.population = population.describe();
  for (const auto& part : parts) out.merge(part);
  return out;
}

void record_vector(std::uint64_t index, const ConditionVector& v, CensusReport& part) {
  ++part.evaluated;
  for (std::size_t k = 0; k < v.values.size(); ++k) {
    const Outcome& o = v.values[k];
    const std::string label = v.label(k);
    if (o.holds()) ++part.true_counts[label];
    if (!o.evaluated()) ++part.skipped_counts[label];
    part.true_counts.try_emplace(label, 0);
  }
  ++part.signatures[v.signature()];
  if (!v.consistent()) part.violations.push_back({index, v.signature()});
}

}  // namespace

FreeOrbitEncoding::FreeOrbitEncoding(std::size_t n) : n_(n) {
  if (n == 0 || n > kMaxPoints) throw ModelError("orbit encoding needs 1..64 points");
  for (PointId a = 0; a < n; ++a)
    for (PointId c = a + 1; c < n; ++c)
      for (PointId b = 0; b < n; ++b)
        if (b != a && b != c) orbits_.push_back({a, b, c});
}

FiniteIntervalSpace FreeOrbitEncoding::decode(const std::vector<bool>& bits) const {
  if (bits.size() != orbits_.size()) throw std::invalid_argument("orbit bit vector has the wrong length");
  BetweennessTable t(n_);
  t.add_forced();
  for (std::size_t k = 0; k < orbits_.size(); ++k) {
    if (!bits[k]) continue;
    const auto [a, b, c] = orbits_[k];
    t.set(a, b, c);
    t.set(c, b, a);
  }
  return FiniteIntervalSpace::from_table(t);
}

std::vector<bool> FreeOrbitEncoding::encode(const FiniteIntervalSpace& space) const {
  if (space.size() != n_) throw std::invalid_argument("space size does not match the encoding");
  std::vector<bool> bits(orbits_.size());
  for (std::size_t k = 0; k < orbits_.size(); ++k) {
    const auto [a, b, c] = orbits_[k];
    bits[k] = space.holds_unchecked(a, b, c);
  }
  return bits;
}

FiniteIntervalSpace FreeOrbitEncoding::decode_index(std::uint64_t index) const {
  if (orbits_.size() > 64) throw std::invalid_argument("too many orbits for an integer index");
  std::vector<bool> bits(orbits_.size());
  for (std::size_t k = 0; k < orbits_.size(); ++k) bits[k] = ((index >> k) & 1U) != 0;
  return decode(bits);
}

std::uint64_t FreeOrbitEncoding::encode_index(const FiniteIntervalSpace& space) const {
  if (orbits_.size() > 64) throw std::invalid_argument("too many orbits for an integer index");
  const auto bits = encode(space);
  std::uint64_t index = 0;
  for (std::size_t k = 0; k < bits.size(); ++k) {
    if (bits[k]) index |= std::uint64_t{1} << k;
  }
  return index;
}

std::uint64_t space_count(std::size_t n) {
  if (n == 0 || n > kIndexableCap) throw CapExceeded("space count only defined for 1 <= n <= 6");
  return std::uint64_t{1} << (n * (n - 1) * (n - 2) / 2);
}

void check_exhaustive(std::size_t n, bool allow_large) {
  if (n == 0) throw ModelError("n must be positive");
  if (n > kIndexableCap) {
    throw CapExceeded("exhaustive enumeration is impossible for n = " + std::to_string(n));
  }
  if (n > kExhaustiveCap && !allow_large) {
    throw CapExceeded("exhaustive enumeration above n = " + std::to_string(kExhaustiveCap) +
                      " needs an explicit override");
  }
}

void for_each_space(std::size_t n, const std::function<void(std::uint64_t, const FiniteIntervalSpace&)>& visit,
                    bool allow_large) {
  check_exhaustive(n, allow_large);
  const FreeOrbitEncoding encoding(n);
  const std::uint64_t count = space_count(n);
  for (std::uint64_t i = 0; i < count; ++i) visit(i, encoding.decode_index(i));
}

std::vector<FiniteIntervalSpace> enumerate_spaces(std::size_t n, bool allow_large) {
  std::vector<FiniteIntervalSpace> out;
  for_each_space(n, [&](std::uint64_t, const FiniteIntervalSpace& s) { out.push_back(s); }, allow_large);
  return out;
}

FiniteIntervalSpace random_space(std::size_t n, std::uint64_t seed, double density) {
  if (!(density >= 0.0 && density <= 1.0)) throw std::invalid_argument("density must lie in [0, 1]");
  const FreeOrbitEncoding encoding(n);
  std::mt19937_64 rng(splitmix64(seed));
  std::vector<bool> bits(encoding.orbit_count());
  for (std::size_t k = 0; k < bits.size(); ++k) bits[k] = unit_interval(rng) < density;
  return encoding.decode(bits);
}

std::uint64_t Population::size() const { return exhaustive ? space_count(n) : count; }

double Population::density_at(std::uint64_t index) const {
  if (density) return *density;
  std::mt19937_64 rng(splitmix64(splitmix64(seed + index) ^ 0x5851f42d4c957f2dULL));
  return unit_interval(rng);
}

FiniteIntervalSpace Population::at(std::uint64_t index) const {
  if (exhaustive) return FreeOrbitEncoding(n).decode_index(index);
  return random_space(n, seed + index, density_at(index));
}

std::string Population::describe() const {
  std::ostringstream out;
  if (exhaustive) {
    out << "exhaustive n=" << n;
  } else {
    out << "sampled n=" << n << " seed=" << seed << " count=" << count << " density=";
    if (density) {
      out << *density;
    } else {
      out << "uniform";
    }
  }
  return out.str();
}

void CensusReport::merge(const CensusReport& other) {
  spaces += other.spaces;
  evaluated += other.evaluated;
  excluded += other.excluded;
  for (const auto& [k, v] : other.true_counts) true_counts[k] += v;
  for (const auto& [k, v] : other.skipped_counts) skipped_counts[k] += v;
  for (const auto& [k, v] : other.signatures) signatures[k] += v;
  violations.insert(violations.end(), other.violations.begin(), other.violations.end());
  std::sort(violations.begin(), violations.end(),
            [](const CensusViolation& l, const CensusViolation& r) { return l.index < r.index; });
}

CensusReport verify_transitivity_theorem(const Population& population, const RunOptions& options) {
  return census("transitivity", population, options,
                [&](std::uint64_t i, const FiniteIntervalSpace& space, CensusReport& part) {
                  ++part.spaces;
                  record_vector(i, transitivity_conditions(space, options.limits), part);
                });
}

CensusReport verify_antisymmetry_theorem(const Population& population, const RunOptions& options) {
  AntisymmetryOptions antisymmetry;
  antisymmetry.limits = options.limits;
  return census("antisymmetry", population, options,
                [&](std::uint64_t i, const FiniteIntervalSpace& space, CensusReport& part) {
                  ++part.spaces;
                  if (!is_interval_transitive(space)) {
                    ++part.excluded;
                    return;
                  }
                  record_vector(i, antisymmetry_conditions(space, antisymmetry), part);
                });
}

CensusReport verify_propositions(const Population& population, const RunOptions& options) {
  static const std::vector<std::string> kPropositions = {
      "prop-base-interval-transitivity", "prop-base-interval-antisymmetry", "prop-stiff-convex-antisymmetry",
      "prop-entailment-reverse", "prop-combinatorial"};
  return census("propositions", population, options,
                [&](std::uint64_t i, const FiniteIntervalSpace& space, CensusReport& part) {
                  ++part.spaces;
                  ++part.evaluated;
                  std::string failing;
                  for (const auto& name : kPropositions) {
                    const Outcome o = evaluate_property(name, space, options.limits);
                    part.true_counts.try_emplace(name, 0);
                    if (o.holds()) ++part.true_counts[name];
                    if (!o.evaluated()) ++part.skipped_counts[name];
                    if (o.fails()) failing += (failing.empty() ? "" : ",") + name;
                  }
                  if (!failing.empty()) part.violations.push_back({i, failing});
                });
}

SearchResult find_separating(const std::vector<std::string>& want, const std::vector<std::string>& want_not,
                             const SearchBudget& budget, const RunOptions& options) {
  const auto& known = property_names();
  for (const auto* list : {&want, &want_not}) {
    for (const auto& name : *list) {
      if (std::find(known.begin(), known.end(), name) == known.end()) {
        throw std::invalid_argument("unknown property '" + name + "'");
      }
    }
  }
  if (budget.exhaustive_max_n > kExhaustiveCap) check_exhaustive(budget.exhaustive_max_n, options.allow_large);

  // Candidate g < exhaustive_total is an exhaustive space; later ones are samples.
  std::vector<std::uint64_t> offsets{0};
  for (std::size_t n = 1; n <= budget.exhaustive_max_n; ++n) offsets.push_back(offsets.back() + space_count(n));
  const std::uint64_t exhaustive_total = offsets.back();
  const Population samples = Population::sampled(budget.sample_n, budget.seed, budget.max_spaces);

  auto candidate = [&](std::uint64_t g, std::size_t& n, std::uint64_t& index) {
    if (g < exhaustive_total) {
      const auto it = std::upper_bound(offsets.begin(), offsets.end(), g);
      n = static_cast<std::size_t>(it - offsets.begin());
      index = g - offsets[n - 1];
      return FreeOrbitEncoding(n).decode_index(index);
    }
    n = budget.sample_n;
    index = g - exhaustive_total;
    return samples.at(index);
  };
  auto matches = [&](const FiniteIntervalSpace& space) {
    for (const auto& name : want) {
      if (!evaluate_property(name, space, options.limits).holds()) return false;
    }
    for (const auto& name : want_not) {
      if (!evaluate_property(name, space, options.limits).fails()) return false;
    }
    return true;
  };

  const auto start = std::chrono::steady_clock::now();
  const std::uint64_t round = kChunk * std::max<std::size_t>(1, options.workers);
  SearchResult result;
  for (std::uint64_t lo = 0; lo < budget.max_spaces; lo += round) {
    const std::uint64_t hi = std::min(budget.max_spaces, lo + round);
    auto hits = run_chunked<std::optional<std::uint64_t>>(
        hi - lo, options.workers, kChunk, [&](std::uint64_t begin, std::uint64_t end) -> std::optional<std::uint64_t> {
          for (std::uint64_t k = begin; k < end; ++k) {
            std::size_t n = 0;
            std::uint64_t index = 0;
            if (matches(candidate(lo + k, n, index))) return lo + k;
          }
          return std::nullopt;
        });
    for (const auto& hit : hits) {
      if (!hit) continue;
      result.examined = *hit + 1;
      result.space = candidate(*hit, result.n, result.index);
      result.phase = *hit < exhaustive_total ? "exhaustive" : "sampled";
      return result;
    }
    result.examined = hi;
    if (budget.max_seconds) {
      const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
      if (elapsed.count() >= *budget.max_seconds) break;
    }
  }
  return result;
}

}  // namespace ispace
