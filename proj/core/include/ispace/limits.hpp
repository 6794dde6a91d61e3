#pragma once

#include <cstddef>

namespace ispace {

/// Caps on the exponential scans over P(X).
///
/// Every operation that iterates subsets of the universe checks the relevant
/// cap and throws CapExceeded instead of silently running for hours.
struct Limits {
  /// Largest n for which the 2^n subsets are enumerated (convex sets, closure systems).
  std::size_t subset_enumeration = 16;
  /// Largest n for which (2^n)^3 subset triples are scanned (the semigroup conditions).
  std::size_t subset_triples = 10;

  /// Caps lifted as far as the representation allows: subset indices must fit
  /// in 32 bits, and the memoized [A,B] table holds 4^n entries.
  static Limits unlimited() { return Limits{32, 13}; }
};

}  // namespace ispace
