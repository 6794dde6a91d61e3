#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <span>
#include <string>
#include <vector>

namespace ispace {

/// Index of a point in a space's universe [0, n).
using PointId = std::size_t;

/// Largest universe a PointSet can address.
inline constexpr std::size_t kMaxPoints = 64;

/// A subset of a point universe, stored as a 64-bit mask.
///
/// Equality is extensional. The set carries no universe size; operations
/// that take a PointSet together with a space check that every member is
/// in range for that space.
class PointSet {
 public:
  using Bits = std::uint64_t;

  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = PointId;
    using difference_type = std::ptrdiff_t;
    using pointer = const PointId*;
    using reference = PointId;

    iterator() = default;
    explicit iterator(Bits rest) : rest_(rest) {}

    PointId operator*() const { return static_cast<PointId>(std::countr_zero(rest_)); }
    iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    friend bool operator==(iterator, iterator) = default;

   private:
    Bits rest_ = 0;
  };

  constexpr PointSet() = default;
  PointSet(std::initializer_list<PointId> ids);
  explicit PointSet(std::span<const PointId> ids);

  static constexpr PointSet from_bits(Bits bits) {
    PointSet s;
    s.bits_ = bits;
    return s;
  }
  static constexpr PointSet singleton(PointId id) { return from_bits(Bits{1} << id); }
  /// The full universe [0, n).
  static constexpr PointSet universe(std::size_t n) {
    return from_bits(n >= 64 ? ~Bits{0} : (Bits{1} << n) - 1);
  }

  constexpr Bits bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool contains(PointId id) const { return id < kMaxPoints && ((bits_ >> id) & 1U) != 0; }
  constexpr bool subset_of(PointSet other) const { return (bits_ & ~other.bits_) == 0; }
  /// Largest member plus one; 0 for the empty set.
  std::size_t extent() const { return bits_ == 0 ? 0 : 64 - static_cast<std::size_t>(std::countl_zero(bits_)); }

  void insert(PointId id);
  void erase(PointId id) { bits_ &= ~(Bits{1} << id); }

  PointSet with(PointId id) const {
    PointSet s = *this;
    s.insert(id);
    return s;
  }

  iterator begin() const { return iterator(bits_); }
  iterator end() const { return iterator(0); }

  std::vector<PointId> to_vector() const;
  /// "{0,1,2}"; the empty set prints as "{}".
  std::string to_string() const;

  constexpr PointSet operator|(PointSet o) const { return from_bits(bits_ | o.bits_); }
  constexpr PointSet operator&(PointSet o) const { return from_bits(bits_ & o.bits_); }
  /// Set difference.
  constexpr PointSet operator-(PointSet o) const { return from_bits(bits_ & ~o.bits_); }
  PointSet& operator|=(PointSet o) {
    bits_ |= o.bits_;
    return *this;
  }
  PointSet& operator&=(PointSet o) {
    bits_ &= o.bits_;
    return *this;
  }

  friend constexpr bool operator==(PointSet, PointSet) = default;
  /// Orders by mask value; used only for deterministic containers.
  friend constexpr auto operator<=>(PointSet a, PointSet b) { return a.bits_ <=> b.bits_; }

 private:
  Bits bits_ = 0;
};

}  // namespace ispace
