#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

#include "shr/errors.hpp"

namespace shr {

using Mask = std::uint64_t;

/// Largest carrier a table can hold; subsets are single machine words.
inline constexpr std::size_t kMaxOrder = 64;

constexpr Mask bit(std::size_t i) noexcept { return Mask{1} << i; }

constexpr Mask full_mask(std::size_t order) noexcept {
  return order >= 64 ? ~Mask{0} : (Mask{1} << order) - 1;
}

template <typename F>
constexpr void for_each_bit(Mask m, F&& f) {
  while (m != 0) {
    f(static_cast<std::size_t>(std::countr_zero(m)));
    m &= m - 1;
  }
}

/// A subset of a finite carrier {0, ..., order-1}.
class CrispSubset {
 public:
  CrispSubset() = default;
  CrispSubset(std::size_t order, Mask bits) : bits_(bits), order_(order) {
    if (order > kMaxOrder) throw StructureError("carrier order exceeds 64");
    if ((bits & ~full_mask(order)) != 0) throw StructureError("subset member outside carrier");
  }

  static CrispSubset empty(std::size_t order) { return {order, 0}; }
  static CrispSubset full(std::size_t order) { return {order, full_mask(order)}; }
  static CrispSubset of(std::size_t order, std::initializer_list<std::size_t> members) {
    Mask m = 0;
    for (auto i : members) {
      if (i >= order) throw StructureError("subset member outside carrier");
      m |= bit(i);
    }
    return {order, m};
  }

  std::size_t order() const noexcept { return order_; }
  Mask mask() const noexcept { return bits_; }
  bool is_empty() const noexcept { return bits_ == 0; }
  bool is_full() const noexcept { return bits_ == full_mask(order_); }
  std::size_t size() const noexcept { return static_cast<std::size_t>(std::popcount(bits_)); }
  bool contains(std::size_t i) const noexcept { return i < order_ && (bits_ & bit(i)) != 0; }
  bool subset_of(const CrispSubset& other) const noexcept { return (bits_ & ~other.bits_) == 0; }

  std::vector<std::size_t> elements() const {
    std::vector<std::size_t> out;
    for_each_bit(bits_, [&](std::size_t i) { out.push_back(i); });
    return out;
  }

  CrispSubset with(std::size_t i) const { return {order_, bits_ | bit(i)}; }

  friend CrispSubset operator|(const CrispSubset& a, const CrispSubset& b) {
    return {a.order_, a.bits_ | b.bits_};
  }
  friend CrispSubset operator&(const CrispSubset& a, const CrispSubset& b) {
    return {a.order_, a.bits_ & b.bits_};
  }
  friend bool operator==(const CrispSubset&, const CrispSubset&) = default;
  friend std::strong_ordering operator<=>(const CrispSubset& a, const CrispSubset& b) {
    if (auto c = a.order_ <=> b.order_; c != 0) return c;
    return a.bits_ <=> b.bits_;
  }

 private:
  Mask bits_ = 0;
  std::size_t order_ = 0;
};

}  // namespace shr
