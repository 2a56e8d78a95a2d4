#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace declat {

using Elem = std::size_t;

// Subset of the element indices of a lattice with at most 64 elements.
class ElementSet {
 public:
  static constexpr std::size_t kCapacity = 64;

  constexpr ElementSet() = default;
  constexpr explicit ElementSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr ElementSet single(Elem e) { return ElementSet(std::uint64_t{1} << e); }
  // {0, ..., n-1}
  static constexpr ElementSet all(std::size_t n) {
    return ElementSet(n >= kCapacity ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr bool contains(Elem e) const { return (bits_ >> e) & 1U; }
  constexpr void insert(Elem e) { bits_ |= std::uint64_t{1} << e; }
  constexpr void erase(Elem e) { bits_ &= ~(std::uint64_t{1} << e); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr std::uint64_t bits() const { return bits_; }

  constexpr bool subset_of(ElementSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool proper_subset_of(ElementSet other) const { return subset_of(other) && bits_ != other.bits_; }
  constexpr bool intersects(ElementSet other) const { return (bits_ & other.bits_) != 0; }

  constexpr ElementSet operator&(ElementSet o) const { return ElementSet(bits_ & o.bits_); }
  constexpr ElementSet operator|(ElementSet o) const { return ElementSet(bits_ | o.bits_); }
  constexpr ElementSet minus(ElementSet o) const { return ElementSet(bits_ & ~o.bits_); }
  constexpr ElementSet& operator&=(ElementSet o) { bits_ &= o.bits_; return *this; }
  constexpr ElementSet& operator|=(ElementSet o) { bits_ |= o.bits_; return *this; }

  constexpr bool operator==(const ElementSet&) const = default;
  constexpr auto operator<=>(const ElementSet&) const = default;

  // Members in increasing index order.
  std::vector<Elem> elements() const {
    std::vector<Elem> out;
    out.reserve(size());
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(static_cast<Elem>(std::countr_zero(b)));
    return out;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) f(static_cast<Elem>(std::countr_zero(b)));
  }

 private:
  std::uint64_t bits_ = 0;
};

}  // namespace declat
