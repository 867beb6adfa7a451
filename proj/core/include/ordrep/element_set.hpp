#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <initializer_list>

namespace ordrep {

// A subset of the elements {0..n-1} of a poset, stored as a 64-bit mask.
// Posets are capped at 64 elements at construction, so one word suffices.
class ElementSet {
 public:
  constexpr ElementSet() = default;
  constexpr explicit ElementSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr ElementSet single(int i) { return ElementSet(std::uint64_t{1} << i); }

  // The first n elements.
  static constexpr ElementSet first(int n) {
    return ElementSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  static ElementSet of(std::initializer_list<int> xs) {
    ElementSet s;
    for (int x : xs) s.add(x);
    return s;
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int count() const { return std::popcount(bits_); }
  constexpr bool contains(int i) const { return (bits_ >> i) & 1; }

  constexpr void add(int i) { bits_ |= std::uint64_t{1} << i; }
  constexpr void remove(int i) { bits_ &= ~(std::uint64_t{1} << i); }
  constexpr ElementSet with(int i) const { return ElementSet(bits_ | (std::uint64_t{1} << i)); }
  constexpr ElementSet without(int i) const { return ElementSet(bits_ & ~(std::uint64_t{1} << i)); }

  constexpr bool subset_of(ElementSet o) const { return (bits_ & o.bits_) == bits_; }
  constexpr bool intersects(ElementSet o) const { return (bits_ & o.bits_) != 0; }

  // Lowest element index; set must be nonempty.
  constexpr int min() const {
    assert(bits_ != 0);
    return std::countr_zero(bits_);
  }

  constexpr ElementSet operator&(ElementSet o) const { return ElementSet(bits_ & o.bits_); }
  constexpr ElementSet operator|(ElementSet o) const { return ElementSet(bits_ | o.bits_); }
  constexpr ElementSet operator^(ElementSet o) const { return ElementSet(bits_ ^ o.bits_); }
  // Set difference.
  constexpr ElementSet operator-(ElementSet o) const { return ElementSet(bits_ & ~o.bits_); }

  constexpr ElementSet& operator|=(ElementSet o) { bits_ |= o.bits_; return *this; }
  constexpr ElementSet& operator&=(ElementSet o) { bits_ &= o.bits_; return *this; }

  constexpr bool operator==(const ElementSet&) const = default;
  // Numeric mask order; the canonical enumeration order throughout.
  constexpr bool operator<(ElementSet o) const { return bits_ < o.bits_; }

  // Successor of this subset within `universe`, in ascending mask order.
  // Starting from the empty set and stopping after `universe` visits every subset.
  constexpr ElementSet next_subset_within(ElementSet universe) const {
    return ElementSet((bits_ - universe.bits_) & universe.bits_);
  }

  class iterator {
   public:
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
    constexpr int operator*() const { return std::countr_zero(rest_); }
    constexpr iterator& operator++() { rest_ &= rest_ - 1; return *this; }
    constexpr bool operator!=(const iterator& o) const { return rest_ != o.rest_; }
   private:
    std::uint64_t rest_;
  };

  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

 private:
  std::uint64_t bits_ = 0;
};

}  // namespace ordrep
