#ifndef FAIRDIV_BUNDLE_H_
#define FAIRDIV_BUNDLE_H_

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace fairdiv {

inline constexpr int kMaxItems = 64;

// A set of item indices in [0, 64), stored as a bitmask.
class Bundle {
 public:
  constexpr Bundle() = default;
  constexpr explicit Bundle(std::uint64_t mask) : mask_(mask) {}
  Bundle(std::initializer_list<int> items) {
    for (int g : items) mask_ |= Bit(g);
  }

  static constexpr Bundle Single(int item) { return Bundle(Bit(item)); }
  // {0, ..., m-1}.
  static constexpr Bundle Full(int m) {
    return Bundle(m >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m) - 1);
  }
  static Bundle FromItems(const std::vector<int>& items);

  constexpr std::uint64_t mask() const { return mask_; }
  constexpr bool empty() const { return mask_ == 0; }
  constexpr int size() const { return std::popcount(mask_); }
  constexpr bool Contains(int item) const { return (mask_ & Bit(item)) != 0; }
  constexpr bool IsSubsetOf(Bundle other) const {
    return (mask_ & ~other.mask_) == 0;
  }
  constexpr bool Intersects(Bundle other) const {
    return (mask_ & other.mask_) != 0;
  }
  // Smallest item, or -1 when empty.
  constexpr int First() const {
    return mask_ == 0 ? -1 : std::countr_zero(mask_);
  }

  // Z + g and Z - g.
  constexpr Bundle Plus(int item) const { return Bundle(mask_ | Bit(item)); }
  constexpr Bundle Minus(int item) const { return Bundle(mask_ & ~Bit(item)); }

  constexpr Bundle operator|(Bundle o) const { return Bundle(mask_ | o.mask_); }
  constexpr Bundle operator&(Bundle o) const { return Bundle(mask_ & o.mask_); }
  // Set difference.
  constexpr Bundle operator-(Bundle o) const {
    return Bundle(mask_ & ~o.mask_);
  }
  constexpr Bundle& operator|=(Bundle o) {
    mask_ |= o.mask_;
    return *this;
  }
  constexpr Bundle& operator-=(Bundle o) {
    mask_ &= ~o.mask_;
    return *this;
  }
  constexpr bool operator==(const Bundle&) const = default;

  std::vector<int> Items() const;
  // "{0,2,5}".
  std::string ToString() const;

  // Iterates items in increasing order.
  class Iterator {
   public:
    constexpr explicit Iterator(std::uint64_t rest) : rest_(rest) {}
    constexpr int operator*() const { return std::countr_zero(rest_); }
    constexpr Iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr bool operator!=(const Iterator& o) const {
      return rest_ != o.rest_;
    }

   private:
    std::uint64_t rest_;
  };
  constexpr Iterator begin() const { return Iterator(mask_); }
  constexpr Iterator end() const { return Iterator(0); }

 private:
  static constexpr std::uint64_t Bit(int item) {
    return std::uint64_t{1} << item;
  }

  std::uint64_t mask_ = 0;
};

}  // namespace fairdiv

#endif  // FAIRDIV_BUNDLE_H_
