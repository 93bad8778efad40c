#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace poslat {

using Elem = std::uint32_t;

/// A set of poset elements drawn from 0..63, stored as one machine word.
class ElemSet {
public:
  static constexpr Elem kCapacity = 64;

  constexpr ElemSet() = default;
  constexpr explicit ElemSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr ElemSet single(Elem e) { return ElemSet(std::uint64_t{1} << e); }
  /// {0, ..., n-1}
  static constexpr ElemSet first(Elem n) {
    return ElemSet(n >= kCapacity ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static ElemSet of(std::initializer_list<Elem> elems) {
    ElemSet s;
    for (Elem e : elems) s.insert(e);
    return s;
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(Elem e) const { return e < kCapacity && ((bits_ >> e) & 1U) != 0; }
  constexpr bool subset_of(ElemSet o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr bool intersects(ElemSet o) const { return (bits_ & o.bits_) != 0; }
  /// Smallest member; undefined on the empty set.
  constexpr Elem min() const { return static_cast<Elem>(std::countr_zero(bits_)); }

  constexpr void insert(Elem e) { bits_ |= std::uint64_t{1} << e; }
  constexpr void erase(Elem e) { bits_ &= ~(std::uint64_t{1} << e); }

  template <typename F>
  constexpr void for_each(F&& f) const {
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) f(static_cast<Elem>(std::countr_zero(b)));
  }

  std::vector<Elem> to_vector() const {
    std::vector<Elem> out;
    out.reserve(static_cast<std::size_t>(size()));
    for_each([&](Elem e) { out.push_back(e); });
    return out;
  }

  constexpr ElemSet operator|(ElemSet o) const { return ElemSet(bits_ | o.bits_); }
  constexpr ElemSet operator&(ElemSet o) const { return ElemSet(bits_ & o.bits_); }
  constexpr ElemSet operator^(ElemSet o) const { return ElemSet(bits_ ^ o.bits_); }
  /// Set difference.
  constexpr ElemSet operator-(ElemSet o) const { return ElemSet(bits_ & ~o.bits_); }
  constexpr ElemSet& operator|=(ElemSet o) { bits_ |= o.bits_; return *this; }
  constexpr ElemSet& operator&=(ElemSet o) { bits_ &= o.bits_; return *this; }

  constexpr bool operator==(const ElemSet&) const = default;

private:
  std::uint64_t bits_ = 0;
};

}  // namespace poslat
