#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

namespace nesto {

inline constexpr int kMaxLabel = 64;

/// A subset of the labels 1..64, stored as one machine word. Label i lives in
/// bit i-1.
class Subset {
 public:
  constexpr Subset() = default;
  constexpr explicit Subset(std::uint64_t bits) : bits_(bits) {}
  Subset(std::initializer_list<int> labels);

  static constexpr Subset single(int label) { return Subset(std::uint64_t{1} << (label - 1)); }
  /// {1, ..., n}
  static constexpr Subset range(int n) {
    return Subset(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static Subset from_labels(const std::vector<int>& labels);

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(int label) const { return (bits_ >> (label - 1)) & 1U; }
  constexpr bool subset_of(Subset o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr bool proper_subset_of(Subset o) const { return subset_of(o) && bits_ != o.bits_; }
  constexpr bool intersects(Subset o) const { return (bits_ & o.bits_) != 0; }
  constexpr bool disjoint(Subset o) const { return (bits_ & o.bits_) == 0; }
  /// Smallest label, 0 when empty.
  constexpr int min_label() const { return bits_ ? std::countr_zero(bits_) + 1 : 0; }
  constexpr int max_label() const { return bits_ ? 64 - std::countl_zero(bits_) : 0; }

  std::vector<int> labels() const;
  std::string to_string() const;  // "{1,2,3}"

  constexpr Subset operator|(Subset o) const { return Subset(bits_ | o.bits_); }
  constexpr Subset operator&(Subset o) const { return Subset(bits_ & o.bits_); }
  constexpr Subset operator-(Subset o) const { return Subset(bits_ & ~o.bits_); }
  constexpr Subset& operator|=(Subset o) { bits_ |= o.bits_; return *this; }
  constexpr Subset& operator&=(Subset o) { bits_ &= o.bits_; return *this; }
  constexpr Subset& operator-=(Subset o) { bits_ &= ~o.bits_; return *this; }

  constexpr bool operator==(const Subset&) const = default;
  /// Raw bit order; use canonical_less for the (cardinality, bits) order.
  constexpr auto operator<=>(const Subset&) const = default;

  template <typename F>
  void for_each_label(F&& f) const {
    for (std::uint64_t b = bits_; b; b &= b - 1) f(std::countr_zero(b) + 1);
  }

 private:
  std::uint64_t bits_ = 0;
};

/// (cardinality, bits) order used for every canonical element listing.
constexpr bool canonical_less(Subset a, Subset b) {
  const int ca = a.size(), cb = b.size();
  return ca != cb ? ca < cb : a.bits() < b.bits();
}

/// Lexicographic order of characteristic vectors read from label 1: at the
/// smallest label where a and b differ, the one lacking it is smaller.
constexpr bool lex_less(Subset a, Subset b) {
  const std::uint64_t diff = a.bits() ^ b.bits();
  if (diff == 0) return false;
  const std::uint64_t low = diff & (~diff + 1);
  return (a.bits() & low) == 0;
}

/// Relabels the members of `s` by their rank inside `ground` (1-based), e.g.
/// {3,7} inside ground {2,3,7} becomes {2,3}.
std::uint64_t compact_bits(std::uint64_t s, std::uint64_t ground);

}  // namespace nesto

template <>
struct std::hash<nesto::Subset> {
  std::size_t operator()(nesto::Subset s) const noexcept { return std::hash<std::uint64_t>{}(s.bits()); }
};
