#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <vector>

#include "m0n/circular_order.hpp"

namespace m0n {

/// A subset of {1,...,31} stored as a bit mask (bit l <=> label l).
class LabelSet {
 public:
  static constexpr int kMaxLabel = 31;

  constexpr LabelSet() = default;
  LabelSet(std::initializer_list<Label> labels) {
    for (Label l : labels) insert(l);
  }
  explicit LabelSet(std::span<const Label> labels) {
    for (Label l : labels) insert(l);
  }

  static constexpr LabelSet from_bits(std::uint32_t bits) {
    LabelSet s;
    s.bits_ = bits;
    return s;
  }
  /// {1, ..., n}
  static LabelSet all(int n) {
    check(n);
    return from_bits(((std::uint32_t{1} << n) - 1) << 1);
  }

  void insert(Label l) {
    check(l);
    bits_ |= std::uint32_t{1} << l;
  }
  constexpr bool contains(Label l) const { return l >= 1 && l <= kMaxLabel && (bits_ >> l) & 1U; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::uint32_t bits() const { return bits_; }

  /// Ascending.
  std::vector<Label> labels() const {
    std::vector<Label> out;
    for (std::uint32_t b = bits_; b; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
  }
  LabelSet complement(int n) const { return from_bits(all(n).bits_ & ~bits_); }

  constexpr bool subset_of(LabelSet o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr bool disjoint(LabelSet o) const { return (bits_ & o.bits_) == 0; }

  friend constexpr LabelSet operator|(LabelSet a, LabelSet b) { return from_bits(a.bits_ | b.bits_); }
  friend constexpr LabelSet operator&(LabelSet a, LabelSet b) { return from_bits(a.bits_ & b.bits_); }
  friend constexpr LabelSet operator-(LabelSet a, LabelSet b) { return from_bits(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(LabelSet a, LabelSet b) = default;

  /// Lexicographic on the ascending label sequences.
  friend bool lex_less(LabelSet a, LabelSet b) {
    std::uint32_t x = a.bits_, y = b.bits_;
    while (x && y) {
      const int lx = std::countr_zero(x), ly = std::countr_zero(y);
      if (lx != ly) return lx < ly;
      x &= x - 1;
      y &= y - 1;
    }
    return !x && y;
  }

 private:
  static void check(int l) {
    if (l < 1 || l > kMaxLabel) throw std::out_of_range("label outside 1..31");
  }

  std::uint32_t bits_ = 0;
};

/// True iff `s` occupies consecutive slots of `word` read cyclically.
inline bool is_cyclic_interval(const CircularOrder& word, LabelSet s) {
  const int n = word.size();
  const int k = s.size();
  if (k == 0 || k == n) return true;
  // exactly one slot enters the set when walking around the circle
  int entries = 0;
  for (int i = 0; i < n; ++i)
    if (s.contains(word[i]) && !s.contains(word[(i + n - 1) % n])) ++entries;
  return entries == 1;
}

}  // namespace m0n
