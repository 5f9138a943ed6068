#pragma once

// Repeat enumeration on sequences packed into one machine word: a length-L
// sequence is the integer sum_i s_i 2^(L-i), position 1 most significant.

#include <algorithm>
#include <bit>
#include <cstdint>

namespace dupdist::packed {

constexpr std::uint64_t low_mask(int bits) noexcept {
  return bits >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << bits) - 1);
}

/// Removes the second block of the repeat starting at 1-based `i`.
constexpr std::uint64_t drop_second(std::uint64_t v, int len, int i, int h) noexcept {
  const int tail = len - (i - 1) - 2 * h;
  return ((v >> (tail + h)) << tail) | (v & low_mask(tail));
}

/// Removes the first block of the repeat starting at 1-based `i`.
constexpr std::uint64_t drop_first(std::uint64_t v, int len, int i, int h) noexcept {
  const int tail = len - (i - 1) - h;
  return ((v >> (tail + h)) << tail) | (v & low_mask(tail));
}

/// Mismatches between the blocks of length h starting at 1-based i and i+h.
constexpr int block_distance(std::uint64_t v, int len, int i, int h) noexcept {
  const int tail = len - (i - 1) - 2 * h;
  const std::uint64_t second = (v >> tail) & low_mask(h);
  const std::uint64_t first = (v >> (tail + h)) & low_mask(h);
  return std::popcount(first ^ second);
}

/// Calls visit(child, i, h) for every exact repeat (i,h) of v, where child
/// is v with one block removed. Stops when visit returns false.
template <class Visit>
void for_each_exact_dedup(std::uint64_t v, int len, Visit&& visit) {
  for (int h = 1; 2 * h <= len; ++h) {
    // Bit b starts as "symbols at LSB offsets b and b+h agree"; after folding
    // it marks h consecutive agreements, i.e. a repeat followed by b symbols.
    std::uint64_t runs = ~(v ^ (v >> h)) & low_mask(len - h);
    for (int span = 1; span < h;) {
      const int shift = std::min(span, h - span);
      runs &= runs >> shift;
      span += shift;
    }
    while (runs != 0) {
      const int b = std::countr_zero(runs);
      runs &= runs - 1;
      const std::uint64_t child = ((v >> (b + h)) << b) | (v & low_mask(b));
      if (!visit(child, len - 2 * h - b + 1, h)) return;
    }
  }
}

inline bool has_exact_repeat(std::uint64_t v, int len) {
  bool found = false;
  for_each_exact_dedup(v, len, [&](std::uint64_t, int, int) {
    found = true;
    return false;
  });
  return found;
}

}  // namespace dupdist::packed
