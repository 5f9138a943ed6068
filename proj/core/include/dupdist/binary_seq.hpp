#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace dupdist {

/// Immutable bit-packed binary word.
///
/// Positions are 1-based. Symbols are stored most-significant-bit first, so
/// for sequences of at most 64 symbols `to_integer()` returns
/// sum_i s_i * 2^(size - i), and the packed words compare like the text.
class BinarySeq {
 public:
  BinarySeq() = default;

  /// Parses an ASCII string of '0'/'1'. Throws InvalidInput on other symbols.
  static BinarySeq from_string(std::string_view text);
  /// Sequence of `length` symbols (<= 64) encoded by `value`, position 1 most significant.
  static BinarySeq from_integer(std::uint64_t value, std::size_t length);
  static BinarySeq constant(bool symbol, std::size_t length);

  std::size_t size() const noexcept { return size_; }
  bool empty() const noexcept { return size_ == 0; }

  /// Symbol at 1-based position `pos`. Unchecked.
  bool operator[](std::size_t pos) const noexcept { return bit(pos - 1); }
  /// Symbol at 1-based position `pos`. Throws InvalidInput when out of range.
  bool at(std::size_t pos) const;

  bool front() const noexcept { return bit(0); }
  bool back() const noexcept { return bit(size_ - 1); }

  std::string to_string() const;
  /// Integer encoding; requires size() <= 64.
  std::uint64_t to_integer() const;

  /// Substring starting at 1-based `pos` of length `len`.
  BinarySeq substr(std::size_t pos, std::size_t len) const;
  /// Copy with `len` symbols starting at 1-based `pos` removed.
  BinarySeq erase(std::size_t pos, std::size_t len) const;
  /// Copy with `len` symbols starting at 1-based `pos` inserted again right
  /// after themselves (a tandem duplication).
  BinarySeq duplicate(std::size_t pos, std::size_t len) const;
  BinarySeq complement() const;
  BinarySeq concat(const BinarySeq& other) const;

  /// Hamming distance between the blocks [a, a+len) and [b, b+len), 1-based.
  std::size_t hamming(std::size_t a, std::size_t b, std::size_t len) const;

  /// 64 symbols starting at 0-based index `idx`, first symbol in the top bit;
  /// symbols past the end read as 0.
  std::uint64_t chunk(std::size_t idx) const noexcept;

  friend bool operator==(const BinarySeq& a, const BinarySeq& b) noexcept {
    return a.size_ == b.size_ && a.words_ == b.words_;
  }
  friend bool operator<(const BinarySeq& a, const BinarySeq& b) noexcept;

  std::size_t hash() const noexcept;

 private:
  friend class BitBuilder;

  bool bit(std::size_t idx) const noexcept {
    return (words_[idx >> 6] >> (63 - (idx & 63))) & 1U;
  }

  std::vector<std::uint64_t> words_;
  std::size_t size_ = 0;
};

/// Append-only builder used to assemble sequences from ranges of others.
class BitBuilder {
 public:
  BitBuilder() = default;
  explicit BitBuilder(std::size_t reserve_bits);

  void push_back(bool symbol);
  /// Appends `len` symbols of `src` starting at 0-based index `idx`.
  void append(const BinarySeq& src, std::size_t idx, std::size_t len);
  void append(const BinarySeq& src) { append(src, 0, src.size()); }

  std::size_t size() const noexcept { return size_; }
  BinarySeq build() &&;

 private:
  void append_bits(std::uint64_t bits, std::size_t count);

  std::vector<std::uint64_t> words_;
  std::size_t size_ = 0;
};

std::string to_string(const BinarySeq& s);

}  // namespace dupdist

template <>
struct std::hash<dupdist::BinarySeq> {
  std::size_t operator()(const dupdist::BinarySeq& s) const noexcept { return s.hash(); }
};
