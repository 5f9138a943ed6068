#include "dupdist/binary_seq.hpp"

#include <algorithm>
#include <bit>

#include "dupdist/errors.hpp"

namespace dupdist {
namespace {

constexpr std::uint64_t top_mask(std::size_t count) noexcept {
  return count >= 64 ? ~std::uint64_t{0} : ~(~std::uint64_t{0} >> count);
}

}  // namespace

BinarySeq BinarySeq::from_string(std::string_view text) {
  BitBuilder builder(text.size());
  for (char c : text) {
    if (c != '0' && c != '1') {
      throw InvalidInput("sequence may only contain '0' and '1', got '" + std::string(1, c) +
                         "'");
    }
    builder.push_back(c == '1');
  }
  return std::move(builder).build();
}

BinarySeq BinarySeq::from_integer(std::uint64_t value, std::size_t length) {
  if (length > 64) throw InvalidInput("integer encoding supports at most 64 symbols");
  BinarySeq s;
  s.size_ = length;
  if (length > 0) {
    if (length < 64) value &= (std::uint64_t{1} << length) - 1;
    s.words_.push_back(value << (64 - length));
  }
  return s;
}

BinarySeq BinarySeq::constant(bool symbol, std::size_t length) {
  BinarySeq s;
  s.size_ = length;
  s.words_.assign((length + 63) / 64, symbol ? ~std::uint64_t{0} : 0);
  if (symbol && (length & 63) != 0) s.words_.back() &= top_mask(length & 63);
  return s;
}

bool BinarySeq::at(std::size_t pos) const {
  if (pos < 1 || pos > size_) {
    throw InvalidInput("position " + std::to_string(pos) + " outside 1.." +
                       std::to_string(size_));
  }
  return bit(pos - 1);
}

std::string BinarySeq::to_string() const {
  std::string out(size_, '0');
  for (std::size_t i = 0; i < size_; ++i) {
    if (bit(i)) out[i] = '1';
  }
  return out;
}

std::uint64_t BinarySeq::to_integer() const {
  if (size_ > 64) throw InvalidInput("integer encoding supports at most 64 symbols");
  if (size_ == 0) return 0;
  return words_[0] >> (64 - size_);
}

std::uint64_t BinarySeq::chunk(std::size_t idx) const noexcept {
  const std::size_t w = idx >> 6;
  const std::size_t off = idx & 63;
  if (w >= words_.size()) return 0;
  std::uint64_t out = words_[w] << off;
  if (off != 0 && w + 1 < words_.size()) out |= words_[w + 1] >> (64 - off);
  return out;
}

BinarySeq BinarySeq::substr(std::size_t pos, std::size_t len) const {
  if (pos < 1 || pos - 1 + len > size_) {
    throw InvalidInput("substring out of range");
  }
  BitBuilder b(len);
  b.append(*this, pos - 1, len);
  return std::move(b).build();
}

BinarySeq BinarySeq::erase(std::size_t pos, std::size_t len) const {
  if (pos < 1 || pos - 1 + len > size_) throw InvalidInput("erase range out of bounds");
  BitBuilder b(size_ - len);
  b.append(*this, 0, pos - 1);
  b.append(*this, pos - 1 + len, size_ - (pos - 1 + len));
  return std::move(b).build();
}

BinarySeq BinarySeq::duplicate(std::size_t pos, std::size_t len) const {
  if (pos < 1 || len < 1 || pos - 1 + len > size_) {
    throw InvalidInput("duplication (" + std::to_string(pos) + "," + std::to_string(len) +
                       ") out of range for length " + std::to_string(size_));
  }
  BitBuilder b(size_ + len);
  b.append(*this, 0, pos - 1 + len);
  b.append(*this, pos - 1, len);
  b.append(*this, pos - 1 + len, size_ - (pos - 1 + len));
  return std::move(b).build();
}

BinarySeq BinarySeq::complement() const {
  BinarySeq out = *this;
  for (auto& w : out.words_) w = ~w;
  if (!out.words_.empty() && (size_ & 63) != 0) out.words_.back() &= top_mask(size_ & 63);
  return out;
}

BinarySeq BinarySeq::concat(const BinarySeq& other) const {
  BitBuilder b(size_ + other.size_);
  b.append(*this);
  b.append(other);
  return std::move(b).build();
}

std::size_t BinarySeq::hamming(std::size_t a, std::size_t b, std::size_t len) const {
  if (a < 1 || b < 1 || a - 1 + len > size_ || b - 1 + len > size_) {
    throw InvalidInput("hamming range out of bounds");
  }
  std::size_t dist = 0;
  for (std::size_t done = 0; done < len; done += 64) {
    const std::size_t count = std::min<std::size_t>(64, len - done);
    const std::uint64_t x = (chunk(a - 1 + done) ^ chunk(b - 1 + done)) & top_mask(count);
    dist += static_cast<std::size_t>(std::popcount(x));
  }
  return dist;
}

bool operator<(const BinarySeq& a, const BinarySeq& b) noexcept {
  if (a.size_ != b.size_) return a.size_ < b.size_;
  return a.words_ < b.words_;
}

std::size_t BinarySeq::hash() const noexcept {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ size_;
  for (auto w : words_) {
    h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

BitBuilder::BitBuilder(std::size_t reserve_bits) { words_.reserve((reserve_bits + 63) / 64); }

void BitBuilder::append_bits(std::uint64_t bits, std::size_t count) {
  if (count == 0) return;
  bits &= top_mask(count);
  const std::size_t off = size_ & 63;
  if (off == 0) {
    words_.push_back(bits);
  } else {
    words_.back() |= bits >> off;
    if (off + count > 64) words_.push_back(bits << (64 - off));
  }
  size_ += count;
}

void BitBuilder::push_back(bool symbol) {
  append_bits(symbol ? (std::uint64_t{1} << 63) : 0, 1);
}

void BitBuilder::append(const BinarySeq& src, std::size_t idx, std::size_t len) {
  for (std::size_t done = 0; done < len; done += 64) {
    const std::size_t count = std::min<std::size_t>(64, len - done);
    append_bits(src.chunk(idx + done), count);
  }
}

BinarySeq BitBuilder::build() && {
  BinarySeq s;
  s.words_ = std::move(words_);
  s.size_ = size_;
  return s;
}

std::string to_string(const BinarySeq& s) { return s.to_string(); }

}  // namespace dupdist
