#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace dupdist {

/// Malformed input: empty sequence, bad symbol, out-of-range argument.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A deduplication step that does not match a (β-)repeat of the sequence
/// it is applied to.
class InvalidStep : public std::runtime_error {
 public:
  InvalidStep(std::size_t i, std::size_t h, std::optional<std::size_t> observed,
              std::optional<std::size_t> step_index, const std::string& what)
      : std::runtime_error(what),
        i_(i),
        h_(h),
        observed_(observed),
        step_index_(step_index) {}

  std::size_t i() const noexcept { return i_; }
  std::size_t h() const noexcept { return h_; }
  /// Hamming distance between the two blocks, when both lie inside the sequence.
  std::optional<std::size_t> observed_mismatches() const noexcept { return observed_; }
  /// Zero-based index of the failing step when raised during replay.
  std::optional<std::size_t> step_index() const noexcept { return step_index_; }

 private:
  std::size_t i_;
  std::size_t h_;
  std::optional<std::size_t> observed_;
  std::optional<std::size_t> step_index_;
};

/// An engine was asked for more than its configured length cap allows.
class CapExceeded : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// A process or table failed an internal consistency check.
class VerificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Reading or writing a persistent table cache failed.
class CacheError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace dupdist
