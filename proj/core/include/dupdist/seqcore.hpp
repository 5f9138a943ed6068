#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "dupdist/binary_seq.hpp"

namespace dupdist {

/// One of the six binary square-free words {0, 1, 01, 10, 010, 101}.
class Root {
 public:
  /// Throws InvalidInput if `value` is not one of the six roots.
  explicit Root(BinarySeq value);
  static Root parse(std::string_view text);

  const BinarySeq& value() const noexcept { return value_; }
  std::string to_string() const { return value_.to_string(); }

  /// All six roots in the order 0, 1, 01, 10, 010, 101.
  static const std::vector<Root>& all();

  friend bool operator==(const Root& a, const Root& b) noexcept { return a.value_ == b.value_; }

 private:
  BinarySeq value_;
};

/// Two adjacent blocks s[i..i+h-1], s[i+h..i+2h-1] (1-based).
struct TandemRepeat {
  std::size_t i = 1;
  std::size_t h = 1;

  friend bool operator==(const TandemRepeat&, const TandemRepeat&) = default;
  friend auto operator<=>(const TandemRepeat&, const TandemRepeat&) = default;
};

/// Maximum Hamming distance tolerated between the two blocks of a repeat of
/// block length h.
///
/// `linear(beta)` allows floor(beta*h) mismatches; `power(a)` allows
/// floor((1/2 + h^-a) * h). Floors are taken with a 1e-9 slack so that
/// products like (1/3)*3 land on the integer.
class MismatchRule {
 public:
  static MismatchRule exact() { return linear(0.0); }
  static MismatchRule linear(double beta);
  static MismatchRule power(double a);

  std::size_t budget(std::size_t h) const;

  bool is_exact() const noexcept { return kind_ == Kind::linear && param_ == 0.0; }
  bool is_linear() const noexcept { return kind_ == Kind::linear; }
  /// beta for linear rules, a for power rules.
  double parameter() const noexcept { return param_; }

  friend bool operator==(const MismatchRule&, const MismatchRule&) = default;

 private:
  enum class Kind { linear, power };
  MismatchRule(Kind kind, double param) : kind_(kind), param_(param) {}

  Kind kind_ = Kind::linear;
  double param_ = 0.0;
};

enum class Keep { first, second };

struct DedupStep {
  std::size_t i = 1;
  std::size_t h = 1;
  Keep keep = Keep::first;

  friend bool operator==(const DedupStep&, const DedupStep&) = default;
};

/// A replayable deduplication history from `original` down to `final_seq`.
struct DedupProcess {
  BinarySeq original;
  MismatchRule rule = MismatchRule::exact();
  std::vector<DedupStep> steps;
  BinarySeq final_seq;

  std::size_t length() const noexcept { return steps.size(); }

  friend bool operator==(const DedupProcess&, const DedupProcess&) = default;
};

Root root_of(const BinarySeq& s);
bool is_square_free(const BinarySeq& s);

/// All (i,h) whose blocks differ in at most rule.budget(h) positions, sorted by (i,h).
std::vector<TandemRepeat> find_repeats(const BinarySeq& s, const MismatchRule& rule);
std::vector<TandemRepeat> find_repeats(const BinarySeq& s, double beta);

/// Removes the block not kept by `step`. Throws InvalidStep when the blocks
/// are out of range or differ in more than rule.budget(h) positions.
BinarySeq apply_dedup(const BinarySeq& s, const DedupStep& step, const MismatchRule& rule);
BinarySeq apply_dedup(const BinarySeq& s, const DedupStep& step, double beta);

/// Inserts a copy of s[i..i+h-1] immediately after it.
BinarySeq apply_dup(const BinarySeq& s, std::size_t i, std::size_t h);

/// Replays `p.steps` from `p.original`. Returns the reached sequence after
/// checking that it equals `p.final_seq` and is square-free. A failing step
/// raises InvalidStep carrying its index; an endpoint mismatch raises
/// VerificationError.
BinarySeq replay(const DedupProcess& p);

/// Builds a process from `original` and `steps`, filling in the final
/// sequence by replay.
DedupProcess make_process(const BinarySeq& original, std::vector<DedupStep> steps,
                          const MismatchRule& rule = MismatchRule::exact());

/// For all t: i_{t+1} < i_t implies i_{t+1} + 2 h_{t+1} >= i_t.
bool is_normal(const std::vector<DedupStep>& steps);

/// Reorders an exact process into normal form with the same endpoints and
/// step count.
DedupProcess normalize_process(const DedupProcess& p);

/// Number of distinct length-k substrings (linear, not cyclic).
std::size_t kmer_count(const BinarySeq& s, std::size_t k);

/// ceil(K(s) / (k-1)), valid for k >= 4.
std::size_t kmer_lower_bound(const BinarySeq& s, std::size_t k);

/// ceil(log2(|s| / |root(s)|)).
std::size_t log_lower_bound(const BinarySeq& s);

/// ceil(log2(x)) for x >= 1.
std::size_t ceil_log2(std::uint64_t x);

}  // namespace dupdist
