#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "dupdist/binary_seq.hpp"
#include "dupdist/seqcore.hpp"

namespace dupdist {

struct BetaConfig {
  double beta = 0.0;
  int max_n = 12;
};

/// Largest length accepted by the exhaustive beta searches.
inline constexpr int kBetaSearchCap = 16;
/// Below this length the greedy drivers finish with an exhaustive search.
inline constexpr std::size_t kGreedyExhaustiveCap = 12;
/// Above this length the fallback uses the exact halving schedule.
inline constexpr std::size_t kGreedyScanCap = 128;

/// A (beta-)repeat produced by the block/code construction, with its trace.
struct RepeatWitness {
  std::size_t i = 0;
  std::size_t h = 0;
  std::size_t mismatches = 0;
  std::size_t k = 0;
  std::size_t ell = 0;         ///< h = ell * block_size
  std::size_t block_size = 0;  ///< B = floor(n / k^2)
  std::pair<std::size_t, std::size_t> pair{0, 0};  ///< window indices (i < j)
  std::size_t r = 0;           ///< index of the chosen adjacent block pair

  friend bool operator==(const RepeatWitness&, const RepeatWitness&) = default;
};

/// Minimum number of beta-deduplications (either block may be kept) from s
/// to a square-free word.
unsigned beta_distance(const BinarySeq& s, const BetaConfig& cfg);
unsigned rule_distance(const BinarySeq& s, const MismatchRule& rule);

/// Optimal process under `rule`; the smallest (i, h, keep first before
/// second) among minimizing steps is taken.
DedupProcess optimal_rule_process(const BinarySeq& s, const MismatchRule& rule);

/// f_beta(s) for every s with |s| <= max_n, computed level by level.
class BetaTable {
 public:
  BetaTable(double beta, int max_n, std::vector<std::vector<std::uint8_t>> levels);

  double beta() const noexcept { return beta_; }
  int max_n() const noexcept { return max_n_; }
  unsigned at(int length, std::uint64_t value) const;
  unsigned distance(const BinarySeq& s) const;
  /// f_beta(n): the maximum over length-n sequences.
  unsigned max_at(int n) const;

 private:
  double beta_;
  int max_n_;
  std::vector<std::vector<std::uint8_t>> levels_;
};

BetaTable beta_table(const BetaConfig& cfg, unsigned workers = 1);

/// ceil((2 beta + 1) / (2 beta - 1)) for beta > 1/2.
std::size_t plotkin_k(double beta);

/// Constructive beta-repeat of length ell * floor(n / k^2): split the first
/// k^2 B symbols into blocks of size B, compare the k+1 windows of k^2 - k
/// blocks, take the first close pair and then the closest adjacent block
/// pair inside it. Requires beta > 1/2, k >= (2 beta + 1)/(2 beta - 1) and
/// |s| >= k^2.
RepeatWitness plotkin_repeat_finder(const BinarySeq& s, double beta, std::size_t k);

/// Repeatedly removes Plotkin repeats (keeping the first block) while the
/// sequence is at least k^2 long, then finishes greedily/exhaustively.
DedupProcess greedy_log_dedup(const BinarySeq& s, double beta);

/// k = ceil(2 n^(a/(1+a))).
std::size_t power_k(std::size_t n, double a);

/// Same construction with k = power_k(n, a), accepted when the mismatches
/// are within floor((1/2 + h^-a) h). Throws InvalidInput if k^2 > n and
/// VerificationError if the block pair misses the budget.
RepeatWitness nonlinear_repeat_finder(const BinarySeq& s, double a);

/// Greedy driver for the h-dependent budget; see greedy_log_dedup.
DedupProcess greedy_power_dedup(const BinarySeq& s, double a);

/// Slack constants used when comparing greedy_power_dedup step counts with
/// c2 * n^(2a/(1+a)) + c3.
inline constexpr double kPowerStepSlope = 12.0;
inline constexpr double kPowerStepOffset = 60.0;

}  // namespace dupdist
