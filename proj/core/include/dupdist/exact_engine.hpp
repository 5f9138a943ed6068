#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "dupdist/binary_seq.hpp"
#include "dupdist/seqcore.hpp"

namespace dupdist {

/// Flat array of 4-bit cells, even index in the low nibble.
class NibbleArray {
 public:
  static constexpr unsigned kMaxValue = 15;

  NibbleArray() = default;
  explicit NibbleArray(std::size_t count) : bytes_((count + 1) / 2, 0), count_(count) {}

  std::size_t size() const noexcept { return count_; }
  unsigned get(std::size_t idx) const noexcept {
    const std::uint8_t b = bytes_[idx >> 1];
    return (idx & 1) ? (b >> 4) : (b & 0x0F);
  }
  void set(std::size_t idx, unsigned value) noexcept {
    std::uint8_t& b = bytes_[idx >> 1];
    b = (idx & 1) ? static_cast<std::uint8_t>((b & 0x0F) | (value << 4))
                  : static_cast<std::uint8_t>((b & 0xF0) | (value & 0x0F));
  }

  const std::vector<std::uint8_t>& bytes() const noexcept { return bytes_; }
  std::vector<std::uint8_t>& bytes() noexcept { return bytes_; }

  friend bool operator==(const NibbleArray&, const NibbleArray&) = default;

 private:
  std::vector<std::uint8_t> bytes_;
  std::size_t count_ = 0;
};

struct SearchConfig {
  int max_n = 20;
  /// 0 means "use available hardware parallelism".
  unsigned worker_count = 1;
  std::optional<std::filesystem::path> cache_path;
};

/// Exact duplication distance f(s) for every binary s with 1 <= |s| <= max_n,
/// stored per length and indexed by the integer encoding of s.
class DistanceTable {
 public:
  static constexpr int kMaxLength = 32;

  DistanceTable() = default;
  DistanceTable(int max_n, std::vector<NibbleArray> levels);

  int max_n() const noexcept { return max_n_; }
  unsigned at(int length, std::uint64_t value) const { return level(length).get(value); }
  const NibbleArray& level(int length) const;

  friend bool operator==(const DistanceTable&, const DistanceTable&) = default;

 private:
  int max_n_ = 0;
  std::vector<NibbleArray> levels_;
};

/// Computes the table level by level: duplications strictly increase length,
/// so level L only reads levels < L. Entries of a level are split across
/// `cfg.worker_count` threads; results do not depend on the worker count.
/// Throws VerificationError if a value would not fit in a nibble.
DistanceTable build_table(const SearchConfig& cfg);

/// Loads `cfg.cache_path` when it holds a table covering `cfg.max_n`,
/// otherwise builds the table and writes the cache. A corrupt cache is
/// rebuilt; `warning` (if given) receives a description.
DistanceTable load_or_build_table(const SearchConfig& cfg, std::string* warning = nullptr);

unsigned f_of_seq(const DistanceTable& t, const BinarySeq& s);
unsigned f_n(const DistanceTable& t, int n);
/// Maximum f over length-n sequences with the given root, or nullopt when
/// no length-n sequence has that root.
std::optional<unsigned> f_sigma_n(const DistanceTable& t, int n, const Root& sigma);

/// Minimum number of exact deduplications taking every length-n sequence
/// to length <= m.
unsigned f_n_m(const SearchConfig& cfg, int n, int m);

/// f(n, m) for all 3 <= m < n <= max_n.
class FnmGrid {
 public:
  FnmGrid() = default;
  explicit FnmGrid(int max_n);

  int max_n() const noexcept { return max_n_; }
  unsigned at(int n, int m) const;
  void set(int n, int m, unsigned value);

 private:
  int max_n_ = 0;
  std::vector<unsigned> cells_;
};

FnmGrid compute_fnm_grid(const SearchConfig& cfg);

/// Witness of an optimal exact process read off the table; among minimizing
/// deduplications the smallest (i,h) is taken.
DedupProcess witness_process(const DistanceTable& t, const BinarySeq& s);

/// Minimum number of parallel steps, each removing a non-empty set of
/// exact repeats whose spans are pairwise disjoint.
unsigned parallel_distance(const BinarySeq& s);
inline constexpr std::size_t kParallelDistanceCap = 16;

/// Run-halving then alternating-halving process; works for any length.
DedupProcess heuristic_schedule(const BinarySeq& s);

/// Independent top-down distance search keyed by sequence text.
class DistanceOracle {
 public:
  static constexpr std::size_t kDefaultCap = 14;

  explicit DistanceOracle(std::size_t cap = kDefaultCap) : cap_(cap) {}

  unsigned distance(const BinarySeq& s);
  /// Optimal process, smallest (i,h) among minimizing steps.
  DedupProcess optimal_process(const BinarySeq& s);

  std::size_t cap() const noexcept { return cap_; }
  std::size_t memo_size() const noexcept { return memo_.size(); }

 private:
  unsigned search(const std::string& key);

  std::size_t cap_;
  std::unordered_map<std::string, unsigned> memo_;
};

unsigned oracle_distance(const BinarySeq& s);

/// Worker count from DUPDIST_THREADS, falling back to hardware parallelism.
unsigned default_worker_count();

}  // namespace dupdist
