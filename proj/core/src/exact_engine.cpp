#include "dupdist/exact_engine.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <limits>
#include <thread>
#include <unordered_set>

#include "dupdist/errors.hpp"
#include "dupdist/table_cache.hpp"
#include "packed_ops.hpp"
#include "parallel.hpp"

namespace dupdist {
namespace {

constexpr unsigned kUnreachable = std::numeric_limits<unsigned>::max();

// Graded DP shared by f(s) and f(s; m): entries satisfying `is_base` are 0,
// all others are 1 + the minimum over their exact deduplications.
template <class IsBase>
std::vector<NibbleArray> graded_dp(int max_n, unsigned workers, IsBase is_base) {
  std::vector<NibbleArray> levels;
  levels.reserve(static_cast<std::size_t>(max_n));
  for (int len = 1; len <= max_n; ++len) {
    const std::uint64_t count = std::uint64_t{1} << len;
    NibbleArray level(count);
    std::atomic<bool> overflow{false};
    detail::parallel_ranges(count, workers, [&](std::uint64_t begin, std::uint64_t end) {
      for (std::uint64_t v = begin; v < end; ++v) {
        if (is_base(v, len)) continue;
        unsigned best = kUnreachable;
        packed::for_each_exact_dedup(v, len, [&](std::uint64_t child, int, int h) {
          best = std::min(best, levels[static_cast<std::size_t>(len - h - 1)].get(child));
          return best != 0;
        });
        if (best == kUnreachable || best + 1 > NibbleArray::kMaxValue) {
          overflow.store(true, std::memory_order_relaxed);
          continue;
        }
        level.set(v, best + 1);
      }
    });
    if (overflow.load()) {
      throw VerificationError("distance at length " + std::to_string(len) +
                              " does not fit in a 4-bit cell");
    }
    levels.push_back(std::move(level));
  }
  return levels;
}

unsigned resolve_workers(unsigned requested) {
  return requested == 0 ? default_worker_count() : requested;
}

void check_table_length(const DistanceTable& t, std::size_t len) {
  if (len < 1 || len > static_cast<std::size_t>(t.max_n())) {
    throw CapExceeded("length " + std::to_string(len) + " outside table range 1.." +
                      std::to_string(t.max_n()));
  }
}

}  // namespace

unsigned default_worker_count() {
  if (const char* env = std::getenv("DUPDIST_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

DistanceTable::DistanceTable(int max_n, std::vector<NibbleArray> levels)
    : max_n_(max_n), levels_(std::move(levels)) {
  if (static_cast<int>(levels_.size()) != max_n_) {
    throw InvalidInput("table needs one level per length");
  }
}

const NibbleArray& DistanceTable::level(int length) const {
  if (length < 1 || length > max_n_) {
    throw CapExceeded("length " + std::to_string(length) + " outside table range 1.." +
                      std::to_string(max_n_));
  }
  return levels_[static_cast<std::size_t>(length - 1)];
}

DistanceTable build_table(const SearchConfig& cfg) {
  if (cfg.max_n < 3) throw InvalidInput("max_n must be at least 3");
  if (cfg.max_n > DistanceTable::kMaxLength) {
    throw CapExceeded("max_n " + std::to_string(cfg.max_n) + " exceeds " +
                      std::to_string(DistanceTable::kMaxLength));
  }
  auto levels = graded_dp(cfg.max_n, resolve_workers(cfg.worker_count),
                          [](std::uint64_t v, int len) { return !packed::has_exact_repeat(v, len); });
  return DistanceTable(cfg.max_n, std::move(levels));
}

DistanceTable load_or_build_table(const SearchConfig& cfg, std::string* warning) {
  if (cfg.cache_path && std::filesystem::exists(*cfg.cache_path)) {
    try {
      DistanceTable cached = load_table(*cfg.cache_path);
      if (cached.max_n() >= cfg.max_n) {
        if (cached.max_n() == cfg.max_n) return cached;
        std::vector<NibbleArray> levels;
        for (int len = 1; len <= cfg.max_n; ++len) levels.push_back(cached.level(len));
        return DistanceTable(cfg.max_n, std::move(levels));
      }
    } catch (const CacheError& e) {
      if (warning != nullptr) *warning = std::string("rebuilding corrupt cache: ") + e.what();
    }
  }
  DistanceTable table = build_table(cfg);
  if (cfg.cache_path) save_table(*cfg.cache_path, table);
  return table;
}

unsigned f_of_seq(const DistanceTable& t, const BinarySeq& s) {
  check_table_length(t, s.size());
  return t.at(static_cast<int>(s.size()), s.to_integer());
}

unsigned f_n(const DistanceTable& t, int n) {
  const NibbleArray& level = t.level(n);
  unsigned best = 0;
  for (std::uint64_t v = 0; v < level.size(); ++v) best = std::max(best, level.get(v));
  return best;
}

std::optional<unsigned> f_sigma_n(const DistanceTable& t, int n, const Root& sigma) {
  const NibbleArray& level = t.level(n);
  const BinarySeq& r = sigma.value();
  const bool first = r.front();
  const bool last = r.back();
  const std::uint64_t ones = packed::low_mask(n);
  std::optional<unsigned> best;
  for (std::uint64_t v = 0; v < level.size(); ++v) {
    const bool constant = v == 0 || v == ones;
    if (constant != (r.size() == 1)) continue;
    if (((v >> (n - 1)) & 1U) != first || (v & 1U) != last) continue;
    best = std::max(best.value_or(0), level.get(v));
  }
  return best;
}

unsigned f_n_m(const SearchConfig& cfg, int n, int m) {
  if (!(3 <= m && m < n && n <= cfg.max_n)) {
    throw InvalidInput("f(n,m) needs 3 <= m < n <= max_n");
  }
  if (n > DistanceTable::kMaxLength) throw CapExceeded("n exceeds 32");
  auto levels = graded_dp(n, resolve_workers(cfg.worker_count),
                          [m](std::uint64_t, int len) { return len <= m; });
  const NibbleArray& top = levels.back();
  unsigned best = 0;
  for (std::uint64_t v = 0; v < top.size(); ++v) best = std::max(best, top.get(v));
  return best;
}

FnmGrid::FnmGrid(int max_n)
    : max_n_(max_n), cells_(static_cast<std::size_t>((max_n + 1) * (max_n + 1)), 0) {}

unsigned FnmGrid::at(int n, int m) const {
  if (!(3 <= m && m < n && n <= max_n_)) throw InvalidInput("f(n,m) grid index out of range");
  return cells_[static_cast<std::size_t>(n * (max_n_ + 1) + m)];
}

void FnmGrid::set(int n, int m, unsigned value) {
  cells_[static_cast<std::size_t>(n * (max_n_ + 1) + m)] = value;
}

FnmGrid compute_fnm_grid(const SearchConfig& cfg) {
  if (cfg.max_n < 4) throw InvalidInput("the f(n,m) grid needs max_n >= 4");
  if (cfg.max_n > DistanceTable::kMaxLength) throw CapExceeded("max_n exceeds 32");
  FnmGrid grid(cfg.max_n);
  const unsigned workers = resolve_workers(cfg.worker_count);
  for (int m = 3; m < cfg.max_n; ++m) {
    auto levels = graded_dp(cfg.max_n, workers, [m](std::uint64_t, int len) { return len <= m; });
    for (int n = m + 1; n <= cfg.max_n; ++n) {
      const NibbleArray& level = levels[static_cast<std::size_t>(n - 1)];
      unsigned best = 0;
      for (std::uint64_t v = 0; v < level.size(); ++v) best = std::max(best, level.get(v));
      grid.set(n, m, best);
    }
  }
  return grid;
}

DedupProcess witness_process(const DistanceTable& t, const BinarySeq& s) {
  check_table_length(t, s.size());
  std::vector<DedupStep> steps;
  BinarySeq cur = s;
  unsigned d = f_of_seq(t, cur);
  while (d > 0) {
    const int len = static_cast<int>(cur.size());
    const std::uint64_t v = cur.to_integer();
    std::optional<TandemRepeat> pick;
    packed::for_each_exact_dedup(v, len, [&](std::uint64_t child, int i, int h) {
      if (t.at(len - h, child) + 1 == d) {
        const TandemRepeat cand{static_cast<std::size_t>(i), static_cast<std::size_t>(h)};
        if (!pick || cand < *pick) pick = cand;
      }
      return true;
    });
    if (!pick) throw VerificationError("table has no descending deduplication");
    steps.push_back({pick->i, pick->h, Keep::first});
    cur = apply_dedup(cur, steps.back(), MismatchRule::exact());
    --d;
  }
  return DedupProcess{s, MismatchRule::exact(), std::move(steps), cur};
}

namespace {

class ParallelSolver {
 public:
  unsigned solve(std::uint64_t v, int len) {
    if (!packed::has_exact_repeat(v, len)) return 0;
    const std::uint64_t key = (static_cast<std::uint64_t>(len) << 40) | v;
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    std::vector<std::pair<int, int>> repeats;  // (1-based i, h)
    packed::for_each_exact_dedup(v, len, [&](std::uint64_t, int i, int h) {
      repeats.emplace_back(i, h);
      return true;
    });
    std::sort(repeats.begin(), repeats.end());

    std::unordered_set<std::uint64_t> children;
    std::vector<std::pair<int, int>> chosen;
    collect(v, len, repeats, 0, 1, chosen, children);

    unsigned best = kUnreachable;
    for (std::uint64_t child_key : children) {
      const int child_len = static_cast<int>(child_key >> 40);
      best = std::min(best, solve(child_key & packed::low_mask(40), child_len));
      if (best == 0) break;
    }
    memo_.emplace(key, best + 1);
    return best + 1;
  }

 private:
  static void collect(std::uint64_t v, int len, const std::vector<std::pair<int, int>>& repeats,
                      std::size_t from, int free_from, std::vector<std::pair<int, int>>& chosen,
                      std::unordered_set<std::uint64_t>& children) {
    for (std::size_t k = from; k < repeats.size(); ++k) {
      const auto [i, h] = repeats[k];
      if (i < free_from) continue;
      chosen.emplace_back(i, h);
      std::uint64_t child = v;
      int child_len = len;
      for (auto it = chosen.rbegin(); it != chosen.rend(); ++it) {
        child = packed::drop_second(child, child_len, it->first, it->second);
        child_len -= it->second;
      }
      children.insert((static_cast<std::uint64_t>(child_len) << 40) | child);
      collect(v, len, repeats, k + 1, i + 2 * h, chosen, children);
      chosen.pop_back();
    }
  }

  std::unordered_map<std::uint64_t, unsigned> memo_;
};

}  // namespace

unsigned parallel_distance(const BinarySeq& s) {
  if (s.empty()) throw InvalidInput("empty sequence");
  if (s.size() > kParallelDistanceCap) {
    throw CapExceeded("parallel distance supports length <= " +
                      std::to_string(kParallelDistanceCap));
  }
  ParallelSolver solver;
  return solver.solve(s.to_integer(), static_cast<int>(s.size()));
}

DedupProcess heuristic_schedule(const BinarySeq& s) {
  if (s.empty()) throw InvalidInput("empty sequence");
  std::vector<DedupStep> steps;
  std::size_t runs = 0;
  std::size_t pos = 1;
  while (pos <= s.size()) {
    std::size_t end = pos;
    while (end + 1 <= s.size() && s[end + 1] == s[pos]) ++end;
    std::size_t run = end - pos + 1;
    // After earlier runs collapse to single symbols this run starts at runs+1.
    while (run > 1) {
      const std::size_t h = run / 2;
      steps.push_back({runs + 1, h, Keep::first});
      run -= h;
    }
    ++runs;
    pos = end + 1;
  }
  std::size_t len = runs;
  while (len >= 4) {
    const std::size_t h = 2 * (len / 4);
    steps.push_back({1, h, Keep::first});
    len -= h;
  }
  return make_process(s, std::move(steps));
}

unsigned DistanceOracle::distance(const BinarySeq& s) {
  if (s.empty()) throw InvalidInput("empty sequence");
  if (s.size() > cap_) {
    throw CapExceeded("oracle supports length <= " + std::to_string(cap_));
  }
  return search(s.to_string());
}

unsigned DistanceOracle::search(const std::string& key) {
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  const BinarySeq s = BinarySeq::from_string(key);
  const auto repeats = find_repeats(s, MismatchRule::exact());
  unsigned best = 0;
  if (!repeats.empty()) {
    best = kUnreachable;
    for (const auto& r : repeats) {
      const BinarySeq child = apply_dedup(s, {r.i, r.h, Keep::first}, MismatchRule::exact());
      best = std::min(best, search(child.to_string()));
      if (best == 0) break;
    }
    ++best;
  }
  memo_.emplace(key, best);
  return best;
}

DedupProcess DistanceOracle::optimal_process(const BinarySeq& s) {
  unsigned d = distance(s);
  std::vector<DedupStep> steps;
  BinarySeq cur = s;
  while (d > 0) {
    bool advanced = false;
    for (const auto& r : find_repeats(cur, MismatchRule::exact())) {
      const DedupStep step{r.i, r.h, Keep::first};
      BinarySeq child = apply_dedup(cur, step, MismatchRule::exact());
      if (search(child.to_string()) + 1 == d) {
        steps.push_back(step);
        cur = std::move(child);
        advanced = true;
        break;
      }
    }
    if (!advanced) throw VerificationError("oracle memo has no descending step");
    --d;
  }
  return DedupProcess{s, MismatchRule::exact(), std::move(steps), cur};
}

unsigned oracle_distance(const BinarySeq& s) {
  DistanceOracle oracle;
  return oracle.distance(s);
}

}  // namespace dupdist
