#include "dupdist/approx_engine.hpp"

#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>
#include <unordered_map>

#include "dupdist/errors.hpp"
#include "dupdist/exact_engine.hpp"
#include "packed_ops.hpp"
#include "parallel.hpp"

namespace dupdist {
namespace {

constexpr unsigned kUnreachable = std::numeric_limits<unsigned>::max();
constexpr double kSlack = 1e-9;

// Calls visit(child, i, h, keep) for every rule-repeat of v and both keep
// sides, (i, h) ascending and keep first before second.
template <class Visit>
void for_each_rule_dedup(std::uint64_t v, int len, const MismatchRule& rule, Visit&& visit) {
  for (int i = 1; i + 1 <= len; ++i) {
    for (int h = 1; i - 1 + 2 * h <= len; ++h) {
      const auto d = static_cast<std::size_t>(packed::block_distance(v, len, i, h));
      if (d > rule.budget(static_cast<std::size_t>(h))) continue;
      if (!visit(packed::drop_second(v, len, i, h), i, h, Keep::first)) return;
      if (d != 0 && !visit(packed::drop_first(v, len, i, h), i, h, Keep::second)) return;
    }
  }
}

class RuleSolver {
 public:
  explicit RuleSolver(MismatchRule rule) : rule_(rule) {}

  unsigned solve(std::uint64_t v, int len) {
    if (!packed::has_exact_repeat(v, len)) return 0;
    const std::uint64_t key = (static_cast<std::uint64_t>(len) << 40) | v;
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    unsigned best = kUnreachable;
    for_each_rule_dedup(v, len, rule_, [&](std::uint64_t child, int, int h, Keep) {
      best = std::min(best, solve(child, len - h));
      return best != 0;
    });
    memo_.emplace(key, best + 1);
    return best + 1;
  }

  const MismatchRule& rule() const noexcept { return rule_; }

 private:
  MismatchRule rule_;
  std::unordered_map<std::uint64_t, unsigned> memo_;
};

void check_search_length(std::size_t len, int cap) {
  if (len < 1) throw InvalidInput("empty sequence");
  if (len > static_cast<std::size_t>(cap) || cap > kBetaSearchCap) {
    throw CapExceeded("beta search supports length <= " +
                      std::to_string(std::min(cap, kBetaSearchCap)));
  }
}

std::optional<RepeatWitness> plotkin_search(const BinarySeq& s, std::size_t k,
                                            const MismatchRule& rule) {
  const std::size_t n = s.size();
  const std::size_t big_k = k * k;
  const std::size_t block = n / big_k;
  const std::size_t m = (big_k - k) * block;

  // Plotkin: k+1 words of length m have a pair within (1/2 + 1/(2k)) m.
  std::optional<std::pair<std::size_t, std::size_t>> close;
  for (std::size_t i = 1; i <= k && !close; ++i) {
    for (std::size_t j = i + 1; j <= k + 1; ++j) {
      const std::size_t d = s.hamming((i - 1) * block + 1, (j - 1) * block + 1, m);
      if (2 * k * d <= (k + 1) * m) {
        close.emplace(i, j);
        break;
      }
    }
  }
  if (!close) {
    throw std::logic_error("no window pair within the Plotkin distance; this contradicts the bound");
  }

  const auto [wi, wj] = *close;
  const std::size_t h = (wj - wi) * block;
  const std::size_t blocks = m / h;
  const std::size_t base = (wi - 1) * block + 1;
  std::size_t best_r = 1;
  std::size_t best_d = std::numeric_limits<std::size_t>::max();
  for (std::size_t r = 1; r <= blocks; ++r) {
    const std::size_t start = base + (r - 1) * h;
    const std::size_t d = s.hamming(start, start + h, h);
    if (d < best_d) {
      best_d = d;
      best_r = r;
    }
  }
  if (best_d > rule.budget(h)) return std::nullopt;
  return RepeatWitness{base + (best_r - 1) * h, h, best_d, k, wj - wi, block, {wi, wj}, best_r};
}

// Removes the longest rule-repeat (smallest i on ties) until the sequence is
// short enough for the exhaustive search, then appends an optimal tail.
// Long leftovers go through the exact halving schedule instead; exact
// repeats are valid under every rule.
void finish_small(BinarySeq& cur, const MismatchRule& rule, std::vector<DedupStep>& steps) {
  if (cur.size() > kGreedyScanCap) {
    const DedupProcess h = heuristic_schedule(cur);
    steps.insert(steps.end(), h.steps.begin(), h.steps.end());
    cur = h.final_seq;
    return;
  }
  while (cur.size() > kGreedyExhaustiveCap && !is_square_free(cur)) {
    const auto repeats = find_repeats(cur, rule);
    TandemRepeat pick = repeats.front();
    for (const auto& r : repeats) {
      if (r.h > pick.h) pick = r;
    }
    const DedupStep step{pick.i, pick.h, Keep::first};
    cur = apply_dedup(cur, step, rule);
    steps.push_back(step);
  }
  if (is_square_free(cur)) return;
  const DedupProcess tail = optimal_rule_process(cur, rule);
  steps.insert(steps.end(), tail.steps.begin(), tail.steps.end());
  cur = tail.final_seq;
}

}  // namespace

unsigned rule_distance(const BinarySeq& s, const MismatchRule& rule) {
  check_search_length(s.size(), kBetaSearchCap);
  RuleSolver solver(rule);
  return solver.solve(s.to_integer(), static_cast<int>(s.size()));
}

unsigned beta_distance(const BinarySeq& s, const BetaConfig& cfg) {
  check_search_length(s.size(), cfg.max_n);
  RuleSolver solver(MismatchRule::linear(cfg.beta));
  return solver.solve(s.to_integer(), static_cast<int>(s.size()));
}

DedupProcess optimal_rule_process(const BinarySeq& s, const MismatchRule& rule) {
  check_search_length(s.size(), kBetaSearchCap);
  RuleSolver solver(rule);
  std::uint64_t v = s.to_integer();
  int len = static_cast<int>(s.size());
  unsigned d = solver.solve(v, len);
  std::vector<DedupStep> steps;
  while (d > 0) {
    std::optional<std::pair<std::uint64_t, DedupStep>> pick;
    for_each_rule_dedup(v, len, rule, [&](std::uint64_t child, int i, int h, Keep keep) {
      if (solver.solve(child, len - h) + 1 != d) return true;
      pick.emplace(child, DedupStep{static_cast<std::size_t>(i), static_cast<std::size_t>(h), keep});
      return false;
    });
    if (!pick) throw VerificationError("beta search has no descending step");
    v = pick->first;
    len -= static_cast<int>(pick->second.h);
    steps.push_back(pick->second);
    --d;
  }
  return make_process(s, std::move(steps), rule);
}

BetaTable::BetaTable(double beta, int max_n, std::vector<std::vector<std::uint8_t>> levels)
    : beta_(beta), max_n_(max_n), levels_(std::move(levels)) {}

unsigned BetaTable::at(int length, std::uint64_t value) const {
  if (length < 1 || length > max_n_) throw CapExceeded("length outside beta table range");
  return levels_[static_cast<std::size_t>(length - 1)].at(value);
}

unsigned BetaTable::distance(const BinarySeq& s) const {
  return at(static_cast<int>(s.size()), s.to_integer());
}

unsigned BetaTable::max_at(int n) const {
  if (n < 1 || n > max_n_) throw CapExceeded("length outside beta table range");
  unsigned best = 0;
  for (auto d : levels_[static_cast<std::size_t>(n - 1)]) best = std::max<unsigned>(best, d);
  return best;
}

BetaTable beta_table(const BetaConfig& cfg, unsigned workers) {
  if (cfg.max_n < 1 || cfg.max_n > kBetaSearchCap) {
    throw CapExceeded("beta table supports max_n <= " + std::to_string(kBetaSearchCap));
  }
  const MismatchRule rule = MismatchRule::linear(cfg.beta);
  std::vector<std::vector<std::uint8_t>> levels;
  for (int len = 1; len <= cfg.max_n; ++len) {
    std::vector<std::uint8_t> level(std::size_t{1} << len, 0);
    detail::parallel_ranges(level.size(), workers, [&](std::uint64_t begin, std::uint64_t end) {
      for (std::uint64_t v = begin; v < end; ++v) {
        if (!packed::has_exact_repeat(v, len)) continue;
        unsigned best = kUnreachable;
        for_each_rule_dedup(v, len, rule, [&](std::uint64_t child, int, int h, Keep) {
          best = std::min<unsigned>(best, levels[static_cast<std::size_t>(len - h - 1)][child]);
          return best != 0;
        });
        level[v] = static_cast<std::uint8_t>(best + 1);
      }
    });
    levels.push_back(std::move(level));
  }
  return BetaTable(cfg.beta, cfg.max_n, std::move(levels));
}

std::size_t plotkin_k(double beta) {
  if (!(beta > 0.5 && beta < 1.0)) throw InvalidInput("plotkin_k needs 1/2 < beta < 1");
  return static_cast<std::size_t>(std::ceil((2 * beta + 1) / (2 * beta - 1) - kSlack));
}

RepeatWitness plotkin_repeat_finder(const BinarySeq& s, double beta, std::size_t k) {
  if (!(beta > 0.5 && beta < 1.0)) throw InvalidInput("the Plotkin finder needs 1/2 < beta < 1");
  if (static_cast<double>(k) + kSlack < (2 * beta + 1) / (2 * beta - 1)) {
    throw InvalidInput("k=" + std::to_string(k) + " is below (2 beta + 1)/(2 beta - 1)");
  }
  if (s.size() < k * k) {
    throw InvalidInput("sequence of length " + std::to_string(s.size()) + " is shorter than k^2=" +
                       std::to_string(k * k));
  }
  auto w = plotkin_search(s, k, MismatchRule::linear(beta));
  if (!w) throw std::logic_error("Plotkin block pair exceeds the beta budget");
  return *w;
}

DedupProcess greedy_log_dedup(const BinarySeq& s, double beta) {
  if (!(beta > 0.5 && beta < 1.0)) throw InvalidInput("greedy_log_dedup needs 1/2 < beta < 1");
  if (s.empty()) throw InvalidInput("empty sequence");
  const MismatchRule rule = MismatchRule::linear(beta);
  const std::size_t k = plotkin_k(beta);
  std::vector<DedupStep> steps;
  BinarySeq cur = s;
  while (cur.size() >= k * k) {
    const RepeatWitness w = plotkin_repeat_finder(cur, beta, k);
    const DedupStep step{w.i, w.h, Keep::first};
    cur = apply_dedup(cur, step, rule);
    steps.push_back(step);
  }
  finish_small(cur, rule, steps);
  return make_process(s, std::move(steps), rule);
}

std::size_t power_k(std::size_t n, double a) {
  if (!(a > 0.0 && a < 1.0)) throw InvalidInput("exponent a must lie in (0, 1)");
  const double x = 2.0 * std::pow(static_cast<double>(n), a / (1.0 + a));
  return static_cast<std::size_t>(std::ceil(x - kSlack));
}

RepeatWitness nonlinear_repeat_finder(const BinarySeq& s, double a) {
  const MismatchRule rule = MismatchRule::power(a);
  const std::size_t k = power_k(s.size(), a);
  if (k < 2 || k * k > s.size()) {
    throw InvalidInput("sequence of length " + std::to_string(s.size()) +
                       " is too short for k=" + std::to_string(k));
  }
  auto w = plotkin_search(s, k, rule);
  if (!w) {
    throw VerificationError("block pair misses the (1/2 + h^-a) budget at n=" +
                            std::to_string(s.size()));
  }
  return *w;
}

DedupProcess greedy_power_dedup(const BinarySeq& s, double a) {
  if (s.empty()) throw InvalidInput("empty sequence");
  const MismatchRule rule = MismatchRule::power(a);
  std::vector<DedupStep> steps;
  BinarySeq cur = s;
  for (;;) {
    const std::size_t k = power_k(cur.size(), a);
    if (k < 2 || k * k > cur.size()) break;
    const auto w = plotkin_search(cur, k, rule);
    if (!w) break;
    const DedupStep step{w->i, w->h, Keep::first};
    cur = apply_dedup(cur, step, rule);
    steps.push_back(step);
  }
  finish_small(cur, rule, steps);
  return make_process(s, std::move(steps), rule);
}

}  // namespace dupdist
