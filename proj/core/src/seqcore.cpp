#include "dupdist/seqcore.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

#include "dupdist/errors.hpp"

namespace dupdist {
namespace {

constexpr double kFloorSlack = 1e-9;

std::string step_text(std::size_t i, std::size_t h) {
  return "(" + std::to_string(i) + "," + std::to_string(h) + ")";
}

}  // namespace

Root::Root(BinarySeq value) : value_(std::move(value)) {
  const auto n = value_.size();
  const bool ok = (n == 1) || (n == 2 && value_[1] != value_[2]) ||
                  (n == 3 && value_[1] != value_[2] && value_[2] != value_[3]);
  if (!ok) throw InvalidInput("'" + value_.to_string() + "' is not a binary root");
}

Root Root::parse(std::string_view text) { return Root(BinarySeq::from_string(text)); }

const std::vector<Root>& Root::all() {
  static const std::vector<Root> roots = {Root::parse("0"),  Root::parse("1"),
                                          Root::parse("01"), Root::parse("10"),
                                          Root::parse("010"), Root::parse("101")};
  return roots;
}

MismatchRule MismatchRule::linear(double beta) {
  if (!(beta >= 0.0 && beta < 1.0)) {
    throw InvalidInput("beta must lie in [0, 1), got " + std::to_string(beta));
  }
  return MismatchRule(Kind::linear, beta);
}

MismatchRule MismatchRule::power(double a) {
  if (!(a > 0.0 && a < 1.0)) {
    throw InvalidInput("exponent a must lie in (0, 1), got " + std::to_string(a));
  }
  return MismatchRule(Kind::power, a);
}

std::size_t MismatchRule::budget(std::size_t h) const {
  const double hd = static_cast<double>(h);
  double allowed = 0.0;
  if (kind_ == Kind::linear) {
    if (param_ == 0.0) return 0;
    allowed = param_ * hd;
  } else {
    allowed = (0.5 + std::pow(hd, -param_)) * hd;
  }
  return static_cast<std::size_t>(std::floor(allowed + kFloorSlack));
}

Root root_of(const BinarySeq& s) {
  if (s.empty()) throw InvalidInput("the empty sequence has no root");
  const bool first = s.front();
  const bool last = s.back();
  bool constant = true;
  for (std::size_t pos = 1; pos <= s.size() && constant; ++pos) {
    if (s[pos] != first) constant = false;
  }
  if (constant) return Root(BinarySeq::constant(first, 1));
  BitBuilder b(3);
  b.push_back(first);
  if (first == last) {
    b.push_back(!first);
    b.push_back(first);
  } else {
    b.push_back(last);
  }
  return Root(std::move(b).build());
}

bool is_square_free(const BinarySeq& s) {
  const std::size_t n = s.size();
  for (std::size_t h = 1; 2 * h <= n; ++h) {
    for (std::size_t i = 1; i + 2 * h - 1 <= n; ++i) {
      if (s.hamming(i, i + h, h) == 0) return false;
    }
  }
  return true;
}

std::vector<TandemRepeat> find_repeats(const BinarySeq& s, const MismatchRule& rule) {
  std::vector<TandemRepeat> out;
  const std::size_t n = s.size();
  for (std::size_t i = 1; i + 1 <= n; ++i) {
    for (std::size_t h = 1; i + 2 * h - 1 <= n; ++h) {
      if (s.hamming(i, i + h, h) <= rule.budget(h)) out.push_back({i, h});
    }
  }
  return out;
}

std::vector<TandemRepeat> find_repeats(const BinarySeq& s, double beta) {
  return find_repeats(s, MismatchRule::linear(beta));
}

BinarySeq apply_dedup(const BinarySeq& s, const DedupStep& step, const MismatchRule& rule) {
  const auto [i, h, keep] = step;
  if (i < 1 || h < 1 || i - 1 + 2 * h > s.size()) {
    throw InvalidStep(i, h, std::nullopt, std::nullopt,
                      "step " + step_text(i, h) + " does not fit in a sequence of length " +
                          std::to_string(s.size()));
  }
  const std::size_t observed = s.hamming(i, i + h, h);
  const std::size_t allowed = rule.budget(h);
  if (observed > allowed) {
    throw InvalidStep(i, h, observed, std::nullopt,
                      "step " + step_text(i, h) + " blocks differ in " +
                          std::to_string(observed) + " positions, allowed " +
                          std::to_string(allowed));
  }
  return keep == Keep::first ? s.erase(i + h, h) : s.erase(i, h);
}

BinarySeq apply_dedup(const BinarySeq& s, const DedupStep& step, double beta) {
  return apply_dedup(s, step, MismatchRule::linear(beta));
}

BinarySeq apply_dup(const BinarySeq& s, std::size_t i, std::size_t h) {
  return s.duplicate(i, h);
}

namespace {

BinarySeq run_steps(const BinarySeq& original, const std::vector<DedupStep>& steps,
                    const MismatchRule& rule) {
  BinarySeq cur = original;
  for (std::size_t t = 0; t < steps.size(); ++t) {
    try {
      cur = apply_dedup(cur, steps[t], rule);
    } catch (const InvalidStep& e) {
      throw InvalidStep(e.i(), e.h(), e.observed_mismatches(), t,
                        "step " + std::to_string(t) + ": " + e.what());
    }
  }
  return cur;
}

}  // namespace

BinarySeq replay(const DedupProcess& p) {
  BinarySeq cur = run_steps(p.original, p.steps, p.rule);
  if (!(cur == p.final_seq)) {
    throw VerificationError("replay ends at '" + cur.to_string() + "' but the process claims '" +
                            p.final_seq.to_string() + "'");
  }
  if (!is_square_free(cur)) {
    throw VerificationError("replay ends at '" + cur.to_string() + "', which is not square-free");
  }
  return cur;
}

DedupProcess make_process(const BinarySeq& original, std::vector<DedupStep> steps,
                          const MismatchRule& rule) {
  DedupProcess p{original, rule, std::move(steps), {}};
  p.final_seq = run_steps(p.original, p.steps, p.rule);
  return p;
}

bool is_normal(const std::vector<DedupStep>& steps) {
  for (std::size_t t = 0; t + 1 < steps.size(); ++t) {
    const auto& cur = steps[t];
    const auto& next = steps[t + 1];
    if (next.i < cur.i && next.i + 2 * next.h < cur.i) return false;
  }
  return true;
}

DedupProcess normalize_process(const DedupProcess& p) {
  if (!p.rule.is_exact()) throw InvalidInput("normalization requires an exact process");
  replay(p);

  // Each swap moves a step whose removed block lies strictly left (in the
  // original coordinates) ahead of one lying to its right, so the number of
  // swaps is bounded by the number of inversions, below f^2.
  std::vector<DedupStep> steps = p.steps;
  const std::size_t limit = steps.size() * steps.size();
  std::size_t swaps = 0;
  for (;;) {
    std::size_t t = 0;
    for (; t + 1 < steps.size(); ++t) {
      if (steps[t + 1].i < steps[t].i && steps[t + 1].i + 2 * steps[t + 1].h < steps[t].i) break;
    }
    if (t + 1 >= steps.size()) break;
    if (++swaps > limit) {
      throw VerificationError("normalization did not terminate within " + std::to_string(limit) +
                              " swaps");
    }
    const DedupStep earlier = steps[t + 1];
    DedupStep later = steps[t];
    later.i -= earlier.h;
    steps[t] = earlier;
    steps[t + 1] = later;
  }

  DedupProcess out{p.original, p.rule, std::move(steps), p.final_seq};
  replay(out);
  return out;
}

std::size_t kmer_count(const BinarySeq& s, std::size_t k) {
  if (k < 1 || k > s.size()) {
    throw InvalidInput("k=" + std::to_string(k) + " outside 1.." + std::to_string(s.size()));
  }
  const std::size_t windows = s.size() - k + 1;
  if (k <= 64) {
    std::unordered_set<std::uint64_t> seen;
    seen.reserve(windows);
    for (std::size_t idx = 0; idx < windows; ++idx) seen.insert(s.chunk(idx) >> (64 - k));
    return seen.size();
  }
  std::unordered_set<BinarySeq> seen;
  for (std::size_t pos = 1; pos <= windows; ++pos) seen.insert(s.substr(pos, k));
  return seen.size();
}

std::size_t kmer_lower_bound(const BinarySeq& s, std::size_t k) {
  if (k < 4) throw InvalidInput("the k-mer bound needs k >= 4");
  const std::size_t distinct = kmer_count(s, k);
  return (distinct + (k - 2)) / (k - 1);
}

std::size_t ceil_log2(std::uint64_t x) {
  std::size_t e = 0;
  while (e < 64 && (std::uint64_t{1} << e) < x) ++e;
  return e;
}

std::size_t log_lower_bound(const BinarySeq& s) {
  const std::size_t root_len = root_of(s).value().size();
  std::size_t e = 0;
  while ((root_len << e) < s.size()) ++e;
  return e;
}

}  // namespace dupdist
