#include "dupdist/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "dupdist/errors.hpp"
#include "dupdist/exact_engine.hpp"
#include "dupdist/seqcore.hpp"

namespace dupdist {
namespace {

double log2_binomial(double p, double q) {
  return (std::lgamma(p + 1) - std::lgamma(q + 1) - std::lgamma(p - q + 1)) / std::log(2.0);
}

// log2(2^x - 1) for x > 0.
double log2_pow2_minus_one(double x) { return x + std::log2(-std::expm1(-x * std::log(2.0))); }

// Least F in [1, n] satisfying a predicate that is monotone in F.
template <class Holds>
std::size_t least_satisfying(std::size_t n, Holds holds) {
  std::size_t lo = 1;
  std::size_t hi = std::max<std::size_t>(n, 1);
  if (!holds(hi)) throw VerificationError("counting inequality fails even at F = n");
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (holds(mid)) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return lo;
}

}  // namespace

double log2_process_count(std::size_t n, std::size_t max_steps, double log2_weight) {
  if (max_steps == 0) return -std::numeric_limits<double>::infinity();
  const double nd = static_cast<double>(n);
  double peak = -std::numeric_limits<double>::infinity();
  std::vector<double> terms;
  terms.reserve(max_steps);
  for (std::size_t f = 1; f <= max_steps; ++f) {
    const double fd = static_cast<double>(f);
    const double t = log2_binomial(nd + fd, fd) + log2_binomial(2 * nd + fd, fd) +
                     log2_binomial(2 * nd + fd + 2, fd) + log2_weight * fd;
    terms.push_back(t);
    peak = std::max(peak, t);
  }
  double sum = 0.0;
  for (double t : terms) sum += std::exp2(t - peak);
  return std::log2(6.0 * nd) + peak + std::log2(sum);
}

bool eval_lb2(std::size_t n, std::size_t F, double alpha) {
  if (!(alpha > 0.0 && alpha <= 1.0)) throw InvalidInput("alpha must lie in (0, 1]");
  if (n < 1) throw InvalidInput("n must be positive");
  const double rhs = log2_pow2_minus_one(static_cast<double>(n) * alpha);
  return log2_process_count(n, F, 1.0) >= rhs;
}

std::size_t min_steps_lb2(std::size_t n, double alpha) {
  return least_satisfying(n, [&](std::size_t F) { return eval_lb2(n, F, alpha); });
}

double binary_entropy(double x) {
  if (x <= 0.0 || x >= 1.0) return 0.0;
  return -x * std::log2(x) - (1 - x) * std::log2(1 - x);
}

double entropy_lhs(double x) { return 3 * (2 + x) * binary_entropy(x / (2 + x)) + x; }

double solve_entropy(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw InvalidInput("alpha must lie in (0, 1)");
  double lo = 0.0;
  double hi = 1.0;  // entropy_lhs(1) > 9
  while (hi - lo > 1e-9) {
    const double mid = 0.5 * (lo + hi);
    if (entropy_lhs(mid) < alpha) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

AffineBound ub_from_fnm(unsigned fab, std::size_t a, std::size_t b, unsigned max_prefix) {
  if (!(a > b && b > 0)) throw InvalidInput("ub_from_fnm needs a > b > 0");
  return {static_cast<double>(fab) / static_cast<double>(a - b), static_cast<double>(max_prefix)};
}

bool eval_beta_counting(std::size_t n, std::size_t F, double beta) {
  if (!(beta >= 0.0 && beta < 0.5)) throw InvalidInput("the counting bound needs 0 <= beta < 1/2");
  const double nd = static_cast<double>(n);
  return log2_process_count(n, F, 2.0) + nd * binary_entropy(beta) >= nd;
}

BetaCountingResult solve_F_beta(std::size_t n, double beta) {
  if (!(beta >= 0.0 && beta < 0.5)) throw InvalidInput("the counting bound needs 0 <= beta < 1/2");
  if (n < 1) throw InvalidInput("n must be positive");
  const std::size_t F = least_satisfying(n, [&](std::size_t f) { return eval_beta_counting(n, f, beta); });
  return {F, static_cast<double>(F) / static_cast<double>(n)};
}

std::string to_string(BoundKind kind) {
  switch (kind) {
    case BoundKind::lower:
      return "lower";
    case BoundKind::upper:
      return "upper";
    case BoundKind::exact:
      return "exact";
  }
  return "unknown";
}

BoundReport bound_report(std::size_t n, const BoundInputs& inputs) {
  if (n < 1) throw InvalidInput("n must be positive");
  BoundReport report;
  report.n = n;
  const double nd = static_cast<double>(n);
  auto add = [&](std::string name, double value, BoundKind kind, std::string source,
                 bool asymptotic = false) {
    report.entries.push_back({std::move(name), value, kind, std::move(source), asymptotic});
  };

  add("log_root_ratio", static_cast<double>(ceil_log2(n)), BoundKind::lower,
      "log2(|s|/|root(s)|) <= f(s), tight for 0^n");
  add("normal_process_counting", static_cast<double>(min_steps_lb2(n, 1.0)), BoundKind::lower,
      "6n sum_f C(n+f,f) C(2n+f,f) C(2n+f+2,f) 2^f >= 2^n - 1");
  const double theta = solve_entropy(inputs.alpha);
  add("entropy_threshold", theta * nd, BoundKind::lower,
      "3(2+x)H(x/(2+x)) + x = alpha at alpha=" + std::to_string(inputs.alpha) +
          "; asymptotic only",
      true);
  if (inputs.beta && *inputs.beta < 0.5) {
    add("beta_counting", static_cast<double>(solve_F_beta(n, *inputs.beta).F), BoundKind::lower,
        "beta-process counting with 2^(nH(beta)) 4^f, beta=" + std::to_string(*inputs.beta));
  }

  add("length", nd, BoundKind::upper, "f(s) <= |s|");

  std::optional<AffineBound> best;
  std::string best_source;
  if (inputs.fnm != nullptr && inputs.table != nullptr) {
    const int top = std::min(inputs.fnm->max_n(), inputs.table->max_n() + 1);
    for (int a = 4; a <= top; ++a) {
      unsigned prefix = 0;
      for (int i = 1; i < a; ++i) prefix = std::max(prefix, f_n(*inputs.table, i));
      for (int b = 3; b < a; ++b) {
        const AffineBound cand = ub_from_fnm(inputs.fnm->at(a, b), a, b, prefix);
        if (!best || cand.at(nd) < best->at(nd)) {
          best = cand;
          best_source = "f(n) <= f(a,b)/(a-b) n + max_{i<a} f(i) with computed f(" +
                        std::to_string(a) + "," + std::to_string(b) + ")";
        }
      }
    }
  }
  const AffineBound known = ub_from_fnm(kKnownF32_12, 32, 12, kKnownMaxPrefix32);
  add("fnm_32_12", known.at(nd), BoundKind::upper,
      "f(n) <= f(32,12)/20 n + max_{i<32} f(i) with f(32,12)=8, max_{i<32} f(i)=15");
  if (best) add("fnm_computed", best->at(nd), BoundKind::upper, best_source);

  if (inputs.table != nullptr && n <= static_cast<std::size_t>(inputs.table->max_n())) {
    report.exact = f_n(*inputs.table, static_cast<int>(n));
    add("exact", *report.exact, BoundKind::exact, "computed table");
  }

  double max_lower = 0.0;
  double min_upper = std::numeric_limits<double>::infinity();
  for (const auto& e : report.entries) {
    if (e.asymptotic) continue;
    if (e.kind == BoundKind::lower) max_lower = std::max(max_lower, e.value);
    if (e.kind == BoundKind::upper) min_upper = std::min(min_upper, e.value);
  }
  report.consistent = max_lower <= min_upper;
  if (report.exact) {
    const double ex = *report.exact;
    report.consistent = report.consistent && max_lower <= ex && ex <= min_upper;
  }
  return report;
}

}  // namespace dupdist
