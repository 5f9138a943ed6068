#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace dupdist {

class DistanceTable;
class FnmGrid;

/// log2 of 6n * sum_{f=1..F} C(n+f,f) C(2n+f,f) C(2n+f+2,f) * weight^f,
/// evaluated with log-gamma binomials and a log-sum-exp accumulation.
double log2_process_count(std::size_t n, std::size_t max_steps, double log2_weight);

/// Whether the counting inequality for the 2^(n alpha) closest sequences
/// holds at F steps. alpha in (0, 1]; alpha = 1 is the all-sequences case.
bool eval_lb2(std::size_t n, std::size_t F, double alpha);
/// Least F for which eval_lb2 holds (binary search; the left side grows in F).
std::size_t min_steps_lb2(std::size_t n, double alpha);

double binary_entropy(double x);
/// 3 (2 + x) H(x / (2 + x)) + x.
double entropy_lhs(double x);
/// Root of entropy_lhs(x) = alpha by bisection, tolerance 1e-9.
double solve_entropy(double alpha);

struct AffineBound {
  double slope = 0.0;
  double intercept = 0.0;

  double at(double n) const noexcept { return slope * n + intercept; }
};

/// f(n) <= f(a,b)/(a-b) * n + max_{i<a} f(i).
AffineBound ub_from_fnm(unsigned fab, std::size_t a, std::size_t b, unsigned max_prefix);

struct BetaCountingResult {
  std::size_t F = 0;
  double ratio = 0.0;  ///< F / n
};

/// Least F satisfying the counting inequality for beta-processes, beta < 1/2.
BetaCountingResult solve_F_beta(std::size_t n, double beta);
/// The beta-process counting inequality at F.
bool eval_beta_counting(std::size_t n, std::size_t F, double beta);

enum class BoundKind { lower, upper, exact };

struct BoundEntry {
  std::string name;
  double value = 0.0;
  BoundKind kind = BoundKind::lower;
  std::string source;
  bool asymptotic = false;  ///< excluded from the finite-n consistency check
};

struct BoundReport {
  std::size_t n = 0;
  std::vector<BoundEntry> entries;
  std::optional<unsigned> exact;
  bool consistent = true;
};

struct BoundInputs {
  const DistanceTable* table = nullptr;
  const FnmGrid* fnm = nullptr;
  double alpha = 0.99;
  std::optional<double> beta;
};

/// Length-32 values (f(32,12) and max_{i<32} f(i)) used when no computed
/// grid is supplied.
inline constexpr unsigned kKnownF32_12 = 8;
inline constexpr unsigned kKnownMaxPrefix32 = 15;

BoundReport bound_report(std::size_t n, const BoundInputs& inputs = {});

std::string to_string(BoundKind kind);

}  // namespace dupdist
