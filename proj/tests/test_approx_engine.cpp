#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "dupdist/approx_engine.hpp"
#include "dupdist/errors.hpp"
#include "dupdist/exact_engine.hpp"
#include "string_oracle.hpp"

using namespace dupdist;

namespace {

BinarySeq random_seq(std::mt19937_64& rng, std::size_t n) {
  BitBuilder b(n);
  for (std::size_t i = 0; i < n; ++i) b.push_back((rng() & 1) != 0);
  return std::move(b).build();
}

}  // namespace

TEST(BetaDistance, Examples) {
  EXPECT_EQ(beta_distance(BinarySeq::from_string("0110"), {0.5}), 1u);
  EXPECT_EQ(beta_distance(BinarySeq::from_string("1001011"), {0.0}), 3u);
  EXPECT_EQ(beta_distance(BinarySeq::from_string("010"), {0.75}), 0u);
  EXPECT_THROW(beta_distance(BinarySeq::constant(false, 17), {0.5}), CapExceeded);
}

TEST(BetaDistance, MatchesStringOracle) {
  for (double beta : {0.0, 0.25, 0.5, 0.75}) {
    oracle::Distance f(beta);
    for (std::size_t n = 1; n <= 9; ++n) {
      for (unsigned long long v = 0; v < (1ULL << n); ++v) {
        const std::string t = oracle::bits(v, n);
        ASSERT_EQ(beta_distance(BinarySeq::from_string(t), {beta}), f(t)) << t << " " << beta;
      }
    }
  }
}

TEST(BetaTable, AgreesWithTopDownSearch) {
  for (double beta : {0.25, 0.6}) {
    const BetaTable t = beta_table({beta, 9}, 2);
    for (int n = 1; n <= 9; ++n) {
      for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); v += 3) {
        const auto s = BinarySeq::from_integer(v, n);
        ASSERT_EQ(t.at(n, v), beta_distance(s, {beta})) << s.to_string();
      }
    }
    EXPECT_EQ(t.max_at(1), 0u);
  }
}

TEST(BetaDistance, MonotoneInBeta) {
  SearchConfig cfg;
  cfg.max_n = 10;
  const auto exact = build_table(cfg);
  const BetaTable t25 = beta_table({0.25, 10});
  const BetaTable t50 = beta_table({0.5, 10});
  for (int n = 1; n <= 10; ++n) {
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
      ASSERT_LE(t25.at(n, v), exact.at(n, v));
      ASSERT_LE(t50.at(n, v), t25.at(n, v));
    }
  }
}

TEST(BetaDistance, OptimalProcessReplays) {
  const auto s = BinarySeq::from_string("0111010011");
  for (double beta : {0.0, 0.3, 0.6}) {
    const auto rule = MismatchRule::linear(beta);
    const auto p = optimal_rule_process(s, rule);
    EXPECT_EQ(p.length(), rule_distance(s, rule));
    EXPECT_EQ(replay(p), p.final_seq);
  }
}

TEST(Plotkin, KValues) {
  EXPECT_EQ(plotkin_k(0.6), 11u);
  EXPECT_EQ(plotkin_k(0.75), 5u);
  EXPECT_EQ(plotkin_k(0.9), 4u);
  EXPECT_THROW(plotkin_k(0.5), InvalidInput);
}

TEST(Plotkin, WitnessesAreValidRepeats) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 121 + rng() % 3000;
    const auto s = random_seq(rng, n);
    const auto w = plotkin_repeat_finder(s, 0.6, 11);
    const std::size_t B = n / 121;
    EXPECT_EQ(w.block_size, B);
    EXPECT_EQ(w.h, w.ell * B);
    EXPECT_GE(w.ell, 1u);
    EXPECT_LE(w.i + 2 * w.h - 1, n);
    EXPECT_EQ(w.mismatches, s.hamming(w.i, w.i + w.h, w.h));
    EXPECT_LE(w.mismatches, MismatchRule::linear(0.6).budget(w.h));
  }
  EXPECT_THROW(plotkin_repeat_finder(BinarySeq::constant(false, 100), 0.6, 11), InvalidInput);
}

TEST(Plotkin, ConstantInputGivesZeroMismatches) {
  const auto w = plotkin_repeat_finder(BinarySeq::constant(true, 1024), 0.75, 5);
  EXPECT_EQ(w.mismatches, 0u);
}

TEST(GreedyLog, ReplaysAndStaysLogarithmic) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t n = 500 + rng() % 3000;
    const auto s = random_seq(rng, n);
    const auto p = greedy_log_dedup(s, 0.6);
    EXPECT_EQ(replay(p), p.final_seq);
    EXPECT_LE(p.length(), 122.0 * std::log(static_cast<double>(n)) + 50.0);
  }
  const auto zeros = greedy_log_dedup(BinarySeq::constant(false, 1024), 0.75);
  EXPECT_EQ(zeros.final_seq.to_string(), "0");
  EXPECT_LE(zeros.length(), 26.0 * std::log(1024.0));
}

TEST(Power, KAndFinder) {
  EXPECT_EQ(power_k(4096, 0.5), 32u);
  std::mt19937_64 rng(21);
  const auto s = random_seq(rng, 4096);
  const auto w = nonlinear_repeat_finder(s, 0.5);
  EXPECT_EQ(w.k, 32u);
  EXPECT_EQ(w.block_size, 4u);
  const double allowed = std::floor((0.5 + std::pow(static_cast<double>(w.h), -0.5)) * w.h + 1e-9);
  EXPECT_LE(static_cast<double>(w.mismatches), allowed);
  EXPECT_THROW(nonlinear_repeat_finder(BinarySeq::constant(false, 10), 0.5), InvalidInput);
}

TEST(Power, GreedyReplays) {
  std::mt19937_64 rng(13);
  const auto s = random_seq(rng, 2000);
  const auto p = greedy_power_dedup(s, 0.5);
  EXPECT_EQ(replay(p), p.final_seq);
  EXPECT_TRUE(is_square_free(p.final_seq));
}

TEST(Power, StepCountsWithinCalibratedConstants) {
  auto limit = [](double n, double a) {
    return kPowerStepSlope * std::pow(n, 2 * a / (1 + a)) + kPowerStepOffset;
  };
  const auto zeros = greedy_power_dedup(BinarySeq::constant(false, 4096), 0.5);
  EXPECT_EQ(replay(zeros).to_string(), "0");
  EXPECT_LE(zeros.length(), limit(4096, 0.5));
  std::mt19937_64 rng(30);
  for (int trial = 0; trial < 5; ++trial) {
    const auto p = greedy_power_dedup(random_seq(rng, 10000), 0.3);
    EXPECT_EQ(replay(p), p.final_seq);
    EXPECT_LE(p.length(), limit(10000, 0.3));
  }
}

TEST(Plotkin, PeriodicInputs) {
  const auto z = plotkin_repeat_finder(BinarySeq::constant(false, 128), 0.6, 11);
  EXPECT_EQ(z.mismatches, 0u);
  EXPECT_EQ(z.h % (128 / 121), 0u);
  BitBuilder b;
  for (int i = 0; i < 10000; ++i) b.push_back(i & 1);
  const auto w = plotkin_repeat_finder(std::move(b).build(), 0.6, 11);
  EXPECT_EQ(w.mismatches, 0u);
}

TEST(Plotkin, WitnessIsAmongFoundRepeats) {
  std::mt19937_64 rng(77);
  const auto s = random_seq(rng, 400);
  const auto w = plotkin_repeat_finder(s, 0.75, 5);
  const auto reps = find_repeats(s, 0.75);
  EXPECT_NE(std::find(reps.begin(), reps.end(), TandemRepeat{w.i, w.h}), reps.end());
}

TEST(GreedyLog, ShortInputMatchesExhaustive) {
  const auto s = BinarySeq::from_string("011010011001");
  const auto p = greedy_log_dedup(s, 0.6);
  EXPECT_EQ(replay(p), p.final_seq);
  EXPECT_EQ(p.length(), rule_distance(s, MismatchRule::linear(0.6)));
  const auto longer = greedy_log_dedup(BinarySeq::from_string("0110100110010110"), 0.6);
  EXPECT_EQ(replay(longer), longer.final_seq);
  EXPECT_THROW(greedy_log_dedup(s, 0.5), InvalidInput);
}
