#include <gtest/gtest.h>

#include <set>

#include "dupdist/errors.hpp"
#include "dupdist/exact_engine.hpp"
#include "dupdist/generators.hpp"

using namespace dupdist;

TEST(DeBruijn, KnownSequences) {
  EXPECT_EQ(de_bruijn(1).to_string(), "01");
  EXPECT_EQ(de_bruijn(2).to_string(), "0011");
  EXPECT_EQ(de_bruijn(3).to_string(), "00010111");
  EXPECT_EQ(de_bruijn(4).to_string(), "0000100110101111");
  EXPECT_THROW(de_bruijn(0), InvalidInput);
}

TEST(DeBruijn, EveryWindowOnceCyclically) {
  for (std::size_t k = 1; k <= 12; ++k) {
    const std::string t = de_bruijn(k).to_string();
    ASSERT_EQ(t.size(), std::size_t{1} << k);
    const std::string cyc = t + t.substr(0, k - 1);
    std::set<std::string> seen;
    for (std::size_t i = 0; i < t.size(); ++i) seen.insert(cyc.substr(i, k));
    EXPECT_EQ(seen.size(), t.size()) << k;
  }
}

TEST(DeBruijn, BoundBelowDistance) {
  EXPECT_EQ(debruijn_bound(4), 3u);
  const auto t = de_bruijn(4);
  DistanceOracle o(16);
  EXPECT_GE(o.distance(t), debruijn_bound(4));
}

TEST(Words, ThueMorseAndFibonacci) {
  EXPECT_EQ(thue_morse(0).to_string(), "0");
  EXPECT_EQ(thue_morse(3).to_string(), "01101001");
  EXPECT_EQ(fibonacci_word(0).to_string(), "0");
  EXPECT_EQ(fibonacci_word(1).to_string(), "01");
  EXPECT_EQ(fibonacci_word(4).to_string(), "01001010");
  EXPECT_EQ(d0l_iterate(LSystem::thue_morse(), 5), thue_morse(5));
  EXPECT_EQ(d0l_iterate(LSystem::fibonacci(), 7), fibonacci_word(7));
}

TEST(Words, CapsAndValidation) {
  EXPECT_THROW(d0l_iterate(LSystem::thue_morse(), 20, 1000), CapExceeded);
  LSystem bad{BinarySeq::from_string("0"), BinarySeq::from_string(""), BinarySeq::from_string("1")};
  EXPECT_THROW(bad.validate(), InvalidInput);
}

TEST(Schedules, ThueMorse) {
  for (std::size_t r = 2; r <= 16; ++r) {
    const auto p = tm_schedule(r);
    EXPECT_EQ(p.original, thue_morse(r));
    EXPECT_EQ(replay(p), p.final_seq);
    EXPECT_LE(p.length(), 2 * r);
  }
}

TEST(Schedules, Fibonacci) {
  for (std::size_t r = 2; r <= 20; ++r) {
    const auto p = fib_schedule(r);
    EXPECT_EQ(p.original, fibonacci_word(r));
    EXPECT_EQ(replay(p), p.final_seq);
    EXPECT_LE(p.length(), r);
  }
}

TEST(Lift, ConstantsAndFinishing) {
  EXPECT_EQ(lift_constant(LSystem::thue_morse()), 3u);
  EXPECT_EQ(lift_constant(LSystem::fibonacci()), 2u);
  const auto fin = finishing_process(LSystem::thue_morse(), Root::parse("010"));
  EXPECT_EQ(fin.original.to_string(), "011001");
  EXPECT_EQ(fin.length(), 3u);
}

TEST(Lift, LiftedProcessesReplay) {
  for (const auto& sys : {LSystem::thue_morse(), LSystem::fibonacci()}) {
    const std::size_t c = lift_constant(sys);
    for (std::size_t r = 2; r <= 10; ++r) {
      const auto x = d0l_iterate(sys, r);
      DistanceOracle o(12);
      const DedupProcess p = x.size() <= 12 ? o.optimal_process(x) : heuristic_schedule(x);
      const auto q = d0l_lift(sys, p);
      EXPECT_EQ(q.original, apply_morphism(sys, x));
      EXPECT_EQ(replay(q), q.final_seq);
      EXPECT_LE(q.length(), p.length() + c);
    }
  }
}
