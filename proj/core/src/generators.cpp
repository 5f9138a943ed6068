#include "dupdist/generators.hpp"

#include <vector>

#include "dupdist/errors.hpp"
#include "dupdist/exact_engine.hpp"

namespace dupdist {
namespace {

// Finishing processes for images up to this length are searched exactly.
constexpr std::size_t kFinishSearchCap = 20;

}  // namespace

void LSystem::validate() const {
  if (image0.empty() || image1.empty()) throw InvalidInput("D0L images must be non-empty");
}

LSystem LSystem::thue_morse() {
  return {BinarySeq::from_string("0"), BinarySeq::from_string("01"), BinarySeq::from_string("10")};
}

LSystem LSystem::fibonacci() {
  return {BinarySeq::from_string("0"), BinarySeq::from_string("01"), BinarySeq::from_string("0")};
}

BinarySeq de_bruijn(std::size_t k) {
  if (k < 1 || k > 24) throw InvalidInput("De Bruijn order must lie in 1..24");
  // Fredricksen-Kessler-Maiorana: Lyndon words in lexicographic order.
  std::vector<int> a(k + 1, 0);
  BitBuilder out(std::size_t{1} << k);
  std::size_t t = 1;
  a[0] = 0;
  for (;;) {
    if (k % t == 0) {
      for (std::size_t j = 1; j <= t; ++j) out.push_back(a[j] != 0);
    }
    // Next prenecklace.
    std::size_t i = k;
    while (i > 0 && a[i] == 1) --i;
    if (i == 0) break;
    a[i] = 1;
    for (std::size_t j = i + 1; j <= k; ++j) a[j] = a[j - i];
    t = i;
  }
  return std::move(out).build();
}

std::size_t debruijn_bound(std::size_t k) {
  if (k < 4 || k > 62) throw InvalidInput("the De Bruijn bound needs 4 <= k <= 62");
  const std::size_t n = std::size_t{1} << k;
  return (n - k + k - 1) / k;
}

BinarySeq thue_morse(std::size_t r) {
  if (r > 30) throw CapExceeded("Thue-Morse order above 30");
  BinarySeq t = BinarySeq::from_string("0");
  for (std::size_t i = 0; i < r; ++i) t = t.concat(t.complement());
  return t;
}

BinarySeq fibonacci_word(std::size_t r) {
  BinarySeq prev = BinarySeq::from_string("0");
  if (r == 0) return prev;
  BinarySeq cur = BinarySeq::from_string("01");
  for (std::size_t i = 2; i <= r; ++i) {
    if (cur.size() + prev.size() > kDefaultIterateCap) throw CapExceeded("Fibonacci word too long");
    BinarySeq next = cur.concat(prev);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

BinarySeq apply_morphism(const LSystem& sys, const BinarySeq& s, std::size_t cap) {
  sys.validate();
  std::size_t ones = 0;
  for (std::size_t pos = 1; pos <= s.size(); ++pos) ones += s[pos] ? 1 : 0;
  const std::size_t out_len = (s.size() - ones) * sys.image0.size() + ones * sys.image1.size();
  if (out_len > cap) {
    throw CapExceeded("D0L word of length " + std::to_string(out_len) + " exceeds cap " +
                      std::to_string(cap));
  }
  BitBuilder out(out_len);
  for (std::size_t pos = 1; pos <= s.size(); ++pos) out.append(sys.image(s[pos]));
  return std::move(out).build();
}

BinarySeq d0l_iterate(const LSystem& sys, std::size_t r, std::size_t cap) {
  sys.validate();
  BinarySeq cur = sys.axiom;
  for (std::size_t i = 0; i < r; ++i) cur = apply_morphism(sys, cur, cap);
  return cur;
}

DedupProcess tm_schedule(std::size_t r) {
  if (r < 2) throw InvalidInput("tm_schedule needs r >= 2");
  std::vector<DedupStep> steps;
  // t_r = A A' A' A with A = t_{r-2}, and A = B B' with B = t_{r-3}:
  //   A A' A' A -> A A' A = B B' B' B B B' -> B B' B B B' -> B B' B B' -> B B'.
  std::size_t cur = r;
  while (cur >= 3) {
    const std::size_t a = std::size_t{1} << (cur - 2);
    const std::size_t b = a / 2;
    steps.push_back({a + 1, a, Keep::first});
    steps.push_back({b + 1, b, Keep::first});
    steps.push_back({2 * b + 1, b, Keep::first});
    steps.push_back({1, 2 * b, Keep::first});
    cur -= 2;
  }
  if (cur == 2) steps.push_back({2, 1, Keep::first});  // 0110 -> 010
  return make_process(thue_morse(r), std::move(steps));
}

DedupProcess fib_schedule(std::size_t r) {
  if (r < 2) throw InvalidInput("fib_schedule needs r >= 2");
  std::vector<std::size_t> len(r + 1);
  len[0] = 1;
  if (r >= 1) len[1] = 2;
  for (std::size_t i = 2; i <= r; ++i) len[i] = len[i - 1] + len[i - 2];

  std::vector<DedupStep> steps;
  // u_r = u_{r-2} u_{r-2} u_{r-5} u_{r-4} -> u_{r-3} u_{r-3} u_{r-4} -> u_{r-2}.
  std::size_t cur = r;
  while (cur >= 5) {
    steps.push_back({1, len[cur - 2], Keep::first});
    steps.push_back({1, len[cur - 3], Keep::first});
    cur -= 2;
  }
  if (cur == 4) {  // 01001010 -> 01010 -> 010
    steps.push_back({1, 3, Keep::first});
    steps.push_back({1, 2, Keep::first});
  } else if (cur == 3) {  // 01001 -> 0101 -> 01
    steps.push_back({3, 1, Keep::first});
    steps.push_back({1, 2, Keep::first});
  }
  return make_process(fibonacci_word(r), std::move(steps));
}

DedupProcess finishing_process(const LSystem& sys, const Root& z) {
  const BinarySeq image = apply_morphism(sys, z.value());
  if (image.size() <= kFinishSearchCap) {
    DistanceOracle oracle(kFinishSearchCap);
    return oracle.optimal_process(image);
  }
  return heuristic_schedule(image);
}

std::size_t lift_constant(const LSystem& sys) {
  std::size_t c = 0;
  for (const Root& z : Root::all()) c = std::max(c, finishing_process(sys, z).length());
  return c;
}

DedupProcess d0l_lift(const LSystem& sys, const DedupProcess& p) {
  sys.validate();
  if (!p.rule.is_exact()) throw InvalidInput("only exact processes can be lifted");
  replay(p);

  std::vector<DedupStep> lifted;
  lifted.reserve(p.steps.size());
  BinarySeq x = p.original;
  std::vector<std::size_t> offset;  // offset[j] = |h(x_1 .. x_j)|
  for (const DedupStep& step : p.steps) {
    offset.assign(x.size() + 1, 0);
    for (std::size_t j = 1; j <= x.size(); ++j) offset[j] = offset[j - 1] + sys.image(x[j]).size();
    const std::size_t start = offset[step.i - 1] + 1;
    const std::size_t width = offset[step.i - 1 + step.h] - offset[step.i - 1];
    lifted.push_back({start, width, step.keep});
    x = apply_dedup(x, step, MismatchRule::exact());
  }

  const DedupProcess finish = finishing_process(sys, Root(p.final_seq));
  lifted.insert(lifted.end(), finish.steps.begin(), finish.steps.end());
  return make_process(apply_morphism(sys, p.original), std::move(lifted));
}

}  // namespace dupdist
