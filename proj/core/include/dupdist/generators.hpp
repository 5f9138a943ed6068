#pragma once

#include <cstddef>

#include "dupdist/binary_seq.hpp"
#include "dupdist/seqcore.hpp"

namespace dupdist {

/// Binary D0L-system: axiom and the images of 0 and 1.
struct LSystem {
  BinarySeq axiom;
  BinarySeq image0;
  BinarySeq image1;

  /// Throws InvalidInput if either image is empty.
  void validate() const;
  const BinarySeq& image(bool symbol) const noexcept { return symbol ? image1 : image0; }

  static LSystem thue_morse();
  /// X -> XY, Y -> X with X = 0, Y = 1.
  static LSystem fibonacci();
};

inline constexpr std::size_t kDefaultIterateCap = std::size_t{1} << 26;

/// Lexicographically least binary De Bruijn sequence of order k
/// (concatenation of the Lyndon words whose length divides k).
BinarySeq de_bruijn(std::size_t k);
/// ceil((2^k - k) / k).
std::size_t debruijn_bound(std::size_t k);

/// t_0 = 0, t_{r+1} = t_r followed by its complement.
BinarySeq thue_morse(std::size_t r);
/// u_0 = 0, u_1 = 01, u_r = u_{r-1} u_{r-2}.
BinarySeq fibonacci_word(std::size_t r);

/// Applies the morphism once.
BinarySeq apply_morphism(const LSystem& sys, const BinarySeq& s,
                         std::size_t cap = kDefaultIterateCap);
/// h^r(axiom). Throws CapExceeded when the word would exceed `cap` symbols.
BinarySeq d0l_iterate(const LSystem& sys, std::size_t r, std::size_t cap = kDefaultIterateCap);

/// Four deduplications per t_r -> t_{r-2}, closing at t_2 or t_1.
DedupProcess tm_schedule(std::size_t r);
/// Two deduplications per u_r -> u_{r-2}, closing at u_4 or u_3.
DedupProcess fib_schedule(std::size_t r);

/// Process taking h(z) to its root, optimal for short images.
DedupProcess finishing_process(const LSystem& sys, const Root& z);
/// c = max over the six roots z of the finishing-process length of h(z).
std::size_t lift_constant(const LSystem& sys);

/// Lifts an exact process of x to one of h(x): each step on a_1..a_k a_1..a_k
/// becomes a step on h(a_1)..h(a_k) h(a_1)..h(a_k), then the finishing process
/// for h(root) is appended.
DedupProcess d0l_lift(const LSystem& sys, const DedupProcess& p);

}  // namespace dupdist
