// constructions.hpp -- witness constructions and independent lower bounds

#pragma once

#include <cstdint>
#include <utility>

#include "parikh/alphabet.hpp"
#include "parikh/limits.hpp"
#include "parikh/word.hpp"

namespace parikh {

/// Recursive doubling of a seed pair: from (w, w') build (w w', w' w),
/// n-1 times.  For distinct seeds with equal Parikh vectors the n-th pair
/// is distinct yet agrees on every subword count up to length n.
/// Violated preconditions raise std::invalid_argument.
std::pair<Word, Word> build_ambiguous_pair(const Word& w1, const Word& w1p,
                                           std::uint32_t n);

/// The pair (ab a^{N-1} ba, ba a^{N-1} ab) over the first two letters:
/// M-equivalent, while every factor of length <= N is M-unambiguous.  No
/// Parikh sound Thue system whose rule words have length <= N connects it.
std::pair<Word, Word> incompleteness_witness(const OrderedAlphabet& alphabet,
                                             std::uint32_t N);

/// Lower bound on the rewriting distance of a related pair under the
/// canonical ternary system: the sum of the projected distances in the
/// three two-letter subsystems (ab x ba <-> ba x ab on {a,b},
/// bc x cb <-> cb x bc on {b,c}, ac <-> ca on {a,c}).  Pairs that are not
/// related raise NotRelatedError.
std::uint64_t projection_bound(const Word& w, const Word& w2,
                               const SearchLimits& limits = {});

} // namespace parikh
