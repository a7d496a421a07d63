// mclass.hpp -- brute-force M-equivalence classes over anagram carriers

#pragma once

#include <vector>

#include "parikh/limits.hpp"
#include "parikh/matrix.hpp"

namespace parikh {

/// All words M-equivalent to w, in lexicographic order, found by filtering
/// the anagram class of w's Parikh vector.  Classes beyond the configured
/// carrier cap raise CapExceededError.
std::vector<Word> m_class(const OrderedAlphabet& alphabet, const Word& w,
                          const SearchLimits& limits = {});

/// True when some distinct word shares w's Parikh matrix.
bool m_ambiguous(const OrderedAlphabet& alphabet, const Word& w,
                 const SearchLimits& limits = {});

} // namespace parikh
