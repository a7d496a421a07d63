// subword.hpp -- scattered subword counting and Parikh vectors

#pragma once

#include <cstdint>
#include <vector>

#include "parikh/word.hpp"

namespace parikh {

/// Per-letter occurrence counts of a word; counts[i] is the number of
/// occurrences of letter i.  The sum of the entries equals the word length.
using ParikhVector = std::vector<std::uint32_t>;

/// Number of occurrences of u as a scattered subword of w, written |w|_u.
/// Occurrences differ when at least one letter position differs.
/// By convention the empty word occurs exactly once in every word.
///
/// Computed with the standard dynamic program over prefixes; counts are
/// 64-bit and overflow raises OverflowError rather than wrapping.
std::uint64_t count_subword(const Word& w, const Word& u);

/// The Parikh vector of a word over an alphabet of the given size.
ParikhVector parikh_vector(const Word& w, std::size_t alphabet_size);

/// Total length of any word with this Parikh vector.
std::uint64_t vector_length(const ParikhVector& v);

/// Number of words sharing the Parikh vector: the multinomial coefficient
/// (sum v)! / prod v_i!.  Checked arithmetic throughout.
std::uint64_t multinomial(const ParikhVector& v);

} // namespace parikh
