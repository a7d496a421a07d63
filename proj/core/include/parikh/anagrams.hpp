// anagrams.hpp -- enumeration of all words sharing a Parikh vector

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "parikh/limits.hpp"
#include "parikh/subword.hpp"
#include "parikh/word.hpp"

namespace parikh {

/// Every word with the given Parikh vector, in lexicographic order by
/// letter index.  The result size equals multinomial(v); vectors whose
/// class outgrows limits.max_class_size raise CapExceededError.
std::vector<Word> anagrams(const ParikhVector& v, const SearchLimits& limits = {});

/// A materialized anagram class with index lookup.  Words are stored in
/// lexicographic order, so indices are order-compatible with the words.
class AnagramClass {
public:
    AnagramClass(ParikhVector v, const SearchLimits& limits = {});

    const ParikhVector& vector() const { return vector_; }
    const std::vector<Word>& words() const { return words_; }
    std::size_t size() const { return words_.size(); }
    const Word& word(std::uint32_t index) const { return words_[index]; }

    /// Index of a word in the class, or nullopt when the word has a
    /// different Parikh vector.
    std::optional<std::uint32_t> index_of(const Word& w) const;

private:
    ParikhVector vector_;
    std::vector<Word> words_;
};

} // namespace parikh
