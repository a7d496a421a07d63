// word.hpp -- words over an ordered alphabet, parsing, projection

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

#include "parikh/alphabet.hpp"

namespace parikh {

/// A finite word: a sequence of letter indices of some ordered alphabet.
/// The default-constructed word is the empty word.
///
/// Words are value objects compared by content; operator< is lexicographic
/// by letter index, the canonical ordering used wherever a deterministic
/// choice is needed.
class Word {
public:
    Word() = default;

    /// Wraps a raw index string.  Callers are responsible for the indices
    /// being valid for their alphabet; parse_word checks glyph input.
    explicit Word(std::string indices) : indices_(std::move(indices)) {}

    std::size_t size() const { return indices_.size(); }
    bool empty() const { return indices_.empty(); }

    /// Letter index at position i (0-based).
    std::uint8_t operator[](std::size_t i) const
    {
        return static_cast<std::uint8_t>(indices_[i]);
    }

    void push_back(std::uint8_t letter)
    {
        indices_.push_back(static_cast<char>(letter));
    }

    void append(const Word& other) { indices_ += other.indices_; }

    Word subword(std::size_t pos, std::size_t len) const
    {
        return Word(indices_.substr(pos, len));
    }

    const std::string& indices() const { return indices_; }

    friend Word operator+(const Word& a, const Word& b)
    {
        return Word(a.indices_ + b.indices_);
    }

    auto operator<=>(const Word&) const = default;

private:
    std::string indices_;
};

/// w concatenated with itself n times.
Word repeated(const Word& w, std::size_t n);

/// Parses a glyph string against an alphabet.
/// Throws std::invalid_argument on glyphs outside the alphabet.
Word parse_word(const OrderedAlphabet& alphabet, std::string_view glyphs);

/// Renders a word back to its glyph string; the empty word renders as "".
std::string render_word(const OrderedAlphabet& alphabet, const Word& word);

/// True when every letter index of the word is below the alphabet size.
bool word_over(const Word& word, const OrderedAlphabet& alphabet);

/// Projective morphism: deletes every letter outside `keep` and re-indexes
/// the survivors against the induced sub-alphabet.
Word project(const Word& word, LetterSet keep);

} // namespace parikh

template <>
struct std::hash<parikh::Word> {
    std::size_t operator()(const parikh::Word& w) const noexcept
    {
        return std::hash<std::string>{}(w.indices());
    }
};
