// alphabet.hpp -- ordered alphabets and letter subsets

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

namespace parikh {

/// Subset of the letters of an alphabet, as a bitmask over letter indices.
using LetterSet = std::uint16_t;

inline bool letter_in(LetterSet set, std::size_t letter)
{
    return (set >> letter) & 1u;
}

/// A totally ordered finite alphabet.
///
/// Letters are identified internally by their index 0..size()-1; the display
/// glyph order equals the index order.  Glyphs must be pairwise distinct.
class OrderedAlphabet {
public:
    /// Largest supported alphabet.  Matrices stay tiny and letter subsets
    /// fit in a bitmask.
    static constexpr std::size_t kMaxSize = 8;

    /// Builds an alphabet from its glyph string, e.g. "abc" meaning a<b<c.
    /// Throws std::invalid_argument on duplicates, emptiness, or oversize.
    explicit OrderedAlphabet(std::string_view glyphs);

    std::size_t size() const { return glyphs_.size(); }
    char glyph(std::size_t index) const { return glyphs_.at(index); }
    const std::string& glyphs() const { return glyphs_; }

    /// Index of a glyph, or -1 when the glyph is not part of the alphabet.
    int index_of(char glyph) const
    {
        return index_[static_cast<unsigned char>(glyph)];
    }

    /// Parses a glyph string into a letter subset.  Glyphs may repeat;
    /// unknown glyphs throw std::invalid_argument.
    LetterSet parse_subset(std::string_view glyphs) const;

    /// Glyph string of a subset, in alphabet order.
    std::string subset_glyphs(LetterSet set) const;

    /// The sub-alphabet induced by a nonempty subset, keeping this
    /// alphabet's order.
    OrderedAlphabet induced(LetterSet set) const;

    bool operator==(const OrderedAlphabet& other) const
    {
        return glyphs_ == other.glyphs_;
    }

private:
    std::string glyphs_;
    std::array<std::int8_t, 256> index_{};
};

} // namespace parikh
