#include "parikh/word.hpp"

#include <stdexcept>

namespace parikh {

Word repeated(const Word& w, std::size_t n)
{
    std::string out;
    out.reserve(w.size() * n);
    for (std::size_t i = 0; i < n; ++i)
        out += w.indices();
    return Word(std::move(out));
}

Word parse_word(const OrderedAlphabet& alphabet, std::string_view glyphs)
{
    std::string indices;
    indices.reserve(glyphs.size());
    for (char g : glyphs) {
        int idx = alphabet.index_of(g);
        if (idx < 0)
            throw std::invalid_argument(std::string("letter '") + g +
                                        "' is not in alphabet " + alphabet.glyphs());
        indices.push_back(static_cast<char>(idx));
    }
    return Word(std::move(indices));
}

std::string render_word(const OrderedAlphabet& alphabet, const Word& word)
{
    std::string out;
    out.reserve(word.size());
    for (std::size_t i = 0; i < word.size(); ++i)
        out.push_back(alphabet.glyph(word[i]));
    return out;
}

bool word_over(const Word& word, const OrderedAlphabet& alphabet)
{
    for (std::size_t i = 0; i < word.size(); ++i)
        if (word[i] >= alphabet.size())
            return false;
    return true;
}

Word project(const Word& word, LetterSet keep)
{
    // rank[i] = index of letter i within the induced sub-alphabet
    std::array<std::int8_t, OrderedAlphabet::kMaxSize> rank{};
    std::int8_t next = 0;
    for (std::size_t i = 0; i < OrderedAlphabet::kMaxSize; ++i)
        rank[i] = letter_in(keep, i) ? next++ : std::int8_t{-1};

    Word out;
    for (std::size_t i = 0; i < word.size(); ++i)
        if (letter_in(keep, word[i]))
            out.push_back(static_cast<std::uint8_t>(rank[word[i]]));
    return out;
}

} // namespace parikh
