// helpers.hpp -- shared helpers for the test suites

#pragma once

#include <random>
#include <string_view>

#include "parikh/alphabet.hpp"
#include "parikh/word.hpp"

namespace testutil {

inline parikh::Word wd(const parikh::OrderedAlphabet& alphabet,
                       std::string_view glyphs)
{
    return parikh::parse_word(alphabet, glyphs);
}

/// Random word over the first `size` letters, length in [0, max_len].
inline parikh::Word random_word(std::mt19937_64& rng, std::size_t size,
                                std::size_t max_len)
{
    std::size_t length = rng() % (max_len + 1);
    parikh::Word w;
    for (std::size_t i = 0; i < length; ++i)
        w.push_back(static_cast<std::uint8_t>(rng() % size));
    return w;
}

} // namespace testutil
