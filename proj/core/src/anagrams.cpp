#include "parikh/anagrams.hpp"

#include <algorithm>

#include "parikh/errors.hpp"

namespace parikh {

std::vector<Word> anagrams(const ParikhVector& v, const SearchLimits& limits)
{
    std::uint64_t total = multinomial(v);
    if (total > limits.max_class_size)
        throw CapExceededError("anagram class of size " + std::to_string(total) +
                               " exceeds the cap of " +
                               std::to_string(limits.max_class_size));

    std::string current;
    current.reserve(vector_length(v));
    for (std::size_t letter = 0; letter < v.size(); ++letter)
        current.append(v[letter], static_cast<char>(letter));

    std::vector<Word> words;
    words.reserve(total);
    do {
        words.emplace_back(current);
    } while (std::next_permutation(current.begin(), current.end()));
    return words;
}

AnagramClass::AnagramClass(ParikhVector v, const SearchLimits& limits)
    : vector_(std::move(v)), words_(anagrams(vector_, limits))
{
}

std::optional<std::uint32_t> AnagramClass::index_of(const Word& w) const
{
    auto it = std::lower_bound(words_.begin(), words_.end(), w);
    if (it == words_.end() || *it != w)
        return std::nullopt;
    return static_cast<std::uint32_t>(it - words_.begin());
}

} // namespace parikh
