#include "parikh/mclass.hpp"

#include <algorithm>

#include "parikh/anagrams.hpp"
#include "parikh/errors.hpp"

namespace parikh {

std::vector<Word> m_class(const OrderedAlphabet& alphabet, const Word& w,
                          const SearchLimits& limits)
{
    ParikhMatrix target = parikh_matrix(alphabet, w);
    std::vector<Word> out;
    for (const Word& candidate : anagrams(parikh_vector(w, alphabet.size()), limits))
        if (parikh_matrix(alphabet, candidate) == target)
            out.push_back(candidate);
    return out;
}

bool m_ambiguous(const OrderedAlphabet& alphabet, const Word& w,
                 const SearchLimits& limits)
{
    ParikhVector v = parikh_vector(w, alphabet.size());
    std::uint64_t total = multinomial(v);
    if (total > limits.max_class_size)
        throw CapExceededError("anagram class of size " + std::to_string(total) +
                               " exceeds the cap of " +
                               std::to_string(limits.max_class_size));

    ParikhMatrix target = parikh_matrix(alphabet, w);
    std::string current;
    for (std::size_t letter = 0; letter < v.size(); ++letter)
        current.append(v[letter], static_cast<char>(letter));
    do {
        Word candidate{current};
        if (candidate != w && parikh_matrix(alphabet, candidate) == target)
            return true;
    } while (std::next_permutation(current.begin(), current.end()));
    return false;
}

} // namespace parikh
