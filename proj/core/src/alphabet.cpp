#include "parikh/alphabet.hpp"

#include <stdexcept>

namespace parikh {

OrderedAlphabet::OrderedAlphabet(std::string_view glyphs)
    : glyphs_(glyphs)
{
    if (glyphs_.empty())
        throw std::invalid_argument("alphabet must have at least one letter");
    if (glyphs_.size() > kMaxSize)
        throw std::invalid_argument("alphabet larger than " +
                                    std::to_string(kMaxSize) + " letters");
    index_.fill(-1);
    for (std::size_t i = 0; i < glyphs_.size(); ++i) {
        unsigned char g = static_cast<unsigned char>(glyphs_[i]);
        if (index_[g] != -1)
            throw std::invalid_argument(std::string("duplicate letter '") +
                                        glyphs_[i] + "' in alphabet");
        index_[g] = static_cast<std::int8_t>(i);
    }
}

LetterSet OrderedAlphabet::parse_subset(std::string_view glyphs) const
{
    LetterSet set = 0;
    for (char g : glyphs) {
        int idx = index_of(g);
        if (idx < 0)
            throw std::invalid_argument(std::string("letter '") + g +
                                        "' is not in alphabet " + glyphs_);
        set |= static_cast<LetterSet>(1u << idx);
    }
    return set;
}

std::string OrderedAlphabet::subset_glyphs(LetterSet set) const
{
    std::string out;
    for (std::size_t i = 0; i < size(); ++i)
        if (letter_in(set, i))
            out.push_back(glyphs_[i]);
    return out;
}

OrderedAlphabet OrderedAlphabet::induced(LetterSet set) const
{
    std::string sub = subset_glyphs(set);
    if (sub.empty())
        throw std::invalid_argument("induced alphabet of the empty subset");
    return OrderedAlphabet(sub);
}

} // namespace parikh
