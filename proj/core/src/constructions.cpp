#include "parikh/constructions.hpp"

#include <array>
#include <stdexcept>
#include <utility>

#include "parikh/errors.hpp"
#include "parikh/presets.hpp"
#include "parikh/search.hpp"
#include "parikh/subword.hpp"

namespace parikh {

std::pair<Word, Word> build_ambiguous_pair(const Word& w1, const Word& w1p,
                                           std::uint32_t n)
{
    if (n < 1)
        throw std::invalid_argument("n must be at least 1");
    if (w1 == w1p)
        throw std::invalid_argument("the seed words must be distinct");
    std::size_t letters = 1;
    for (std::size_t i = 0; i < w1.size(); ++i)
        letters = std::max<std::size_t>(letters, w1[i] + 1);
    for (std::size_t i = 0; i < w1p.size(); ++i)
        letters = std::max<std::size_t>(letters, w1p[i] + 1);
    if (parikh_vector(w1, letters) != parikh_vector(w1p, letters))
        throw std::invalid_argument(
            "the seed words must have equal Parikh vectors");
    if (n > 24)
        throw CapExceededError("doubling 2^" + std::to_string(n - 1) +
                               " times produces unmanageable words");

    Word w = w1, w2 = w1p;
    for (std::uint32_t step = 1; step < n; ++step) {
        Word next = w + w2;
        Word next2 = w2 + w;
        w = std::move(next);
        w2 = std::move(next2);
    }
    return {w, w2};
}

std::pair<Word, Word> incompleteness_witness(const OrderedAlphabet& alphabet,
                                             std::uint32_t N)
{
    if (alphabet.size() < 2)
        throw std::invalid_argument("the alphabet needs at least two letters");
    if (N < 1)
        throw std::invalid_argument("N must be at least 1");
    const std::uint8_t a = 0, b = 1;
    Word inner;
    for (std::uint32_t i = 0; i + 1 < N; ++i)
        inner.push_back(a);

    Word w; // ab a^{N-1} ba
    w.push_back(a);
    w.push_back(b);
    w.append(inner);
    w.push_back(b);
    w.push_back(a);

    Word w2; // ba a^{N-1} ab
    w2.push_back(b);
    w2.push_back(a);
    w2.append(inner);
    w2.push_back(a);
    w2.push_back(b);

    return {w, w2};
}

std::uint64_t projection_bound(const Word& w, const Word& w2,
                               const SearchLimits& limits)
{
    ThueSystem salomaa = thue_preset("salomaa");
    if (!word_over(w, salomaa.alphabet()) || !word_over(w2, salomaa.alphabet()))
        throw std::invalid_argument("the words must be ternary");
    if (!transforms(salomaa, w, w2, limits))
        throw NotRelatedError("no rewriting chain connects the words");

    OrderedAlphabet binary("ab");
    // ab x ba <-> ba x ab, the shape the {a,b} and {b,c} projections obey
    RuleFamily swap_family;
    swap_family.id = "swap";
    swap_family.left = RewritePattern{parse_word(binary, "ab"),
                                      binary.parse_subset("ab"),
                                      parse_word(binary, "ba")};
    swap_family.right = RewritePattern{parse_word(binary, "ba"),
                                       binary.parse_subset("ab"),
                                       parse_word(binary, "ab")};
    ThueSystem swap_system(binary, {swap_family});

    RuleFamily transpose;
    transpose.id = "transpose";
    transpose.left.prefix = parse_word(binary, "ab");
    transpose.right.prefix = parse_word(binary, "ba");
    ThueSystem transpose_system(binary, {transpose});

    const std::array<std::pair<LetterSet, const ThueSystem*>, 3> projections{
        {{0b011, &swap_system},       // {a,b}
         {0b110, &swap_system},       // {b,c}
         {0b101, &transpose_system}}};// {a,c}
    std::uint64_t total = 0;
    for (auto [keep, system] : projections) {
        auto d = dist(*system, project(w, keep), project(w2, keep), limits);
        if (!d)
            throw NotRelatedError("a projected pair is not connected");
        total += *d;
    }
    return total;
}

} // namespace parikh
