#include "parikh/thue.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace parikh {

namespace {

bool matches_at(const std::string& w, std::size_t pos, const std::string& pattern)
{
    return w.compare(pos, pattern.size(), pattern) == 0;
}

void require(bool condition, const std::string& rule_id, const std::string& what)
{
    if (!condition)
        throw std::invalid_argument("rule '" + rule_id + "': " + what);
}

ParikhVector pattern_vector(const RewritePattern& p, std::size_t s)
{
    ParikhVector v = parikh_vector(p.prefix, s);
    ParikhVector suffix = parikh_vector(p.suffix, s);
    for (std::size_t i = 0; i < s; ++i)
        v[i] += suffix[i];
    return v;
}

// Visits every changing rule instantiation on w in canonical order:
// rule list order, forward before backward, position ascending, infix
// length ascending.  The callback receives the family, direction,
// position, infix bounds, and the rewritten word.
template <typename Callback>
void scan_steps(const ThueSystem& system, const Word& word, Callback&& emit)
{
    const std::string& w = word.indices();
    for (const RuleFamily& family : system.rules()) {
        for (StepDirection dir : {StepDirection::forward, StepDirection::backward}) {
            const RewritePattern& from =
                dir == StepDirection::forward ? family.left : family.right;
            const RewritePattern& to =
                dir == StepDirection::forward ? family.right : family.left;
            const std::string& u = from.prefix.indices();
            const std::string& v = from.suffix.indices();
            const std::string& u2 = to.prefix.indices();
            const std::string& v2 = to.suffix.indices();

            if (!family.parametric()) {
                // single-word pattern, canonicalized into the prefix
                if (u.size() > w.size())
                    continue;
                for (std::size_t pos = 0; pos + u.size() <= w.size(); ++pos) {
                    if (!matches_at(w, pos, u))
                        continue;
                    std::string result;
                    result.reserve(w.size() - u.size() + u2.size());
                    result.append(w, 0, pos);
                    result.append(u2);
                    result.append(w, pos + u.size(), std::string::npos);
                    emit(family, dir, pos, pos, std::size_t{0}, std::move(result));
                }
                continue;
            }

            LetterSet gamma = *from.infix;
            std::size_t fixed = u.size() + v.size();
            if (fixed > w.size())
                continue;
            for (std::size_t pos = 0; pos + fixed <= w.size(); ++pos) {
                if (!matches_at(w, pos, u))
                    continue;
                std::size_t xbegin = pos + u.size();
                for (std::size_t xlen = 0; pos + fixed + xlen <= w.size(); ++xlen) {
                    // the infix grows one letter at a time; a letter
                    // outside gamma kills all longer infixes here too
                    if (xlen > 0 &&
                        !letter_in(gamma, static_cast<std::uint8_t>(w[xbegin + xlen - 1])))
                        break;
                    if (!matches_at(w, xbegin + xlen, v))
                        continue;
                    std::size_t window = fixed + xlen;
                    std::string result;
                    result.reserve(w.size() - fixed + u2.size() + v2.size());
                    result.append(w, 0, pos);
                    result.append(u2);
                    result.append(w, xbegin, xlen);
                    result.append(v2);
                    result.append(w, pos + window, std::string::npos);
                    // skip identity instantiations u x v == u2 x v2
                    if (result == w)
                        continue;
                    emit(family, dir, pos, xbegin, xlen, std::move(result));
                }
            }
        }
    }
}

} // namespace

bool family_preserves_vector(const RuleFamily& family, std::size_t alphabet_size)
{
    return pattern_vector(family.left, alphabet_size) ==
           pattern_vector(family.right, alphabet_size);
}

ThueSystem::ThueSystem(OrderedAlphabet alphabet, std::vector<RuleFamily> rules)
    : alphabet_(std::move(alphabet)), rules_(std::move(rules))
{
    if (rules_.empty())
        throw std::invalid_argument("a Thue system needs at least one rule");

    std::unordered_set<std::string> seen_ids;
    LetterSet full = static_cast<LetterSet>((1u << alphabet_.size()) - 1u);
    for (RuleFamily& family : rules_) {
        require(!family.id.empty(), family.id, "empty rule id");
        require(seen_ids.insert(family.id).second, family.id, "duplicate rule id");
        for (const RewritePattern* side : {&family.left, &family.right}) {
            require(word_over(side->prefix, alphabet_) &&
                        word_over(side->suffix, alphabet_),
                    family.id, "pattern word outside the alphabet");
            if (side->infix)
                require((*side->infix & ~full) == 0, family.id,
                        "infix letters outside the alphabet");
        }
        require(family.left.infix.has_value() == family.right.infix.has_value(),
                family.id, "one side has an infix alphabet, the other does not");
        if (family.parametric()) {
            require(*family.left.infix == *family.right.infix, family.id,
                    "sides disagree on the infix alphabet");
        } else {
            // canonicalize the single word into the prefix
            family.left.prefix.append(family.left.suffix);
            family.left.suffix = Word{};
            family.right.prefix.append(family.right.suffix);
            family.right.suffix = Word{};
            require(family.left.prefix != family.right.prefix, family.id,
                    "the two sides of a finite rule must differ");
        }
    }

    vector_preserving_ = std::all_of(rules_.begin(), rules_.end(),
                                     [&](const RuleFamily& f) {
                                         return family_preserves_vector(
                                             f, alphabet_.size());
                                     });
}

const char* to_string(StepDirection direction)
{
    return direction == StepDirection::forward ? "forward" : "backward";
}

std::vector<DirectStep> direct_neighbors(const ThueSystem& system, const Word& w)
{
    std::vector<DirectStep> steps;
    scan_steps(system, w,
               [&](const RuleFamily& family, StepDirection dir, std::size_t pos,
                   std::size_t xbegin, std::size_t xlen, std::string result) {
                   steps.push_back(DirectStep{
                       family.id, dir, pos,
                       Word(w.indices().substr(xbegin, xlen)), w,
                       Word(std::move(result))});
               });
    return steps;
}

std::vector<Word> neighbor_words(const ThueSystem& system, const Word& w)
{
    std::vector<Word> words;
    scan_steps(system, w,
               [&](const RuleFamily&, StepDirection, std::size_t, std::size_t,
                   std::size_t, std::string result) {
                   words.emplace_back(std::move(result));
               });
    std::sort(words.begin(), words.end());
    words.erase(std::unique(words.begin(), words.end()), words.end());
    return words;
}

} // namespace parikh
