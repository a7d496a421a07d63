// thue.hpp -- Thue systems with parametric rule families and direct steps

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "parikh/alphabet.hpp"
#include "parikh/subword.hpp"
#include "parikh/word.hpp"

namespace parikh {

/// One side of a rule family.  Without an infix alphabet the pattern
/// denotes the single word prefix+suffix (canonicalized so the whole word
/// sits in `prefix`).  With an infix alphabet G it denotes the word set
/// { prefix x suffix : x in G* }.
struct RewritePattern {
    Word prefix;
    std::optional<LetterSet> infix;
    Word suffix;

    bool parametric() const { return infix.has_value(); }

    bool operator==(const RewritePattern&) const = default;
};

/// A pair of patterns inducing rewriting rules in both directions.  The
/// infix of a match is copied verbatim from the matched side into the
/// replacement side.
struct RuleFamily {
    std::string id;
    RewritePattern left;
    RewritePattern right;

    bool parametric() const { return left.parametric(); }

    bool operator==(const RuleFamily&) const = default;
};

/// Whether both of a family's pattern sides carry the same total letter
/// counts, so that every induced rewriting rule preserves the Parikh
/// vector.
bool family_preserves_vector(const RuleFamily& family, std::size_t alphabet_size);

/// A Thue system: an ordered alphabet plus a nonempty rule list.
///
/// Construction validates the rules: words over the alphabet, both sides
/// sharing the same infix alphabet (or lacking one), distinct sides for
/// finite rules, and ids nonempty and unique.  Finite-rule patterns are
/// canonicalized into their prefix.
class ThueSystem {
public:
    ThueSystem(OrderedAlphabet alphabet, std::vector<RuleFamily> rules);

    const OrderedAlphabet& alphabet() const { return alphabet_; }
    const std::vector<RuleFamily>& rules() const { return rules_; }

    /// True when every rule family preserves the Parikh vector; reachable
    /// words then stay inside one anagram class.
    bool vector_preserving() const { return vector_preserving_; }

    bool operator==(const ThueSystem&) const = default;

private:
    OrderedAlphabet alphabet_;
    std::vector<RuleFamily> rules_;
    bool vector_preserving_ = false;
};

enum class StepDirection : std::uint8_t { forward, backward };

const char* to_string(StepDirection direction);

/// A single direct transformation: one rule instantiation applied at one
/// position.  Applying the named rule side at `position` with the matched
/// `infix` rewrites `source` into `result`.
struct DirectStep {
    std::string rule_id;
    StepDirection direction = StepDirection::forward;
    std::size_t position = 0;
    Word infix;
    Word source;
    Word result;

    bool operator==(const DirectStep&) const = default;
};

/// Every distinct (rule, direction, position, infix) instantiation on w
/// whose application changes the word.  Identity instantiations are
/// suppressed.  Order: rule list order, forward before backward, position
/// ascending, infix length ascending.
std::vector<DirectStep> direct_neighbors(const ThueSystem& system, const Word& w);

/// The distinct words one direct step away from w, sorted lexicographically.
/// Cheaper than direct_neighbors when step metadata is not needed.
std::vector<Word> neighbor_words(const ThueSystem& system, const Word& w);

} // namespace parikh
