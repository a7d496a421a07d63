// irreducible.hpp -- irreducible transformations, decomposition, derived systems

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "parikh/prs.hpp"

namespace parikh {

/// One irreducible transformation; its order is the rewriting distance of
/// the endpoints.
struct IrreducibleStep {
    Word source;
    Word target;
    std::uint32_t order = 0;

    bool operator==(const IrreducibleStep&) const = default;
};

/// Verdict on one transformation.  A transformation is reducible when
/// some third word splits it with additive distances while agreeing on
/// all counters; `splitter` then holds the lexicographically smallest
/// such word.
struct IrreducibilityResult {
    bool irreducible = false;
    std::optional<std::uint32_t> order;
    std::optional<Word> splitter;
};

/// Tests irreducibility of the transformation w => w2.  Requires w != w2
/// and the pair to be related under the system; violations raise
/// NotRelatedError.
IrreducibilityResult irreducible(const ParikhRewritingSystem& prs, const Word& w,
                                 const Word& w2, const SearchLimits& limits = {});

/// Splits a transformation into a chain of irreducible steps whose orders
/// sum exactly to the rewriting distance of the endpoints.  Empty chain
/// exactly when w == w2.  Deterministic: every reducible pair splits at
/// its lexicographically smallest splitter.
std::vector<IrreducibleStep> decompose(const ParikhRewritingSystem& prs,
                                       const Word& w, const Word& w2,
                                       const SearchLimits& limits = {});

/// Searches the graph whose vertices are the counter-equal members of w's
/// rewrite class and whose edges are irreducible transformations of order
/// at most max_order.  Returns a shortest such chain from w to w2, or
/// nullopt when none exists.  w == w2 yields the empty chain.
std::optional<std::vector<IrreducibleStep>>
irreducible_graph_path(const ParikhRewritingSystem& prs, const Word& w,
                       const Word& w2, std::uint32_t max_order,
                       const SearchLimits& limits = {});

/// All irreducible transformations between words of length <= max_len,
/// as explicit finite rules, plus the histogram of their orders.
struct DerivedSystem {
    OrderedAlphabet alphabet;
    std::vector<std::pair<Word, Word>> pairs;
    std::map<std::uint32_t, std::uint64_t> order_histogram;

    /// The derived Thue system.  Throws std::invalid_argument when no
    /// irreducible transformation was found (a Thue system needs rules).
    ThueSystem to_thue_system() const;
};

/// Enumerates the irreducible transformations of the system between words
/// of length <= max_len, one anagram class at a time.  Each unordered
/// pair appears once, oriented lexicographically.
DerivedSystem derive_thue_system(const ParikhRewritingSystem& prs,
                                 std::size_t max_len,
                                 const SearchLimits& limits = {},
                                 const Parallelism& parallelism = {});

/// A pair of ternary words whose transformation under the canonical
/// ternary system (ac<->ca, ab x ba <-> ba x ab, bc x cb <-> cb x bc with
/// counter abc) is irreducible with order n+1: the pair
/// (a^n b c b a^n a c^n a b,  b a^n c a^n a b c^n b a).
std::pair<Word, Word> high_order_pair(std::uint32_t n);

} // namespace parikh
