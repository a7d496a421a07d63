// prs.hpp -- Parikh rewriting systems: counters and the constrained relation

#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "parikh/audit.hpp"
#include "parikh/limits.hpp"
#include "parikh/thue.hpp"

namespace parikh {

/// A counter: a strictly contiguous ascending run a_i a_{i+1} ... a_j of
/// the ordered alphabet with i < j.  Counter values are conserved
/// quantities of the constrained transformation relation.
class Counter {
public:
    /// Run from letter `lo` to letter `hi` inclusive (0-based indices).
    Counter(std::size_t lo, std::size_t hi, std::size_t alphabet_size);

    /// Parses a glyph string such as "abc" and validates its shape.
    static Counter parse(const OrderedAlphabet& alphabet, std::string_view glyphs);

    std::size_t lo() const { return lo_; }
    std::size_t hi() const { return hi_; }

    /// The counter as a word of letter indices lo..hi.
    Word word() const;

    bool operator==(const Counter&) const = default;

private:
    std::size_t lo_;
    std::size_t hi_;
};

/// A Thue system whose rules all preserve the Parikh vector, together
/// with a (possibly empty) set of counters.  A word transforms into
/// another under the system exactly when all counter values agree and a
/// rewriting chain connects them.
class ParikhRewritingSystem {
public:
    /// Validates: alphabet size at least two, every rule family
    /// vector-preserving, every counter a valid ascending run.  Validation
    /// errors name the offending rule or counter.
    ParikhRewritingSystem(ThueSystem system, std::vector<Counter> counters);

    const ThueSystem& system() const { return system_; }
    const OrderedAlphabet& alphabet() const { return system_.alphabet(); }
    const std::vector<Counter>& counters() const { return counters_; }

    bool operator==(const ParikhRewritingSystem&) const = default;

private:
    ThueSystem system_;
    std::vector<Counter> counters_;
};

/// The tuple of counter values of w, in counter order.
std::vector<std::uint64_t> counter_values(const ParikhRewritingSystem& prs,
                                          const Word& w);

/// Whether w transforms into w2 under the constrained relation: equal
/// counter values and reachability.  Reflexive by definition.
bool prs_transforms(const ParikhRewritingSystem& prs, const Word& w,
                    const Word& w2, const SearchLimits& limits = {});

/// Change of a counter value across one direct step:
/// |result|_c - |source|_c.
std::int64_t counter_delta(const DirectStep& step, const Counter& counter);

/// Checks, for every word of length <= max_len, that within its rewrite
/// class each cell of equal counter values lies inside a single
/// M-equivalence class.  The witness is a counter-equal reachable pair
/// with different Parikh matrices.
PairReport audit_prs_sound(const ParikhRewritingSystem& prs, std::size_t max_len,
                           const SearchLimits& limits = {},
                           const Parallelism& parallelism = {});

/// Checks that every M-equivalence class of words of length <= max_len
/// lies inside a single rewrite class.  Counter equality is automatic for
/// M-equivalent words because every counter is a Parikh matrix entry;
/// that fact is exercised by the test suite rather than assumed silently.
PairReport audit_prs_complete(const ParikhRewritingSystem& prs, std::size_t max_len,
                              const SearchLimits& limits = {},
                              const Parallelism& parallelism = {});

} // namespace parikh
