// audit.hpp -- bounded exhaustive soundness and completeness audits

#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "parikh/limits.hpp"
#include "parikh/matrix.hpp"
#include "parikh/search.hpp"
#include "parikh/thue.hpp"

namespace parikh {

struct AuditStats {
    std::uint64_t words = 0;
    std::uint64_t steps = 0;
};

/// Outcome of a step-level soundness audit; the witness, when present, is
/// a direct step that changes the Parikh matrix.
struct SoundnessReport {
    bool holds = true;
    std::optional<DirectStep> witness;
    AuditStats stats;
};

/// Outcome of an audit whose witness is a pair of words.
struct PairReport {
    bool holds = true;
    std::optional<std::pair<Word, Word>> witness;
    AuditStats stats;
};

/// Checks every direct step from every word of length <= max_len for
/// Parikh-matrix preservation.  Since the transformation relation is
/// generated by direct steps and M-equivalence is context-invariant and
/// transitive, step-level preservation certifies soundness restricted to
/// the audited lengths.
///
/// Words are scanned per anagram class (classes ordered by length, then
/// by count tuple; words in lexicographic order) and the first violating
/// step in scan order is the witness, no matter how many workers run.
SoundnessReport audit_parikh_sound(const ThueSystem& system, std::size_t max_len,
                                   const SearchLimits& limits = {},
                                   const Parallelism& parallelism = {});

/// Checks that every M-equivalence class of words of length <= max_len
/// lies inside a single rewrite class.  The witness is an M-equivalent
/// pair that no rewriting chain connects, first in scan order.
PairReport audit_parikh_complete(const ThueSystem& system, std::size_t max_len,
                                 const SearchLimits& limits = {},
                                 const Parallelism& parallelism = {});

} // namespace parikh
