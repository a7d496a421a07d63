// class_scan.hpp -- internal helpers for the bounded per-class scans
//
// The audits and the irreducible-rule derivation all walk the same state
// space: every anagram class of words of length <= n, in a fixed order
// (length ascending, then by the class's lexicographically smallest
// member).  Workers may process classes concurrently; outcomes are merged
// in class order, so results never depend on the thread count.

#pragma once

#include <cstdint>
#include <exception>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "parikh/anagrams.hpp"
#include "parikh/audit.hpp"
#include "parikh/matrix.hpp"
#include "parikh/thue.hpp"

namespace parikh::detail {

/// Parikh vectors of every anagram class of words of length <= max_len,
/// ordered by length, then lexicographically by count tuple.
std::vector<ParikhVector> class_specs(std::size_t alphabet_size,
                                      std::size_t max_len);

class UnionFind {
public:
    explicit UnionFind(std::size_t n);
    std::uint32_t find(std::uint32_t x);
    void unite(std::uint32_t a, std::uint32_t b);

private:
    std::vector<std::uint32_t> parent_;
};

/// Assigns consecutive group ids to equal Parikh matrices, in order of
/// each group's first (lexicographically smallest) member.  When `groups`
/// is non-null it receives the member indices per group id.
std::vector<std::uint32_t> matrix_group_ids(
    const OrderedAlphabet& alphabet, const AnagramClass& carrier,
    std::vector<std::vector<std::uint32_t>>* groups);

/// Connected-component representatives of the direct-step graph on one
/// anagram class of a vector-preserving system.  roots[i] is the smallest
/// member index of i's component.  `steps_seen` accumulates the number of
/// step instantiations scanned.
std::vector<std::uint32_t> component_roots(const ThueSystem& system,
                                           const AnagramClass& carrier,
                                           std::uint64_t* steps_seen);

/// Outcome of scanning one class.  A decisive outcome (witness or error)
/// ends the scan at this class index, exactly as a sequential scan with
/// early exit would.  Collecting scans leave `decisive` unset and put
/// their per-class results in `collected`.
struct ClassOutcome {
    bool decisive = false;
    std::exception_ptr error;
    std::optional<DirectStep> step_witness;
    std::optional<std::pair<Word, Word>> pair_witness;
    std::vector<std::pair<std::pair<Word, Word>, std::uint32_t>> collected;
    AuditStats stats;
};

/// Runs `scan` over class indices 0..count-1 on the given number of
/// workers and returns outcomes in index order.  Indices after the
/// smallest decisive one may be skipped (left empty); merging in index
/// order therefore reproduces the sequential result.
std::vector<std::optional<ClassOutcome>>
run_class_scan(std::size_t count, unsigned threads,
               const std::function<ClassOutcome(std::size_t)>& scan);

/// Index-order merge: accumulates stats of the passing prefix into
/// `report_stats`, rethrows the first error, or returns the first witness
/// outcome.  Returns nullopt when every class passed.
std::optional<ClassOutcome>
merge_outcomes(std::vector<std::optional<ClassOutcome>> outcomes,
               AuditStats& report_stats);

} // namespace parikh::detail
