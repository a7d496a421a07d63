#include "parikh/audit.hpp"

#include <algorithm>

#include "class_scan.hpp"

namespace parikh {

using detail::ClassOutcome;

SoundnessReport audit_parikh_sound(const ThueSystem& system, std::size_t max_len,
                                   const SearchLimits& limits,
                                   const Parallelism& parallelism)
{
    const OrderedAlphabet& alphabet = system.alphabet();
    std::vector<ParikhVector> specs = detail::class_specs(alphabet.size(), max_len);

    auto scan = [&](std::size_t spec_index) {
        ClassOutcome outcome;
        AnagramClass carrier(specs[spec_index], limits);
        for (std::uint32_t i = 0; i < carrier.size(); ++i) {
            const Word& w = carrier.word(i);
            ParikhMatrix before = parikh_matrix(alphabet, w);
            std::vector<DirectStep> steps = direct_neighbors(system, w);
            outcome.stats.words += 1;
            outcome.stats.steps += steps.size();
            for (DirectStep& step : steps)
                if (parikh_matrix(alphabet, step.result) != before) {
                    outcome.decisive = true;
                    outcome.step_witness = std::move(step);
                    return outcome;
                }
        }
        return outcome;
    };

    SoundnessReport report;
    auto outcomes = detail::run_class_scan(specs.size(), parallelism.threads, scan);
    if (auto bad = detail::merge_outcomes(std::move(outcomes), report.stats)) {
        report.holds = false;
        report.witness = std::move(bad->step_witness);
    }
    return report;
}

namespace {

// Shared by the Thue and Parikh-rewriting completeness audits: every
// M-equivalence group inside one anagram class must sit in a single
// rewrite class.
ClassOutcome scan_class_completeness(const ThueSystem& system,
                                     const ParikhVector& vector,
                                     const SearchLimits& limits)
{
    ClassOutcome outcome;
    const OrderedAlphabet& alphabet = system.alphabet();
    AnagramClass carrier(vector, limits);
    outcome.stats.words = carrier.size();

    std::vector<std::vector<std::uint32_t>> groups;
    detail::matrix_group_ids(alphabet, carrier, &groups);

    bool all_singletons =
        std::all_of(groups.begin(), groups.end(),
                    [](const auto& g) { return g.size() == 1; });
    if (all_singletons)
        return outcome;

    if (system.vector_preserving()) {
        std::vector<std::uint32_t> roots =
            detail::component_roots(system, carrier, &outcome.stats.steps);
        for (const std::vector<std::uint32_t>& group : groups) {
            std::uint32_t root0 = roots[group.front()];
            for (std::uint32_t member : group)
                if (roots[member] != root0) {
                    outcome.decisive = true;
                    outcome.pair_witness = {carrier.word(group.front()),
                                            carrier.word(member)};
                    return outcome;
                }
        }
        return outcome;
    }

    // General systems may rewrite out of the anagram class, possibly into
    // infinite classes; settle each pair with a targeted bidirectional
    // search instead of materializing rewrite classes.
    for (const std::vector<std::uint32_t>& group : groups) {
        for (std::uint32_t member : group) {
            if (member == group.front())
                continue;
            outcome.stats.steps += 1;
            if (!transforms(system, carrier.word(group.front()),
                            carrier.word(member), limits)) {
                outcome.decisive = true;
                outcome.pair_witness = {carrier.word(group.front()),
                                        carrier.word(member)};
                return outcome;
            }
        }
    }
    return outcome;
}

} // namespace

PairReport audit_parikh_complete(const ThueSystem& system, std::size_t max_len,
                                 const SearchLimits& limits,
                                 const Parallelism& parallelism)
{
    std::vector<ParikhVector> specs =
        detail::class_specs(system.alphabet().size(), max_len);
    auto scan = [&](std::size_t spec_index) {
        return scan_class_completeness(system, specs[spec_index], limits);
    };

    PairReport report;
    auto outcomes = detail::run_class_scan(specs.size(), parallelism.threads, scan);
    if (auto bad = detail::merge_outcomes(std::move(outcomes), report.stats)) {
        report.holds = false;
        report.witness = std::move(bad->pair_witness);
    }
    return report;
}

} // namespace parikh
