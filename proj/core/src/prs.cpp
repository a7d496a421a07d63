#include "parikh/prs.hpp"

#include <stdexcept>

#include "class_scan.hpp"
#include "parikh/search.hpp"

namespace parikh {

Counter::Counter(std::size_t lo, std::size_t hi, std::size_t alphabet_size)
    : lo_(lo), hi_(hi)
{
    if (!(lo < hi) || hi >= alphabet_size)
        throw std::invalid_argument(
            "counter must be an ascending run a_i..a_j with i < j inside the alphabet");
}

Counter Counter::parse(const OrderedAlphabet& alphabet, std::string_view glyphs)
{
    Word w = parse_word(alphabet, glyphs);
    std::string name(glyphs);
    if (w.size() < 2)
        throw std::invalid_argument("counter '" + name +
                                    "' must have at least two letters");
    for (std::size_t i = 1; i < w.size(); ++i)
        if (w[i] != w[i - 1] + 1)
            throw std::invalid_argument(
                "counter '" + name +
                "' is not a contiguous ascending run of the alphabet");
    return Counter(w[0], w[w.size() - 1], alphabet.size());
}

Word Counter::word() const
{
    Word w;
    for (std::size_t q = lo_; q <= hi_; ++q)
        w.push_back(static_cast<std::uint8_t>(q));
    return w;
}

ParikhRewritingSystem::ParikhRewritingSystem(ThueSystem system,
                                             std::vector<Counter> counters)
    : system_(std::move(system)), counters_(std::move(counters))
{
    if (system_.alphabet().size() < 2)
        throw std::invalid_argument(
            "a Parikh rewriting system needs an alphabet of size at least two");
    for (const RuleFamily& family : system_.rules())
        if (!family_preserves_vector(family, system_.alphabet().size()))
            throw std::invalid_argument("rule '" + family.id +
                                        "' does not preserve the Parikh vector");
    for (const Counter& counter : counters_)
        if (counter.hi() >= system_.alphabet().size())
            throw std::invalid_argument("counter ends beyond the alphabet");
}

std::vector<std::uint64_t> counter_values(const ParikhRewritingSystem& prs,
                                          const Word& w)
{
    std::vector<std::uint64_t> values;
    values.reserve(prs.counters().size());
    for (const Counter& counter : prs.counters())
        values.push_back(count_subword(w, counter.word()));
    return values;
}

bool prs_transforms(const ParikhRewritingSystem& prs, const Word& w,
                    const Word& w2, const SearchLimits& limits)
{
    if (w == w2)
        return true;
    if (counter_values(prs, w) != counter_values(prs, w2))
        return false;
    return transforms(prs.system(), w, w2, limits);
}

std::int64_t counter_delta(const DirectStep& step, const Counter& counter)
{
    Word c = counter.word();
    return static_cast<std::int64_t>(count_subword(step.result, c)) -
           static_cast<std::int64_t>(count_subword(step.source, c));
}

PairReport audit_prs_sound(const ParikhRewritingSystem& prs, std::size_t max_len,
                           const SearchLimits& limits,
                           const Parallelism& parallelism)
{
    const ThueSystem& system = prs.system();
    const OrderedAlphabet& alphabet = system.alphabet();
    std::vector<ParikhVector> specs = detail::class_specs(alphabet.size(), max_len);

    auto scan = [&](std::size_t spec_index) {
        detail::ClassOutcome outcome;
        AnagramClass carrier(specs[spec_index], limits);
        outcome.stats.words = carrier.size();

        std::vector<std::uint32_t> gids =
            detail::matrix_group_ids(alphabet, carrier, nullptr);
        std::vector<std::uint32_t> roots =
            detail::component_roots(system, carrier, &outcome.stats.steps);

        // Partition each component by the counter-value tuple; every cell
        // must stay inside one M-equivalence group.
        std::map<std::pair<std::uint32_t, std::vector<std::uint64_t>>,
                 std::uint32_t>
            cell_first;
        for (std::uint32_t i = 0; i < carrier.size(); ++i) {
            auto key = std::make_pair(roots[i], counter_values(prs, carrier.word(i)));
            auto [it, inserted] = cell_first.emplace(std::move(key), i);
            if (!inserted && gids[it->second] != gids[i]) {
                outcome.decisive = true;
                outcome.pair_witness = {carrier.word(it->second), carrier.word(i)};
                return outcome;
            }
        }
        return outcome;
    };

    PairReport report;
    auto outcomes = detail::run_class_scan(specs.size(), parallelism.threads, scan);
    if (auto bad = detail::merge_outcomes(std::move(outcomes), report.stats)) {
        report.holds = false;
        report.witness = std::move(bad->pair_witness);
    }
    return report;
}

PairReport audit_prs_complete(const ParikhRewritingSystem& prs, std::size_t max_len,
                              const SearchLimits& limits,
                              const Parallelism& parallelism)
{
    // M-equivalent words agree on every counter (counters are matrix
    // entries), so the constrained relation restricted to an M-class is
    // plain reachability; the Thue completeness audit answers exactly
    // that question.
    return audit_parikh_complete(prs.system(), max_len, limits, parallelism);
}

} // namespace parikh
