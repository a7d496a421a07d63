#include "class_scan.hpp"

#include <atomic>
#include <thread>
#include <unordered_map>

namespace parikh::detail {

namespace {

void compositions_asc(std::size_t remaining, std::size_t parts,
                      ParikhVector& prefix, std::vector<ParikhVector>& out)
{
    if (parts == 1) {
        prefix.push_back(static_cast<std::uint32_t>(remaining));
        out.push_back(prefix);
        prefix.pop_back();
        return;
    }
    for (std::size_t first = 0; first <= remaining; ++first) {
        prefix.push_back(static_cast<std::uint32_t>(first));
        compositions_asc(remaining - first, parts - 1, prefix, out);
        prefix.pop_back();
    }
}

} // namespace

std::vector<ParikhVector> class_specs(std::size_t alphabet_size,
                                      std::size_t max_len)
{
    std::vector<ParikhVector> specs;
    ParikhVector prefix;
    for (std::size_t len = 0; len <= max_len; ++len)
        compositions_asc(len, alphabet_size, prefix, specs);
    return specs;
}

UnionFind::UnionFind(std::size_t n) : parent_(n)
{
    for (std::size_t i = 0; i < n; ++i)
        parent_[i] = static_cast<std::uint32_t>(i);
}

std::uint32_t UnionFind::find(std::uint32_t x)
{
    while (parent_[x] != x) {
        parent_[x] = parent_[parent_[x]];
        x = parent_[x];
    }
    return x;
}

void UnionFind::unite(std::uint32_t a, std::uint32_t b)
{
    a = find(a);
    b = find(b);
    if (a == b)
        return;
    // keep the smaller index as the representative
    if (b < a)
        std::swap(a, b);
    parent_[b] = a;
}

std::vector<std::uint32_t> matrix_group_ids(
    const OrderedAlphabet& alphabet, const AnagramClass& carrier,
    std::vector<std::vector<std::uint32_t>>* groups)
{
    std::vector<std::uint32_t> gids(carrier.size());
    std::unordered_map<ParikhMatrix, std::uint32_t> ids;
    for (std::uint32_t i = 0; i < carrier.size(); ++i) {
        ParikhMatrix m = parikh_matrix(alphabet, carrier.word(i));
        auto [it, inserted] =
            ids.emplace(std::move(m), static_cast<std::uint32_t>(ids.size()));
        gids[i] = it->second;
        if (groups) {
            if (inserted)
                groups->emplace_back();
            (*groups)[gids[i]].push_back(i);
        }
    }
    return gids;
}

std::vector<std::uint32_t> component_roots(const ThueSystem& system,
                                           const AnagramClass& carrier,
                                           std::uint64_t* steps_seen)
{
    UnionFind uf(carrier.size());
    for (std::uint32_t i = 0; i < carrier.size(); ++i) {
        std::vector<Word> neighbors = neighbor_words(system, carrier.word(i));
        if (steps_seen)
            *steps_seen += neighbors.size();
        for (const Word& n : neighbors)
            uf.unite(i, *carrier.index_of(n));
    }
    std::vector<std::uint32_t> roots(carrier.size());
    for (std::uint32_t i = 0; i < carrier.size(); ++i)
        roots[i] = uf.find(i);
    return roots;
}

std::vector<std::optional<ClassOutcome>>
run_class_scan(std::size_t count, unsigned threads,
               const std::function<ClassOutcome(std::size_t)>& scan)
{
    std::vector<std::optional<ClassOutcome>> results(count);

    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> stop_after{count};

    auto worker = [&]() {
        while (true) {
            std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
            if (i >= count)
                return;
            if (i > stop_after.load(std::memory_order_relaxed))
                continue; // a decisive outcome at a smaller index exists
            ClassOutcome outcome;
            try {
                outcome = scan(i);
            } catch (...) {
                outcome.decisive = true;
                outcome.error = std::current_exception();
            }
            if (outcome.decisive) {
                std::size_t current = stop_after.load(std::memory_order_relaxed);
                while (i < current &&
                       !stop_after.compare_exchange_weak(current, i))
                    ;
            }
            results[i] = std::move(outcome);
        }
    };

    if (threads <= 1) {
        // sequential fast path with genuine early exit
        for (std::size_t i = 0; i < count; ++i) {
            ClassOutcome outcome;
            try {
                outcome = scan(i);
            } catch (...) {
                outcome.decisive = true;
                outcome.error = std::current_exception();
            }
            bool stop = outcome.decisive;
            results[i] = std::move(outcome);
            if (stop)
                break;
        }
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (unsigned t = 0; t < threads; ++t)
            pool.emplace_back(worker);
        for (std::thread& t : pool)
            t.join();
    }
    return results;
}

std::optional<ClassOutcome>
merge_outcomes(std::vector<std::optional<ClassOutcome>> outcomes,
               AuditStats& report_stats)
{
    for (std::optional<ClassOutcome>& outcome : outcomes) {
        if (!outcome)
            break; // skipped: a decisive outcome came earlier
        report_stats.words += outcome->stats.words;
        report_stats.steps += outcome->stats.steps;
        if (outcome->decisive) {
            if (outcome->error)
                std::rethrow_exception(outcome->error);
            return std::move(*outcome);
        }
    }
    return std::nullopt;
}

} // namespace parikh::detail
