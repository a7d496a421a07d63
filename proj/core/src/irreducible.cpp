#include "parikh/irreducible.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <stdexcept>
#include <unordered_map>

#include "class_scan.hpp"
#include "parikh/errors.hpp"
#include "parikh/search.hpp"

namespace parikh {

namespace {

/// Per-class working state for the irreducibility operations: the class
/// graph with memoized distance maps plus a per-word counter-tuple cache.
struct PrsContext {
    const ParikhRewritingSystem& prs;
    ClassGraph graph;
    std::vector<std::optional<std::vector<std::uint64_t>>> counter_cache;

    PrsContext(const ParikhRewritingSystem& p, ParikhVector vector,
               const SearchLimits& limits)
        : prs(p), graph(p.system(), std::move(vector), limits),
          counter_cache(graph.size())
    {
    }

    const std::vector<std::uint64_t>& counters_of(std::uint32_t index)
    {
        auto& slot = counter_cache[index];
        if (!slot)
            slot = counter_values(prs, graph.word(index));
        return *slot;
    }
};

void require_over_alphabet(const ParikhRewritingSystem& prs, const Word& w)
{
    if (!word_over(w, prs.alphabet()))
        throw std::invalid_argument("word uses letters outside the alphabet");
}

/// Builds the context and resolves both endpoints, enforcing the
/// precondition that the pair is related and distinct.
PrsContext make_related_context(const ParikhRewritingSystem& prs, const Word& w,
                                const Word& w2, const SearchLimits& limits,
                                std::uint32_t& i, std::uint32_t& j)
{
    require_over_alphabet(prs, w);
    require_over_alphabet(prs, w2);
    std::size_t s = prs.alphabet().size();
    if (parikh_vector(w, s) != parikh_vector(w2, s))
        throw NotRelatedError("the words have different Parikh vectors");
    if (counter_values(prs, w) != counter_values(prs, w2))
        throw NotRelatedError("the words have different counter values");

    PrsContext ctx(prs, parikh_vector(w, s), limits);
    i = *ctx.graph.index_of(w);
    j = *ctx.graph.index_of(w2);
    if (ctx.graph.distances_from(i)[j] < 0)
        throw NotRelatedError("no rewriting chain connects the words");
    return ctx;
}

/// Smallest word (class index) splitting the transformation i => j with
/// additive distances and matching counters, or nullopt when irreducible.
std::optional<std::uint32_t> find_splitter(PrsContext& ctx, std::uint32_t i,
                                           std::uint32_t j)
{
    const std::vector<std::int32_t>& di = ctx.graph.distances_from(i);
    const std::vector<std::int32_t>& dj = ctx.graph.distances_from(j);
    std::int32_t d = di[j];
    const std::vector<std::uint64_t>& target = ctx.counters_of(i);
    for (std::uint32_t x = 0; x < ctx.graph.size(); ++x) {
        if (x == i || x == j)
            continue;
        if (di[x] < 0 || dj[x] < 0 || di[x] + dj[x] != d)
            continue;
        if (ctx.counters_of(x) == target)
            return x;
    }
    return std::nullopt;
}

} // namespace

IrreducibilityResult irreducible(const ParikhRewritingSystem& prs, const Word& w,
                                 const Word& w2, const SearchLimits& limits)
{
    if (w == w2)
        throw NotRelatedError("the identity transformation is not classified");
    std::uint32_t i = 0, j = 0;
    PrsContext ctx = make_related_context(prs, w, w2, limits, i, j);

    IrreducibilityResult result;
    if (auto splitter = find_splitter(ctx, i, j)) {
        result.irreducible = false;
        result.splitter = ctx.graph.word(*splitter);
    } else {
        result.irreducible = true;
        result.order = static_cast<std::uint32_t>(ctx.graph.distances_from(i)[j]);
    }
    return result;
}

std::vector<IrreducibleStep> decompose(const ParikhRewritingSystem& prs,
                                       const Word& w, const Word& w2,
                                       const SearchLimits& limits)
{
    std::vector<IrreducibleStep> chain;
    if (w == w2)
        return chain;
    std::uint32_t i = 0, j = 0;
    PrsContext ctx = make_related_context(prs, w, w2, limits, i, j);

    // Splitting strictly shrinks both distances, so the recursion ends.
    std::function<void(std::uint32_t, std::uint32_t)> split =
        [&](std::uint32_t a, std::uint32_t b) {
            if (auto mid = find_splitter(ctx, a, b)) {
                split(a, *mid);
                split(*mid, b);
                return;
            }
            chain.push_back(IrreducibleStep{
                ctx.graph.word(a), ctx.graph.word(b),
                static_cast<std::uint32_t>(ctx.graph.distances_from(a)[b])});
        };
    split(i, j);
    return chain;
}

std::optional<std::vector<IrreducibleStep>>
irreducible_graph_path(const ParikhRewritingSystem& prs, const Word& w,
                       const Word& w2, std::uint32_t max_order,
                       const SearchLimits& limits)
{
    if (max_order < 1)
        throw std::invalid_argument("max_order must be at least 1");
    if (w == w2)
        return std::vector<IrreducibleStep>{};
    std::uint32_t start = 0, goal = 0;
    PrsContext ctx = make_related_context(prs, w, w2, limits, start, goal);
    std::size_t n = ctx.graph.size();

    // Vertices: counter-equal members of w's rewrite class.
    const std::vector<std::int32_t>& from_start = ctx.graph.distances_from(start);
    std::vector<std::uint32_t> cell;          // class indices of the vertices
    std::vector<std::int32_t> cell_rank(n, -1); // class index -> cell position
    for (std::uint32_t x = 0; x < n; ++x)
        if (from_start[x] >= 0 && ctx.counters_of(x) == ctx.counters_of(start)) {
            cell_rank[x] = static_cast<std::int32_t>(cell.size());
            cell.push_back(x);
        }

    // Depth-limited distances from each expanded vertex, kept only for
    // the cell members (the full per-class vector is transient).
    std::unordered_map<std::uint32_t, std::vector<std::int32_t>> cell_dist;
    auto distances = [&](std::uint32_t u) -> const std::vector<std::int32_t>& {
        auto it = cell_dist.find(u);
        if (it == cell_dist.end()) {
            std::vector<std::int32_t> full = ctx.graph.bfs_limited(u, max_order);
            std::vector<std::int32_t> compressed(cell.size());
            for (std::size_t c = 0; c < cell.size(); ++c)
                compressed[c] = full[cell[c]];
            it = cell_dist.emplace(u, std::move(compressed)).first;
        }
        return it->second;
    };

    // u => v is an edge when their distance d is within max_order and no
    // cell member splits the pair with additive distances; splitters sit
    // within depth d-1 of both ends, so the depth-limited maps suffice.
    auto is_edge = [&](std::uint32_t u, std::size_t v_rank,
                       std::int32_t d) -> bool {
        if (d < 1 || static_cast<std::uint32_t>(d) > max_order)
            return false;
        if (d == 1)
            return true;
        const std::vector<std::int32_t>& du = distances(u);
        const std::vector<std::int32_t>& dv = distances(cell[v_rank]);
        for (std::size_t c = 0; c < cell.size(); ++c) {
            if (cell[c] == u || c == v_rank)
                continue;
            if (du[c] >= 1 && dv[c] >= 1 && du[c] + dv[c] == d)
                return false;
        }
        return true;
    };

    std::unordered_map<std::uint32_t, std::pair<std::uint32_t, std::uint32_t>>
        parent; // vertex -> (predecessor, edge order)
    std::deque<std::uint32_t> queue{start};
    std::vector<bool> seen(cell.size(), false);
    seen[cell_rank[start]] = true;
    bool found = false;
    while (!queue.empty() && !found) {
        std::uint32_t u = queue.front();
        queue.pop_front();
        const std::vector<std::int32_t>& du = distances(u);
        for (std::size_t c = 0; c < cell.size(); ++c) {
            if (seen[c] || du[c] < 1)
                continue;
            if (!is_edge(u, c, du[c]))
                continue;
            seen[c] = true;
            std::uint32_t v = cell[c];
            parent[v] = {u, static_cast<std::uint32_t>(du[c])};
            if (v == goal) {
                found = true;
                break;
            }
            queue.push_back(v);
        }
    }
    if (!found)
        return std::nullopt;

    std::vector<IrreducibleStep> path;
    for (std::uint32_t v = goal; v != start;) {
        auto [u, order] = parent.at(v);
        path.push_back(IrreducibleStep{ctx.graph.word(u), ctx.graph.word(v), order});
        v = u;
    }
    std::reverse(path.begin(), path.end());
    return path;
}

ThueSystem DerivedSystem::to_thue_system() const
{
    if (pairs.empty())
        throw std::invalid_argument(
            "no irreducible transformations found at this length bound");
    std::vector<RuleFamily> rules;
    rules.reserve(pairs.size());
    for (const auto& [lhs, rhs] : pairs) {
        RuleFamily family;
        family.id = render_word(alphabet, lhs) + ">" + render_word(alphabet, rhs);
        family.left.prefix = lhs;
        family.right.prefix = rhs;
        rules.push_back(std::move(family));
    }
    return ThueSystem(alphabet, std::move(rules));
}

DerivedSystem derive_thue_system(const ParikhRewritingSystem& prs,
                                 std::size_t max_len, const SearchLimits& limits,
                                 const Parallelism& parallelism)
{
    const OrderedAlphabet& alphabet = prs.alphabet();
    std::vector<ParikhVector> specs = detail::class_specs(alphabet.size(), max_len);

    auto scan = [&](std::size_t spec_index) {
        detail::ClassOutcome outcome;
        PrsContext ctx(prs, specs[spec_index], limits);
        const AnagramClass& carrier = ctx.graph.carrier();
        outcome.stats.words = carrier.size();
        if (carrier.size() < 2)
            return outcome;

        std::vector<std::uint32_t> roots = detail::component_roots(
            prs.system(), carrier, &outcome.stats.steps);

        // counter-equal cells inside each component, in first-member order
        std::map<std::pair<std::uint32_t, std::vector<std::uint64_t>>,
                 std::vector<std::uint32_t>>
            cells;
        for (std::uint32_t x = 0; x < carrier.size(); ++x)
            cells[{roots[x], ctx.counters_of(x)}].push_back(x);

        for (const auto& [key, members] : cells) {
            for (std::size_t a = 0; a < members.size(); ++a)
                for (std::size_t b = a + 1; b < members.size(); ++b) {
                    std::uint32_t i = members[a], j = members[b];
                    std::int32_t d = ctx.graph.distances_from(i)[j];
                    const std::vector<std::int32_t>& di =
                        ctx.graph.distances_from(i);
                    const std::vector<std::int32_t>& dj =
                        ctx.graph.distances_from(j);
                    bool reducible = false;
                    for (std::uint32_t x : members) {
                        if (x == i || x == j)
                            continue;
                        if (di[x] >= 1 && dj[x] >= 1 && di[x] + dj[x] == d) {
                            reducible = true;
                            break;
                        }
                    }
                    if (!reducible)
                        outcome.collected.push_back(
                            {{carrier.word(i), carrier.word(j)},
                             static_cast<std::uint32_t>(d)});
                }
        }
        return outcome;
    };

    auto outcomes =
        detail::run_class_scan(specs.size(), parallelism.threads, scan);

    DerivedSystem derived{alphabet, {}, {}};
    for (auto& outcome : outcomes) {
        if (!outcome)
            break;
        if (outcome->error)
            std::rethrow_exception(outcome->error);
        for (auto& [pair, order] : outcome->collected) {
            derived.pairs.push_back(std::move(pair));
            ++derived.order_histogram[order];
        }
    }
    std::sort(derived.pairs.begin(), derived.pairs.end());
    return derived;
}

std::pair<Word, Word> high_order_pair(std::uint32_t n)
{
    if (n < 1)
        throw std::invalid_argument("n must be at least 1");
    const std::uint8_t a = 0, b = 1, c = 2;
    Word an;
    for (std::uint32_t i = 0; i < n; ++i)
        an.push_back(a);
    Word cn;
    for (std::uint32_t i = 0; i < n; ++i)
        cn.push_back(c);

    Word w; // a^n b c b a^n a c^n a b
    w.append(an);
    w.push_back(b);
    w.push_back(c);
    w.push_back(b);
    w.append(an);
    w.push_back(a);
    w.append(cn);
    w.push_back(a);
    w.push_back(b);

    Word w2; // b a^n c a^n a b c^n b a
    w2.push_back(b);
    w2.append(an);
    w2.push_back(c);
    w2.append(an);
    w2.push_back(a);
    w2.push_back(b);
    w2.append(cn);
    w2.push_back(b);
    w2.push_back(a);

    return {w, w2};
}

} // namespace parikh
