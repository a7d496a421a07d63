#include "parikh/search.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>
#include <unordered_set>

#include "parikh/errors.hpp"

namespace parikh {

namespace {

using DistMap = std::unordered_map<Word, std::uint32_t>;

void check_visited_cap(std::size_t visited, const SearchLimits& limits)
{
    if (visited > limits.max_visited)
        throw CapExceededError("breadth-first search visited more than " +
                               std::to_string(limits.max_visited) + " words");
}

// Expands `side` by one full level.  Returns the best meeting distance
// found while expanding (or nullopt).
std::optional<std::uint32_t> expand_level(const ThueSystem& system, DistMap& side,
                                          const DistMap& other,
                                          std::vector<Word>& frontier,
                                          std::uint32_t new_depth,
                                          const SearchLimits& limits,
                                          std::size_t& visited)
{
    std::optional<std::uint32_t> best;
    std::vector<Word> next;
    for (const Word& node : frontier)
        for (Word& neighbor : neighbor_words(system, node)) {
            if (side.contains(neighbor))
                continue;
            side.emplace(neighbor, new_depth);
            ++visited;
            check_visited_cap(visited, limits);
            if (auto it = other.find(neighbor); it != other.end()) {
                std::uint32_t total = new_depth + it->second;
                if (!best || total < *best)
                    best = total;
            }
            next.push_back(std::move(neighbor));
        }
    frontier = std::move(next);
    return best;
}

} // namespace

std::optional<std::uint32_t> dist(const ThueSystem& system, const Word& w,
                                  const Word& w2, const SearchLimits& limits)
{
    if (w == w2)
        return 0;
    if (system.vector_preserving() &&
        parikh_vector(w, system.alphabet().size()) !=
            parikh_vector(w2, system.alphabet().size()))
        return std::nullopt;

    // Bidirectional level-synchronized search.  All words within depth_f
    // of w and depth_b of w2 are known, so any undiscovered path has
    // length greater than depth_f + depth_b; once best <= depth_f +
    // depth_b the answer is final.  An exhausted side closes its whole
    // component, which also settles the answer.
    DistMap forward{{w, 0}}, backward{{w2, 0}};
    std::vector<Word> frontier_f{w}, frontier_b{w2};
    std::uint32_t depth_f = 0, depth_b = 0;
    std::optional<std::uint32_t> best;
    std::size_t visited = 2;

    while (true) {
        if (best && *best <= depth_f + depth_b)
            return best;
        if (frontier_f.empty() || frontier_b.empty())
            return best;
        // expand the smaller frontier; alternate on ties so that a side
        // that is about to exhaust (and settle the answer) gets its turn
        bool expand_forward = frontier_f.size() != frontier_b.size()
                                  ? frontier_f.size() < frontier_b.size()
                                  : depth_f <= depth_b;
        std::optional<std::uint32_t> meet;
        if (expand_forward)
            meet = expand_level(system, forward, backward, frontier_f, ++depth_f,
                                limits, visited);
        else
            meet = expand_level(system, backward, forward, frontier_b, ++depth_b,
                                limits, visited);
        if (meet && (!best || *meet < *best))
            best = meet;
    }
}

std::optional<std::uint32_t> dist_unidirectional(const ThueSystem& system,
                                                 const Word& w, const Word& w2,
                                                 const SearchLimits& limits)
{
    if (w == w2)
        return 0;
    DistMap dist_map{{w, 0}};
    std::deque<Word> queue{w};
    std::size_t visited = 1;
    while (!queue.empty()) {
        Word node = std::move(queue.front());
        queue.pop_front();
        std::uint32_t d = dist_map.at(node);
        for (Word& neighbor : neighbor_words(system, node)) {
            if (dist_map.contains(neighbor))
                continue;
            if (neighbor == w2)
                return d + 1;
            dist_map.emplace(neighbor, d + 1);
            ++visited;
            check_visited_cap(visited, limits);
            queue.push_back(std::move(neighbor));
        }
    }
    return std::nullopt;
}

bool transforms(const ThueSystem& system, const Word& w, const Word& w2,
                const SearchLimits& limits)
{
    return dist(system, w, w2, limits).has_value();
}

std::vector<Word> r_class(const ThueSystem& system, const Word& w,
                          const SearchLimits& limits)
{
    std::unordered_set<Word> seen{w};
    std::deque<Word> queue{w};
    while (!queue.empty()) {
        Word node = std::move(queue.front());
        queue.pop_front();
        for (Word& neighbor : neighbor_words(system, node)) {
            if (seen.contains(neighbor))
                continue;
            check_visited_cap(seen.size() + 1, limits);
            seen.insert(neighbor);
            queue.push_back(std::move(neighbor));
        }
    }
    std::vector<Word> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end());
    return out;
}

ClassGraph::ClassGraph(const ThueSystem& system, ParikhVector vector,
                       const SearchLimits& limits)
    : system_(&system), carrier_(std::move(vector), limits)
{
    if (!system.vector_preserving())
        throw std::invalid_argument(
            "class graphs require a vector-preserving system");
}

std::vector<std::uint32_t> ClassGraph::neighbors(std::uint32_t index) const
{
    std::vector<std::uint32_t> out;
    for (const Word& neighbor : neighbor_words(*system_, carrier_.word(index)))
        out.push_back(*carrier_.index_of(neighbor));
    return out;
}

std::vector<std::int32_t> ClassGraph::bfs(std::uint32_t src) const
{
    return bfs_limited(src, static_cast<std::uint32_t>(carrier_.size()));
}

std::vector<std::int32_t> ClassGraph::bfs_limited(std::uint32_t src,
                                                  std::uint32_t max_depth) const
{
    std::vector<std::int32_t> dist_map(carrier_.size(), -1);
    dist_map[src] = 0;
    std::deque<std::uint32_t> queue{src};
    while (!queue.empty()) {
        std::uint32_t node = queue.front();
        queue.pop_front();
        std::int32_t d = dist_map[node];
        if (static_cast<std::uint32_t>(d) >= max_depth)
            continue;
        for (std::uint32_t neighbor : neighbors(node))
            if (dist_map[neighbor] < 0) {
                dist_map[neighbor] = d + 1;
                queue.push_back(neighbor);
            }
    }
    return dist_map;
}

const std::vector<std::int32_t>& ClassGraph::distances_from(std::uint32_t src)
{
    auto it = memo_.find(src);
    if (it == memo_.end())
        it = memo_.emplace(src, bfs(src)).first;
    return it->second;
}

} // namespace parikh
