// search.hpp -- reachability, distance, and rewrite classes

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "parikh/anagrams.hpp"
#include "parikh/limits.hpp"
#include "parikh/thue.hpp"

namespace parikh {

/// Whether w transforms into w2 (reflexive, symmetric, transitive).
/// Raises CapExceededError when the search outgrows the visited cap
/// before settling the question.
bool transforms(const ThueSystem& system, const Word& w, const Word& w2,
                const SearchLimits& limits = {});

/// Least number of direct steps between w and w2; 0 exactly when they are
/// equal; nullopt when w2 is unreachable from w.  Runs a bidirectional
/// breadth-first search whose result equals a plain one.
std::optional<std::uint32_t> dist(const ThueSystem& system, const Word& w,
                                  const Word& w2, const SearchLimits& limits = {});

/// Plain single-sided breadth-first variant of dist, kept as an
/// independent cross-check of the bidirectional search.
std::optional<std::uint32_t> dist_unidirectional(const ThueSystem& system,
                                                 const Word& w, const Word& w2,
                                                 const SearchLimits& limits = {});

/// The full rewrite class of w, sorted lexicographically.
std::vector<Word> r_class(const ThueSystem& system, const Word& w,
                          const SearchLimits& limits = {});

/// The direct-step graph of one anagram class of a vector-preserving
/// system.  Vertices are the class indices of the materialized carrier;
/// neighbor lists are recomputed on demand and full distance maps are
/// memoized per source.
class ClassGraph {
public:
    ClassGraph(const ThueSystem& system, ParikhVector vector,
               const SearchLimits& limits = {});

    const AnagramClass& carrier() const { return carrier_; }
    std::size_t size() const { return carrier_.size(); }
    const Word& word(std::uint32_t index) const { return carrier_.word(index); }
    std::optional<std::uint32_t> index_of(const Word& w) const
    {
        return carrier_.index_of(w);
    }

    /// Class indices one direct step away from vertex `index`, sorted.
    std::vector<std::uint32_t> neighbors(std::uint32_t index) const;

    /// Distances from src to every vertex; -1 marks unreachable vertices.
    std::vector<std::int32_t> bfs(std::uint32_t src) const;

    /// Distances capped at max_depth; vertices farther away stay -1.
    std::vector<std::int32_t> bfs_limited(std::uint32_t src,
                                          std::uint32_t max_depth) const;

    /// Memoized full distance map from src.
    const std::vector<std::int32_t>& distances_from(std::uint32_t src);

private:
    const ThueSystem* system_;
    AnagramClass carrier_;
    std::map<std::uint32_t, std::vector<std::int32_t>> memo_;
};

} // namespace parikh
