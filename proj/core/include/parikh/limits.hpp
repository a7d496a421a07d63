// limits.hpp -- resource caps and worker configuration

#pragma once

#include <cstdint>

namespace parikh {

/// State caps for enumerations and breadth-first searches.  Exceeding a
/// cap raises CapExceededError; results below the caps are always exact.
struct SearchLimits {
    /// Largest anagram class that may be materialized.
    std::uint64_t max_class_size = 500'000;
    /// Largest visited set a breadth-first search may accumulate.
    std::uint64_t max_visited = 500'000;
};

/// Worker count for the operations that partition independent work.
/// Results are merged deterministically, so the thread count never
/// changes any output.
struct Parallelism {
    unsigned threads = 1;
};

} // namespace parikh
