#pragma once

#include <cstdint>

namespace pg {

// Counters accumulated over one solve.
struct SolveStats {
    // Number of invocations of the recursive solver, including calls that
    // receive the empty game.
    std::uint64_t recursive_calls = 0;
    // Number of strongly connected components processed by the
    // component-driven solver (zero for the plain recursion).
    std::uint64_t for_iterations = 0;
    // Edges examined across all attractor computations.
    std::uint64_t attractor_edge_visits = 0;
    // Second recursive calls issued, and how many of those received the
    // empty game.
    std::uint64_t second_calls_total = 0;
    std::uint64_t second_calls_empty = 0;
    // Deepest nesting of the recursion.
    std::uint64_t max_recursion_depth = 0;
};

}  // namespace pg
