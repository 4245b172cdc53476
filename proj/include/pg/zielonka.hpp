#pragma once

#include <functional>

#include "pg/game.hpp"
#include "pg/stats.hpp"

namespace pg {

struct Solution {
    VertexSet even_region;
    VertexSet odd_region;
    SolveStats stats;
};

// Test instrumentation: observe the argument passed to every second
// recursive call of solve_recursive. The view references solver-internal
// storage and is only valid during the callback.
struct SolveHooks {
    std::function<void(const GameView&)> on_second_call;
};

// The classic recursive algorithm. Peels the attractor of the top-priority
// vertices, recurses, and either claims the attractor for the dominant
// player or hands the opponent's attractor to a second recursion. Requires
// a total game (NotTotal otherwise). Regions are reported in the ids of the
// argument's parent game.
Solution solve_recursive(const GameView& g, const SolveHooks* hooks = nullptr);
Solution solve_recursive(const ParityGame& g, const SolveHooks* hooks = nullptr);

// Component-driven variant: repeatedly decomposes the residual game,
// processes one final strongly connected component per round (the one with
// the smallest component index), and attracts the winners' regions in the
// residual game before re-decomposing. Recursive calls re-enter this same
// procedure. Requires a total game.
Solution solve_recursive_scc(const GameView& g);
Solution solve_recursive_scc(const ParityGame& g);

}  // namespace pg
