#include "pg/graph_ops.hpp"

#include <algorithm>
#include <cassert>

#include "pg/stats.hpp"

namespace pg {

namespace detail {

VertexSet attractor_into(const ParityGame& game, const VertexSet& live, Player p,
                         const VertexSet& targets, SolveStats* stats, AttractorScratch& scratch) {
    assert(targets.is_subset_of(live));
    VertexSet result = targets;
    if (scratch.remaining.size() < game.num_vertices()) {
        scratch.remaining.resize(game.num_vertices(), 0);
        scratch.stamp.resize(game.num_vertices(), 0);
    }
    if (++scratch.epoch == 0) {
        // Epoch counter wrapped; invalidate all stamps once.
        std::fill(scratch.stamp.begin(), scratch.stamp.end(), 0u);
        scratch.epoch = 1;
    }

    scratch.queue.clear();
    for (VertexId v : result) scratch.queue.push_back(v);

    std::uint64_t visits = 0;
    std::size_t head = 0;
    while (head < scratch.queue.size()) {
        VertexId w = scratch.queue[head++];
        for (VertexId v : game.predecessors(w)) {
            if (!live.contains(v)) continue;
            visits++;
            if (result.contains(v)) continue;
            bool attracted;
            if (game.owner(v) == p) {
                attracted = true;
            } else {
                // Opponent vertex: joins once all its live successors are in.
                // The remaining count is set up lazily on the first incoming
                // edge; successors already queued deliver their decrement
                // when they are dequeued later.
                if (scratch.stamp[v] != scratch.epoch) {
                    std::int32_t cnt = 0;
                    for (VertexId x : game.successors(v)) {
                        if (live.contains(x)) {
                            cnt++;
                            visits++;
                        }
                    }
                    scratch.stamp[v] = scratch.epoch;
                    scratch.remaining[v] = cnt;
                }
                attracted = --scratch.remaining[v] == 0;
            }
            if (attracted) {
                result.insert(v);
                scratch.queue.push_back(v);
            }
        }
    }
    if (stats) stats->attractor_edge_visits += visits;
    return result;
}

}  // namespace detail

VertexSet attractor(const GameView& g, Player p, const VertexSet& targets, SolveStats* stats) {
    detail::AttractorScratch scratch;
    return detail::attractor_into(g.game(), g.live(), p, targets, stats, scratch);
}

std::optional<std::size_t> SccDecomposition::first_final() const {
    for (std::size_t i = 0; i < is_final.size(); i++) {
        if (is_final[i]) return i;
    }
    return std::nullopt;
}

SccDecomposition scc_decompose(const GameView& view) {
    const ParityGame& g = view.game();
    const std::size_t n = g.num_vertices();
    constexpr std::uint32_t unvisited = ~0u;

    SccDecomposition out;
    out.component_of.assign(n, -1);

    std::vector<std::uint32_t> index(n, unvisited);
    std::vector<std::uint32_t> lowlink(n, 0);
    std::vector<bool> on_stack(n, false);
    std::vector<VertexId> stack;

    struct Frame {
        VertexId v;
        std::uint32_t next_edge;
    };
    std::vector<Frame> dfs;
    dfs.reserve(view.live_count());
    std::uint32_t counter = 0;

    for (VertexId root = 0; root < n; root++) {
        if (!view.contains(root) || index[root] != unvisited) continue;
        index[root] = lowlink[root] = counter++;
        stack.push_back(root);
        on_stack[root] = true;
        dfs.push_back({root, 0});
        while (!dfs.empty()) {
            Frame& f = dfs.back();
            auto succs = g.successors(f.v);
            bool descended = false;
            while (f.next_edge < succs.size()) {
                VertexId w = succs[f.next_edge++];
                if (!view.contains(w)) continue;
                if (index[w] == unvisited) {
                    index[w] = lowlink[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    dfs.push_back({w, 0});
                    descended = true;
                    break;
                }
                if (on_stack[w]) lowlink[f.v] = std::min(lowlink[f.v], index[w]);
            }
            if (descended) continue;
            VertexId v = f.v;
            dfs.pop_back();
            if (!dfs.empty()) lowlink[dfs.back().v] = std::min(lowlink[dfs.back().v], lowlink[v]);
            if (lowlink[v] == index[v]) {
                // Components complete in reverse topological order: every
                // edge leaving the new component enters an earlier one.
                VertexSet comp(n);
                while (true) {
                    VertexId w = stack.back();
                    stack.pop_back();
                    on_stack[w] = false;
                    comp.insert(w);
                    out.component_of[w] = static_cast<std::int32_t>(out.components.size());
                    if (w == v) break;
                }
                out.components.push_back(std::move(comp));
            }
        }
    }

    out.is_final.assign(out.components.size(), true);
    for (VertexId v : view.live()) {
        for (VertexId w : g.successors(v)) {
            if (!view.contains(w)) continue;
            std::int32_t cv = out.component_of[v];
            std::int32_t cw = out.component_of[w];
            if (cv != cw) {
                out.condensation_edges.emplace_back(cv, cw);
                out.is_final[cv] = false;
            }
        }
    }
    std::sort(out.condensation_edges.begin(), out.condensation_edges.end());
    out.condensation_edges.erase(
        std::unique(out.condensation_edges.begin(), out.condensation_edges.end()),
        out.condensation_edges.end());
    return out;
}

std::vector<VertexSet> final_sccs(const SccDecomposition& d) {
    std::vector<VertexSet> out;
    for (std::size_t i = 0; i < d.components.size(); i++) {
        if (d.is_final[i]) out.push_back(d.components[i]);
    }
    return out;
}

}  // namespace pg
