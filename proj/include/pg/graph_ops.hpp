#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "pg/game.hpp"

namespace pg {

struct SolveStats;

namespace detail {

// Reusable buffers for attractor computations. The remaining-successor
// counters are versioned with an epoch so a fresh call needs no O(|V|)
// reinitialisation.
struct AttractorScratch {
    std::vector<std::int32_t> remaining;
    std::vector<std::uint32_t> stamp;
    std::uint32_t epoch = 0;
    std::vector<VertexId> queue;
};

VertexSet attractor_into(const ParityGame& game, const VertexSet& live, Player p,
                         const VertexSet& targets, SolveStats* stats, AttractorScratch& scratch);

}  // namespace detail

// p-attractor of `targets` within g: the least superset A of targets such
// that a vertex of p with some live successor in A, or a vertex of the
// opponent with all live successors in A, is itself in A. `targets` must be
// a subset of the live vertices. Propagation is a FIFO pass over reverse
// edges with remaining-out-degree counters, O(|V| + |E|). When `stats` is
// given, every examined edge bumps attractor_edge_visits.
VertexSet attractor(const GameView& g, Player p, const VertexSet& targets,
                    SolveStats* stats = nullptr);

struct SccDecomposition {
    // Strongly connected components in reverse topological order of the
    // condensation: sinks first, so a component only has edges to components
    // with a smaller index.
    std::vector<VertexSet> components;
    // Component index per vertex, -1 for vertices outside the view.
    std::vector<std::int32_t> component_of;
    // Deduplicated condensation edges (from, to) with to < from.
    std::vector<std::pair<std::int32_t, std::int32_t>> condensation_edges;
    // Per component: no outgoing condensation edge.
    std::vector<bool> is_final;

    std::optional<std::size_t> first_final() const;
};

// Tarjan decomposition over the live vertices (iterative, roots scanned in
// ascending id order).
SccDecomposition scc_decompose(const GameView& g);

// The components without outgoing condensation edges. Within a total game
// each of these induces a total subgame.
std::vector<VertexSet> final_sccs(const SccDecomposition& d);

}  // namespace pg
