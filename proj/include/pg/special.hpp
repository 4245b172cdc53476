#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "pg/game.hpp"
#include "pg/zielonka.hpp"

namespace pg {

// Structural classification of a game, with a counterexample witness for
// every flag that is false.
struct GameClassReport {
    // No edge ascends in priority.
    bool is_weak = false;
    // Within each strongly connected component, even-dominated and
    // odd-dominated cycles do not both occur.
    bool is_dull = false;
    // All vertices with two or more successors belong to one player.
    bool is_solitaire = false;
    // The player owning the nontrivial moves; empty when no vertex has a
    // choice (then either player qualifies).
    std::optional<Player> solitaire_owner;
    // Every strongly connected component induces a solitaire subgame.
    bool is_nested_solitaire = false;

    // Witnesses for the violated properties.
    std::optional<std::pair<VertexId, VertexId>> ascending_edge;
    std::optional<VertexId> cycle_overlap_vertex;
    std::vector<VertexId> opposite_cycle;
    std::optional<std::pair<VertexId, VertexId>> mixed_choice;
    std::optional<std::pair<VertexId, VertexId>> mixed_choice_in_component;
};

GameClassReport classify(const ParityGame& g);

// Searches for a cycle whose highest priority has the given parity. Works
// through the priorities q of that parity in ascending order and asks, via
// one decomposition per q, whether a priority-q vertex lies on a cycle of
// the subgraph of priorities <= q; total cost O(d * (|V| + |E|)). The
// witness lists the cycle's vertices in traversal order, starting at a
// vertex of the dominating priority.
std::optional<std::vector<VertexId>> find_cycle_of_dominant_parity(const GameView& g, Player parity);
bool has_cycle_of_dominant_parity(const GameView& g, Player parity);

// Dedicated solver for weak games (NotWeak otherwise): repeatedly claims
// the attractor of the minimum-priority vertices, which form a closed set,
// for the player of that parity. Each vertex and edge is retired once.
Solution solve_weak(const ParityGame& g);

// Priority relabelling that turns a dull game (NotDull otherwise) into a
// weak game with the same arena and winning regions: each component gets
// priority 2 * (longest condensation path to a sink) + dominant parity bit.
ParityGame dull_to_weak(const ParityGame& g);

// Dedicated solver for nested solitaire games (NotNestedSolitaire
// otherwise): processes final components of the residual game; a component
// is won entirely by the choice-making player exactly when it contains a
// cycle of that player's parity.
Solution solve_nested_solitaire(const ParityGame& g);

struct OracleConfig {
    std::size_t max_vertices = 12;
    std::uint64_t max_strategy_pairs = 1ull << 22;
};

// Ground-truth solver by exhaustive enumeration of positional strategies,
// in lexicographic vertex order. Every strategy pair induces from each
// vertex an eventually cyclic play, decided by walking until a vertex
// repeats; a vertex is won by Even iff some Even strategy beats all Odd
// strategies from it. Raises TooLarge beyond the configured bounds.
Solution solve_oracle(const GameView& g, const OracleConfig& config = {});
Solution solve_oracle(const ParityGame& g, const OracleConfig& config = {});

}  // namespace pg
