#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "pg/errors.hpp"
#include "pg/vertex_set.hpp"

namespace pg {

enum class Player : std::uint8_t { even = 0, odd = 1 };

constexpr Player opponent(Player p) {
    return p == Player::even ? Player::odd : Player::even;
}

// The player whose parity matches the priority.
constexpr Player parity_winner(int priority) {
    return priority % 2 == 0 ? Player::even : Player::odd;
}

const char* to_string(Player p);

struct VertexRecord {
    Player owner = Player::even;
    int priority = 0;
    std::vector<VertexId> successors;
};

// A finite max-parity game. Vertex ids are dense in [0, |V|). Owner and
// priority are stored per vertex; the edge relation is kept in compressed
// form in both directions, with successor lists sorted and deduplicated at
// build time. Immutable once built.
class ParityGame {
public:
    ParityGame() = default;

    // Validates and canonicalises the records: multi-edges collapse into one,
    // empty successor lists raise EmptySuccessors, out-of-range targets raise
    // DanglingEdge, negative priorities are rejected.
    static ParityGame build(const std::vector<VertexRecord>& records);

    std::size_t num_vertices() const { return priorities_.size(); }
    std::size_t num_edges() const { return succ_.size(); }

    // Number of distinct priorities in the game.
    std::size_t priority_count() const { return distinct_priorities_; }

    Player owner(VertexId v) const { return owners_[v]; }
    int priority(VertexId v) const { return priorities_[v]; }

    std::span<const VertexId> successors(VertexId v) const {
        return {succ_.data() + succ_offsets_[v], succ_offsets_[v + 1] - succ_offsets_[v]};
    }

    std::span<const VertexId> predecessors(VertexId v) const {
        return {pred_.data() + pred_offsets_[v], pred_offsets_[v + 1] - pred_offsets_[v]};
    }

    VertexSet full_set() const { return VertexSet::all(num_vertices()); }

    bool operator==(const ParityGame&) const = default;

private:
    std::vector<Player> owners_;
    std::vector<int> priorities_;
    std::vector<std::uint32_t> succ_offsets_{0};
    std::vector<std::uint32_t> pred_offsets_{0};
    std::vector<VertexId> succ_;
    std::vector<VertexId> pred_;
    std::size_t distinct_priorities_ = 0;
};

// A pseudo parity game: a parent game together with a live-vertex mask.
// Views are values; taking a subgame copies only the mask. The restriction
// may fail to be total, so solvers check totality at their entry points.
class GameView {
public:
    explicit GameView(const ParityGame& game) : game_(&game), live_(game.full_set()) {}

    GameView(const ParityGame& game, VertexSet live) : game_(&game), live_(std::move(live)) {
        assert(live_.universe_size() == game.num_vertices());
    }

    const ParityGame& game() const { return *game_; }
    const VertexSet& live() const { return live_; }
    bool contains(VertexId v) const { return live_.contains(v); }
    bool empty() const { return live_.empty(); }
    std::size_t live_count() const { return live_.count(); }

    bool operator==(const GameView& other) const {
        return game_ == other.game_ && live_ == other.live_;
    }

private:
    const ParityGame* game_;
    VertexSet live_;
};

// Subgame induced by `keep`, which must be a nonempty subset of the live
// vertices. Raises EmptyRestriction on an empty argument.
GameView restrict_to(const GameView& g, const VertexSet& keep);

// Subgame without `drop` (a subset of the live vertices). The result may be
// empty.
GameView remove(const GameView& g, const VertexSet& drop);

// True when every live vertex has at least one live successor. Vacuously
// true for the empty view.
bool is_total(const GameView& g);

// Lowest-id live vertex with no live successor, if any.
std::optional<VertexId> first_nontotal_vertex(const GameView& g);

// Highest priority among the live vertices. Raises EmptyGame.
int max_priority(const GameView& g);

// Live vertices carrying priority m. Raises EmptyGame on an empty view.
VertexSet vertices_with_priority(const GameView& g, int m);

}  // namespace pg
