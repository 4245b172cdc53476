#include "pg/special.hpp"

#include <algorithm>
#include <climits>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

#include "pg/graph_ops.hpp"

namespace pg {

namespace {

std::optional<std::pair<VertexId, VertexId>> find_ascending_edge(const ParityGame& g) {
    for (VertexId v = 0; v < g.num_vertices(); v++) {
        for (VertexId w : g.successors(v)) {
            if (g.priority(v) < g.priority(w)) return std::make_pair(v, w);
        }
    }
    return std::nullopt;
}

// Two choice vertices of different owners inside one component, if any.
// A choice vertex of a component makes a nontrivial move: it has at least
// two successors within the component.
std::optional<std::pair<VertexId, VertexId>> find_nested_violation(const ParityGame& g,
                                                                   const SccDecomposition& d) {
    std::vector<std::optional<VertexId>> even_choice(d.components.size());
    std::vector<std::optional<VertexId>> odd_choice(d.components.size());
    for (VertexId v = 0; v < g.num_vertices(); v++) {
        std::int32_t c = d.component_of[v];
        int internal_degree = 0;
        for (VertexId w : g.successors(v)) {
            if (d.component_of[w] == c) internal_degree++;
        }
        if (internal_degree < 2) continue;
        auto& slot = g.owner(v) == Player::even ? even_choice[c] : odd_choice[c];
        if (!slot) slot = v;
        if (even_choice[c] && odd_choice[c]) {
            return std::make_pair(*even_choice[c], *odd_choice[c]);
        }
    }
    return std::nullopt;
}

struct DullViolation {
    VertexId vertex;
    std::vector<VertexId> cycle;
};

// A component whose top priority has one parity must not contain a cycle
// dominated by the other parity. When such a cycle exists it overlaps some
// cycle of the component's own parity (the component is strongly connected,
// so every vertex of the stray cycle also lies on a cycle through the top
// vertex), which violates dullness; the found cycle's start doubles as the
// overlap witness.
std::optional<DullViolation> find_dull_violation(const ParityGame& g, const SccDecomposition& d) {
    for (const VertexSet& comp : d.components) {
        int top = INT_MIN;
        for (VertexId v : comp) top = std::max(top, g.priority(v));
        Player stray = opponent(parity_winner(top));
        if (auto cycle = find_cycle_of_dominant_parity(GameView(g, comp), stray)) {
            return DullViolation{(*cycle)[0], std::move(*cycle)};
        }
    }
    return std::nullopt;
}

// Some v -> x1 -> ... -> u -> v path inside a strongly connected component
// with at least two vertices, listed from v.
std::vector<VertexId> extract_cycle(const ParityGame& g, const VertexSet& comp, VertexId v) {
    std::vector<std::int64_t> parent(g.num_vertices(), -2);
    std::vector<VertexId> queue{v};
    parent[v] = -1;
    std::size_t head = 0;
    while (head < queue.size()) {
        VertexId u = queue[head++];
        for (VertexId w : g.successors(u)) {
            if (w == v && u != v) {
                std::vector<VertexId> cycle;
                for (VertexId x = u;; x = VertexId(parent[x])) {
                    cycle.push_back(x);
                    if (x == v) break;
                }
                std::reverse(cycle.begin(), cycle.end());
                return cycle;
            }
            if (!comp.contains(w) || parent[w] != -2) continue;
            parent[w] = u;
            queue.push_back(w);
        }
    }
    throw std::logic_error("component claimed strongly connected has no cycle through its vertex");
}

}  // namespace

std::optional<std::vector<VertexId>> find_cycle_of_dominant_parity(const GameView& view,
                                                                   Player parity) {
    const ParityGame& g = view.game();

    std::vector<int> qs;
    for (VertexId v : view.live()) {
        int p = g.priority(v);
        if (parity_winner(p) == parity) qs.push_back(p);
    }
    std::sort(qs.begin(), qs.end());
    qs.erase(std::unique(qs.begin(), qs.end()), qs.end());

    // A cycle dominated by priority q lies entirely within the subgraph of
    // priorities <= q and passes through a priority-q vertex, so checking
    // the candidate priorities in ascending order finds one exactly when
    // one exists.
    for (int q : qs) {
        VertexSet s(g.num_vertices());
        for (VertexId v : view.live()) {
            if (g.priority(v) <= q) s.insert(v);
        }
        SccDecomposition d = scc_decompose(GameView(g, s));
        for (VertexId v : view.live()) {
            if (g.priority(v) != q) continue;
            for (VertexId w : g.successors(v)) {
                if (w == v) return std::vector<VertexId>{v};
            }
            std::int32_t c = d.component_of[v];
            if (d.components[c].count() >= 2) return extract_cycle(g, d.components[c], v);
        }
    }
    return std::nullopt;
}

bool has_cycle_of_dominant_parity(const GameView& g, Player parity) {
    return find_cycle_of_dominant_parity(g, parity).has_value();
}

GameClassReport classify(const ParityGame& g) {
    GameClassReport r;

    r.ascending_edge = find_ascending_edge(g);
    r.is_weak = !r.ascending_edge.has_value();

    std::optional<VertexId> even_choice;
    std::optional<VertexId> odd_choice;
    for (VertexId v = 0; v < g.num_vertices(); v++) {
        if (g.successors(v).size() < 2) continue;
        auto& slot = g.owner(v) == Player::even ? even_choice : odd_choice;
        if (!slot) slot = v;
    }
    if (even_choice && odd_choice) {
        r.is_solitaire = false;
        r.mixed_choice = std::make_pair(*even_choice, *odd_choice);
    } else {
        r.is_solitaire = true;
        if (even_choice) r.solitaire_owner = Player::even;
        if (odd_choice) r.solitaire_owner = Player::odd;
    }

    SccDecomposition d = scc_decompose(GameView(g));
    if (auto mixed = find_nested_violation(g, d)) {
        r.is_nested_solitaire = false;
        r.mixed_choice_in_component = *mixed;
    } else {
        r.is_nested_solitaire = true;
    }
    if (auto violation = find_dull_violation(g, d)) {
        r.is_dull = false;
        r.cycle_overlap_vertex = violation->vertex;
        r.opposite_cycle = std::move(violation->cycle);
    } else {
        r.is_dull = true;
    }
    return r;
}

Solution solve_weak(const ParityGame& g) {
    if (auto e = find_ascending_edge(g)) {
        throw NotWeak(e->first, e->second, g.priority(e->first), g.priority(e->second));
    }

    const std::size_t n = g.num_vertices();
    Solution out;
    out.even_region = VertexSet(n);
    out.odd_region = VertexSet(n);
    if (n == 0) return out;

    std::vector<VertexId> order(n);
    std::iota(order.begin(), order.end(), 0u);
    std::stable_sort(order.begin(), order.end(),
                     [&](VertexId a, VertexId b) { return g.priority(a) < g.priority(b); });

    VertexSet live = g.full_set();
    detail::AttractorScratch scratch;
    std::size_t cursor = 0;
    while (!live.empty()) {
        while (!live.contains(order[cursor])) cursor++;
        int m = g.priority(order[cursor]);
        VertexSet lowest(n);
        for (std::size_t i = cursor; i < n && g.priority(order[i]) == m; i++) {
            if (live.contains(order[i])) lowest.insert(order[i]);
        }
        // Priorities never ascend and m is minimal, so the block cannot be
        // escaped: its player wins it outright.
        for (VertexId v : lowest) {
            for (VertexId w : g.successors(v)) {
                if (live.contains(w) && !lowest.contains(w)) {
                    throw std::logic_error("minimum-priority block is not closed in a weak game");
                }
            }
        }
        Player alpha = parity_winner(m);
        VertexSet claim = detail::attractor_into(g, live, alpha, lowest, &out.stats, scratch);
        (alpha == Player::even ? out.even_region : out.odd_region) |= claim;
        live -= claim;
    }
    return out;
}

ParityGame dull_to_weak(const ParityGame& g) {
    SccDecomposition d = scc_decompose(GameView(g));
    if (auto violation = find_dull_violation(g, d)) throw NotDull(violation->vertex);

    // Longest condensation path to a sink; edges are sorted with from > to,
    // so one ascending pass settles every level.
    std::vector<int> level(d.components.size(), 0);
    for (auto [from, to] : d.condensation_edges) {
        level[from] = std::max(level[from], level[to] + 1);
    }

    std::vector<int> new_priority(d.components.size());
    for (std::size_t c = 0; c < d.components.size(); c++) {
        int top = INT_MIN;
        for (VertexId v : d.components[c]) top = std::max(top, g.priority(v));
        int parity_bit = parity_winner(top) == Player::odd ? 1 : 0;
        new_priority[c] = 2 * level[c] + parity_bit;
    }

    std::vector<VertexRecord> records(g.num_vertices());
    for (VertexId v = 0; v < g.num_vertices(); v++) {
        records[v].owner = g.owner(v);
        records[v].priority = new_priority[d.component_of[v]];
        auto succs = g.successors(v);
        records[v].successors.assign(succs.begin(), succs.end());
    }
    return ParityGame::build(records);
}

Solution solve_nested_solitaire(const ParityGame& g) {
    {
        SccDecomposition d = scc_decompose(GameView(g));
        if (auto mixed = find_nested_violation(g, d)) {
            throw NotNestedSolitaire(mixed->first, mixed->second);
        }
    }

    const std::size_t n = g.num_vertices();
    Solution out;
    out.even_region = VertexSet(n);
    out.odd_region = VertexSet(n);

    VertexSet live = g.full_set();
    detail::AttractorScratch scratch;
    while (!live.empty()) {
        SccDecomposition d = scc_decompose(GameView(g, live));
        const VertexSet& comp = d.components[*d.first_final()];

        // The player making the nontrivial moves in this component; with no
        // choice vertex the component is a single cycle and the query
        // direction cannot matter, so default to Even.
        Player q = Player::even;
        for (VertexId v : comp) {
            int internal_degree = 0;
            for (VertexId w : g.successors(v)) {
                if (comp.contains(w)) internal_degree++;
            }
            if (internal_degree >= 2) {
                q = g.owner(v);
                break;
            }
        }

        // q steers every play in the component, which is total and strongly
        // connected: q wins all of it iff a cycle of q's parity exists.
        Player winner =
            has_cycle_of_dominant_parity(GameView(g, comp), q) ? q : opponent(q);
        VertexSet claim = detail::attractor_into(g, live, winner, comp, &out.stats, scratch);
        (winner == Player::even ? out.even_region : out.odd_region) |= claim;
        live -= claim;
    }
    return out;
}

Solution solve_oracle(const GameView& view, const OracleConfig& config) {
    const ParityGame& g = view.game();
    if (auto bad = first_nontotal_vertex(view)) throw NotTotal(*bad);

    Solution out;
    out.even_region = VertexSet(g.num_vertices());
    out.odd_region = VertexSet(g.num_vertices());

    const std::size_t lv = view.live_count();
    if (lv > config.max_vertices) {
        throw TooLarge("game has " + std::to_string(lv) + " vertices, limit " +
                       std::to_string(config.max_vertices));
    }
    if (lv == 0) return out;

    // Dense positions in ascending id order with live successor lists.
    std::vector<VertexId> verts = view.live().to_vector();
    std::vector<std::uint32_t> pos_of(g.num_vertices(), 0);
    for (std::size_t i = 0; i < lv; i++) pos_of[verts[i]] = std::uint32_t(i);
    std::vector<std::vector<std::uint32_t>> succ(lv);
    std::vector<std::uint32_t> even_slots;
    std::vector<std::uint32_t> odd_slots;
    std::uint64_t pairs = 1;
    for (std::size_t i = 0; i < lv; i++) {
        for (VertexId w : g.successors(verts[i])) {
            if (view.contains(w)) succ[i].push_back(pos_of[w]);
        }
        (g.owner(verts[i]) == Player::even ? even_slots : odd_slots).push_back(std::uint32_t(i));
        if (pairs > config.max_strategy_pairs / succ[i].size()) {
            throw TooLarge("strategy pairs exceed " + std::to_string(config.max_strategy_pairs));
        }
        pairs *= succ[i].size();
    }

    // One choice per vertex; the owner's odometer advances it.
    std::vector<std::uint32_t> choice(lv, 0);
    auto advance = [&](const std::vector<std::uint32_t>& slots) {
        for (std::uint32_t s : slots) {
            if (++choice[s] < succ[s].size()) return true;
            choice[s] = 0;
        }
        return false;
    };

    // Positional strategies make each play a deterministic walk into a lasso.
    std::vector<std::uint32_t> stamp(lv, 0);
    std::vector<std::uint32_t> index_in_walk(lv, 0);
    std::vector<std::uint32_t> path;
    std::uint32_t walk_id = 0;
    auto play_winner = [&](std::uint32_t start) {
        walk_id++;
        path.clear();
        std::uint32_t v = start;
        while (stamp[v] != walk_id) {
            stamp[v] = walk_id;
            index_in_walk[v] = std::uint32_t(path.size());
            path.push_back(v);
            v = succ[v][choice[v]];
        }
        int best = INT_MIN;
        for (std::size_t k = index_in_walk[v]; k < path.size(); k++) {
            best = std::max(best, g.priority(verts[path[k]]));
        }
        return parity_winner(best);
    };

    // A vertex is won by Even iff some Even strategy wins against every Odd
    // strategy; by positional determinacy the remainder is won by Odd.
    std::vector<char> wins_all(lv, 0);
    std::vector<char> even_wins(lv, 0);
    do {
        std::fill(wins_all.begin(), wins_all.end(), 1);
        do {
            for (std::uint32_t s = 0; s < lv; s++) {
                if (wins_all[s] && play_winner(s) == Player::odd) wins_all[s] = 0;
            }
        } while (advance(odd_slots));
        for (std::uint32_t s = 0; s < lv; s++) {
            if (wins_all[s]) even_wins[s] = 1;
        }
    } while (advance(even_slots));

    for (std::uint32_t s = 0; s < lv; s++) {
        (even_wins[s] ? out.even_region : out.odd_region).insert(verts[s]);
    }
    return out;
}

Solution solve_oracle(const ParityGame& g, const OracleConfig& config) {
    return solve_oracle(GameView(g), config);
}

}  // namespace pg
