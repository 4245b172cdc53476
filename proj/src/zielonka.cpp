#include "pg/zielonka.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <utility>

#include "pg/graph_ops.hpp"

namespace pg {

namespace {

// The recursion runs on a compacted copy of the input whose vertex ids
// ascend with priority. That makes the top priority of any live mask the
// mask's highest set bit, so a call costs time proportional to the vertices
// and edges it actually removes instead of a scan of the whole subgame.
struct CompactGame {
    ParityGame game;
    std::vector<VertexId> to_external;
};

CompactGame compact_by_priority(const GameView& view) {
    const ParityGame& g = view.game();
    std::vector<VertexId> order = view.live().to_vector();
    std::stable_sort(order.begin(), order.end(),
                     [&](VertexId a, VertexId b) { return g.priority(a) < g.priority(b); });
    std::vector<VertexId> to_internal(g.num_vertices(), 0);
    for (std::size_t i = 0; i < order.size(); i++) to_internal[order[i]] = VertexId(i);

    std::vector<VertexRecord> records(order.size());
    for (std::size_t i = 0; i < order.size(); i++) {
        VertexId v = order[i];
        records[i].owner = g.owner(v);
        records[i].priority = g.priority(v);
        for (VertexId w : g.successors(v)) {
            if (view.contains(w)) records[i].successors.push_back(to_internal[w]);
        }
    }
    return {ParityGame::build(records), std::move(order)};
}

struct Regions {
    VertexSet even;
    VertexSet odd;

    VertexSet& of(Player p) { return p == Player::even ? even : odd; }
};

struct RecState {
    const ParityGame& g;
    SolveStats& stats;
    const SolveHooks* hooks;
    detail::AttractorScratch scratch;
    std::uint64_t depth = 0;

    void enter() {
        stats.recursive_calls++;
        depth++;
        stats.max_recursion_depth = std::max(stats.max_recursion_depth, depth);
    }
};

// Live vertices of the highest priority; ids ascend with priority, so they
// sit in one id range ending at the highest live id.
void top_priority_set(const ParityGame& g, const VertexSet& live, int& m_out, VertexSet& u) {
    VertexId top = *live.highest();
    int m = g.priority(top);
    u.clear();
    for (VertexId v = top;; v--) {
        if (g.priority(v) != m) break;
        if (live.contains(v)) u.insert(v);
        if (v == 0) break;
    }
    m_out = m;
}

// The plain recursion, kept as a direct transliteration: every call takes a
// fresh copy of its live set and builds its regions in fresh storage.
Regions zielonka(RecState& st, VertexSet live) {
    st.enter();
    Regions result{VertexSet(live.universe_size()), VertexSet(live.universe_size())};
    if (!live.empty()) {
        assert(is_total(GameView(st.g, live)));
        int m = 0;
        VertexSet u(live.universe_size());
        top_priority_set(st.g, live, m, u);
        Player p = parity_winner(m);
        VertexSet a = detail::attractor_into(st.g, live, p, u, &st.stats, st.scratch);
        Regions sub = zielonka(st, live - a);
        if (sub.of(opponent(p)).empty()) {
            result.of(p) = a | sub.of(p);
        } else {
            VertexSet b = detail::attractor_into(st.g, live, opponent(p), sub.of(opponent(p)),
                                                 &st.stats, st.scratch);
            VertexSet rest = live - b;
            st.stats.second_calls_total++;
            if (rest.empty()) st.stats.second_calls_empty++;
            if (st.hooks && st.hooks->on_second_call) {
                st.hooks->on_second_call(GameView(st.g, rest));
            }
            result = zielonka(st, std::move(rest));
            result.of(opponent(p)) |= b;
        }
    }
    st.depth--;
    return result;
}

Regions zielonka_scc(RecState& st, VertexSet live) {
    st.enter();
    Regions result{VertexSet(live.universe_size()), VertexSet(live.universe_size())};
    while (!live.empty()) {
        SccDecomposition d = scc_decompose(GameView(st.g, live));
        const VertexSet& c = d.components[*d.first_final()];
        st.stats.for_iterations++;

        // Solve the subgame induced by the final component exactly as the
        // plain recursion would, but recurse back into this procedure.
        int m = 0;
        VertexSet u(live.universe_size());
        top_priority_set(st.g, c, m, u);
        Player p = parity_winner(m);
        VertexSet a = detail::attractor_into(st.g, c, p, u, &st.stats, st.scratch);
        Regions sub = zielonka_scc(st, c - a);
        Regions comp_result{VertexSet(live.universe_size()), VertexSet(live.universe_size())};
        if (sub.of(opponent(p)).empty()) {
            comp_result.of(p) = a | sub.of(p);
        } else {
            VertexSet b =
                detail::attractor_into(st.g, c, opponent(p), sub.of(opponent(p)), &st.stats, st.scratch);
            VertexSet rest = c - b;
            st.stats.second_calls_total++;
            if (rest.empty()) st.stats.second_calls_empty++;
            comp_result = zielonka_scc(st, std::move(rest));
            comp_result.of(opponent(p)) |= b;
        }

        // Both winners extend their regions by attraction in the residual
        // game before it is decomposed again.
        VertexSet even_claim =
            detail::attractor_into(st.g, live, Player::even, comp_result.even, &st.stats, st.scratch);
        VertexSet odd_claim =
            detail::attractor_into(st.g, live, Player::odd, comp_result.odd, &st.stats, st.scratch);
        result.even |= even_claim;
        result.odd |= odd_claim;
        live -= even_claim;
        live -= odd_claim;
    }
    st.depth--;
    return result;
}

Solution run_solver(const GameView& view, const SolveHooks* hooks, bool scc_driven) {
    if (auto bad = first_nontotal_vertex(view)) throw NotTotal(*bad);

    Solution out;
    out.even_region = VertexSet(view.game().num_vertices());
    out.odd_region = VertexSet(view.game().num_vertices());

    CompactGame compact = compact_by_priority(view);
    RecState st{compact.game, out.stats, hooks, {}, 0};
    Regions r = scc_driven ? zielonka_scc(st, compact.game.full_set())
                           : zielonka(st, compact.game.full_set());

    for (VertexId v : r.even) out.even_region.insert(compact.to_external[v]);
    for (VertexId v : r.odd) out.odd_region.insert(compact.to_external[v]);
    if (out.even_region.intersects(out.odd_region) ||
        (out.even_region | out.odd_region) != view.live()) {
        throw std::logic_error("solver produced regions that do not partition the game");
    }
    return out;
}

}  // namespace

Solution solve_recursive(const GameView& g, const SolveHooks* hooks) {
    return run_solver(g, hooks, false);
}

Solution solve_recursive(const ParityGame& g, const SolveHooks* hooks) {
    return solve_recursive(GameView(g), hooks);
}

Solution solve_recursive_scc(const GameView& g) {
    return run_solver(g, nullptr, true);
}

Solution solve_recursive_scc(const ParityGame& g) {
    return solve_recursive_scc(GameView(g));
}

}  // namespace pg
