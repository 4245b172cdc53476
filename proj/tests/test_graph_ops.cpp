#include <algorithm>
#include <random>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "pg/families.hpp"
#include "pg/graph_ops.hpp"
#include "pg/stats.hpp"

using namespace pg;

namespace {

VertexSet random_subset(std::mt19937_64& rng, std::size_t universe) {
    VertexSet s(universe);
    for (VertexId v = 0; v < universe; v++) {
        if (rng() % 2) s.insert(v);
    }
    return s;
}

std::vector<std::vector<VertexId>> as_sorted_lists(const std::vector<VertexSet>& components) {
    std::vector<std::vector<VertexId>> lists;
    lists.reserve(components.size());
    for (const VertexSet& c : components) lists.push_back(c.to_vector());
    std::sort(lists.begin(), lists.end());
    return lists;
}

}  // namespace

TEST_CASE("attractor on the solitaire game") {
    ParityGame g = gen_solitaire(3);
    GameView view(g);

    // v5 attracts nothing for Odd: every vertex is Even-owned with an escape.
    CHECK(attractor(view, Player::odd, VertexSet::of(9, {5})) == VertexSet::of(9, {5}));

    // For Even the whole game funnels into v0.
    CHECK(attractor(view, Player::even, VertexSet::of(9, {0})) == g.full_set());

    CHECK(attractor(view, Player::even, g.full_set()) == g.full_set());
    CHECK(attractor(view, Player::odd, g.full_set()) == g.full_set());
}

TEST_CASE("attractor on the weak game") {
    ParityGame g = gen_weak(4);
    GameView view(g);
    CHECK(attractor(view, Player::even, VertexSet::of(10, {3, 7})) == VertexSet::of(10, {3, 7}));
}

TEST_CASE("attractor matches the fixpoint oracle") {
    std::mt19937_64 rng(23);
    for (int round = 0; round < 300; round++) {
        ParityGame g = gen_random(FamilySpec{Family::random, 6, rng()});
        GameView view(g);
        VertexSet live = random_subset(rng, 6);
        GameView sub = live.empty() ? view : GameView(g, live);
        VertexSet targets = random_subset(rng, 6) & sub.live();
        Player p = rng() % 2 ? Player::even : Player::odd;
        CHECK(attractor(sub, p, targets) == testing::naive_attractor(sub, p, targets));
    }
}

TEST_CASE("attractor extensivity, monotonicity, idempotence") {
    std::mt19937_64 rng(31);
    for (int round = 0; round < 100; round++) {
        ParityGame g = gen_random(FamilySpec{Family::random, 7, rng()});
        GameView view(g);
        VertexSet u = random_subset(rng, 7);
        VertexSet bigger = u | random_subset(rng, 7);
        for (Player p : {Player::even, Player::odd}) {
            VertexSet a = attractor(view, p, u);
            CHECK(u.is_subset_of(a));
            CHECK(a.is_subset_of(attractor(view, p, bigger)));
            CHECK(attractor(view, p, a) == a);
        }
    }
}

TEST_CASE("removing an attractor preserves totality") {
    std::mt19937_64 rng(37);
    for (int round = 0; round < 100; round++) {
        ParityGame g = gen_random(FamilySpec{Family::random, 8, rng()});
        GameView view(g);
        VertexSet u = random_subset(rng, 8);
        Player p = rng() % 2 ? Player::even : Player::odd;
        CHECK(is_total(remove(view, attractor(view, p, u))));
    }
}

TEST_CASE("attractor counts edge visits") {
    ParityGame g = gen_solitaire(3);
    SolveStats stats;
    attractor(GameView(g), Player::even, VertexSet::of(9, {0}), &stats);
    CHECK(stats.attractor_edge_visits > 0);
    // Every edge is examined at most twice: once from the target side when
    // initialising a counter, once when the source is scanned.
    CHECK(stats.attractor_edge_visits <= 2 * g.num_edges());
}

TEST_CASE("scc decomposition of the solitaire game") {
    ParityGame g = gen_solitaire(3);
    SccDecomposition d = scc_decompose(GameView(g));
    CHECK(d.components.size() == 9);
    for (const VertexSet& c : d.components) CHECK(c.count() == 1);

    auto finals = final_sccs(d);
    REQUIRE(finals.size() == 1);
    CHECK(finals[0] == VertexSet::of(9, {0}));
    CHECK(d.first_final().has_value());
    CHECK(d.components[*d.first_final()] == VertexSet::of(9, {0}));
}

TEST_CASE("scc decomposition of the strong solitaire game") {
    ParityGame g = gen_solitaire(3, true);
    SccDecomposition d = scc_decompose(GameView(g));
    REQUIRE(d.components.size() == 1);
    CHECK(d.components[0] == g.full_set());
    CHECK(d.is_final[0]);
}

TEST_CASE("scc decomposition of the whitegame") {
    // The whole ladder is one strongly connected component: w-row links reach
    // down and up, every v feeds its u, and z climbs into the next column.
    ParityGame g = gen_whitegame(4);
    SccDecomposition d = scc_decompose(GameView(g));
    REQUIRE(d.components.size() == 1);
    CHECK(d.components[0] == g.full_set());
    CHECK(d.is_final[0]);
}

TEST_CASE("scc decomposition of a pegged whitegame") {
    // Above the depth cap each padding two-cycle is its own component.
    ParityGame g = gen_whitegame(16);
    SccDecomposition d = scc_decompose(GameView(g));
    REQUIRE(d.components.size() == 3);
    std::size_t big = 0, small = 0;
    for (const VertexSet& c : d.components) (c.count() == 2 ? small : big)++;
    CHECK(big == 1);
    CHECK(small == 2);
    for (bool f : d.is_final) CHECK(f);
}

TEST_CASE("final sccs of the weak game") {
    ParityGame g = gen_weak(4);
    auto finals = final_sccs(scc_decompose(GameView(g)));
    REQUIRE(finals.size() == 2);
    CHECK((finals[0] | finals[1]) == VertexSet::of(10, {8, 9}));
}

TEST_CASE("scc decomposition matches the reachability oracle") {
    std::mt19937_64 rng(41);
    for (int round = 0; round < 300; round++) {
        ParityGame g = gen_random(FamilySpec{Family::random, 8, rng()});
        VertexSet live = random_subset(rng, 8);
        if (live.empty()) continue;
        GameView sub(g, live);
        SccDecomposition d = scc_decompose(sub);
        CHECK(as_sorted_lists(d.components) == testing::naive_sccs(sub));

        // Partition and reverse-topological order.
        VertexSet seen(8);
        for (std::size_t i = 0; i < d.components.size(); i++) {
            CHECK(!seen.intersects(d.components[i]));
            seen |= d.components[i];
            for (VertexId v : d.components[i]) CHECK(d.component_of[v] == std::int32_t(i));
        }
        CHECK(seen == live);
        for (auto [from, to] : d.condensation_edges) {
            CHECK(to < from);
            CHECK(!d.is_final[std::size_t(from)]);
        }

        // A final component of a total game is itself total.
        if (is_total(sub)) {
            for (const VertexSet& c : final_sccs(d)) CHECK(is_total(restrict_to(sub, c)));
        }
    }
}

TEST_CASE("empty view decomposes to nothing") {
    ParityGame g = gen_weak(1);
    SccDecomposition d = scc_decompose(GameView(g, VertexSet(g.num_vertices())));
    CHECK(d.components.empty());
    CHECK(!d.first_final().has_value());
    CHECK(final_sccs(d).empty());
}
