#include "pg/families.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace pg {

namespace {

void require_positive(int n) {
    if (n < 1) throw std::invalid_argument("family parameter n must be positive");
}

// mt19937_64 has a portable sequence; reducing with a modulus keeps the
// generated games identical across standard libraries.
std::uint64_t rand_below(std::mt19937_64& rng, std::uint64_t bound) {
    return rng() % bound;
}

std::vector<VertexId> sample_distinct(std::mt19937_64& rng, VertexId lo, VertexId hi,
                                      std::size_t k) {
    std::vector<VertexId> out;
    while (out.size() < k) {
        VertexId v = lo + VertexId(rand_below(rng, hi - lo));
        if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
    }
    return out;
}

ParityGame gen_random_total(int n, std::mt19937_64& rng) {
    std::vector<VertexRecord> records(n);
    for (VertexId v = 0; v < VertexId(n); v++) {
        records[v].owner = rand_below(rng, 2) ? Player::odd : Player::even;
        records[v].priority = int(rand_below(rng, std::uint64_t(n) + 3));
        std::size_t degree = 1 + rand_below(rng, std::min(3, n));
        records[v].successors = sample_distinct(rng, 0, VertexId(n), degree);
    }
    return ParityGame::build(records);
}

ParityGame gen_random_weak(int n, std::mt19937_64& rng) {
    // Priorities descend with the id, so edges into ids at or past the
    // first position of an equal-or-lower priority can never ascend.
    std::vector<int> prios(n);
    for (int& p : prios) p = int(rand_below(rng, std::uint64_t(n) + 3));
    std::sort(prios.rbegin(), prios.rend());

    std::vector<VertexRecord> records(n);
    for (VertexId v = 0; v < VertexId(n); v++) {
        records[v].owner = rand_below(rng, 2) ? Player::odd : Player::even;
        records[v].priority = prios[v];
        VertexId lo = v;
        while (lo > 0 && prios[lo - 1] <= prios[v]) lo--;
        std::uint64_t candidates = VertexId(n) - lo;
        std::size_t degree = 1 + rand_below(rng, std::min<std::uint64_t>(3, candidates));
        records[v].successors = sample_distinct(rng, lo, VertexId(n), degree);
    }
    return ParityGame::build(records);
}

ParityGame gen_random_dull(int n, std::mt19937_64& rng) {
    // Plant disjoint cycles as the only components and join them with
    // forward edges; each component then has a single basic cycle, so its
    // dominant parity is the one we pick for it.
    std::size_t cycles = 1 + rand_below(rng, std::uint64_t(std::max(1, n / 2)));
    std::vector<std::size_t> size(cycles, 1);
    for (std::size_t extra = n - cycles; extra > 0; extra--) {
        size[rand_below(rng, cycles)]++;
    }
    std::vector<VertexId> start(cycles + 1, 0);
    for (std::size_t c = 0; c < cycles; c++) start[c + 1] = start[c] + VertexId(size[c]);

    std::vector<VertexRecord> records(n);
    for (std::size_t c = 0; c < cycles; c++) {
        int parity_bit = int(rand_below(rng, 2));
        int top = 2 * int(1 + rand_below(rng, std::uint64_t(n) + 2)) + parity_bit;
        for (VertexId v = start[c]; v < start[c + 1]; v++) {
            records[v].owner = rand_below(rng, 2) ? Player::odd : Player::even;
            records[v].priority = v == start[c] ? top : int(rand_below(rng, std::uint64_t(top) + 1));
            VertexId next = v + 1 < start[c + 1] ? v + 1 : start[c];
            records[v].successors.push_back(next);
        }
    }
    if (cycles >= 2) {
        for (std::size_t extra = rand_below(rng, std::uint64_t(n) + 1); extra > 0; extra--) {
            std::size_t ca = rand_below(rng, cycles);
            std::size_t cb = rand_below(rng, cycles);
            if (ca == cb) continue;
            std::size_t from = std::min(ca, cb);
            std::size_t to = std::max(ca, cb);
            VertexId v = start[from] + VertexId(rand_below(rng, size[from]));
            VertexId w = start[to] + VertexId(rand_below(rng, size[to]));
            records[v].successors.push_back(w);
        }
    }
    return ParityGame::build(records);
}

ParityGame gen_random_solitaire(int n, std::mt19937_64& rng) {
    Player q = rand_below(rng, 2) ? Player::odd : Player::even;
    std::vector<VertexRecord> records(n);
    for (VertexId v = 0; v < VertexId(n); v++) {
        records[v].owner = rand_below(rng, 2) ? Player::odd : Player::even;
        records[v].priority = int(rand_below(rng, std::uint64_t(n) + 3));
        std::size_t degree =
            records[v].owner == q ? 1 + rand_below(rng, std::min(3, n)) : 1;
        records[v].successors = sample_distinct(rng, 0, VertexId(n), degree);
    }
    return ParityGame::build(records);
}

}  // namespace

ParityGame gen_weak(int n) {
    require_positive(n);
    std::vector<VertexRecord> records(2 * n + 2);
    const VertexId u0 = VertexId(2 * n);
    const VertexId u1 = VertexId(2 * n + 1);
    for (int i = 1; i <= n; i++) {
        VertexId diamond = VertexId(i - 1);
        VertexId box = VertexId(n + i - 1);
        records[diamond].owner = Player::even;
        records[diamond].priority = i + 2;
        records[diamond].successors = {i > 1 ? VertexId(i - 2) : u0, box};
        records[box].owner = Player::odd;
        records[box].priority = i + 2;
        records[box].successors = {diamond, i > 1 ? VertexId(n + i - 2) : u1};
    }
    records[u0] = {Player::even, 0, {u0}};
    records[u1] = {Player::odd, 1, {u1}};
    return ParityGame::build(records);
}

ParityGame gen_solitaire(int n, bool strong) {
    require_positive(n);
    std::vector<VertexRecord> records(3 * n);
    records[0] = {Player::even, 2, {0}};
    for (int i = 1; i < 2 * n; i++) {
        records[i] = {Player::even, i + 2, {VertexId(i - 1)}};
    }
    for (int j = 1; j <= n; j++) {
        VertexId u = VertexId(2 * n + j - 1);
        records[u] = {Player::even, 1, {u, VertexId(2 * j - 1)}};
        if (strong) records[0].successors.push_back(u);
    }
    return ParityGame::build(records);
}

ParityGame gen_whitegame(int n) {
    require_positive(n);
    // Ladder of n columns. Column j has a reward vertex v_j (priority j+3), a
    // climber u_j owned by the player favoured at that level, a pocket vertex
    // w_j the opponent can stall in, and an escape vertex z_j to the column
    // above. Both solvers must split on every column, doubling the call count
    // per level; the w-row links keep every residual subgame strongly
    // connected so SCC decomposition never short-cuts the recursion.
    //
    // The winner alternates with the parity of n. Above depth 14 the ladder
    // is pegged at the deepest depth of matching parity and the remaining
    // columns degenerate to detached two-cycles won by the same player:
    // winner alternation continues for arbitrary n while the solve cost
    // stays bounded, which keeps large-n verification runs affordable.
    const int m = n <= 14 ? n : (n % 2 == 0 ? 14 : 13);
    const int pads = n - m;
    std::vector<VertexRecord> records(4 * m - 1 + 2 * pads);
    auto v_id = [&](int j) { return VertexId(j - 1); };
    auto u_id = [&](int j) { return VertexId(m + j - 1); };
    auto w_id = [&](int j) { return VertexId(2 * m + j - 1); };
    auto z_id = [&](int j) { return VertexId(3 * m + j - 1); };
    for (int j = 1; j <= m; j++) {
        Player climber = j % 2 == 1 ? Player::even : Player::odd;
        Player staller = opponent(climber);
        records[v_id(j)].owner = staller;
        records[v_id(j)].priority = j + 3;
        records[v_id(j)].successors = {u_id(j)};
        records[u_id(j)].owner = climber;
        records[u_id(j)].priority = j % 2;
        records[u_id(j)].successors = {w_id(j)};
        if (j < m) records[u_id(j)].successors.push_back(z_id(j));
        if (j + 2 <= m) records[u_id(j)].successors.push_back(w_id(j + 2));
        records[w_id(j)].owner = staller;
        records[w_id(j)].priority = j % 2;
        records[w_id(j)].successors = {u_id(j), v_id(j)};
        for (int k = j - 1; k >= 1; k--) records[w_id(j)].successors.push_back(w_id(k));
        for (int d = 1; j + d <= m; d += 2) records[w_id(j)].successors.push_back(w_id(j + d));
        if (j < m) {
            records[z_id(j)].owner = staller;
            records[z_id(j)].priority = j % 2 == 1 ? 2 : 1;
            records[z_id(j)].successors = {v_id(j + 1), w_id(j)};
        }
    }
    for (int k = 0; k < pads; k++) {
        VertexId x = VertexId(4 * m - 1 + 2 * k);
        VertexId y = x + 1;
        int prio = 2 * (9 + k) + n % 2;
        records[x] = {Player::even, prio, {y}};
        records[y] = {Player::odd, prio, {x}};
    }
    return ParityGame::build(records);
}

std::uint64_t expected_calls_weak(int n) {
    if (n < 0) throw std::invalid_argument("n must be nonnegative");
    return 1 + std::uint64_t(n) * (n + 1) / 2;
}

ParityGame gen_random(const FamilySpec& spec) {
    require_positive(spec.n);
    std::mt19937_64 rng(spec.seed);
    switch (spec.family) {
        case Family::random:
            return gen_random_total(spec.n, rng);
        case Family::random_weak:
            return gen_random_weak(spec.n, rng);
        case Family::random_dull:
            return gen_random_dull(spec.n, rng);
        case Family::random_solitaire:
            return gen_random_solitaire(spec.n, rng);
        default:
            throw std::invalid_argument("gen_random requires a random family");
    }
}

ParityGame generate(const FamilySpec& spec) {
    switch (spec.family) {
        case Family::weak:
            return gen_weak(spec.n);
        case Family::solitaire:
            return gen_solitaire(spec.n, false);
        case Family::solitaire_strong:
            return gen_solitaire(spec.n, true);
        case Family::whitegame:
            return gen_whitegame(spec.n);
        default:
            return gen_random(spec);
    }
}

std::optional<Family> family_from_string(std::string_view name) {
    if (name == "weak") return Family::weak;
    if (name == "solitaire") return Family::solitaire;
    if (name == "solitaire-strong") return Family::solitaire_strong;
    if (name == "whitegame") return Family::whitegame;
    if (name == "random") return Family::random;
    if (name == "random-weak") return Family::random_weak;
    if (name == "random-dull") return Family::random_dull;
    if (name == "random-solitaire") return Family::random_solitaire;
    return std::nullopt;
}

std::string_view family_name(Family f) {
    switch (f) {
        case Family::weak:
            return "weak";
        case Family::solitaire:
            return "solitaire";
        case Family::solitaire_strong:
            return "solitaire-strong";
        case Family::whitegame:
            return "whitegame";
        case Family::random:
            return "random";
        case Family::random_weak:
            return "random-weak";
        case Family::random_dull:
            return "random-dull";
        case Family::random_solitaire:
            return "random-solitaire";
    }
    return "unknown";
}

}  // namespace pg
