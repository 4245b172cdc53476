#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "pg/game.hpp"

namespace pg {

enum class Family {
    weak,
    solitaire,
    solitaire_strong,
    whitegame,
    random,
    random_weak,
    random_dull,
    random_solitaire,
};

struct FamilySpec {
    Family family = Family::random;
    // Scale parameter; for random families this is the vertex count.
    int n = 1;
    // Only random families consume the seed.
    std::uint64_t seed = 1;
};

// Weak benchmark family of size 2n + 2. Ids: the diamond chain v_1..v_n is
// 0..n-1, the box chain v_{n+1}..v_{2n} is n..2n-1, then the even self-loop
// u_0 = 2n and the odd self-loop u_1 = 2n + 1. Chain vertex i (1-based)
// carries priority i + 2 and steps either down its own chain (reaching its
// self-loop at the bottom) or across to the other chain.
ParityGame gen_weak(int n);

// Solitaire (and dull) family of size 3n, entirely owned by Even. Ids: the
// chain v_0..v_{2n-1} is 0..2n-1 (v_i has priority i + 2, steps to v_{i-1};
// v_0 holds an even self-loop), the odd vertices u_1..u_n are 2n..3n-1
// (priority 1, self-loop plus an edge onto chain vertex v_{2j-1}). The
// strong variant adds edges from v_0 to every u_j, fusing one component.
ParityGame gen_solitaire(int n, bool strong = false);

// Family that forces exponentially many recursive calls even with component
// decomposition; the winner alternates with the parity of n. A ladder of
// m = min(n, 14 or 13, matching parity) columns plus n - m detached
// two-cycles. Ids: rewards v_1..v_m are 0..m-1 (priority j + 3), climbers
// u_1..u_m are m..2m-1, pockets w_1..w_m are 2m..3m-1 (both priority
// j mod 2), escapes z_1..z_{m-1} are 3m..4m-2, then the padding pairs.
// Column j belongs to Even when j is odd, except u_j which is owned the
// other way around.
ParityGame gen_whitegame(int n);

// Lower bound on the recursive calls the plain algorithm needs on
// gen_weak(n): 1 + n(n+1)/2.
std::uint64_t expected_calls_weak(int n);

// Seeded random games; spec.n is the vertex count. All variants are total.
//   random           owners and priorities uniform, out-degree 1..3
//   random_weak      priorities never ascend along an edge
//   random_dull      disjoint planted cycles joined acyclically
//   random_solitaire only one player receives choice vertices
ParityGame gen_random(const FamilySpec& spec);

// Dispatch on any family.
ParityGame generate(const FamilySpec& spec);

std::optional<Family> family_from_string(std::string_view name);
std::string_view family_name(Family f);

}  // namespace pg
