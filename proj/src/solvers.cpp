#include "pg/solvers.hpp"

#include <stdexcept>

namespace pg {

std::optional<Algorithm> algorithm_from_string(std::string_view name) {
    if (name == "recursive") return Algorithm::recursive;
    if (name == "recursive-scc") return Algorithm::recursive_scc;
    if (name == "weak") return Algorithm::weak;
    if (name == "nested-solitaire") return Algorithm::nested_solitaire;
    if (name == "oracle") return Algorithm::oracle;
    return std::nullopt;
}

std::string_view algorithm_name(Algorithm a) {
    switch (a) {
        case Algorithm::recursive: return "recursive";
        case Algorithm::recursive_scc: return "recursive-scc";
        case Algorithm::weak: return "weak";
        case Algorithm::nested_solitaire: return "nested-solitaire";
        case Algorithm::oracle: return "oracle";
    }
    throw std::logic_error("unknown algorithm");
}

Solution solve_with(Algorithm a, const ParityGame& g) {
    switch (a) {
        case Algorithm::recursive: return solve_recursive(g);
        case Algorithm::recursive_scc: return solve_recursive_scc(g);
        case Algorithm::weak: return solve_weak(g);
        case Algorithm::nested_solitaire: return solve_nested_solitaire(g);
        case Algorithm::oracle: return solve_oracle(g);
    }
    throw std::logic_error("unknown algorithm");
}

}  // namespace pg
