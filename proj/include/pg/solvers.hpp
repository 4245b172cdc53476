#pragma once

#include <optional>
#include <string_view>

#include "pg/special.hpp"
#include "pg/zielonka.hpp"

namespace pg {

enum class Algorithm {
    recursive,
    recursive_scc,
    weak,
    nested_solitaire,
    oracle,
};

std::optional<Algorithm> algorithm_from_string(std::string_view name);
std::string_view algorithm_name(Algorithm a);

// Run the selected solver; the dedicated solvers raise their precondition
// errors (NotWeak, NotNestedSolitaire, TooLarge, NotTotal).
Solution solve_with(Algorithm a, const ParityGame& g);

}  // namespace pg
