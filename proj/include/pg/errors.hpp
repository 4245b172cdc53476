#pragma once

#include <stdexcept>
#include <string>

#include "pg/vertex_set.hpp"

namespace pg {

// Base class for every error raised by the library.
struct GameError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// build_game: a vertex was declared with no successors.
struct EmptySuccessors : GameError {
    VertexId vertex;
    explicit EmptySuccessors(VertexId v)
        : GameError("vertex " + std::to_string(v) + " has an empty successor list"), vertex(v) {}
};

// build_game: an edge points at an id outside the vertex range.
struct DanglingEdge : GameError {
    VertexId from;
    VertexId to;
    DanglingEdge(VertexId f, VertexId t)
        : GameError("edge " + std::to_string(f) + " -> " + std::to_string(t) +
                    " points outside the vertex range"),
          from(f),
          to(t) {}
};

// restrict: the requested live set is empty.
struct EmptyRestriction : GameError {
    EmptyRestriction() : GameError("restriction to the empty vertex set") {}
};

// An operation that needs at least one live vertex was applied to an empty game.
struct EmptyGame : GameError {
    EmptyGame() : GameError("operation requires a nonempty game") {}
};

// A solver precondition requires a total game but some live vertex has no
// live successor.
struct NotTotal : GameError {
    VertexId vertex;
    explicit NotTotal(VertexId v)
        : GameError("game is not total: vertex " + std::to_string(v) + " has no live successor"),
          vertex(v) {}
};

// solve_weak: witness edge along which the priority ascends.
struct NotWeak : GameError {
    VertexId from;
    VertexId to;
    NotWeak(VertexId f, VertexId t, int priority_from, int priority_to)
        : GameError("game is not weak: edge " + std::to_string(f) + " -> " + std::to_string(t) +
                    " ascends from priority " + std::to_string(priority_from) + " to " +
                    std::to_string(priority_to)),
          from(f),
          to(t) {}
};

// dull_to_weak: witness vertex lying on both an even and an odd cycle.
struct NotDull : GameError {
    VertexId vertex;
    explicit NotDull(VertexId v)
        : GameError("game is not dull: vertex " + std::to_string(v) +
                    " lies on overlapping even and odd cycles"),
          vertex(v) {}
};

// solve_nested_solitaire: two choice vertices of different owners share a
// strongly connected component.
struct NotNestedSolitaire : GameError {
    VertexId even_choice;
    VertexId odd_choice;
    NotNestedSolitaire(VertexId even_v, VertexId odd_v)
        : GameError("game is not nested solitaire: vertices " + std::to_string(even_v) +
                    " (even) and " + std::to_string(odd_v) +
                    " (odd) both make nontrivial moves in one component"),
          even_choice(even_v),
          odd_choice(odd_v) {}
};

// solve_oracle: the instance exceeds the configured enumeration bounds.
struct TooLarge : GameError {
    explicit TooLarge(const std::string& why) : GameError("oracle limit exceeded: " + why) {}
};

// parse_pgsolver: malformed input text.
struct ParseError : GameError {
    int line;
    std::string reason;
    ParseError(int line_number, const std::string& what)
        : GameError("parse error at line " + std::to_string(line_number) + ": " + what),
          line(line_number),
          reason(what) {}
};

// parse_pgsolver: a vertex record declares no successors, so the game it
// describes cannot be total.
struct TotalityError : GameError {
    VertexId vertex;
    explicit TotalityError(VertexId v)
        : GameError("vertex " + std::to_string(v) + " is declared without successors"), vertex(v) {}
};

}  // namespace pg
