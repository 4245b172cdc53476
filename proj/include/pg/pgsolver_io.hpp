#pragma once

#include <string>
#include <string_view>

#include "pg/game.hpp"

namespace pg {

// Parses the PGSolver text format:
//
//   parity <max-id>;            (optional header; the number is not checked)
//   <id> <priority> <owner> <succ>(,<succ>)* ["name"];
//
// Owner 0 is Even, 1 is Odd; names are accepted and discarded. Records may
// appear in any order but the ids must cover [0, max-id] with no gaps and
// no repeats. Raises ParseError for malformed text, TotalityError for a
// record without successors, and DanglingEdge for a successor id that no
// record defines.
ParityGame parse_pgsolver(std::string_view text);

// Canonical serialisation: header carrying the maximum id, one record per
// line in ascending id order, successors ascending, no names. Parsing the
// result reproduces the game exactly; writing a freshly parsed canonical
// text reproduces the text. Raises EmptyGame for a game without vertices.
std::string write_pgsolver(const ParityGame& g);

}  // namespace pg
