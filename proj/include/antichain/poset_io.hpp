#pragma once

#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "antichain/poset.hpp"

namespace antichain {

// Hasse input: one relation "u < v" per line with integer labels; a line
// holding a single label declares an isolated element. Blank lines and '#'
// comments are ignored. Labels are renumbered 0..n-1 in increasing order.
// Throws ParseError (position = 1-based line number) or InvalidArgument.
Poset parse_hasse(std::string_view text);
Poset read_hasse_file(const std::string& path);

// Hasse diagram as a DOT digraph, bottom to top, one rank=same group per
// rank level when the poset is graded.
std::string to_dot(const Poset& p, const std::string& name = "hasse");

}  // namespace antichain
