#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "arbor/graph.hpp"

namespace arbor {

/// Reads a tree in either of two line formats.
///
///   edge list:  "n" followed by n-1 lines "u v"
///   Prufer:     "P: a1 a2 ... a_{n-2}"   (n = entries + 2; "P:" alone is P2)
///
/// Blank lines and lines starting with '#' are skipped. Throws Error(kParse)
/// for malformed text and NotATree for edge lists that do not form a tree.
Tree read_tree(std::istream& in);
Tree parse_tree(std::string_view text);

/// Writes the edge-list format, edges sorted.
void write_tree(std::ostream& out, const Tree& t);
std::string format_tree(const Tree& t);

/// "P: a1 ... a_{n-2}" for n >= 2; the edge-list text "1" for n = 1.
std::string format_prufer_line(const Tree& t);

}  // namespace arbor
