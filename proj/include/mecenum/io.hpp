#pragma once

#include <iosfwd>
#include <string>

#include "mecenum/graph.hpp"

namespace mecenum {

/// Parse the text graph format:
///   pdag <n> <m>
///   <u> -> <v>   (directed)
///   <u> -- <v>   (undirected)
/// Lines starting with '#' are comments and may appear anywhere.
/// Throws std::runtime_error on malformed input.
Pdag read_pdag(std::istream& in);
Pdag read_pdag_file(const std::string& path);
Pdag parse_pdag(const std::string& text);

/// Write the canonical text form: edges ascending by (min, max, kind).
void write_pdag(std::ostream& out, const Pdag& g);
std::string to_text(const Pdag& g);

/// Graphviz export; undirected edges use dir=none.
std::string to_dot(const Pdag& g);

}  // namespace mecenum
