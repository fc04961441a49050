#pragma once

#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "meg/graph.hpp"

namespace meg {

/// Edge-list text format:
///
///   # comment lines start with '#'
///   n m
///   u v        (m lines, 0-indexed)
///
/// Throws InvalidInput on malformed content, including an edge count that
/// disagrees with the header.
Graph read_graph(std::istream& in);

/// Writes the header comments (each prefixed with "# "), then "n m", then the edges.
void write_graph(std::ostream& out, const Graph& g, const std::vector<std::string>& comments = {});

}  // namespace meg
