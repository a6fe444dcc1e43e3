#pragma once

// graph6 text encoding (McKay's format): a size prefix followed by the upper
// triangle of the adjacency matrix, column by column, packed six bits per
// printable byte (value + 63).

#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "kstab/graph.hpp"

namespace kstab {

std::string g6_encode(const Graph& g);

/// Throws std::invalid_argument on malformed size prefix, characters outside
/// 63..126, wrong body length or non-zero padding bits. An optional
/// ">>graph6<<" header is accepted.
Graph g6_decode(std::string_view text);

/// One graph per non-empty line.
std::vector<Graph> g6_read_all(std::istream& in);

}  // namespace kstab
