#pragma once

#include <string>

#include "listdist/graph.hpp"

namespace listdist {

// graph6 codec, bit-exact to the standard format. A leading ">>graph6<<"
// header and trailing whitespace are tolerated on input.
Graph parse_graph6(const std::string& line);
std::string encode_graph6(const Graph& g);

}  // namespace listdist
