#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "listdist/graph.hpp"
#include "listdist/list_model.hpp"

namespace listdist {

// Canonical adjacency code: minimum edge bitstring over the leaves of an
// individualization-refinement search. Equal codes iff isomorphic.
std::vector<std::uint64_t> canonical_code(const Graph& g);

// All graphs on exactly n vertices, one per isomorphism class, by iterated
// vertex augmentation with canonical-code deduplication.
std::vector<Graph> all_graphs(int n);
std::vector<Graph> connected_graphs(int n);
std::vector<Graph> all_trees(int n);

enum class ListMode { Random, Identical, OneOffIdentical };

ListAssignment generate_lists(const Graph& g, int k, int universe, std::uint64_t seed,
                              ListMode mode = ListMode::Random);

}  // namespace listdist
