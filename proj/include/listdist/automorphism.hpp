#pragma once

#include <vector>

#include "listdist/graph.hpp"
#include "listdist/list_model.hpp"

namespace listdist {

// Vertex permutation preserving adjacency.
using Automorphism = std::vector<VertexId>;

struct AutomorphismGroup {
  std::vector<Automorphism> elements;  // identity first (lexicographic order)
  std::size_t size() const { return elements.size(); }
  bool trivial() const { return elements.size() <= 1; }
};

inline constexpr int kDefaultAutCap = 12;

// Full enumeration by backtracking with degree / neighbour-degree /
// distance-profile pruning. Deterministic lexicographic output order.
AutomorphismGroup automorphisms(const Graph& g, int vertex_cap = kDefaultAutCap);

Edge edge_image(const Automorphism& a, const Edge& e);
EdgeId edge_image_id(const Graph& g, const Automorphism& a, EdgeId e);

// True iff every non-identity element maps some edge to a differently
// coloured edge. The colouring must be total.
bool is_distinguishing(const Graph& g, const AutomorphismGroup& group, const EdgeColouring& c);

// Elements mapping every coloured edge to an equally coloured edge
// (and hence uncoloured edges to uncoloured edges).
AutomorphismGroup colour_preserving_stabilizer(const Graph& g, const AutomorphismGroup& group,
                                               const EdgeColouring& c);

std::vector<VertexId> fixed_vertices(const AutomorphismGroup& group, int n);

}  // namespace listdist
