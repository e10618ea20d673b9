#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "listdist/automorphism.hpp"
#include "listdist/graph.hpp"
#include "listdist/list_model.hpp"
#include "listdist/trace.hpp"

namespace listdist {

struct RootedTree {
  const Graph* graph = nullptr;
  VertexId root = -1;
  std::vector<VertexId> parent;              // -1 at the root
  std::vector<std::vector<VertexId>> children;
  std::vector<VertexId> bfs;                 // root first
  EdgeId back_edge(VertexId v) const { return graph->edge_id(v, parent[v]); }
};

RootedTree root_tree(const Graph& g, VertexId root);

struct CentralVertex {
  VertexId v;
};
struct CentralEdge {
  Edge e;
};
using TreeCentre = std::variant<CentralVertex, CentralEdge>;

TreeCentre tree_centre(const Graph& g);

// Canonical encoding of the rooted subtree hanging at v (away from its parent);
// equal strings iff the rooted subtrees are isomorphic.
std::string rooted_subtree_signature(const RootedTree& t, VertexId v);

// Avoid a specific final palette at selected vertices.
struct PaletteRule {
  int degree = -1;           // applies to vertices of this degree, or
  VertexId vertex = -1;      // to one specific vertex (degree == -1 then)
  VertexId exempt = -1;
  std::vector<ColourId> palette;  // sorted multiset that must not appear
};

// Completes `pre` to a colouring in which every non-root vertex has its
// forward edges pairwise distinct, honouring per-edge forbidden colours and
// the palette rules. Root edges must already be coloured in `pre`.
EdgeColouring standard_colouring(const RootedTree& t, const ListAssignment& L,
                                 const EdgeColouring& pre,
                                 const std::vector<std::vector<ColourId>>& forbidden,
                                 const std::vector<PaletteRule>& rules);

struct TreeEngineOptions {
  bool debug_invariants = false;
  int aut_cap = 12;
  const AutomorphismGroup* group = nullptr;  // precomputed, else enumerated on demand
  std::uint64_t budget = 100000000ULL;  // oracle-fallback search nodes
  Trace* trace = nullptr;
};

EdgeColouring colour_tree(const Graph& g, const ListAssignment& L,
                          const TreeEngineOptions& opt = {});

}  // namespace listdist
