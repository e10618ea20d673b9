#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "listdist/automorphism.hpp"
#include "listdist/graph.hpp"
#include "listdist/list_model.hpp"
#include "listdist/trace.hpp"

namespace listdist {

// The coloured pattern that must stay unique to the starting subgraph: a pink
// path of a fixed length on a cycle of length k, flanked on the cycle by the
// blue edge alone (full cycle minus one edge) or by one blue and one green
// edge, together with the presence or absence of a pink tail (the gadget) at
// the blue end.
struct PatternSignature {
  int cycle_len = 0;
  int pink_run_len = 0;
  ColourId pink = -1;
  ColourId blue = -1;
  std::optional<ColourId> green;
  bool gadget = false;
  bool blue_only() const { return !green.has_value(); }
};

struct StartingState {
  std::vector<VertexId> cycle;          // the starting cycle, in order
  std::vector<VertexId> attached_path;  // pink tail from the cycle outward (may be empty)
  ColourId pink = -1;
  ColourId blue = -1;
  std::optional<ColourId> green;
  int pink_path_length = 0;
  std::optional<EdgeId> gadget;
  std::vector<EdgeId> g0_edges;   // every edge incident to the cycle and tail vertices
  EdgeColouring colouring;        // partial: exactly the starting subgraph
  PatternSignature signature;
  int case_used = 0;              // 1 or 2
};

struct FrontierClassification {
  VertexId vertex = -1;
  std::vector<EdgeId> back_edges;
  std::vector<EdgeId> horizontal_edges;
  std::vector<EdgeId> forward_edges;
};

struct CyclicEngineOptions {
  bool debug_invariants = false;
  bool cycle_tests_induced = false;  // reading of the length-k tests
  int aut_cap = 12;
  const AutomorphismGroup* group = nullptr;  // precomputed, else enumerated on demand
  std::uint64_t budget = 100000000ULL;  // oracle-fallback search nodes
  std::size_t cycle_budget = 200000;    // starting-cycle enumeration cap
  Trace* trace = nullptr;
};

StartingState build_starting_subgraph(const Graph& g, const ListAssignment& L,
                                      const CyclicEngineOptions& opt = {});

// Scheme context: the cycle walked in pass order plus the protected pattern.
struct SchemeContext {
  const Graph* g = nullptr;
  const ListAssignment* L = nullptr;
  PatternSignature sig;
  std::vector<char> locked;  // edges the scheme must not recolour
  Trace* trace = nullptr;
};

void cycle_colouring_scheme(SchemeContext& ctx, const std::vector<VertexId>& cycle_in_order,
                            EdgeColouring& col);

EdgeColouring extend_iteratively(const Graph& g, const ListAssignment& L, const StartingState& s,
                                 const CyclicEngineOptions& opt = {});

EdgeColouring colour_cyclic(const Graph& g, const ListAssignment& L,
                            const CyclicEngineOptions& opt = {});

}  // namespace listdist
