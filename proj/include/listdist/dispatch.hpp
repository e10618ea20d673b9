#pragma once

#include <cstdint>
#include <string>

#include "listdist/automorphism.hpp"
#include "listdist/engine_cyclic.hpp"
#include "listdist/engine_tree.hpp"
#include "listdist/gen.hpp"
#include "listdist/graph.hpp"
#include "listdist/list_model.hpp"
#include "listdist/recognizer.hpp"
#include "listdist/trace.hpp"

namespace listdist {

struct ColourOptions {
  bool debug_invariants = false;
  const AutomorphismGroup* group = nullptr;  // precomputed, else enumerated on demand
  bool with_trace = false;
  bool cycle_tests_induced = false;
  int aut_cap = kDefaultAutCap;
  std::uint64_t budget = 100000000ULL;
  std::size_t cycle_budget = 200000;
};

struct ColourResult {
  EdgeColouring colouring;
  GraphClass cls;
  std::string engine;  // "cyclic", "tree", or "oracle"
  bool verified = false;
  Trace trace;
};

// Recognizer dispatch, engine call, and the mandatory verification pass.
// Throws ExceptionalGraph/ExceptionalTree/Unsupported for inputs outside the
// engines' guarantee.
ColourResult colour_auto(const Graph& g, const ListAssignment& L, const ColourOptions& opt = {});

// Verification helper shared by the CLI and the engines' callers.
bool verify_colouring(const Graph& g, const ListAssignment* L, const EdgeColouring& c,
                      int aut_cap = kDefaultAutCap, const AutomorphismGroup* group = nullptr);

}  // namespace listdist
