#pragma once

#include <string>

#include "listdist/graph.hpp"

namespace listdist {

enum class GraphClassTag {
  Cycle,
  K4,
  K33,
  SymmetricTree,
  BisymmetricTree,
  GeneralTree,
  GeneralCyclic,
};

const char* to_string(GraphClassTag t);

struct GraphClass {
  GraphClassTag tag;
  int delta = 0;
  int n = 0;
  int h = 0;  // leaf distance from the centre (tree classes)
  int d = 0;  // common internal degree (tree classes)
  bool is_exceptional() const {
    return tag != GraphClassTag::GeneralTree && tag != GraphClassTag::GeneralCyclic;
  }
};

GraphClass classify(const Graph& g);

struct RequiredListSize {
  int k = 0;
  bool exceptional = false;  // outside the delta-1 guarantee
};

// Throws Unsupported for paths (trees with max degree <= 2).
RequiredListSize required_list_size(const GraphClass& cls);

}  // namespace listdist
