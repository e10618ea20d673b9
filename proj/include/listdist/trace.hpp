#pragma once

#include <string>
#include <utility>
#include <vector>

#include "listdist/graph.hpp"

namespace listdist {

struct TraceRecord {
  int step = 0;
  std::string rule;
  VertexId vertex = -1;
  std::vector<std::pair<EdgeId, int>> assigned;  // (edge, colour)
};

struct Trace {
  std::vector<TraceRecord> records;
  void add(std::string rule, VertexId v, std::vector<std::pair<EdgeId, int>> assigned = {}) {
    records.push_back({static_cast<int>(records.size()), std::move(rule), v, std::move(assigned)});
  }
};

}  // namespace listdist
