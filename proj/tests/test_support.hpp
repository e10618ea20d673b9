#pragma once

#include <string>
#include <vector>

#include "listdist/graph.hpp"
#include "listdist/list_model.hpp"

namespace listdist::testsupport {

inline Graph cycle_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.push_back(make_edge(i, (i + 1) % n));
  return Graph::from_edges(n, std::move(edges));
}

inline Graph path_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return Graph::from_edges(n, std::move(edges));
}

inline Graph complete_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.push_back({i, j});
  return Graph::from_edges(n, std::move(edges));
}

inline Graph star_graph(int leaves) {
  std::vector<Edge> edges;
  for (int i = 1; i <= leaves; ++i) edges.push_back({0, i});
  return Graph::from_edges(leaves + 1, std::move(edges));
}

// triangle 0-1-2 plus pendant 3 attached to 0
inline Graph paw_graph() {
  return Graph::from_edges(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}});
}

inline Graph petersen_graph() {
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i) {
    edges.push_back(make_edge(i, (i + 1) % 5));      // outer cycle
    edges.push_back(make_edge(i, i + 5));            // spokes
    edges.push_back(make_edge(i + 5, (i + 2) % 5 + 5));  // pentagram
  }
  return Graph::from_edges(10, std::move(edges));
}

inline Graph k33_graph() {
  std::vector<Edge> edges;
  for (int a = 0; a < 3; ++a)
    for (int b = 3; b < 6; ++b) edges.push_back({a, b});
  return Graph::from_edges(6, std::move(edges));
}

// central edge 0-1; leaves 2,3 on 0 and 4,5 on 1
inline Graph double_star() {
  return Graph::from_edges(6, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}});
}

inline Graph prism_graph() {  // two triangles joined by a matching
  return Graph::from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5},
                               {0, 3}, {1, 4}, {2, 5}});
}

inline ListAssignment uniform_lists(const Graph& g, std::vector<ColourId> list, int universe) {
  return make_list_assignment(g, universe,
                              std::vector<std::vector<ColourId>>(g.edge_count(), list));
}

}  // namespace listdist::testsupport
