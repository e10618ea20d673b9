#pragma once

#include <vector>

#include "listdist/graph.hpp"

namespace listdist {

using ColourId = int;

inline constexpr ColourId kUncoloured = -1;

// Partial or total map from edge ids to colours.
struct EdgeColouring {
  std::vector<ColourId> colour;  // kUncoloured where unset

  EdgeColouring() = default;
  explicit EdgeColouring(int m) : colour(m, kUncoloured) {}
  bool coloured(EdgeId e) const { return colour[e] != kUncoloured; }
  bool total() const {
    for (ColourId c : colour)
      if (c == kUncoloured) return false;
    return true;
  }
  int coloured_count() const {
    int k = 0;
    for (ColourId c : colour)
      if (c != kUncoloured) ++k;
    return k;
  }
};

// Per-edge colour lists over a dense colour universe.
struct ListAssignment {
  int universe = 0;
  std::vector<std::vector<ColourId>> lists;  // sorted, indexed by EdgeId

  int min_list_size() const {
    std::size_t m = lists.empty() ? 0 : lists[0].size();
    for (const auto& l : lists) m = std::min(m, l.size());
    return static_cast<int>(m);
  }
  bool contains(EdgeId e, ColourId c) const {
    const auto& l = lists[e];
    return std::binary_search(l.begin(), l.end(), c);
  }
};

ListAssignment make_list_assignment(const Graph& g, int universe,
                                    std::vector<std::vector<ColourId>> lists);

// True when the colouring assigns to every coloured edge a colour from its list.
bool respects_lists(const EdgeColouring& c, const ListAssignment& L);

struct ColourSubgraph {
  ColourId colour = -1;
  std::vector<EdgeId> edge_set;  // every edge whose list contains the colour
  bool trivial = false;          // edge_set covers all of E(G)
};

ColourSubgraph colour_subgraph(const Graph& g, const ListAssignment& L, ColourId i);

struct ListClassification {
  bool all_identical = false;
  std::vector<ColourId> nontrivial_colours;
  std::vector<ColourId> cyclic_nontrivial_colours;  // non-trivial and the subgraph has a cycle
};

ListClassification classify_lists(const Graph& g, const ListAssignment& L);

// Sorted multiset of colours on the edges at v; every incident edge must be coloured.
std::vector<ColourId> palette(const Graph& g, const EdgeColouring& c, VertexId v);

}  // namespace listdist
