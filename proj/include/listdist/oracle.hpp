#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "listdist/automorphism.hpp"
#include "listdist/graph.hpp"
#include "listdist/list_model.hpp"

namespace listdist {

struct FeasibilityReport {
  bool feasible = false;
  std::optional<EdgeColouring> witness;  // lexicographically first, verified
  std::uint64_t colourings_examined = 0;
};

// The budget counts search nodes. Enumeration is guaranteed complete whenever
// the product of list sizes stays within it; a found witness is conclusive
// either way.
inline constexpr std::uint64_t kDefaultBudget = 100000000ULL;

FeasibilityReport exists_distinguishing_from_lists(const Graph& g, const AutomorphismGroup& group,
                                                   const ListAssignment& L,
                                                   std::uint64_t budget = kDefaultBudget);

// Least k <= k_max such that colours {0..k-1} admit a distinguishing
// colouring. Throws NotFoundWithin when none exists.
int distinguishing_index(const Graph& g, const AutomorphismGroup& group, int k_max,
                         std::uint64_t budget = kDefaultBudget);

struct AllListsReport {
  bool all_feasible = true;
  std::vector<std::vector<std::vector<ColourId>>> infeasible_assignments;  // orbit representatives
  std::uint64_t assignments_tested = 0;
};

// Enumerates assignments of k-subsets of {0..universe-1} to the edges, up to
// colour renaming and graph automorphisms, and reports every infeasible one.
AllListsReport all_lists_feasibility(const Graph& g, const AutomorphismGroup& group, int k,
                                     int universe, std::uint64_t budget = kDefaultBudget);

struct ConjectureProbe {
  int dprime = 0;
  bool list_feasible_at_dprime = false;
  std::vector<std::vector<std::vector<ColourId>>> counterexample_lists;
  bool known_exceptional = false;  // infeasibilities on a recognized exceptional class
  std::uint64_t assignments_tested = 0;
};

ConjectureProbe probe_conjecture(const Graph& g, int universe,
                                 std::uint64_t budget = kDefaultBudget);

}  // namespace listdist
