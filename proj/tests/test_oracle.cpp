#include <algorithm>

#include "doctest.h"
#include "listdist/oracle.hpp"
#include "listdist/rng.hpp"
#include "test_support.hpp"

using namespace listdist;
using namespace listdist::testsupport;

TEST_CASE("identical two-lists on C5 are infeasible, one-off makes them feasible") {
  Graph c5 = cycle_graph(5);
  auto grp = automorphisms(c5);
  auto bad = exists_distinguishing_from_lists(c5, grp, uniform_lists(c5, {1, 2}, 4));
  CHECK_FALSE(bad.feasible);
  CHECK_FALSE(bad.witness.has_value());

  auto L = uniform_lists(c5, {1, 2}, 4);
  L.lists[2] = {1, 3};
  auto good = exists_distinguishing_from_lists(c5, grp, L);
  CHECK(good.feasible);
  REQUIRE(good.witness.has_value());
  CHECK(respects_lists(*good.witness, L));
  CHECK(is_distinguishing(c5, grp, *good.witness));
}

TEST_CASE("a star with diverse lists admits three distinct colours") {
  Graph star = star_graph(3);
  auto grp = automorphisms(star);
  auto L = make_list_assignment(star, 3, {{1, 2}, {1, 0}, {2, 0}});
  auto rep = exists_distinguishing_from_lists(star, grp, L);
  CHECK(rep.feasible);
  auto c = *rep.witness;
  CHECK(c.colour[0] != c.colour[1]);
  CHECK(c.colour[1] != c.colour[2]);
  CHECK(c.colour[0] != c.colour[2]);
}

TEST_CASE("distinguishing_index spot values") {
  CHECK(distinguishing_index(cycle_graph(3), automorphisms(cycle_graph(3)), 4) == 3);
  CHECK(distinguishing_index(cycle_graph(4), automorphisms(cycle_graph(4)), 4) == 3);
  CHECK(distinguishing_index(cycle_graph(5), automorphisms(cycle_graph(5)), 4) == 3);
  CHECK(distinguishing_index(cycle_graph(6), automorphisms(cycle_graph(6)), 4) == 2);
  CHECK(distinguishing_index(complete_graph(4), automorphisms(complete_graph(4)), 4) == 3);
  CHECK(distinguishing_index(star_graph(3), automorphisms(star_graph(3)), 4) == 3);
  CHECK(distinguishing_index(k33_graph(), automorphisms(k33_graph()), 4) == 3);
  Graph pet = petersen_graph();
  CHECK(distinguishing_index(pet, automorphisms(pet), 4) == 2);
  // a single edge can never be distinguished
  Graph k2 = path_graph(2);
  CHECK_THROWS_AS(distinguishing_index(k2, automorphisms(k2), 5), Error);
}

TEST_CASE("all_lists_feasibility on C5: exactly the identical assignments fail") {
  Graph c5 = cycle_graph(5);
  auto grp = automorphisms(c5);
  for (int universe : {3, 4}) {
    auto rep = all_lists_feasibility(c5, grp, 2, universe);
    CHECK_FALSE(rep.all_feasible);
    REQUIRE(!rep.infeasible_assignments.empty());
    for (const auto& lists : rep.infeasible_assignments) {
      for (const auto& l : lists) CHECK(l == lists.front());
    }
  }
}

TEST_CASE("all_lists_feasibility on C7: everything works") {
  Graph c7 = cycle_graph(7);
  auto rep = all_lists_feasibility(c7, automorphisms(c7), 2, 3);
  CHECK(rep.all_feasible);
  CHECK(rep.assignments_tested > 0);
}

TEST_CASE("asymmetric graphs shortcut the assignment enumeration") {
  // the spider with legs 1,2,3 has a trivial group
  Graph t = parse_edge_list("0 1\n0 2\n2 3\n0 4\n4 5\n5 6");
  auto grp = automorphisms(t);
  REQUIRE(grp.trivial());
  auto rep = all_lists_feasibility(t, grp, 2, 3);
  CHECK(rep.all_feasible);
  CHECK(rep.assignments_tested == 0);
}

TEST_CASE("probe_conjecture on C4 and the Petersen graph") {
  auto c4 = probe_conjecture(cycle_graph(4), 4);
  CHECK(c4.dprime == 3);
  CHECK(c4.list_feasible_at_dprime);

  auto pet = probe_conjecture(petersen_graph(), 3);
  CHECK(pet.dprime == 2);
  CHECK(pet.list_feasible_at_dprime);
}

TEST_CASE("monotonicity: supersets of feasible lists stay feasible") {
  Graph g = prism_graph();
  auto grp = automorphisms(g);
  Rng rng(99);
  int tried = 0;
  for (int t = 0; t < 40 && tried < 12; ++t) {
    ListAssignment L{4, {}};
    L.lists.resize(g.edge_count());
    for (auto& l : L.lists) l = Rng(rng.next()).subset(4, 2);
    auto rep = exists_distinguishing_from_lists(g, grp, L);
    if (!rep.feasible) continue;
    ++tried;
    ListAssignment bigger = L;
    for (auto& l : bigger.lists) {
      if (l.size() < 4 && rng.below(2)) {
        for (ColourId c = 0; c < 4; ++c)
          if (!std::binary_search(l.begin(), l.end(), c)) {
            l.push_back(c);
            std::sort(l.begin(), l.end());
            break;
          }
      }
    }
    CHECK(exists_distinguishing_from_lists(g, grp, bigger).feasible);
  }
  CHECK(tried > 0);
}

TEST_CASE("feasibility is invariant under colour renaming") {
  Graph g = paw_graph();
  auto grp = automorphisms(g);
  Rng rng(5);
  for (int t = 0; t < 25; ++t) {
    ListAssignment L{4, {}};
    L.lists.resize(g.edge_count());
    for (auto& l : L.lists) l = Rng(rng.next()).subset(4, 2);
    bool base = exists_distinguishing_from_lists(g, grp, L).feasible;
    std::vector<int> perm{0, 1, 2, 3};
    for (int i = 3; i > 0; --i) std::swap(perm[i], perm[rng.below(i + 1)]);
    ListAssignment renamed = L;
    for (auto& l : renamed.lists) {
      for (auto& c : l) c = perm[c];
      std::sort(l.begin(), l.end());
    }
    CHECK(exists_distinguishing_from_lists(g, grp, renamed).feasible == base);
  }
}

TEST_CASE("budget exhaustion raises") {
  Graph g = k33_graph();
  auto grp = automorphisms(g);
  CHECK_THROWS_AS(exists_distinguishing_from_lists(g, grp, uniform_lists(g, {0, 1}, 3), 5),
                  Error);
}
