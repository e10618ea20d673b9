#include "listdist/dispatch.hpp"

namespace listdist {

bool verify_colouring(const Graph& g, const ListAssignment* L, const EdgeColouring& c,
                      int aut_cap, const AutomorphismGroup* group) {
  if (!c.total() && g.edge_count() > 0) return false;
  if (L && !respects_lists(c, *L)) return false;
  AutomorphismGroup local;
  if (!group) {
    local = automorphisms(g, aut_cap);
    group = &local;
  }
  return is_distinguishing(g, *group, c);
}

ColourResult colour_auto(const Graph& g, const ListAssignment& L, const ColourOptions& opt) {
  ColourResult res;
  res.cls = classify(g);
  Trace* trace = opt.with_trace ? &res.trace : nullptr;
  switch (res.cls.tag) {
    case GraphClassTag::Cycle:
    case GraphClassTag::K4:
    case GraphClassTag::K33:
      fail(ErrorCode::ExceptionalGraph,
           std::string(to_string(res.cls.tag)) + ": required_list_size = " +
               std::to_string(required_list_size(res.cls).k));
    case GraphClassTag::SymmetricTree:
    case GraphClassTag::BisymmetricTree: {
      if (res.cls.delta <= 2)
        fail(ErrorCode::Unsupported, "paths have no applicable engine");
      fail(ErrorCode::ExceptionalTree,
           std::string(to_string(res.cls.tag)) + ": required_list_size = " +
               std::to_string(required_list_size(res.cls).k));
    }
    case GraphClassTag::GeneralTree: {
      TreeEngineOptions topt;
      topt.debug_invariants = opt.debug_invariants;
      topt.aut_cap = opt.aut_cap;
      topt.group = opt.group;
      topt.budget = opt.budget;
      topt.trace = trace;
      res.colouring = colour_tree(g, L, topt);
      res.engine = "tree";
      break;
    }
    case GraphClassTag::GeneralCyclic: {
      CyclicEngineOptions copt;
      copt.debug_invariants = opt.debug_invariants;
      copt.cycle_tests_induced = opt.cycle_tests_induced;
      copt.aut_cap = opt.aut_cap;
      copt.group = opt.group;
      copt.budget = opt.budget;
      copt.cycle_budget = opt.cycle_budget;
      copt.trace = trace;
      res.colouring = colour_cyclic(g, L, copt);
      res.engine = "cyclic";
      break;
    }
  }
  if (!verify_colouring(g, &L, res.colouring, opt.aut_cap, opt.group))
    fail(ErrorCode::InternalAudit, "engine output failed verification");
  res.verified = true;
  return res;
}

}  // namespace listdist
