#pragma once

#include <cstdint>
#include <functional>

#include "secpath/flow.hpp"
#include "secpath/graph.hpp"
#include "secpath/instance.hpp"

namespace secpath {

enum class PathMode { secluded, unsecluded };

/// Number of nodes in a complete branching tree of height k-1 with
/// fan-out delta: sum of delta^d for d = 0..k-1. Saturates at UINT64_MAX.
std::uint64_t branching_node_bound(int delta, int k);

/// Bounded search for a k-short l-secluded (or l-unsecluded) st-path whose
/// vertices all lie in part.allowed. The search tree is rooted at s; a node
/// labeled v has one child per allowed neighbor of v not yet on the path,
/// nodes labeled t and nodes at depth k-1 are leaves. Each root-t path is
/// checked against the neighborhood in the full graph g.
///
/// Throws std::invalid_argument when s or t is excluded, s == t or k < 2.
Answer branch_decide(const Graph& g, const DegreePartition& part, Vertex s, Vertex t, int k, int l,
                     PathMode mode);

/// st-Short Secluded Path. Vertices of degree >= k+l+1 cannot lie on a
/// solution and are dropped before branching.
Answer st_ssp_decide(const ProblemInstance& inst);

struct SupOptions {
  // Called with every flow network built during the high-degree phase.
  std::function<void(const FlowNetwork&)> on_network;
};

/// st-Short Unsecluded Path. Any shortest st-path through a vertex of
/// degree >= l+2 already has >= l neighbors, so those vertices are tested
/// with the flow network first; the remaining graph has maximum degree
/// <= l+1 and is searched by branching.
Answer st_sup_decide(const ProblemInstance& inst, const SupOptions& options = {});

using StSolver = std::function<Answer(const ProblemInstance&)>;

/// Decides a free instance by scanning single-vertex paths and then asking
/// the st-solver for every pair {s, t} with s < t in lexicographic order.
/// Stops at the first yes.
Answer free_variant_decide(const ProblemInstance& inst, const StSolver& solver);

/// Dispatches to st_ssp_decide / st_sup_decide, wrapping free instances.
/// Throws std::invalid_argument for the long variants.
Answer fpt_decide(const ProblemInstance& inst);

}  // namespace secpath
