#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "secpath/graph.hpp"
#include "secpath/instance.hpp"

namespace secpath {

struct PathQuery {
  std::optional<int> max_vertices;         // upper bound on |V(P)|
  std::optional<Terminals> endpoints;      // unordered endpoint pair
};

// A path as seen during enumeration. The view is only valid inside the
// callback.
struct PathView {
  std::span<const Vertex> vertices;
  std::size_t neighbors;  // |N_G(V(P))|
};

/// Visits every simple path of g once up to reversal, oriented so that the
/// first vertex is not larger than the last, in lexicographic order of the
/// vertex sequence. The visitor returns false to stop. Returns the number of
/// paths visited.
std::size_t for_each_path(const Graph& g, const PathQuery& query,
                          const std::function<bool(const PathView&)>& visit);

std::vector<PathCertificate> enumerate_paths(const Graph& g, const PathQuery& query = {});

/// Exhaustive decision for any of the eight problem variants. Short variants
/// cut the enumeration at k vertices; long variants look at every simple
/// path, which is exponential in n.
Answer oracle_decide(const ProblemInstance& inst);

}  // namespace secpath
