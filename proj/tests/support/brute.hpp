#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "secpath/graph.hpp"
#include "secpath/instance.hpp"

namespace secpath::testing {

// Brute-force deciders that share no code with the library solvers. They
// work on vertex subsets: the conditions of every variant depend only on
// V(P), so a path exists iff some subset S satisfies them and G[S] has a
// Hamiltonian path (with the requested endpoints).

/// Hamiltonian-path table over all vertex subsets of a graph with n <= 16.
class SubsetPaths {
public:
  explicit SubsetPaths(const Graph& g);

  int n() const { return n_; }
  std::uint32_t neighbors(std::uint32_t set) const;

  /// Bit u is set iff G[set] has a Hamiltonian path from u to v.
  std::uint32_t starts(std::uint32_t set, Vertex v) const { return table_[set * n_ + v]; }
  bool traceable(std::uint32_t set) const;
  bool traceable_between(std::uint32_t set, Vertex s, Vertex t) const;

private:
  int n_;
  std::vector<std::uint32_t> adj_;
  std::vector<std::uint32_t> table_;
};

/// Decision of any of the eight variants by scanning all vertex subsets.
bool subset_decide(const SubsetPaths& paths, Variant variant, int k, int l,
                   std::optional<Terminals> st = std::nullopt);
bool subset_decide(const ProblemInstance& inst);

/// Fewest vertices on a simple st-path through v, or nullopt if none.
std::optional<int> fewest_vertices_through(const SubsetPaths& paths, Vertex s, Vertex t, Vertex v);

bool has_hamiltonian_path(const Graph& g);
bool has_hamiltonian_cycle(const Graph& g);
bool has_clique(const Graph& g, int k);

/// Some set of at most k red vertices dominates every non-red vertex.
bool has_red_blue_dominating_set(const Graph& g, const VertexSet& red, int k);

/// Recount of |V(P)| and |N(V(P))| straight from the edge list.
std::size_t recount_neighbors(const Graph& g, const std::vector<Vertex>& path);

}  // namespace secpath::testing
