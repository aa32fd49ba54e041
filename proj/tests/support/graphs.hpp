#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "secpath/graph.hpp"

namespace secpath::testing {

Graph complete_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph star_graph(int leaves);  // center 0
Graph triangular_prism();      // two triangles 0-1-2, 3-4-5 with rungs i, i+3
Graph cube_graph();            // Q3 on bit strings 0..7

/// One representative per isomorphism class of graphs on n vertices
/// (n <= 8), in a fixed order. Built by adding a vertex to every class on
/// n-1 vertices in all possible ways and keeping one graph per canonical
/// form. Results are cached per n.
const std::vector<Graph>& nonisomorphic_graphs(int n);
std::vector<Graph> connected_nonisomorphic_graphs(int n);

/// Every graph on the vertex set 0..n-1 (2^(n choose 2) of them), n <= 6.
std::vector<Graph> all_labeled_graphs(int n);

/// A uniformly relabeled random spanning tree plus independent extra edges
/// with a density drawn per graph from [0.1, 0.6].
Graph random_connected_graph(int n, std::mt19937_64& rng);

/// Canonical form used by nonisomorphic_graphs: the minimum adjacency code
/// over all relabelings compatible with color refinement. Two graphs on the
/// same n get equal codes iff they are isomorphic.
std::uint64_t canonical_code(const Graph& g);

}  // namespace secpath::testing
