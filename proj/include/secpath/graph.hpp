#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace secpath {

using Vertex = int;

struct Edge {
  Vertex u;
  Vertex v;

  auto operator<=>(const Edge&) const = default;
};

enum class GraphErrorKind {
  negative_vertex_count,
  self_loop,
  duplicate_edge,
  endpoint_out_of_range,
};

// Raised when a graph or a vertex set does not validate. edge_index() names
// the offending position in the input edge list (or vertex list), so callers
// parsing files can map it back to a line.
class GraphError : public std::invalid_argument {
public:
  GraphError(GraphErrorKind kind, std::size_t index, const std::string& what)
      : std::invalid_argument(what), kind_(kind), index_(index) {}

  GraphErrorKind kind() const { return kind_; }
  std::size_t edge_index() const { return index_; }

private:
  GraphErrorKind kind_;
  std::size_t index_;
};

/// Immutable simple undirected graph on the vertices 0..n-1.
///
/// Adjacency lists are sorted ascending. The edge list is stored in
/// canonical form: every edge has u < v and the list is sorted.
class Graph {
public:
  Graph() = default;

  int vertex_count() const { return static_cast<int>(adjacency_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  int max_degree() const { return max_degree_; }

  int degree(Vertex v) const { return static_cast<int>(adjacency_[v].size()); }
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  bool has_edge(Vertex u, Vertex v) const;
  bool contains(Vertex v) const { return v >= 0 && v < vertex_count(); }

  const std::vector<Edge>& edges() const { return edges_; }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.adjacency_.size() == b.adjacency_.size() && a.edges_ == b.edges_;
  }

private:
  friend Graph build_graph(int n, const std::vector<Edge>& edge_list);

  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<Edge> edges_;
  int max_degree_ = 0;
};

/// Validates and canonicalizes an edge list. Endpoint order inside a pair is
/// irrelevant. Throws GraphError on self-loops, duplicates (in either
/// orientation) and endpoints outside 0..n-1.
Graph build_graph(int n, const std::vector<Edge>& edge_list);

/// Sorted, duplicate-free list of vertex identifiers.
class VertexSet {
public:
  VertexSet() = default;
  explicit VertexSet(std::vector<Vertex> members);

  static VertexSet range(Vertex first, Vertex last_exclusive);

  std::span<const Vertex> members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(Vertex v) const;

  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

private:
  std::vector<Vertex> members_;
};

/// Open neighborhood: vertices outside w adjacent to some member of w.
VertexSet neighborhood(const Graph& g, const VertexSet& w);

/// |N_G(W)| for an arbitrary list of distinct in-range vertices.
std::size_t open_neighborhood_size(const Graph& g, std::span<const Vertex> w);

/// Split of the vertex set by a degree threshold. Vertices of degree at least
/// the threshold are excluded from the search; the rest are allowed.
struct DegreePartition {
  VertexSet excluded;
  VertexSet allowed;
  int allowed_max_degree = 0;  // maximum degree of G[allowed]
  std::vector<char> allowed_mask;

  bool is_allowed(Vertex v) const { return allowed_mask[v] != 0; }
};

DegreePartition degree_partition(const Graph& g, int threshold);

bool is_connected(const Graph& g);
bool is_cubic(const Graph& g);

}  // namespace secpath
