#include "secpath/graph.hpp"

#include <algorithm>
#include <queue>

namespace secpath {

Graph build_graph(int n, const std::vector<Edge>& edge_list) {
  if (n < 0)
    throw GraphError(GraphErrorKind::negative_vertex_count, 0,
                     "negative vertex count " + std::to_string(n));

  Graph g;
  g.adjacency_.assign(static_cast<std::size_t>(n), {});
  g.edges_.reserve(edge_list.size());

  for (std::size_t i = 0; i < edge_list.size(); ++i) {
    auto [u, v] = edge_list[i];
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw GraphError(GraphErrorKind::endpoint_out_of_range, i,
                       "edge (" + std::to_string(u) + "," + std::to_string(v) +
                           ") has an endpoint outside 0.." + std::to_string(n - 1));
    if (u == v)
      throw GraphError(GraphErrorKind::self_loop, i,
                       "self-loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
    g.edges_.push_back({u, v});
  }

  // Duplicate detection has to report the later occurrence, so sort indices.
  std::vector<std::size_t> order(g.edges_.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return g.edges_[a] < g.edges_[b];
  });
  for (std::size_t i = 1; i < order.size(); ++i) {
    if (g.edges_[order[i]] == g.edges_[order[i - 1]]) {
      const Edge& e = g.edges_[order[i]];
      throw GraphError(GraphErrorKind::duplicate_edge, order[i],
                       "duplicate edge (" + std::to_string(e.u) + "," +
                           std::to_string(e.v) + ")");
    }
  }

  std::sort(g.edges_.begin(), g.edges_.end());
  for (const Edge& e : g.edges_) {
    g.adjacency_[e.u].push_back(e.v);
    g.adjacency_[e.v].push_back(e.u);
  }
  for (auto& list : g.adjacency_) {
    std::sort(list.begin(), list.end());
    g.max_degree_ = std::max(g.max_degree_, static_cast<int>(list.size()));
  }
  return g;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (!contains(u) || !contains(v)) return false;
  if (adjacency_[u].size() > adjacency_[v].size()) std::swap(u, v);
  return std::binary_search(adjacency_[u].begin(), adjacency_[u].end(), v);
}

VertexSet::VertexSet(std::vector<Vertex> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

VertexSet VertexSet::range(Vertex first, Vertex last_exclusive) {
  std::vector<Vertex> m;
  for (Vertex v = first; v < last_exclusive; ++v) m.push_back(v);
  return VertexSet(std::move(m));
}

bool VertexSet::contains(Vertex v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

VertexSet neighborhood(const Graph& g, const VertexSet& w) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  std::vector<char> state(n, 0);  // 1 = in w, 2 = neighbor
  std::size_t pos = 0;
  for (Vertex v : w) {
    if (!g.contains(v))
      throw GraphError(GraphErrorKind::endpoint_out_of_range, pos,
                       "vertex " + std::to_string(v) + " is not in the graph");
    state[v] = 1;
    ++pos;
  }
  std::vector<Vertex> out;
  for (Vertex v : w)
    for (Vertex u : g.neighbors(v))
      if (state[u] == 0) {
        state[u] = 2;
        out.push_back(u);
      }
  return VertexSet(std::move(out));
}

std::size_t open_neighborhood_size(const Graph& g, std::span<const Vertex> w) {
  std::vector<char> state(static_cast<std::size_t>(g.vertex_count()), 0);
  for (Vertex v : w) state[v] = 1;
  std::size_t count = 0;
  for (Vertex v : w)
    for (Vertex u : g.neighbors(v))
      if (state[u] == 0) {
        state[u] = 2;
        ++count;
      }
  return count;
}

DegreePartition degree_partition(const Graph& g, int threshold) {
  if (threshold < 0) throw std::invalid_argument("degree threshold must be non-negative");
  DegreePartition part;
  const int n = g.vertex_count();
  part.allowed_mask.assign(static_cast<std::size_t>(n), 0);
  std::vector<Vertex> high, low;
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) >= threshold) {
      high.push_back(v);
    } else {
      low.push_back(v);
      part.allowed_mask[v] = 1;
    }
  }
  for (Vertex v : low) {
    int d = 0;
    for (Vertex u : g.neighbors(v)) d += part.allowed_mask[u];
    part.allowed_max_degree = std::max(part.allowed_max_degree, d);
  }
  part.excluded = VertexSet(std::move(high));
  part.allowed = VertexSet(std::move(low));
  return part;
}

bool is_connected(const Graph& g) {
  const int n = g.vertex_count();
  if (n == 0) return true;
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::queue<Vertex> q;
  q.push(0);
  seen[0] = 1;
  int reached = 1;
  while (!q.empty()) {
    Vertex v = q.front();
    q.pop();
    for (Vertex u : g.neighbors(v))
      if (!seen[u]) {
        seen[u] = 1;
        ++reached;
        q.push(u);
      }
  }
  return reached == n;
}

bool is_cubic(const Graph& g) {
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) != 3) return false;
  return true;
}

}  // namespace secpath
