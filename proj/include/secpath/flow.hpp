#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "secpath/graph.hpp"
#include "secpath/instance.hpp"

namespace secpath {

struct Arc {
  int tail;
  int head;
  int capacity;
  int cost;
};

struct SplitNodes {
  int plus;   // entry node w_+
  int minus;  // exit node w_-
};

/// Directed network deciding whether a short st-path runs through a given
/// vertex. Every vertex w becomes an arc (w_+, w_-) of cost 1; every edge
/// {u, w} becomes the cost-0 arcs (u_-, w_+) and (w_-, u_+); s_- and t_-
/// drain into the sink; the source feeds two units into v_-.
///
/// Node ids: source 0, sink 1, w_+ = 2 + 2w, w_- = 3 + 2w.
/// Arc order: split arcs by vertex, edge arcs by canonical edge order, the
/// two sink arcs (s then t), the source arc.
struct FlowNetwork {
  int node_count = 0;
  std::vector<Arc> arcs;
  int source = 0;
  int sink = 1;
  std::vector<SplitNodes> split;
  Terminals terminals{0, 1};
  Vertex through = 0;

  int split_arc(Vertex w) const { return w; }
};

struct Flow {
  std::vector<int> arc_flow;
  int value = 0;
  long cost = 0;
};

FlowNetwork build_flow_network(const Graph& g, Vertex s, Vertex t, Vertex v);

/// Minimum-cost flow of exactly target_value from source to sink, or nullopt
/// when the maximum flow is smaller. Successive shortest augmenting paths
/// with Dijkstra on reduced costs; costs must be non-negative.
std::optional<Flow> min_cost_flow(const FlowNetwork& net, int target_value);

/// Empty string when the flow respects capacities and conserves flow at
/// every node other than source and sink; a description of the first
/// problem otherwise.
std::string check_flow(const FlowNetwork& net, const Flow& flow);

/// Recovers the st-path encoded by a value-2 flow: the saturated split arcs
/// plus the through vertex, ordered from s to t.
std::optional<PathCertificate> path_from_flow(const FlowNetwork& net, const Flow& flow);

/// A simple st-path with at most k vertices containing v, if one exists.
std::optional<PathCertificate> find_short_path_through_vertex(const Graph& g, Vertex s, Vertex t,
                                                              Vertex v, int k);

bool short_path_through_vertex(const Graph& g, Vertex s, Vertex t, Vertex v, int k);

/// One "tail head cap cost" line per arc.
void write_arc_list(std::ostream& out, const FlowNetwork& net);

}  // namespace secpath
