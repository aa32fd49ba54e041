#include "secpath/flow.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <queue>
#include <stdexcept>

namespace secpath {

FlowNetwork build_flow_network(const Graph& g, Vertex s, Vertex t, Vertex v) {
  if (s == t) throw std::invalid_argument("flow network needs distinct terminals");
  if (!g.contains(s) || !g.contains(t) || !g.contains(v))
    throw std::invalid_argument("flow network vertex outside the graph");

  const int n = g.vertex_count();
  FlowNetwork net;
  net.node_count = 2 + 2 * n;
  net.terminals = {s, t};
  net.through = v;
  net.split.resize(static_cast<std::size_t>(n));
  for (Vertex w = 0; w < n; ++w) net.split[w] = {2 + 2 * w, 3 + 2 * w};

  net.arcs.reserve(static_cast<std::size_t>(n + 2 * g.edge_count() + 3));
  for (Vertex w = 0; w < n; ++w) net.arcs.push_back({net.split[w].plus, net.split[w].minus, 1, 1});
  for (const Edge& e : g.edges()) {
    net.arcs.push_back({net.split[e.u].minus, net.split[e.v].plus, 1, 0});
    net.arcs.push_back({net.split[e.v].minus, net.split[e.u].plus, 1, 0});
  }
  net.arcs.push_back({net.split[s].minus, net.sink, 1, 0});
  net.arcs.push_back({net.split[t].minus, net.sink, 1, 0});
  net.arcs.push_back({net.source, net.split[v].minus, 2, 0});
  return net;
}

std::optional<Flow> min_cost_flow(const FlowNetwork& net, int target_value) {
  if (target_value < 0) throw std::invalid_argument("negative flow target");

  // Residual arc 2i is arc i, residual arc 2i+1 its reverse.
  const auto nodes = static_cast<std::size_t>(net.node_count);
  std::vector<std::vector<int>> out(nodes);
  for (std::size_t i = 0; i < net.arcs.size(); ++i) {
    const Arc& a = net.arcs[i];
    if (a.cost < 0) throw std::invalid_argument("negative arc cost");
    out[a.tail].push_back(static_cast<int>(2 * i));
    out[a.head].push_back(static_cast<int>(2 * i + 1));
  }
  Flow flow;
  flow.arc_flow.assign(net.arcs.size(), 0);

  auto residual = [&](int r) {
    const auto i = static_cast<std::size_t>(r / 2);
    return r % 2 == 0 ? net.arcs[i].capacity - flow.arc_flow[i] : flow.arc_flow[i];
  };
  auto cost_of = [&](int r) { return r % 2 == 0 ? net.arcs[r / 2].cost : -net.arcs[r / 2].cost; };
  auto head_of = [&](int r) { return r % 2 == 0 ? net.arcs[r / 2].head : net.arcs[r / 2].tail; };

  constexpr long inf = std::numeric_limits<long>::max() / 4;
  std::vector<long> potential(nodes, 0);
  std::vector<long> dist(nodes);
  std::vector<int> via(nodes);

  while (flow.value < target_value) {
    std::fill(dist.begin(), dist.end(), inf);
    std::fill(via.begin(), via.end(), -1);
    using Item = std::pair<long, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
    dist[net.source] = 0;
    pq.push({0, net.source});
    while (!pq.empty()) {
      auto [d, x] = pq.top();
      pq.pop();
      if (d > dist[x]) continue;
      for (int r : out[x]) {
        if (residual(r) <= 0) continue;
        const int y = head_of(r);
        const long nd = d + cost_of(r) + potential[x] - potential[y];
        if (nd < dist[y]) {
          dist[y] = nd;
          via[y] = r;
          pq.push({nd, y});
        }
      }
    }
    if (dist[net.sink] >= inf) return std::nullopt;
    for (std::size_t x = 0; x < nodes; ++x)
      if (dist[x] < inf) potential[x] += dist[x];

    int push = target_value - flow.value;
    for (int y = net.sink; y != net.source; y = head_of(via[y] ^ 1)) push = std::min(push, residual(via[y]));
    for (int y = net.sink; y != net.source; y = head_of(via[y] ^ 1)) {
      const int r = via[y];
      flow.arc_flow[r / 2] += r % 2 == 0 ? push : -push;
      flow.cost += static_cast<long>(push) * cost_of(r);
    }
    flow.value += push;
  }

  if (auto problem = check_flow(net, flow); !problem.empty())
    throw std::logic_error("min_cost_flow produced an infeasible flow: " + problem);
  return flow;
}

std::string check_flow(const FlowNetwork& net, const Flow& flow) {
  if (flow.arc_flow.size() != net.arcs.size()) return "arc count mismatch";
  std::vector<long> balance(static_cast<std::size_t>(net.node_count), 0);
  long cost = 0;
  for (std::size_t i = 0; i < net.arcs.size(); ++i) {
    const Arc& a = net.arcs[i];
    const int f = flow.arc_flow[i];
    if (f < 0 || f > a.capacity) return "arc " + std::to_string(i) + " violates its capacity";
    balance[a.tail] -= f;
    balance[a.head] += f;
    cost += static_cast<long>(f) * a.cost;
  }
  for (int x = 0; x < net.node_count; ++x)
    if (x != net.source && x != net.sink && balance[x] != 0)
      return "flow not conserved at node " + std::to_string(x);
  if (-balance[net.source] != flow.value) return "value differs from source out-flow";
  if (cost != flow.cost) return "cost differs from arc costs";
  return {};
}

std::optional<PathCertificate> path_from_flow(const FlowNetwork& net, const Flow& flow) {
  if (flow.value != 2 || !check_flow(net, flow).empty()) return std::nullopt;

  const auto n = net.split.size();
  std::vector<Vertex> owner(static_cast<std::size_t>(net.node_count), -1);
  for (std::size_t w = 0; w < n; ++w) {
    owner[net.split[w].plus] = static_cast<Vertex>(w);
    owner[net.split[w].minus] = static_cast<Vertex>(w);
  }
  std::vector<std::vector<int>> carrying(static_cast<std::size_t>(net.node_count));
  for (std::size_t i = 0; i < net.arcs.size(); ++i)
    for (int u = 0; u < flow.arc_flow[i]; ++u) carrying[net.arcs[i].tail].push_back(static_cast<int>(i));

  const int start = net.split[net.through].minus;
  std::vector<std::vector<Vertex>> routes;
  for (int unit = 0; unit < 2; ++unit) {
    std::vector<Vertex> route{net.through};
    int x = start;
    for (std::size_t steps = 0; x != net.sink; ++steps) {
      if (carrying[x].empty() || steps > net.arcs.size()) return std::nullopt;
      const int arc = carrying[x].back();
      carrying[x].pop_back();
      x = net.arcs[arc].head;
      if (x != net.sink && x == net.split[owner[x]].plus) route.push_back(owner[x]);
    }
    routes.push_back(std::move(route));
  }

  const auto [s, t] = net.terminals;
  if (routes[0].back() != s) std::swap(routes[0], routes[1]);
  if (routes[0].back() != s || routes[1].back() != t) return std::nullopt;

  PathCertificate path;
  path.vertices.assign(routes[0].rbegin(), routes[0].rend());
  path.vertices.insert(path.vertices.end(), routes[1].begin() + 1, routes[1].end());

  std::vector<char> seen(n, 0);
  for (Vertex w : path.vertices) {
    if (seen[w]) return std::nullopt;
    seen[w] = 1;
  }
  return path;
}

std::optional<PathCertificate> find_short_path_through_vertex(const Graph& g, Vertex s, Vertex t,
                                                              Vertex v, int k) {
  if (k < 2) throw std::invalid_argument("st-paths need k >= 2");
  const FlowNetwork net = build_flow_network(g, s, t, v);
  const auto flow = min_cost_flow(net, 2);
  if (!flow || flow->cost > k - 1) return std::nullopt;
  auto path = path_from_flow(net, *flow);
  if (!path || static_cast<long>(path->vertices.size()) != flow->cost + 1)
    throw std::logic_error("flow decomposition did not yield an st-path");
  return path;
}

bool short_path_through_vertex(const Graph& g, Vertex s, Vertex t, Vertex v, int k) {
  return find_short_path_through_vertex(g, s, t, v, k).has_value();
}

void write_arc_list(std::ostream& out, const FlowNetwork& net) {
  for (const Arc& a : net.arcs)
    out << a.tail << ' ' << a.head << ' ' << a.capacity << ' ' << a.cost << '\n';
}

}  // namespace secpath
