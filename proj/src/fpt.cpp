#include "secpath/fpt.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

namespace secpath {

std::uint64_t branching_node_bound(int delta, int k) {
  constexpr auto cap = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t total = 0, layer = 1;
  for (int d = 0; d < k; ++d) {
    if (total > cap - layer) return cap;
    total += layer;
    if (delta > 0 && layer > cap / static_cast<std::uint64_t>(delta)) {
      layer = cap;
    } else {
      layer *= static_cast<std::uint64_t>(delta);
    }
  }
  return total;
}

namespace {

class BranchSearch {
public:
  BranchSearch(const Graph& g, const DegreePartition& part, Vertex t, int k, int l, PathMode mode)
      : g_(g), part_(part), t_(t), k_(k), l_(l), mode_(mode),
        on_path_(static_cast<std::size_t>(g.vertex_count()), 0),
        cover_(static_cast<std::size_t>(g.vertex_count()), 0) {}

  bool descend(Vertex v) {
    ++nodes_;
    push(v);
    const auto depth_left = static_cast<long>(k_) - static_cast<long>(path_.size());
    bool found = false;
    if (v == t_) {
      found = mode_ == PathMode::secluded ? neighbors_ <= static_cast<std::size_t>(l_)
                                          : neighbors_ >= static_cast<std::size_t>(l_);
      if (found) witness_ = path_;
    } else if (depth_left > 0 && !hopeless(depth_left)) {
      for (Vertex u : g_.neighbors(v)) {
        if (!part_.is_allowed(u) || on_path_[u]) continue;
        if ((found = descend(u))) break;
      }
    }
    pop();
    return found;
  }

  std::uint64_t nodes() const { return nodes_; }
  const std::vector<Vertex>& witness() const { return witness_; }

private:
  // Every vertex appended later removes at most one vertex from N(V(P)), so
  // a secluded search can stop once that cannot bring it down to l.
  bool hopeless(long depth_left) const {
    return mode_ == PathMode::secluded &&
           static_cast<long>(neighbors_) - depth_left > static_cast<long>(l_);
  }

  void push(Vertex v) {
    path_.push_back(v);
    on_path_[v] = 1;
    if (cover_[v] > 0) --neighbors_;
    for (Vertex u : g_.neighbors(v))
      if (cover_[u]++ == 0 && !on_path_[u]) ++neighbors_;
  }

  void pop() {
    const Vertex v = path_.back();
    for (Vertex u : g_.neighbors(v))
      if (--cover_[u] == 0 && !on_path_[u]) --neighbors_;
    on_path_[v] = 0;
    if (cover_[v] > 0) ++neighbors_;
    path_.pop_back();
  }

  const Graph& g_;
  const DegreePartition& part_;
  Vertex t_;
  int k_;
  int l_;
  PathMode mode_;
  std::vector<char> on_path_;
  std::vector<int> cover_;
  std::vector<Vertex> path_;
  std::vector<Vertex> witness_;
  std::size_t neighbors_ = 0;
  std::uint64_t nodes_ = 0;
};

void require_st(const ProblemInstance& inst, Variant expected, const char* who) {
  if (inst.variant() != expected || !inst.st_mode())
    throw std::invalid_argument(std::string(who) + " expects an st-" +
                                std::string(to_string(expected)) + " instance");
}

int saturating_threshold(long value) {
  return value > std::numeric_limits<int>::max() ? std::numeric_limits<int>::max()
                                                 : static_cast<int>(value);
}

}  // namespace

Answer branch_decide(const Graph& g, const DegreePartition& part, Vertex s, Vertex t, int k, int l,
                     PathMode mode) {
  if (k < 2) throw std::invalid_argument("branching needs k >= 2");
  if (s == t) throw std::invalid_argument("branching needs distinct terminals");
  if (!g.contains(s) || !g.contains(t) || !part.is_allowed(s) || !part.is_allowed(t))
    throw std::invalid_argument("terminals must lie in the allowed vertex set");

  BranchSearch search(g, part, t, k, l, mode);
  Answer ans;
  ans.yes = search.descend(s);
  if (ans.yes) ans.witness = PathCertificate{search.witness()};
  ans.stats.branch_runs = 1;
  ans.stats.branch_nodes_explored = search.nodes();
  ans.stats.branch_max_allowed_degree = part.allowed_max_degree;

  if (search.nodes() > branching_node_bound(part.allowed_max_degree, k))
    throw std::logic_error("branching explored " + std::to_string(search.nodes()) +
                           " nodes, above the tree size bound");
  return ans;
}

Answer st_ssp_decide(const ProblemInstance& inst) {
  require_st(inst, Variant::ssp, "st_ssp_decide");
  const Graph& g = inst.graph();
  const auto [s, t] = *inst.terminals();
  const auto part =
      degree_partition(g, saturating_threshold(static_cast<long>(inst.k()) + inst.l() + 1));
  if (!part.is_allowed(s) || !part.is_allowed(t)) return {};
  return branch_decide(g, part, s, t, inst.k(), inst.l(), PathMode::secluded);
}

Answer st_sup_decide(const ProblemInstance& inst, const SupOptions& options) {
  require_st(inst, Variant::sup, "st_sup_decide");
  const Graph& g = inst.graph();
  const auto [s, t] = *inst.terminals();
  const int k = inst.k(), l = inst.l();
  const auto part = degree_partition(g, saturating_threshold(static_cast<long>(l) + 2));

  Answer ans;
  for (Vertex v : part.excluded) {
    ++ans.stats.flow_calls;
    const FlowNetwork net = build_flow_network(g, s, t, v);
    if (options.on_network) options.on_network(net);
    const auto flow = min_cost_flow(net, 2);
    if (!flow || flow->cost > k - 1) continue;
    auto path = path_from_flow(net, *flow);
    if (!path || open_neighborhood_size(g, path->vertices) < static_cast<std::size_t>(l))
      throw std::logic_error("shortest st-path through a high-degree vertex is not l-unsecluded");
    ans.yes = true;
    ans.witness = std::move(path);
    return ans;
  }

  if (!part.is_allowed(s) || !part.is_allowed(t)) return ans;
  const SolverStats phase_one = ans.stats;
  ans = branch_decide(g, part, s, t, k, l, PathMode::unsecluded);
  ans.stats += phase_one;
  return ans;
}

Answer free_variant_decide(const ProblemInstance& inst, const StSolver& solver) {
  if (inst.st_mode()) throw std::invalid_argument("free_variant_decide expects a free instance");
  const Graph& g = inst.graph();
  const Variant var = inst.variant();

  Answer ans;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (satisfies(var, inst.k(), inst.l(), 1, static_cast<std::size_t>(g.degree(v)))) {
      ans.yes = true;
      ans.witness = PathCertificate{{v}};
      return ans;
    }
  }
  if (inst.k() == 1 && is_short(var)) return ans;

  // A long path with k = 1 has at least two vertices once it is an st-path.
  const int st_k = std::max(inst.k(), 2);
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    for (Vertex t = s + 1; t < g.vertex_count(); ++t) {
      ++ans.stats.candidate_pairs_tried;
      const auto st = ProblemInstance::st_instance(inst.shared_graph(), var, st_k, inst.l(), s, t);
      Answer sub = solver(st);
      ans.stats += sub.stats;
      if (sub.yes) {
        ans.yes = true;
        ans.witness = std::move(sub.witness);
        return ans;
      }
    }
  }
  return ans;
}

Answer fpt_decide(const ProblemInstance& inst) {
  StSolver solver;
  switch (inst.variant()) {
    case Variant::ssp: solver = [](const ProblemInstance& i) { return st_ssp_decide(i); }; break;
    case Variant::sup: solver = [](const ProblemInstance& i) { return st_sup_decide(i); }; break;
    default:
      throw std::invalid_argument("no FPT solver for " + std::string(to_string(inst.variant())));
  }
  return inst.st_mode() ? solver(inst) : free_variant_decide(inst, solver);
}

}  // namespace secpath
