#include "secpath/instance.hpp"

#include <algorithm>

namespace secpath {

std::string_view to_string(Variant v) {
  switch (v) {
    case Variant::ssp: return "ssp";
    case Variant::lsp: return "lsp";
    case Variant::sup: return "sup";
    case Variant::lup: return "lup";
  }
  return "?";
}

std::optional<Variant> parse_variant(std::string_view name) {
  if (name == "ssp" || name == "SSP") return Variant::ssp;
  if (name == "lsp" || name == "LSP") return Variant::lsp;
  if (name == "sup" || name == "SUP") return Variant::sup;
  if (name == "lup" || name == "LUP") return Variant::lup;
  return std::nullopt;
}

ProblemInstance::ProblemInstance(std::shared_ptr<const Graph> g, Variant variant, int k, int l,
                                 std::optional<Terminals> terminals)
    : graph_(std::move(g)), variant_(variant), k_(k), l_(l), terminals_(terminals) {
  if (!graph_) throw InstanceError("instance has no graph");
  if (k_ < 1) throw InstanceError("k must be at least 1");
  if (l_ < 0) throw InstanceError("l must be non-negative");
  if (terminals_) {
    if (k_ < 2) throw InstanceError("st-instances need k >= 2");
    const auto [s, t] = *terminals_;
    if (!graph_->contains(s) || !graph_->contains(t))
      throw InstanceError("terminal outside the vertex range");
    if (s == t) throw InstanceError("terminals must be distinct");
  }
}

ProblemInstance ProblemInstance::free_instance(std::shared_ptr<const Graph> g, Variant variant,
                                               int k, int l) {
  return ProblemInstance(std::move(g), variant, k, l, std::nullopt);
}

ProblemInstance ProblemInstance::st_instance(std::shared_ptr<const Graph> g, Variant variant,
                                             int k, int l, Vertex s, Vertex t) {
  return ProblemInstance(std::move(g), variant, k, l, Terminals{s, t});
}

ProblemInstance ProblemInstance::with_terminals(Vertex s, Vertex t) const {
  return ProblemInstance(graph_, variant_, k_, l_, Terminals{s, t});
}

PathCertificate canonical_orientation(PathCertificate path) {
  if (!path.vertices.empty() && path.vertices.front() > path.vertices.back())
    std::reverse(path.vertices.begin(), path.vertices.end());
  return path;
}

std::string_view to_string(Violation v) {
  switch (v) {
    case Violation::none: return "none";
    case Violation::empty_path: return "empty path";
    case Violation::vertex_out_of_range: return "vertex out of range";
    case Violation::repeated_vertex: return "repeated vertex";
    case Violation::not_adjacent: return "non-adjacent consecutive vertices";
    case Violation::wrong_endpoints: return "endpoints differ from s,t";
    case Violation::size_bound: return "path size bound violated";
    case Violation::neighborhood_bound: return "neighborhood bound violated";
  }
  return "?";
}

VerificationReport verify_certificate(const ProblemInstance& inst, const PathCertificate& cert) {
  VerificationReport r;
  const Graph& g = inst.graph();
  const auto& p = cert.vertices;
  auto reject = [&](Violation v, std::string detail) {
    r.accepted = false;
    r.violation = v;
    r.detail = std::move(detail);
    return r;
  };

  r.size = p.size();
  if (p.empty()) return reject(Violation::empty_path, "certificate has no vertices");
  for (Vertex v : p)
    if (!g.contains(v))
      return reject(Violation::vertex_out_of_range, "vertex " + std::to_string(v));

  std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()), 0);
  for (Vertex v : p) {
    if (seen[v]) return reject(Violation::repeated_vertex, "vertex " + std::to_string(v));
    seen[v] = 1;
  }
  r.neighbors = open_neighborhood_size(g, p);

  for (std::size_t i = 0; i + 1 < p.size(); ++i)
    if (!g.has_edge(p[i], p[i + 1]))
      return reject(Violation::not_adjacent,
                    std::to_string(p[i]) + " and " + std::to_string(p[i + 1]));

  if (const auto& term = inst.terminals()) {
    const Vertex a = p.front(), b = p.back();
    const bool match = (a == term->s && b == term->t) || (a == term->t && b == term->s);
    if (!match)
      return reject(Violation::wrong_endpoints,
                    "path runs " + std::to_string(a) + ".." + std::to_string(b));
  }

  const auto k = inst.k(), l = inst.l();
  const Variant var = inst.variant();
  const auto size = static_cast<long>(r.size);
  if (is_short(var) ? size > k : size < k)
    return reject(Violation::size_bound,
                  "|V(P)| = " + std::to_string(r.size) + ", k = " + std::to_string(k));
  if (!satisfies(var, k, l, r.size, r.neighbors))
    return reject(Violation::neighborhood_bound,
                  "|N(V(P))| = " + std::to_string(r.neighbors) + ", l = " + std::to_string(l));

  r.accepted = true;
  r.violation = Violation::none;
  return r;
}

SolverStats& SolverStats::operator+=(const SolverStats& o) {
  paths_enumerated += o.paths_enumerated;
  branch_nodes_explored += o.branch_nodes_explored;
  branch_runs += o.branch_runs;
  branch_max_allowed_degree = std::max(branch_max_allowed_degree, o.branch_max_allowed_degree);
  flow_calls += o.flow_calls;
  candidate_pairs_tried += o.candidate_pairs_tried;
  return *this;
}

}  // namespace secpath
