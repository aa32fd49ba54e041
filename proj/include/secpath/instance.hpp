#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "secpath/graph.hpp"

namespace secpath {

// Short/Long bounds |V(P)| from above/below; Secluded/Unsecluded bounds the
// open neighborhood |N(V(P))| from above/below.
enum class Variant { ssp, lsp, sup, lup };

constexpr bool is_short(Variant v) { return v == Variant::ssp || v == Variant::sup; }
constexpr bool is_secluded(Variant v) { return v == Variant::ssp || v == Variant::lsp; }

std::string_view to_string(Variant v);
std::optional<Variant> parse_variant(std::string_view name);

/// The two inequalities of a variant for a path with `size` vertices and
/// `neighbors` open neighbors.
constexpr bool satisfies(Variant v, int k, int l, std::size_t size, std::size_t neighbors) {
  const auto sz = static_cast<std::int64_t>(size);
  const auto nb = static_cast<std::int64_t>(neighbors);
  const bool size_ok = is_short(v) ? sz <= k : sz >= k;
  const bool nb_ok = is_secluded(v) ? nb <= l : nb >= l;
  return size_ok && nb_ok;
}

class InstanceError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

struct Terminals {
  Vertex s;
  Vertex t;

  friend bool operator==(const Terminals&, const Terminals&) = default;
};

/// A decision instance: graph, variant, bounds k and l, and terminals when
/// the st-variant is asked. The graph is shared and never mutated, so
/// instances are cheap to copy and safe to hand to concurrent solvers.
class ProblemInstance {
public:
  static ProblemInstance free_instance(std::shared_ptr<const Graph> g, Variant variant, int k, int l);
  static ProblemInstance st_instance(std::shared_ptr<const Graph> g, Variant variant, int k, int l,
                                     Vertex s, Vertex t);

  const Graph& graph() const { return *graph_; }
  const std::shared_ptr<const Graph>& shared_graph() const { return graph_; }
  Variant variant() const { return variant_; }
  bool st_mode() const { return terminals_.has_value(); }
  int k() const { return k_; }
  int l() const { return l_; }
  const std::optional<Terminals>& terminals() const { return terminals_; }

  /// Same graph and bounds, asked between the given terminals.
  ProblemInstance with_terminals(Vertex s, Vertex t) const;

private:
  ProblemInstance(std::shared_ptr<const Graph> g, Variant variant, int k, int l,
                  std::optional<Terminals> terminals);

  std::shared_ptr<const Graph> graph_;
  Variant variant_;
  int k_;
  int l_;
  std::optional<Terminals> terminals_;
};

struct PathCertificate {
  std::vector<Vertex> vertices;

  friend bool operator==(const PathCertificate&, const PathCertificate&) = default;
};

/// Same path, read from the smaller endpoint.
PathCertificate canonical_orientation(PathCertificate path);

enum class Violation {
  none,
  empty_path,
  vertex_out_of_range,
  repeated_vertex,
  not_adjacent,
  wrong_endpoints,
  size_bound,
  neighborhood_bound,
};

std::string_view to_string(Violation v);

struct VerificationReport {
  bool accepted = false;
  std::size_t size = 0;
  std::size_t neighbors = 0;
  Violation violation = Violation::none;
  std::string detail;
};

/// Checks a certificate against an instance. Never throws; a malformed
/// certificate is rejected with the first violated condition.
VerificationReport verify_certificate(const ProblemInstance& inst, const PathCertificate& cert);

struct SolverStats {
  std::uint64_t paths_enumerated = 0;
  std::uint64_t branch_nodes_explored = 0;
  std::uint64_t branch_runs = 0;
  int branch_max_allowed_degree = 0;  // largest Delta_B over the branching runs
  std::uint64_t flow_calls = 0;
  std::uint64_t candidate_pairs_tried = 0;

  SolverStats& operator+=(const SolverStats& o);
};

struct Answer {
  bool yes = false;
  std::optional<PathCertificate> witness;
  SolverStats stats;
};

}  // namespace secpath
