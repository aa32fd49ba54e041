#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "secpath/graph.hpp"
#include "secpath/instance.hpp"

namespace secpath {

class ReductionError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// Where a produced vertex came from: a vertex of an input graph, or (for
// the clique construction) an edge of it. `source` picks the input graph
// when a construction takes several.
struct Origin {
  enum class Kind { vertex, edge };
  Kind kind = Kind::vertex;
  int source = 0;
  Vertex a = 0;
  Vertex b = 0;

  friend bool operator==(const Origin&, const Origin&) = default;
};

/// A produced instance plus named, pairwise disjoint vertex groups that
/// cover its vertex set. Groups are kept in construction order.
struct ReductionOutput {
  ProblemInstance instance;
  std::vector<std::pair<std::string, VertexSet>> groups;
  std::map<Vertex, Origin> provenance;
  std::vector<std::string> warnings;

  const VertexSet& group(const std::string& name) const;
  bool has_group(const std::string& name) const;
};

// ---------------------------------------------------------------------------
// Free variant -> st-variant.
//
// Vertex numbering: the copy for the i-th pair {v, w} (pairs in
// lexicographic order) occupies i*n .. i*n + n - 1 in source order; s and t
// follow. k' = k + 2 and l' = 2 (C(n,2) - 1) + l.

struct StLiftOptions {
  // When some single vertex already solves the free instance, the pair
  // construction cannot express it (every st-path in it crosses a copy
  // between two distinct vertices). Such instances are mapped to a
  // constant-size yes-instance with the same k', l' instead.
  bool shortcut_trivial = true;
};

/// True when a single-vertex path satisfies the free instance.
bool solved_by_single_vertex(const ProblemInstance& inst);

ReductionOutput reduce_to_st(const ProblemInstance& inst, const StLiftOptions& options = {});

// ---------------------------------------------------------------------------
// Hamiltonian path (planar cubic) -> each free variant.
//
// Numbering: copy of g first, then two pendants per vertex in vertex order.

// lup_full_length: k = n, l = 0 on the copy.
// lup_pendants: k = 1, l = 2n on the pendant-augmented copy.
enum class PchpTarget { ssp, lsp, sup, lup_full_length, lup_pendants };

ReductionOutput pchp_to_variant(const Graph& g, PchpTarget target);

// ---------------------------------------------------------------------------
// Hamiltonian cycle (planar cubic) -> each st-variant.
//
// Numbering: copy of g, then s, t, then the c vertices of Z, then (for the
// pendant targets) two pendants per copied vertex.

// lup_full_length: k = n + 2, l = c.
// lup_pendants: k = k_prime, l = 2n + c on the pendant-augmented graph.
enum class PchcTarget { ssp, lsp, sup, lup_full_length, lup_pendants };

struct PchcParams {
  Vertex x = 0;
  Vertex y = 1;
  Vertex z = 2;
  int c = 0;
  int k_prime = 2;  // only read by lup_pendants
};

ReductionOutput pchc_to_st_variant(const Graph& g, PchcTarget target, const PchcParams& params);

// ---------------------------------------------------------------------------
// Clique -> Short Secluded Path.
//
// Numbering: V' (copy of V), then E' (one vertex per edge in canonical edge
// order), then the |E| + k + 1 vertices of C. E' and C are cliques, each
// edge vertex is adjacent to its endpoints' copies, and C is completely
// joined to V'. k' = C(k,2), l = |E| - k' + k.

ReductionOutput clique_to_ssp(const Graph& g, int k);

// ---------------------------------------------------------------------------
// Red-Blue Dominating Set -> Short Unsecluded Path.
//
// Numbering: copy of g, then U (k+1 vertices), then H (n^2 pendants per U
// vertex, grouped by U vertex). U is completely joined to the red copies.

enum class RbdsThreshold {
  // l = (k+1) n^2 + n - k: the exact neighborhood size of the path that
  // alternates between U and a dominating red set of size k.
  exact,
  // l = k n^2 + 2n - k as printed with the original construction.
  printed,
};

struct RbdsParams {
  int k = 1;
  RbdsThreshold threshold = RbdsThreshold::exact;
};

/// k larger than the number of red vertices is clamped to it (a dominating
/// set never needs more than all red vertices).
ReductionOutput rbds_to_sup(const Graph& g, const VertexSet& red, const RbdsParams& params);

/// The l the construction uses for n input vertices and (clamped) k.
long rbds_threshold(int n, int k, RbdsThreshold threshold);

// ---------------------------------------------------------------------------
// OR-composition of p st-instances sharing (k, l, variant), p a power of two.
//
// Numbering: the copies G_1..G_p in order, then T_s and T_t (heap order,
// root first, leaves left to right), then per instance the k subdivision
// vertices on the s-side (from sigma_i) and on the t-side (from t_i), then
// for st-LSP the star leaves of every tree vertex.
// k' = 3k + 2(log p + 1); l' = l + 2 log p (SSP, SUP);
// l'' = 2(log p + 1)(2 log p + l + 1) + l + 2 log p (LSP).

ReductionOutput or_compose(const std::vector<ProblemInstance>& instances);

}  // namespace secpath
