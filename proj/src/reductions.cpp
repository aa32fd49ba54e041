#include "secpath/reductions.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <memory>

namespace secpath {

const VertexSet& ReductionOutput::group(const std::string& name) const {
  for (const auto& [key, members] : groups)
    if (key == name) return members;
  throw std::out_of_range("no vertex group named " + name);
}

bool ReductionOutput::has_group(const std::string& name) const {
  return std::any_of(groups.begin(), groups.end(), [&](const auto& g) { return g.first == name; });
}

namespace {

// Accumulates vertices, edges and groups of a construction.
class Builder {
public:
  Vertex add_vertices(int count, const std::string& group) {
    const Vertex first = n_;
    n_ += count;
    groups_.emplace_back(group, VertexSet::range(first, n_));
    return first;
  }

  Vertex add_copy(const Graph& g, const std::string& group, int source = 0) {
    const Vertex offset = add_vertices(g.vertex_count(), group);
    for (const Edge& e : g.edges()) edge(offset + e.u, offset + e.v);
    for (Vertex v = 0; v < g.vertex_count(); ++v)
      provenance_[offset + v] = Origin{Origin::Kind::vertex, source, v, v};
    return offset;
  }

  void edge(Vertex u, Vertex v) { edges_.push_back({u, v}); }

  void clique(Vertex first, int count) {
    for (Vertex a = first; a < first + count; ++a)
      for (Vertex b = a + 1; b < first + count; ++b) edge(a, b);
  }

  void origin(Vertex v, Origin o) { provenance_[v] = o; }

  // Two fresh leaves on every vertex first..first+count-1.
  void pendant_pairs(Vertex first, int count, const std::string& group) {
    const Vertex leaves = add_vertices(2 * count, group);
    for (int i = 0; i < count; ++i) {
      edge(first + i, leaves + 2 * i);
      edge(first + i, leaves + 2 * i + 1);
    }
  }

  ReductionOutput finish(Variant variant, int k, int l, std::optional<Terminals> st = {}) {
    auto g = std::make_shared<const Graph>(build_graph(n_, edges_));
    auto inst = st ? ProblemInstance::st_instance(g, variant, k, l, st->s, st->t)
                   : ProblemInstance::free_instance(g, variant, k, l);
    return ReductionOutput{std::move(inst), std::move(groups_), std::move(provenance_), {}};
  }

private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::pair<std::string, VertexSet>> groups_;
  std::map<Vertex, Origin> provenance_;
};

long choose2(long n) { return n * (n - 1) / 2; }

int checked_int(long value, const char* what) {
  if (value > std::numeric_limits<int>::max())
    throw ReductionError(std::string(what) + " does not fit the parameter range");
  return static_cast<int>(value);
}

}  // namespace

bool solved_by_single_vertex(const ProblemInstance& inst) {
  const Graph& g = inst.graph();
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (satisfies(inst.variant(), inst.k(), inst.l(), 1, static_cast<std::size_t>(g.degree(v))))
      return true;
  return false;
}

ReductionOutput reduce_to_st(const ProblemInstance& inst, const StLiftOptions& options) {
  if (inst.st_mode()) throw ReductionError("reduce_to_st expects a free instance");
  const Graph& g = inst.graph();
  const int n = g.vertex_count();
  if (n < 2) throw ReductionError("reduce_to_st needs at least two vertices");

  const long pairs = choose2(n);
  const int k2 = checked_int(static_cast<long>(inst.k()) + 2, "k'");
  const int l2 = checked_int(2 * (pairs - 1) + inst.l(), "l'");
  const Variant var = inst.variant();

  Builder b;
  if (options.shortcut_trivial && solved_by_single_vertex(inst)) {
    // s - (interior) - t, long enough for the long variants, with l' leaves
    // on s for the unsecluded ones.
    const int interior = is_short(var) ? 0 : k2 - 2;
    const Vertex first = b.add_vertices(interior, "trivial_path");
    const Vertex s = b.add_vertices(1, "s");
    const Vertex t = b.add_vertices(1, "t");
    Vertex prev = s;
    for (Vertex x = first; x < first + interior; ++x) {
      b.edge(prev, x);
      prev = x;
    }
    b.edge(prev, t);
    if (!is_secluded(var)) {
      const Vertex leaves = b.add_vertices(l2, "trivial_pendants");
      for (Vertex x = leaves; x < leaves + l2; ++x) b.edge(s, x);
    }
    auto out = b.finish(var, k2, l2, Terminals{s, t});
    out.warnings.push_back("a single vertex solves the input; emitted a constant yes-instance");
    return out;
  }

  std::vector<std::pair<Vertex, Vertex>> attach;
  for (Vertex v = 0; v < n; ++v)
    for (Vertex w = v + 1; w < n; ++w) {
      const Vertex offset =
          b.add_copy(g, "copy_" + std::to_string(v) + "_" + std::to_string(w));
      attach.emplace_back(offset + v, offset + w);
    }
  const Vertex s = b.add_vertices(1, "s");
  const Vertex t = b.add_vertices(1, "t");
  for (auto [cv, cw] : attach) {
    b.edge(s, cv);
    b.edge(t, cw);
  }
  return b.finish(var, k2, l2, Terminals{s, t});
}

ReductionOutput pchp_to_variant(const Graph& g, PchpTarget target) {
  const int n = g.vertex_count();
  if (n == 0) throw ReductionError("empty graph");
  if (!is_connected(g)) throw ReductionError("input graph must be connected");

  Builder b;
  b.add_copy(g, "copy");
  const bool pendants = target == PchpTarget::sup || target == PchpTarget::lup_pendants;
  if (pendants) b.pendant_pairs(0, n, "pendants");

  ReductionOutput out = [&] {
    switch (target) {
      case PchpTarget::ssp: return b.finish(Variant::ssp, n, 0);
      case PchpTarget::lsp: return b.finish(Variant::lsp, 1, 0);
      case PchpTarget::sup: return b.finish(Variant::sup, n, 2 * n);
      case PchpTarget::lup_full_length: return b.finish(Variant::lup, n, 0);
      case PchpTarget::lup_pendants: break;
    }
    return b.finish(Variant::lup, 1, 2 * n);
  }();
  if (!is_cubic(g)) out.warnings.push_back("input graph is not cubic");
  return out;
}

ReductionOutput pchc_to_st_variant(const Graph& g, PchcTarget target, const PchcParams& params) {
  const int n = g.vertex_count();
  const auto [x, y, z, c, k_prime] = params;
  if (!g.contains(x) || !g.contains(y) || !g.contains(z))
    throw ReductionError("x, y, z must be vertices of the input graph");
  if (y == z || !g.has_edge(x, y) || !g.has_edge(x, z))
    throw ReductionError("y and z must be distinct neighbors of x");
  if (c < 0) throw ReductionError("c must be non-negative");
  if (target == PchcTarget::lup_pendants && k_prime < 2) throw ReductionError("k' must be >= 2");

  Builder b;
  b.add_copy(g, "copy");
  const Vertex s = b.add_vertices(1, "s");
  const Vertex t = b.add_vertices(1, "t");
  b.edge(s, x);
  b.edge(y, t);
  b.edge(z, t);
  const Vertex zs = b.add_vertices(c, "Z");
  for (Vertex v = zs; v < zs + c; ++v) b.edge(s, v);

  const bool pendants = target == PchcTarget::sup || target == PchcTarget::lup_pendants;
  if (pendants) b.pendant_pairs(0, n, "pendants");

  const Terminals st{s, t};
  ReductionOutput out = [&] {
    switch (target) {
      case PchcTarget::ssp: return b.finish(Variant::ssp, n + 2, c, st);
      case PchcTarget::lsp: return b.finish(Variant::lsp, 2, c, st);
      case PchcTarget::sup: return b.finish(Variant::sup, n + 2, 2 * n + c, st);
      case PchcTarget::lup_full_length: return b.finish(Variant::lup, n + 2, c, st);
      case PchcTarget::lup_pendants: break;
    }
    return b.finish(Variant::lup, k_prime, 2 * n + c, st);
  }();
  if (!is_cubic(g)) out.warnings.push_back("input graph is not cubic");
  return out;
}

ReductionOutput clique_to_ssp(const Graph& g, int k) {
  if (k < 2) throw ReductionError("clique size must be at least 2");
  const int n = g.vertex_count();
  const int m = g.edge_count();
  if (m < 1) throw ReductionError("clique reduction needs at least one edge");

  Builder b;
  b.add_copy(g, "V'");
  const Vertex e0 = b.add_vertices(m, "E'");
  for (int i = 0; i < m; ++i) {
    const Edge& e = g.edges()[i];
    b.edge(e0 + i, e.u);
    b.edge(e0 + i, e.v);
    b.origin(e0 + i, Origin{Origin::Kind::edge, 0, e.u, e.v});
  }
  b.clique(e0, m);
  const int c_size = checked_int(static_cast<long>(m) + k + 1, "|C|");
  const Vertex c0 = b.add_vertices(c_size, "C");
  b.clique(c0, c_size);
  for (Vertex c = c0; c < c0 + c_size; ++c)
    for (Vertex v = 0; v < n; ++v) b.edge(c, v);

  const long k_prime = choose2(k);
  const long l = static_cast<long>(m) - k_prime + k;
  if (l < 0) throw ReductionError("C(k,2) - k exceeds the edge count; no valid l exists");
  auto out = b.finish(Variant::ssp, checked_int(k_prime, "k'"), checked_int(l, "l"));
  if (k_prime > m) out.warnings.push_back("C(k,2) exceeds the edge count; the instance is a no");
  return out;
}

long rbds_threshold(int n, int k, RbdsThreshold threshold) {
  const long n2 = static_cast<long>(n) * n;
  return threshold == RbdsThreshold::exact ? (k + 1L) * n2 + n - k : k * n2 + 2L * n - k;
}

ReductionOutput rbds_to_sup(const Graph& g, const VertexSet& red, const RbdsParams& params) {
  if (params.k < 1) throw ReductionError("k must be at least 1");
  const int n = g.vertex_count();
  std::vector<char> is_red(static_cast<std::size_t>(n), 0);
  for (Vertex r : red) {
    if (!g.contains(r)) throw ReductionError("red vertex outside the graph");
    is_red[r] = 1;
  }
  for (const Edge& e : g.edges())
    if (is_red[e.u] == is_red[e.v])
      throw ReductionError("graph is not bipartite along the given red/blue sides");

  const int k = std::min<int>(params.k, static_cast<int>(red.size()));
  const int pendants = checked_int(static_cast<long>(n) * n, "n^2");

  Builder b;
  b.add_copy(g, "R'");
  // Split the copy into its two sides.
  std::vector<Vertex> reds, blues;
  for (Vertex v = 0; v < n; ++v) (is_red[v] ? reds : blues).push_back(v);

  const Vertex u0 = b.add_vertices(k + 1, "U");
  for (Vertex u = u0; u <= u0 + k; ++u)
    for (Vertex r : reds) b.edge(u, r);
  const Vertex h0 = b.add_vertices(checked_int(static_cast<long>(k + 1) * pendants, "|H|"), "H");
  for (int i = 0; i <= k; ++i)
    for (int j = 0; j < pendants; ++j) b.edge(u0 + i, h0 + i * pendants + j);

  auto out = b.finish(Variant::sup, 2 * k + 1,
                      checked_int(rbds_threshold(n, k, params.threshold), "l"));
  out.groups.front() = {"R'", VertexSet(reds)};
  out.groups.insert(out.groups.begin() + 1, {"B'", VertexSet(blues)});
  if (k < params.k) out.warnings.push_back("k exceeds the number of red vertices; clamped");
  return out;
}

ReductionOutput or_compose(const std::vector<ProblemInstance>& instances) {
  const auto p = instances.size();
  if (p == 0 || !std::has_single_bit(p))
    throw ReductionError("the number of instances must be a power of two");
  const ProblemInstance& head = instances.front();
  const Variant var = head.variant();
  const int k = head.k(), l = head.l();
  for (const auto& inst : instances) {
    if (!inst.st_mode()) throw ReductionError("composition expects st-instances");
    if (inst.variant() != var || inst.k() != k || inst.l() != l)
      throw ReductionError("composed instances must share variant, k and l");
  }
  if (var == Variant::lup) throw ReductionError("st-LUP composition is not supported");

  const int log_p = std::countr_zero(p);
  const int tree_size = static_cast<int>(2 * p - 1);

  Builder b;
  std::vector<Vertex> offsets;
  for (std::size_t i = 0; i < p; ++i)
    offsets.push_back(b.add_copy(instances[i].graph(), "copy_" + std::to_string(i + 1),
                                 static_cast<int>(i)));

  const Vertex ts = b.add_vertices(tree_size, "T_s");
  const Vertex tt = b.add_vertices(tree_size, "T_t");
  for (int j = 1; j < tree_size; ++j) {
    b.edge(ts + (j - 1) / 2, ts + j);
    b.edge(tt + (j - 1) / 2, tt + j);
  }
  const int first_leaf = static_cast<int>(p) - 1;

  for (std::size_t i = 0; i < p; ++i) {
    const auto [si, ti] = *instances[i].terminals();
    const auto tag = std::to_string(i + 1);
    const Vertex sig = b.add_vertices(k, "subdiv_s_" + tag);
    const Vertex tau = b.add_vertices(k, "subdiv_t_" + tag);

    Vertex prev = ts + first_leaf + static_cast<int>(i);
    for (Vertex v = sig; v < sig + k; ++v) {
      b.edge(prev, v);
      prev = v;
    }
    b.edge(prev, offsets[i] + si);

    prev = offsets[i] + ti;
    for (Vertex v = tau; v < tau + k; ++v) {
      b.edge(prev, v);
      prev = v;
    }
    b.edge(prev, tt + first_leaf + static_cast<int>(i));
  }

  const int k_prime = checked_int(3L * k + 2L * (log_p + 1), "k'");
  long l_prime = static_cast<long>(l) + 2L * log_p;
  if (var == Variant::lsp) {
    const int star = 2 * log_p + l + 1;
    const Vertex leaves = b.add_vertices(checked_int(2L * tree_size * star, "star leaves"),
                                         "star_leaves");
    for (int j = 0; j < 2 * tree_size; ++j)
      for (int x = 0; x < star; ++x) b.edge(ts + j, leaves + j * star + x);
    l_prime = 2L * (log_p + 1) * star + l + 2L * log_p;
  }
  return b.finish(var, k_prime, checked_int(l_prime, "l'"), Terminals{ts, tt});
}

}  // namespace secpath
