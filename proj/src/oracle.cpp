#include "secpath/oracle.hpp"

#include <algorithm>

namespace secpath {

namespace {

// Depth-first enumeration with an explicit path stack. cover[v] counts the
// path vertices adjacent to v, which keeps |N(V(P))| current in O(deg) per
// step.
class PathWalker {
public:
  PathWalker(const Graph& g, const PathQuery& q, const std::function<bool(const PathView&)>& visit)
      : g_(g), query_(q), visit_(visit),
        on_path_(static_cast<std::size_t>(g.vertex_count()), 0),
        cover_(static_cast<std::size_t>(g.vertex_count()), 0) {
    if (q.endpoints) {
      first_ = std::min(q.endpoints->s, q.endpoints->t);
      last_ = std::max(q.endpoints->s, q.endpoints->t);
    }
  }

  std::size_t run() {
    const int limit = query_.max_vertices.value_or(g_.vertex_count());
    if (limit < 1) return 0;
    limit_ = limit;
    if (query_.endpoints) {
      if (first_ == last_ || !g_.contains(first_) || !g_.contains(last_)) return 0;
      descend(first_);
    } else {
      for (Vertex v = 0; v < g_.vertex_count() && !stopped_; ++v) descend(v);
    }
    return count_;
  }

private:
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

  bool emit() {
    ++count_;
    if (!visit_(PathView{path_, neighbors_})) stopped_ = true;
    return !stopped_;
  }

  void descend(Vertex v) {
    push(v);
    const bool at_target = query_.endpoints && v == last_;
    if (query_.endpoints) {
      if (at_target) emit();
    } else if (path_.front() <= v) {
      emit();
    }
    if (!stopped_ && !at_target && static_cast<int>(path_.size()) < limit_) {
      for (Vertex u : g_.neighbors(v)) {
        if (on_path_[u]) continue;
        descend(u);
        if (stopped_) break;
      }
    }
    pop();
  }

  const Graph& g_;
  const PathQuery& query_;
  const std::function<bool(const PathView&)>& visit_;
  std::vector<char> on_path_;
  std::vector<int> cover_;
  std::vector<Vertex> path_;
  std::size_t neighbors_ = 0;
  std::size_t count_ = 0;
  int limit_ = 0;
  Vertex first_ = 0;
  Vertex last_ = 0;
  bool stopped_ = false;
};

}  // namespace

std::size_t for_each_path(const Graph& g, const PathQuery& query,
                          const std::function<bool(const PathView&)>& visit) {
  return PathWalker(g, query, visit).run();
}

std::vector<PathCertificate> enumerate_paths(const Graph& g, const PathQuery& query) {
  std::vector<PathCertificate> out;
  for_each_path(g, query, [&](const PathView& p) {
    out.push_back({{p.vertices.begin(), p.vertices.end()}});
    return true;
  });
  return out;
}

Answer oracle_decide(const ProblemInstance& inst) {
  PathQuery q;
  if (is_short(inst.variant())) q.max_vertices = inst.k();
  q.endpoints = inst.terminals();

  Answer ans;
  const Variant var = inst.variant();
  const int k = inst.k(), l = inst.l();
  ans.stats.paths_enumerated = for_each_path(inst.graph(), q, [&](const PathView& p) {
    if (!satisfies(var, k, l, p.vertices.size(), p.neighbors)) return true;
    ans.yes = true;
    ans.witness = PathCertificate{{p.vertices.begin(), p.vertices.end()}};
    return false;
  });
  return ans;
}

}  // namespace secpath
