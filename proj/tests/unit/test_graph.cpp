#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "brute.hpp"
#include "graphs.hpp"
#include "secpath/graph.hpp"
#include "secpath/instance.hpp"

using namespace secpath;
using namespace secpath::testing;

namespace {

GraphErrorKind error_kind(int n, const std::vector<Edge>& edges) {
  try {
    build_graph(n, edges);
  } catch (const GraphError& e) {
    return e.kind();
  }
  FAIL("expected a GraphError");
  return GraphErrorKind::negative_vertex_count;
}

std::shared_ptr<const Graph> share(Graph g) { return std::make_shared<const Graph>(std::move(g)); }

}  // namespace

TEST_CASE("build_graph canonicalizes and reports counts") {
  const Graph p3 = build_graph(3, {{1, 0}, {2, 1}});
  CHECK(p3.vertex_count() == 3);
  CHECK(p3.edge_count() == 2);
  CHECK(p3.max_degree() == 2);
  CHECK(p3.edges() == std::vector<Edge>{{0, 1}, {1, 2}});
  CHECK(p3.has_edge(2, 1));
  CHECK_FALSE(p3.has_edge(0, 2));

  const Graph k4 = complete_graph(4);
  CHECK(k4.edge_count() == 6);
  CHECK(k4.max_degree() == 3);
}

TEST_CASE("build_graph rejects malformed input with distinct errors") {
  CHECK(error_kind(2, {{0, 0}}) == GraphErrorKind::self_loop);
  CHECK(error_kind(3, {{0, 1}, {1, 0}}) == GraphErrorKind::duplicate_edge);
  CHECK(error_kind(2, {{0, 2}}) == GraphErrorKind::endpoint_out_of_range);
  CHECK(error_kind(2, {{-1, 1}}) == GraphErrorKind::endpoint_out_of_range);
  CHECK(error_kind(-1, {}) == GraphErrorKind::negative_vertex_count);

  try {
    build_graph(4, {{0, 1}, {1, 2}, {2, 1}});
    FAIL("duplicate accepted");
  } catch (const GraphError& e) {
    CHECK(e.edge_index() == 2);
  }
}

TEST_CASE("adjacency lists are sorted and consistent with the edge set") {
  std::mt19937_64 rng(7);
  for (int rep = 0; rep < 50; ++rep) {
    const Graph g = random_connected_graph(9, rng);
    int max_deg = 0;
    std::size_t half_edges = 0;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      const auto nb = g.neighbors(v);
      CHECK(std::is_sorted(nb.begin(), nb.end()));
      for (Vertex u : nb) CHECK(g.has_edge(u, v));
      max_deg = std::max(max_deg, g.degree(v));
      half_edges += nb.size();
    }
    CHECK(half_edges == 2 * g.edges().size());
    CHECK(max_deg == g.max_degree());
  }
}

TEST_CASE("neighborhood examples") {
  const Graph p3 = path_graph(3);
  CHECK(neighborhood(p3, VertexSet({1})) == VertexSet({0, 2}));
  CHECK(neighborhood(p3, VertexSet({0, 1, 2})).empty());
  CHECK(neighborhood(complete_graph(4), VertexSet({0})) == VertexSet({1, 2, 3}));
  CHECK_THROWS_AS(neighborhood(p3, VertexSet({3})), GraphError);
}

TEST_CASE("neighborhood is disjoint from its argument and matches degrees on singletons") {
  std::mt19937_64 rng(11);
  for (int rep = 0; rep < 100; ++rep) {
    const Graph g = random_connected_graph(8, rng);
    std::vector<Vertex> members;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
      if (rng() % 3 == 0) members.push_back(v);
    const VertexSet w(members);
    const VertexSet nb = neighborhood(g, w);
    for (Vertex v : nb) CHECK_FALSE(w.contains(v));
    CHECK(nb.size() == open_neighborhood_size(g, w.members()));
    for (Vertex v = 0; v < g.vertex_count(); ++v)
      CHECK(neighborhood(g, VertexSet({v})).size() == static_cast<std::size_t>(g.degree(v)));
  }
}

TEST_CASE("degree_partition examples and extremes") {
  const auto star = degree_partition(star_graph(4), 4);
  CHECK(star.excluded == VertexSet({0}));
  CHECK(star.allowed == VertexSet({1, 2, 3, 4}));
  CHECK(star.allowed_max_degree == 0);

  const auto p3 = degree_partition(path_graph(3), 3);
  CHECK(p3.excluded.empty());
  CHECK(p3.allowed_max_degree == 2);

  const auto k3 = degree_partition(complete_graph(3), 2);
  CHECK(k3.allowed.empty());
  CHECK(k3.excluded.size() == 3);
  CHECK(k3.allowed_max_degree == 0);

  CHECK_THROWS_AS(degree_partition(path_graph(3), -1), std::invalid_argument);

  std::mt19937_64 rng(3);
  for (int rep = 0; rep < 30; ++rep) {
    const Graph g = random_connected_graph(7, rng);
    CHECK(degree_partition(g, 0).excluded.size() == 7);
    const auto all = degree_partition(g, g.max_degree() + 1);
    CHECK(all.allowed.size() == 7);
    CHECK(all.allowed_max_degree == g.max_degree());
  }
}

TEST_CASE("is_connected and is_cubic") {
  CHECK(is_connected(build_graph(1, {})));
  CHECK_FALSE(is_connected(build_graph(2, {})));
  CHECK(is_connected(path_graph(5)));
  CHECK(is_cubic(complete_graph(4)));
  CHECK(is_cubic(triangular_prism()));
  CHECK(is_cubic(cube_graph()));
  CHECK_FALSE(is_cubic(cycle_graph(4)));
}

TEST_CASE("ProblemInstance validation") {
  auto g = share(path_graph(3));
  CHECK_NOTHROW(ProblemInstance::free_instance(g, Variant::ssp, 1, 0));
  CHECK_THROWS_AS(ProblemInstance::free_instance(g, Variant::ssp, 0, 0), InstanceError);
  CHECK_THROWS_AS(ProblemInstance::free_instance(g, Variant::ssp, 1, -1), InstanceError);
  CHECK_THROWS_AS(ProblemInstance::st_instance(g, Variant::ssp, 1, 0, 0, 2), InstanceError);
  CHECK_THROWS_AS(ProblemInstance::st_instance(g, Variant::ssp, 2, 0, 1, 1), InstanceError);
  CHECK_THROWS_AS(ProblemInstance::st_instance(g, Variant::ssp, 2, 0, 0, 3), InstanceError);
  const auto st = ProblemInstance::st_instance(g, Variant::lup, 2, 0, 2, 0);
  CHECK(st.st_mode());
  CHECK(st.terminals() == Terminals{2, 0});
}

TEST_CASE("verify_certificate examples") {
  auto g = share(path_graph(3));
  const auto ssp = ProblemInstance::free_instance(g, Variant::ssp, 3, 0);

  auto r = verify_certificate(ssp, {{0, 1, 2}});
  CHECK(r.accepted);
  CHECK(r.size == 3);
  CHECK(r.neighbors == 0);

  r = verify_certificate(ssp, {{0, 2}});
  CHECK_FALSE(r.accepted);
  CHECK(r.violation == Violation::not_adjacent);

  const auto st = ProblemInstance::st_instance(g, Variant::ssp, 3, 0, 0, 2);
  CHECK(verify_certificate(st, {{2, 1, 0}}).accepted);
  CHECK(verify_certificate(st, {{0, 1}}).violation == Violation::wrong_endpoints);

  CHECK(verify_certificate(ssp, {{}}).violation == Violation::empty_path);
  CHECK(verify_certificate(ssp, {{0, 5}}).violation == Violation::vertex_out_of_range);
  CHECK(verify_certificate(ssp, {{0, 1, 0}}).violation == Violation::repeated_vertex);
  CHECK(verify_certificate(ProblemInstance::free_instance(g, Variant::ssp, 2, 5), {{0, 1, 2}}).violation ==
        Violation::size_bound);
  CHECK(verify_certificate(ProblemInstance::free_instance(g, Variant::ssp, 3, 0), {{1}}).violation ==
        Violation::neighborhood_bound);
}

TEST_CASE("verify_certificate agrees with an independent recount") {
  std::mt19937_64 rng(5);
  for (int rep = 0; rep < 300; ++rep) {
    const auto g = share(random_connected_graph(7, rng));
    std::vector<Vertex> perm(7);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    // Longest prefix of the shuffled order that is still a path.
    std::size_t len = 1;
    while (len < perm.size() && g->has_edge(perm[len - 1], perm[len])) ++len;
    const std::vector<Vertex> path(perm.begin(), perm.begin() + static_cast<long>(len));
    const auto nb = recount_neighbors(*g, path);

    for (Variant var : {Variant::ssp, Variant::lsp, Variant::sup, Variant::lup}) {
      const int k = 1 + static_cast<int>(rng() % 7);
      const int l = static_cast<int>(rng() % 7);
      const bool size_ok = is_short(var) ? path.size() <= static_cast<std::size_t>(k)
                                         : path.size() >= static_cast<std::size_t>(k);
      const bool nb_ok = is_secluded(var) ? nb <= static_cast<std::size_t>(l) : nb >= static_cast<std::size_t>(l);
      const auto r = verify_certificate(ProblemInstance::free_instance(g, var, k, l), {path});
      CHECK(r.accepted == (size_ok && nb_ok));
      CHECK(r.neighbors == nb);
    }
  }
}

TEST_CASE("canonical_orientation starts at the smaller endpoint") {
  CHECK(canonical_orientation({{3, 1, 0}}).vertices == std::vector<Vertex>{0, 1, 3});
  CHECK(canonical_orientation({{0, 2}}).vertices == std::vector<Vertex>{0, 2});
  CHECK(canonical_orientation({{4}}).vertices == std::vector<Vertex>{4});
}

TEST_CASE("small-graph corpus has the known class counts") {
  const int all_counts[] = {1, 2, 4, 11, 34, 156, 1044};
  const int connected_counts[] = {1, 1, 2, 6, 21, 112, 853};
  for (int n = 1; n <= 7; ++n) {
    CHECK(nonisomorphic_graphs(n).size() == static_cast<std::size_t>(all_counts[n - 1]));
    CHECK(connected_nonisomorphic_graphs(n).size() == static_cast<std::size_t>(connected_counts[n - 1]));
  }
}

TEST_CASE("canonical code is invariant under relabeling") {
  std::mt19937_64 rng(13);
  for (int rep = 0; rep < 200; ++rep) {
    const Graph g = random_connected_graph(7, rng);
    std::vector<Vertex> perm(7);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Edge> relabeled;
    for (const Edge& e : g.edges()) relabeled.push_back({perm[e.u], perm[e.v]});
    CHECK(canonical_code(g) == canonical_code(build_graph(7, relabeled)));
  }
}
