#include <doctest.h>

#include "brute.hpp"
#include "graphs.hpp"
#include "secpath/fpt.hpp"
#include "secpath/oracle.hpp"

using namespace secpath;
using namespace secpath::testing;

namespace {

std::shared_ptr<const Graph> share(Graph g) { return std::make_shared<const Graph>(std::move(g)); }

constexpr Variant all_variants[] = {Variant::ssp, Variant::lsp, Variant::sup, Variant::lup};

}  // namespace

TEST_CASE("enumerate_paths on P3") {
  const Graph p3 = path_graph(3);
  const auto all = enumerate_paths(p3);
  const std::vector<PathCertificate> expected{{{0}}, {{0, 1}}, {{0, 1, 2}}, {{1}}, {{1, 2}}, {{2}}};
  CHECK(all == expected);
  CHECK(enumerate_paths(p3, {1, std::nullopt}).size() == 3);
  const auto st = enumerate_paths(p3, {std::nullopt, Terminals{2, 0}});
  REQUIRE(st.size() == 1);
  CHECK(st[0].vertices == std::vector<Vertex>{0, 1, 2});
}

TEST_CASE("path counts on paths and complete graphs") {
  for (int n = 1; n <= 9; ++n)
    CHECK(enumerate_paths(path_graph(n)).size() == static_cast<std::size_t>(n * (n + 1) / 2));

  // K_n: n single vertices plus n!/(n-j)!/2 paths on j >= 2 vertices.
  for (int n = 1; n <= 7; ++n) {
    std::size_t expected = static_cast<std::size_t>(n), falling = static_cast<std::size_t>(n);
    for (int j = 2; j <= n; ++j) {
      falling *= static_cast<std::size_t>(n - j + 1);
      expected += falling / 2;
    }
    CHECK(enumerate_paths(complete_graph(n)).size() == expected);
  }
}

TEST_CASE("enumeration visits each path once, first endpoint not above the last") {
  std::mt19937_64 rng(21);
  for (int rep = 0; rep < 40; ++rep) {
    const Graph g = random_connected_graph(7, rng);
    const auto paths = enumerate_paths(g, {5, std::nullopt});
    for (std::size_t i = 0; i < paths.size(); ++i) {
      CHECK(paths[i].vertices.front() <= paths[i].vertices.back());
      CHECK(paths[i].vertices.size() <= 5);
      if (i) CHECK(paths[i - 1].vertices < paths[i].vertices);
    }
  }
}

TEST_CASE("oracle_decide examples") {
  const auto star = ProblemInstance::free_instance(share(star_graph(3)), Variant::ssp, 2, 1);
  const Answer a = oracle_decide(star);
  CHECK(a.yes);
  REQUIRE(a.witness);
  CHECK(a.witness->vertices.size() == 1);
  CHECK(a.witness->vertices[0] != 0);

  CHECK(oracle_decide(ProblemInstance::free_instance(share(complete_graph(4)), Variant::ssp, 4, 0)).yes);
  CHECK_FALSE(oracle_decide(ProblemInstance::free_instance(share(cycle_graph(5)), Variant::lup, 1, 3)).yes);
}

TEST_CASE("oracle stops at the first satisfying path and reports the count") {
  // Lexicographic order on P3: [0] is first and already satisfies SUP k=1 l=0.
  const Answer a = oracle_decide(ProblemInstance::free_instance(share(path_graph(3)), Variant::sup, 1, 0));
  CHECK(a.yes);
  CHECK(a.stats.paths_enumerated == 1);
  const Answer b = oracle_decide(ProblemInstance::free_instance(share(path_graph(3)), Variant::lup, 4, 0));
  CHECK_FALSE(b.yes);
  CHECK(b.stats.paths_enumerated == 6);
}

TEST_CASE("oracle agrees with the subset decider on every free instance, n <= 6") {
  int checked = 0;
  for (int n = 1; n <= 6; ++n) {
    for (const Graph& base : nonisomorphic_graphs(n)) {
      const auto g = share(base);
      const SubsetPaths sub(*g);
      for (Variant var : all_variants)
        for (int k = 1; k <= n; ++k)
          for (int l = 0; l <= n; ++l) {
            const auto inst = ProblemInstance::free_instance(g, var, k, l);
            const Answer a = oracle_decide(inst);
            REQUIRE(a.yes == subset_decide(sub, var, k, l));
            if (a.yes) REQUIRE(verify_certificate(inst, *a.witness).accepted);
            ++checked;
          }
    }
  }
  CHECK(checked > 20000);
}

TEST_CASE("st-oracle agrees with the subset decider, n <= 5") {
  for (int n = 2; n <= 5; ++n) {
    for (const Graph& base : nonisomorphic_graphs(n)) {
      const auto g = share(base);
      const SubsetPaths sub(*g);
      for (Vertex s = 0; s < n; ++s)
        for (Vertex t = 0; t < n; ++t) {
          if (s == t) continue;
          for (Variant var : all_variants)
            for (int k = 2; k <= n + 1; ++k)
              for (int l = 0; l <= n; ++l) {
                const auto inst = ProblemInstance::st_instance(g, var, k, l, s, t);
                const Answer a = oracle_decide(inst);
                REQUIRE(a.yes == subset_decide(sub, var, k, l, Terminals{s, t}));
                if (a.yes) REQUIRE(verify_certificate(inst, *a.witness).accepted);
              }
        }
    }
  }
}

TEST_CASE("pair wrapper around the st-oracle equals the free oracle, n <= 6") {
  const StSolver st_oracle = [](const ProblemInstance& i) { return oracle_decide(i); };
  for (int n = 1; n <= 6; ++n) {
    for (const Graph& base : nonisomorphic_graphs(n)) {
      const auto g = share(base);
      for (Variant var : all_variants)
        for (int k = 1; k <= n; ++k)
          for (int l = 0; l <= n; l += 2) {
            const auto inst = ProblemInstance::free_instance(g, var, k, l);
            const Answer wrapped = free_variant_decide(inst, st_oracle);
            REQUIRE(wrapped.yes == oracle_decide(inst).yes);
            if (wrapped.yes) REQUIRE(verify_certificate(inst, *wrapped.witness).accepted);
          }
    }
  }
}
