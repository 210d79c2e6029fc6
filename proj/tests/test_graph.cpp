#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

#include "zf/graph.hpp"

using namespace zf;

namespace {

Graph relabel(const Graph& g, const std::vector<int>& perm) {
  std::vector<std::pair<int, int>> edges;
  for (auto [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
  return Graph::from_edges(g.vertex_count(), edges);
}

Graph random_graph(std::mt19937_64& rng, int n, double p) {
  std::vector<std::pair<int, int>> edges;
  std::uniform_real_distribution<double> coin(0, 1);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng) < p) edges.emplace_back(i, j);
  return Graph::from_edges(n, edges);
}

}  // namespace

TEST_CASE("from_edges basics") {
  Graph triangle = Graph::from_edges(3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(triangle.vertex_count() == 3);
  CHECK(triangle.edge_count() == 3);
  CHECK(triangle.has_edge(0, 1));
  CHECK(triangle.has_edge(1, 0));

  Graph dedup = Graph::from_edges(2, {{0, 1}, {1, 0}});
  CHECK(dedup.edge_count() == 1);

  CHECK_THROWS_AS(Graph::from_edges(1, {{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph::from_edges(2, {{0, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph::from_edges(2, {{-1, 0}}), std::invalid_argument);
}

TEST_CASE("edge_count equals half the degree sum") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    Graph g = random_graph(rng, 1 + int(rng() % 12), 0.4);
    long long degree_sum = 0;
    for (int v = 0; v < g.vertex_count(); ++v) degree_sum += g.degree(v);
    CHECK(degree_sum == 2 * g.edge_count());
  }
}

TEST_CASE("named graphs match their invariants") {
  Graph petersen = make_petersen();
  CHECK(petersen.vertex_count() == 10);
  CHECK(petersen.edge_count() == 15);
  CHECK(girth(petersen) == GirthValue::finite(5));
  CHECK(min_degree(petersen) == 3);

  Graph heawood = make_heawood();
  CHECK(heawood.vertex_count() == 14);
  CHECK(heawood.edge_count() == 21);
  CHECK(girth(heawood) == GirthValue::finite(6));
  CHECK(min_degree(heawood) == 3);

  Graph mcgee = make_mcgee();
  CHECK(mcgee.vertex_count() == 24);
  CHECK(mcgee.edge_count() == 36);
  CHECK(girth(mcgee) == GirthValue::finite(7));
  for (int v = 0; v < 24; ++v) CHECK(mcgee.degree(v) == 3);

  Graph cube = make_hypercube(3);
  CHECK(cube.vertex_count() == 8);
  CHECK(cube.edge_count() == 12);
  CHECK(girth(cube) == GirthValue::finite(4));

  CHECK(make_complete_bipartite(3, 3).edge_count() == 9);
  CHECK_THROWS_AS(make_cycle(2), std::invalid_argument);
  CHECK_THROWS_AS(make_complete(0), std::invalid_argument);
  CHECK_THROWS_AS(make_complete_bipartite(0, 3), std::invalid_argument);
}

TEST_CASE("named_graph spec strings") {
  CHECK(named_graph("cycle(9)") == make_cycle(9));
  CHECK(named_graph("complete_bipartite(2,5)") == make_complete_bipartite(2, 5));
  CHECK(named_graph("Petersen") == make_petersen());
  CHECK_THROWS_AS(named_graph("frucht"), std::invalid_argument);
  CHECK_THROWS_AS(named_graph("cycle(x)"), std::invalid_argument);
}

TEST_CASE("girth") {
  CHECK(girth(make_cycle(9)) == GirthValue::finite(9));
  CHECK(girth(make_path(6)) == GirthValue::acyclic());
  CHECK(girth(make_complete(4)) == GirthValue::finite(3));
  CHECK(girth(make_complete_bipartite(2, 3)) == GirthValue::finite(4));
  CHECK(girth(Graph::from_edges(1, {})) == GirthValue::acyclic());
  // Disjoint C7 + C4: the shortest cycle sits in the second component.
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < 7; ++i) edges.emplace_back(i, (i + 1) % 7);
  for (int i = 0; i < 4; ++i) edges.emplace_back(7 + i, 7 + (i + 1) % 4);
  CHECK(girth(Graph::from_edges(11, edges)) == GirthValue::finite(4));
}

TEST_CASE("girth is invariant under relabeling") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 2 + int(rng() % 10);
    Graph g = random_graph(rng, n, 0.3);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(girth(g) == girth(relabel(g, perm)));
  }
}

TEST_CASE("common neighbors") {
  Graph c5 = make_cycle(5);
  CHECK(common_neighbors(c5, 0, 2) == Bitset::of(5, {1}));
  Graph c4 = make_cycle(4);
  CHECK(common_neighbors(c4, 0, 2) == Bitset::of(4, {1, 3}));
  CHECK_THROWS_AS(common_neighbors(c5, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(common_neighbors(c5, 0, 5), std::out_of_range);
}

TEST_CASE("girth >= 5 limits common neighborhoods") {
  // Adjacent vertices share no neighbor, non-adjacent share at most one.
  for (const Graph& g : {make_petersen(), make_heawood(), make_mcgee(),
                         make_cycle(5), make_cycle(8)}) {
    REQUIRE(girth(g).length() >= 5);
    for (int u = 0; u < g.vertex_count(); ++u)
      for (int v = u + 1; v < g.vertex_count(); ++v) {
        int shared = common_neighbors(g, u, v).count();
        if (g.has_edge(u, v))
          CHECK(shared == 0);
        else
          CHECK(shared <= 1);
      }
  }
}

TEST_CASE("connected components") {
  std::vector<std::pair<int, int>> edges{{0, 1}, {1, 2}, {4, 5}};
  auto comps = connected_components(Graph::from_edges(6, edges));
  REQUIRE(comps.size() == 3);
  CHECK(comps[0] == std::vector<int>{0, 1, 2});
  CHECK(comps[1] == std::vector<int>{3});
  CHECK(comps[2] == std::vector<int>{4, 5});
}

TEST_CASE("induced subgraph keeps the index mapping") {
  Graph petersen = make_petersen();
  Bitset s = Bitset::of(10, {0, 1, 2, 5, 7});
  InducedSubgraph sub = induced_subgraph(petersen, s);
  CHECK(sub.graph.vertex_count() == 5);
  CHECK(sub.to_parent == std::vector<int>{0, 1, 2, 5, 7});
  CHECK(sub.to_sub[5] == 3);
  CHECK(sub.to_sub[4] == -1);
  for (int a = 0; a < 5; ++a)
    for (int b = a + 1; b < 5; ++b)
      CHECK(sub.graph.has_edge(a, b) ==
            petersen.has_edge(sub.to_parent[a], sub.to_parent[b]));
}
