#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "zf/forcing.hpp"
#include "zf/graph.hpp"

using namespace zf;

namespace {

Graph random_graph(std::mt19937_64& rng, int n, double p) {
  std::vector<std::pair<int, int>> edges;
  std::uniform_real_distribution<double> coin(0, 1);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng) < p) edges.emplace_back(i, j);
  return Graph::from_edges(n, edges);
}

Bitset random_subset(std::mt19937_64& rng, int n, double p) {
  Bitset s(n);
  std::uniform_real_distribution<double> coin(0, 1);
  for (int v = 0; v < n; ++v)
    if (coin(rng) < p) s.set(v);
  return s;
}

// Applies eligible forces one at a time in a random order; the fixed point
// must not depend on the order.
Bitset random_order_closure(const Graph& g, Bitset black,
                            std::mt19937_64& rng) {
  while (true) {
    auto forces = eligible_forces(g, {black});
    if (forces.empty()) return black;
    auto [forcer, forced] = forces[rng() % forces.size()];
    black.set(forced);
  }
}

}  // namespace

TEST_CASE("eligible forces") {
  Graph c5 = make_cycle(5);
  auto forces = eligible_forces(c5, {Bitset::of(5, {0, 1})});
  CHECK(forces == std::vector<std::pair<int, int>>{{0, 4}, {1, 2}});

  Graph k4 = make_complete(4);
  CHECK(eligible_forces(k4, {Bitset::of(4, {0, 1})}).empty());

  Bitset all(5);
  for (int v = 0; v < 5; ++v) all.set(v);
  CHECK(eligible_forces(c5, {all}).empty());
}

TEST_CASE("derived set on the 5-cycle") {
  Graph c5 = make_cycle(5);
  DerivedSet d = derived_set(c5, Bitset::of(5, {0, 1}));
  CHECK(d.closure.count() == 5);
  REQUIRE(d.chronology.step_count() == 3);
  CHECK(d.chronology.events[0].forcer == 0);
  CHECK(d.chronology.events[0].forced == 4);
  CHECK(d.chronology.events[1].forcer == 1);
  CHECK(d.chronology.events[1].forced == 2);
  CHECK(d.chronology.events[2].forcer == 2);
  CHECK(d.chronology.events[2].forced == 3);
  CHECK(d.chronology.events[0].step == 1);
  CHECK(d.chronology.events[2].step == 3);

  DerivedSet stalled = derived_set(c5, Bitset::of(5, {0}));
  CHECK(stalled.closure == Bitset::of(5, {0}));
  CHECK(stalled.chronology.step_count() == 0);
}

TEST_CASE("forcing runs along a path") {
  Graph path = make_path(4);
  DerivedSet d = derived_set(path, Bitset::of(4, {0}));
  CHECK(d.closure.count() == 4);
  CHECK(d.chronology.step_count() == 3);
}

TEST_CASE("zero forcing set checks") {
  Graph c7 = make_cycle(7);
  CHECK(is_zero_forcing_set(c7, Bitset::of(7, {0, 1})));
  CHECK_FALSE(is_zero_forcing_set(c7, Bitset::of(7, {0, 3})));
  Graph k5 = make_complete(5);
  CHECK(is_zero_forcing_set(k5, Bitset::of(5, {0, 1, 2, 3})));
  CHECK_FALSE(is_zero_forcing_set(k5, Bitset::of(5, {0, 1, 2})));
}

TEST_CASE("closure properties on random inputs") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 300; ++trial) {
    int n = 1 + int(rng() % 12);
    Graph g = random_graph(rng, n, 0.15 + 0.5 * (rng() % 100) / 100.0);
    Bitset s = random_subset(rng, n, 0.3);

    Bitset closure = closure_of(g, s);
    CHECK(s.is_subset_of(closure));                    // extensive
    CHECK(closure_of(g, closure) == closure);          // idempotent
    Bitset t = s | random_subset(rng, n, 0.2);
    CHECK(closure.is_subset_of(closure_of(g, t)));     // monotone

    // The fixed point is order-independent and matches the canonical
    // chronology's closure.
    CHECK(random_order_closure(g, s, rng) == closure);
    DerivedSet d = derived_set(g, s);
    CHECK(d.closure == closure);
  }
}

TEST_CASE("chronology replay and force validity") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 1 + int(rng() % 10);
    Graph g = random_graph(rng, n, 0.4);
    Bitset s = random_subset(rng, n, 0.35);
    DerivedSet d = derived_set(g, s);

    CHECK(validate_chronology(g, d.chronology));
    CHECK(d.chronology.final_black() == d.closure);

    // Forced vertices are pairwise distinct and never initially black.
    std::set<int> forced;
    for (const auto& e : d.chronology.events) {
      CHECK(!s.test(e.forced));
      CHECK(forced.insert(e.forced).second);
      CHECK(g.has_edge(e.forcer, e.forced));
    }
  }
}

TEST_CASE("validate_chronology rejects corrupted replays") {
  Graph c5 = make_cycle(5);
  Chronology good = derived_set(c5, Bitset::of(5, {0, 1})).chronology;
  CHECK(validate_chronology(c5, good));

  Chronology wrong_order = good;
  std::swap(wrong_order.events[0], wrong_order.events[1]);
  CHECK_FALSE(validate_chronology(c5, wrong_order));

  Chronology bad_step = good;
  bad_step.events[1].step = 5;
  CHECK_FALSE(validate_chronology(c5, bad_step));

  Chronology bad_forcer = good;
  bad_forcer.events[0].forcer = 3;  // white vertex cannot force
  CHECK_FALSE(validate_chronology(c5, bad_forcer));

  Chronology not_unique = good;
  not_unique.events[0].forced = 1;  // already black
  CHECK_FALSE(validate_chronology(c5, not_unique));
}
