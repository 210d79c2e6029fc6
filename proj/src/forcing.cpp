#include "zf/forcing.hpp"

#include <stdexcept>

namespace zf {

namespace {

void check_universe(const Graph& g, const Bitset& s) {
  if (s.universe() != g.vertex_count())
    throw std::invalid_argument("vertex set universe does not match graph");
}

// Unique white neighbor of v, or -1 if v has zero or several.
int unique_white_neighbor(const Graph& g, const Bitset& black, int v) {
  Bitset white_nbrs = g.neighbors(v) - black;
  int first = white_nbrs.first();
  if (first == -1 || white_nbrs.next(first) != -1) return -1;
  return first;
}

}  // namespace

std::vector<std::pair<int, int>> eligible_forces(const Graph& g,
                                                 const ColorState& state) {
  check_universe(g, state.black);
  std::vector<std::pair<int, int>> out;
  state.black.for_each([&](int v) {
    int u = unique_white_neighbor(g, state.black, v);
    if (u != -1) out.emplace_back(v, u);
  });
  return out;
}

DerivedSet derived_set(const Graph& g, const Bitset& s) {
  check_universe(g, s);
  DerivedSet result;
  result.closure = s;
  result.chronology.initial = s;
  Bitset& black = result.closure;
  int step = 0;
  while (true) {
    int forcer = -1, forced = -1;
    for (int v = black.first(); v != -1; v = black.next(v)) {
      int u = unique_white_neighbor(g, black, v);
      if (u != -1) {
        forcer = v;
        forced = u;
        break;
      }
    }
    if (forcer == -1) break;
    black.set(forced);
    result.chronology.events.push_back({forcer, forced, ++step});
  }
  return result;
}

Bitset closure_of(const Graph& g, const Bitset& s) {
  check_universe(g, s);
  const int n = g.vertex_count();
  Bitset black = s;
  // white_count[v]: number of white neighbors of v; a black vertex with
  // count 1 forces. Event-driven updates keep this linear in forces.
  std::vector<int> white_count(n);
  std::vector<int> stack;
  for (int v = 0; v < n; ++v) {
    white_count[v] = g.degree(v) - g.neighbors(v).intersection_count(black);
    if (black.test(v) && white_count[v] == 1) stack.push_back(v);
  }
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    if (!black.test(v) || white_count[v] != 1) continue;
    int u = (g.neighbors(v) - black).first();
    black.set(u);
    g.neighbors(u).for_each([&](int w) {
      if (--white_count[w] == 1 && black.test(w)) stack.push_back(w);
    });
    if (white_count[u] == 1) stack.push_back(u);
  }
  return black;
}

bool is_zero_forcing_set(const Graph& g, const Bitset& s) {
  return closure_of(g, s).count() == g.vertex_count();
}

bool validate_chronology(const Graph& g, const Chronology& chron) {
  if (chron.initial.universe() != g.vertex_count()) return false;
  Bitset black = chron.initial;
  int step = 0;
  for (const auto& e : chron.events) {
    if (e.step != ++step) return false;
    if (e.forcer < 0 || e.forcer >= g.vertex_count()) return false;
    if (!black.test(e.forcer)) return false;
    if (unique_white_neighbor(g, black, e.forcer) != e.forced) return false;
    black.set(e.forced);
  }
  return true;
}

}  // namespace zf
