#include "zf/graph.hpp"

#include <algorithm>
#include <cctype>
#include <queue>
#include <stdexcept>
#include <vector>

namespace zf {

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
  Graph g;
  g.n_ = n;
  g.adj_.assign(n, Bitset(n));
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw std::invalid_argument("edge endpoint out of range: (" +
                                  std::to_string(u) + "," + std::to_string(v) +
                                  ") with n=" + std::to_string(n));
    if (u == v)
      throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    g.adj_[u].set(v);
    g.adj_[v].set(u);
  }
  g.deg_.resize(n);
  long long degree_sum = 0;
  for (int v = 0; v < n; ++v) {
    g.deg_[v] = g.adj_[v].count();
    degree_sum += g.deg_[v];
  }
  g.m_ = degree_sum / 2;
  return g;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(m_);
  for (int u = 0; u < n_; ++u)
    adj_[u].for_each([&](int v) {
      if (u < v) out.emplace_back(u, v);
    });
  return out;
}

int min_degree(const Graph& g) {
  int d = 0;
  for (int v = 0; v < g.vertex_count(); ++v)
    d = (v == 0) ? g.degree(v) : std::min(d, g.degree(v));
  return d;
}

Bitset common_neighbors(const Graph& g, int u, int v) {
  if (u < 0 || u >= g.vertex_count() || v < 0 || v >= g.vertex_count())
    throw std::out_of_range("vertex out of range");
  if (u == v) throw std::invalid_argument("common_neighbors requires u != v");
  return g.neighbors(u) & g.neighbors(v);
}

GirthValue girth(const Graph& g) {
  const int n = g.vertex_count();
  int best = -1;  // -1: no cycle seen yet
  std::vector<int> dist(n), parent(n);
  std::vector<int> queue(n);
  for (int root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[root] = 0;
    parent[root] = -1;
    int head = 0, tail = 0;
    queue[tail++] = root;
    while (head < tail) {
      int u = queue[head++];
      // Vertices beyond best/2 from the root cannot improve the minimum.
      if (best != -1 && 2 * dist[u] >= best) break;
      g.neighbors(u).for_each([&](int v) {
        if (dist[v] == -1) {
          dist[v] = dist[u] + 1;
          parent[v] = u;
          queue[tail++] = v;
        } else if (v != parent[u]) {
          int cyc = dist[u] + dist[v] + 1;
          if (best == -1 || cyc < best) best = cyc;
        }
      });
    }
  }
  return best == -1 ? GirthValue::acyclic() : GirthValue::finite(best);
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<std::vector<int>> comps;
  std::vector<char> seen(n, 0);
  std::vector<int> stack;
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<int> comp;
    seen[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      comp.push_back(u);
      g.neighbors(u).for_each([&](int v) {
        if (!seen[v]) {
          seen[v] = 1;
          stack.push_back(v);
        }
      });
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

InducedSubgraph induced_subgraph(const Graph& g, const Bitset& s) {
  const int n = g.vertex_count();
  if (s.universe() != n)
    throw std::invalid_argument("vertex set universe does not match graph");
  InducedSubgraph out;
  out.to_sub.assign(n, -1);
  s.for_each([&](int v) {
    out.to_sub[v] = static_cast<int>(out.to_parent.size());
    out.to_parent.push_back(v);
  });
  std::vector<std::pair<int, int>> edges;
  for (int v : out.to_parent)
    (g.neighbors(v) & s).for_each([&](int w) {
      if (v < w) edges.emplace_back(out.to_sub[v], out.to_sub[w]);
    });
  out.graph = Graph::from_edges(static_cast<int>(out.to_parent.size()), edges);
  return out;
}

Graph make_cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph::from_edges(n, e);
}

Graph make_path(int n) {
  if (n < 1) throw std::invalid_argument("path needs n >= 1");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph::from_edges(n, e);
}

Graph make_complete(int n) {
  if (n < 1) throw std::invalid_argument("complete graph needs n >= 1");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph::from_edges(n, e);
}

Graph make_complete_bipartite(int a, int b) {
  if (a < 1 || b < 1)
    throw std::invalid_argument("complete bipartite needs positive sides");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) e.emplace_back(i, a + j);
  return Graph::from_edges(a + b, e);
}

Graph make_hypercube(int d) {
  if (d < 1) throw std::invalid_argument("hypercube needs d >= 1");
  if (d > 20) throw std::invalid_argument("hypercube dimension too large");
  int n = 1 << d;
  std::vector<std::pair<int, int>> e;
  for (int v = 0; v < n; ++v)
    for (int b = 0; b < d; ++b)
      if (!(v & (1 << b))) e.emplace_back(v, v | (1 << b));
  return Graph::from_edges(n, e);
}

Graph make_petersen() {
  // Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(5 + i, 5 + (i + 2) % 5);
    e.emplace_back(i, 5 + i);
  }
  return Graph::from_edges(10, e);
}

namespace {

// Hamiltonian cycle 0..n-1 plus one chord per vertex given by the repeated
// LCF offset pattern.
Graph from_lcf(int n, const std::vector<int>& pattern) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  for (int i = 0; i < n; ++i) {
    int off = pattern[i % pattern.size()];
    int j = ((i + off) % n + n) % n;
    if (i < j) e.emplace_back(i, j);
  }
  return Graph::from_edges(n, e);
}

}  // namespace

Graph make_heawood() { return from_lcf(14, {5, -5}); }

Graph make_mcgee() { return from_lcf(24, {12, 7, -7}); }

namespace {

std::vector<int> parse_args(const std::string& s, std::size_t open) {
  if (s.back() != ')')
    throw std::invalid_argument("expected ')' in graph spec '" + s + "'");
  std::vector<int> args;
  std::size_t pos = open + 1;
  const std::size_t end = s.size() - 1;
  while (pos < end) {
    std::size_t comma = s.find(',', pos);
    if (comma == std::string::npos || comma > end) comma = end;
    args.push_back(std::stoi(s.substr(pos, comma - pos)));
    pos = comma + 1;
  }
  if (args.empty())
    throw std::invalid_argument("graph spec '" + s + "' needs arguments");
  return args;
}

}  // namespace

Graph named_graph(const std::string& spec) {
  std::string s;
  for (char c : spec)
    if (!std::isspace(static_cast<unsigned char>(c)))
      s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));

  if (s == "petersen") return make_petersen();
  if (s == "heawood") return make_heawood();
  if (s == "mcgee") return make_mcgee();

  std::size_t open = s.find('(');
  if (open != std::string::npos) {
    std::string name = s.substr(0, open);
    std::vector<int> args;
    try {
      args = parse_args(s, open);
    } catch (const std::logic_error&) {
      throw std::invalid_argument("malformed graph spec '" + spec + "'");
    }
    if (name == "cycle" && args.size() == 1) return make_cycle(args[0]);
    if (name == "path" && args.size() == 1) return make_path(args[0]);
    if (name == "complete" && args.size() == 1) return make_complete(args[0]);
    if (name == "complete_bipartite" && args.size() == 2)
      return make_complete_bipartite(args[0], args[1]);
    if (name == "hypercube" && args.size() == 1) return make_hypercube(args[0]);
  }
  throw std::invalid_argument(
      "unknown graph '" + spec +
      "'; known: cycle(n), path(n), complete(n), complete_bipartite(a,b), "
      "hypercube(d), petersen, heawood, mcgee");
}

}  // namespace zf
