// Deterministic test-corpus generator.
//
//   classes       all isomorphism classes of graphs up to 8 vertices, by
//                 vertex augmentation with exact canonical-form dedup; the
//                 per-order class counts are asserted against the known
//                 tables before anything is written
//   oracle-sample connected graphs on up to 9 vertices: every connected
//                 class with n <= 6 plus seeded random graphs for n = 7..9
//   girth5        hand-built families with girth >= 5 and minimum degree 2
//                 on 9 and 10 vertices (thetas, bouquets, dumbbells,
//                 punctured Petersen graphs)
//
// Output is one graph6 line per graph, deterministic for a fixed seed.

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "zf/graph.hpp"
#include "zf/graph6.hpp"

namespace {

constexpr int kMaxN = 8;

// Known class counts: all graphs / connected graphs on n vertices (n >= 1).
constexpr long long kAllGraphs[kMaxN + 1] = {0, 1, 2, 4, 11, 34, 156, 1044, 12346};
constexpr long long kConnectedGraphs[kMaxN + 1] = {0, 1, 1, 2, 6, 21, 112, 853, 11117};

using AdjMask = std::array<std::uint8_t, kMaxN>;

int pair_count(int n) { return n * (n - 1) / 2; }

// Upper-triangle bits of the adjacency matrix in row-major pair order.
std::uint32_t pack(const AdjMask& adj, int n, const std::array<int, kMaxN>& label) {
  std::uint32_t key = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      key = (key << 1) | ((adj[label[i]] >> label[j]) & 1);
  return key;
}

// Canonical form: minimum packed adjacency over all vertex orders with
// non-increasing degree. Restricting to degree-respecting orders keeps the
// search tiny for irregular graphs and exact for all of them.
std::uint32_t canonical_key(const AdjMask& adj, int n) {
  std::array<int, kMaxN> degree{};
  for (int v = 0; v < n; ++v) degree[v] = std::popcount(unsigned(adj[v]));

  // Vertices grouped by degree, descending.
  std::vector<std::vector<int>> groups;
  for (int d = n - 1; d >= 0; --d) {
    std::vector<int> g;
    for (int v = 0; v < n; ++v)
      if (degree[v] == d) g.push_back(v);
    if (!g.empty()) groups.push_back(std::move(g));
  }

  std::uint32_t best = ~std::uint32_t{0};
  std::array<int, kMaxN> label{};
  while (true) {
    int slot = 0;
    for (const auto& g : groups)
      for (int v : g) label[slot++] = v;
    best = std::min(best, pack(adj, n, label));
    // Odometer over the per-group permutations.
    int i = static_cast<int>(groups.size()) - 1;
    while (i >= 0 && !std::next_permutation(groups[i].begin(), groups[i].end()))
      --i;
    if (i < 0) break;
  }
  return best;
}

AdjMask unpack(std::uint32_t key, int n) {
  AdjMask adj{};
  int bit = pair_count(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if ((key >> --bit) & 1) {
        adj[i] |= std::uint8_t(1) << j;
        adj[j] |= std::uint8_t(1) << i;
      }
  return adj;
}

bool is_connected(const AdjMask& adj, int n) {
  if (n == 0) return false;
  unsigned seen = 1, frontier = 1;
  while (frontier) {
    unsigned next = 0;
    for (int v = 0; v < n; ++v)
      if ((frontier >> v) & 1) next |= adj[v];
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == (1u << n) - 1;
}

int min_degree_of(const AdjMask& adj, int n) {
  int d = n;
  for (int v = 0; v < n; ++v)
    d = std::min(d, std::popcount(unsigned(adj[v])));
  return d;
}

zf::Graph to_graph(const AdjMask& adj, int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if ((adj[i] >> j) & 1) edges.emplace_back(i, j);
  return zf::Graph::from_edges(n, edges);
}

// All isomorphism classes per order, grown one vertex at a time: every class
// on n vertices is some class on n-1 plus one new vertex with an arbitrary
// neighbor subset, so scanning all (parent, subset) pairs is exhaustive.
std::vector<std::set<std::uint32_t>> enumerate_classes(int max_n) {
  std::vector<std::set<std::uint32_t>> levels(max_n + 1);
  levels[1].insert(0);
  for (int n = 2; n <= max_n; ++n) {
    for (std::uint32_t parent_key : levels[n - 1]) {
      AdjMask parent = unpack(parent_key, n - 1);
      for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
        AdjMask child = parent;
        child[n - 1] = static_cast<std::uint8_t>(mask);
        for (int v = 0; v < n - 1; ++v)
          if ((mask >> v) & 1) child[v] |= std::uint8_t(1) << (n - 1);
        levels[n].insert(canonical_key(child, n));
      }
    }
    if (static_cast<long long>(levels[n].size()) != kAllGraphs[n]) {
      std::cerr << "class count mismatch at n=" << n << ": got "
                << levels[n].size() << ", expected " << kAllGraphs[n] << "\n";
      std::exit(1);
    }
    long long connected = 0;
    for (std::uint32_t key : levels[n])
      if (is_connected(unpack(key, n), n)) ++connected;
    if (connected != kConnectedGraphs[n]) {
      std::cerr << "connected count mismatch at n=" << n << ": got "
                << connected << ", expected " << kConnectedGraphs[n] << "\n";
      std::exit(1);
    }
  }
  return levels;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) {
    std::cerr << "cannot open output file: " << path << "\n";
    std::exit(1);
  }
  return out;
}

int cmd_classes(int max_n, int min_n, int min_degree, bool connected,
                const std::string& out_path) {
  auto levels = enumerate_classes(max_n);
  std::ofstream out = open_out(out_path);
  long long written = 0;
  for (int n = min_n; n <= max_n; ++n)
    for (std::uint32_t key : levels[n]) {
      AdjMask adj = unpack(key, n);
      if (connected && !is_connected(adj, n)) continue;
      if (min_degree_of(adj, n) < min_degree) continue;
      out << zf::write_graph6(to_graph(adj, n)) << "\n";
      ++written;
    }
  std::cerr << "classes: wrote " << written << " graphs to " << out_path << "\n";
  return 0;
}

int cmd_oracle_sample(std::uint64_t seed, int per_order,
                      const std::string& out_path) {
  auto levels = enumerate_classes(6);
  std::ofstream out = open_out(out_path);
  long long written = 0;
  for (int n = 1; n <= 6; ++n)
    for (std::uint32_t key : levels[n]) {
      AdjMask adj = unpack(key, n);
      if (!is_connected(adj, n)) continue;
      out << zf::write_graph6(to_graph(adj, n)) << "\n";
      ++written;
    }
  std::mt19937_64 rng(seed);
  for (int n = 7; n <= 9; ++n) {
    std::set<std::uint64_t> seen;  // dedup by labeled adjacency
    std::uniform_real_distribution<double> density(0.25, 0.75);
    int produced = 0;
    while (produced < per_order) {
      double p = density(rng);
      std::uint64_t bits = 0;
      std::vector<std::pair<int, int>> edges;
      int b = 0;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++b)
          if (std::uniform_real_distribution<double>(0, 1)(rng) < p) {
            bits |= std::uint64_t{1} << b;
            edges.emplace_back(i, j);
          }
      zf::Graph g = zf::Graph::from_edges(n, edges);
      if (zf::connected_components(g).size() != 1) continue;
      if (!seen.insert(bits).second) continue;
      out << zf::write_graph6(g) << "\n";
      ++produced;
      ++written;
    }
  }
  std::cerr << "oracle-sample: wrote " << written << " graphs to " << out_path
            << "\n";
  return 0;
}

// Two hub vertices joined by three internally disjoint paths of the given
// edge lengths. Girth is len1+len2 once the lengths are sorted.
zf::Graph theta_graph(int len1, int len2, int len3) {
  std::vector<std::pair<int, int>> edges;
  int n = 2;
  for (int len : {len1, len2, len3}) {
    int prev = 0;
    for (int i = 0; i < len - 1; ++i) {
      edges.emplace_back(prev, n);
      prev = n++;
    }
    edges.emplace_back(prev, 1);
  }
  return zf::Graph::from_edges(n, edges);
}

// Two cycles sharing exactly one vertex.
zf::Graph bouquet(int a, int b) {
  std::vector<std::pair<int, int>> edges;
  int n = 1;
  for (int len : {a, b}) {
    int prev = 0;
    for (int i = 0; i < len - 1; ++i) {
      edges.emplace_back(prev, n);
      prev = n++;
    }
    edges.emplace_back(prev, 0);
  }
  return zf::Graph::from_edges(n, edges);
}

// Two disjoint cycles joined by a bridge edge.
zf::Graph dumbbell(int a, int b) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < a; ++i) edges.emplace_back(i, (i + 1) % a);
  for (int i = 0; i < b; ++i) edges.emplace_back(a + i, a + (i + 1) % b);
  edges.emplace_back(0, a);
  return zf::Graph::from_edges(a + b, edges);
}

zf::Graph delete_vertex(const zf::Graph& g, int v) {
  zf::Bitset keep(g.vertex_count());
  for (int u = 0; u < g.vertex_count(); ++u)
    if (u != v) keep.set(u);
  return zf::induced_subgraph(g, keep).graph;
}

zf::Graph delete_edge(const zf::Graph& g, int a, int b) {
  auto edges = g.edges();
  std::erase(edges, std::make_pair(std::min(a, b), std::max(a, b)));
  return zf::Graph::from_edges(g.vertex_count(), edges);
}

int cmd_girth5(const std::string& out_path) {
  std::vector<zf::Graph> graphs;
  graphs.push_back(zf::make_cycle(9));
  graphs.push_back(zf::make_cycle(10));
  // Thetas with girth >= 5 on 9 and 10 vertices (n = len1+len2+len3-1).
  for (auto [a, b, c] : std::vector<std::array<int, 3>>{
           {1, 4, 5}, {2, 3, 5}, {2, 4, 4}, {3, 3, 4},            // n = 9
           {1, 4, 6}, {1, 5, 5}, {2, 3, 6}, {2, 4, 5}, {3, 3, 5}, {3, 4, 4}})
    graphs.push_back(theta_graph(a, b, c));
  graphs.push_back(bouquet(5, 5));   // n = 9
  graphs.push_back(bouquet(5, 6));   // n = 10
  graphs.push_back(dumbbell(5, 5));  // n = 10
  graphs.push_back(delete_vertex(zf::make_petersen(), 0));  // n = 9
  graphs.push_back(delete_edge(zf::make_petersen(), 0, 1));

  std::ofstream out = open_out(out_path);
  for (const auto& g : graphs) {
    zf::GirthValue gv = zf::girth(g);
    if (gv.is_acyclic() || gv.length() < 5 || zf::min_degree(g) < 2) {
      std::cerr << "girth5: construction violates girth>=5, mindeg>=2\n";
      return 1;
    }
    out << zf::write_graph6(g) << "\n";
  }
  std::cerr << "girth5: wrote " << graphs.size() << " graphs to " << out_path
            << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"deterministic graph corpus generator"};
  app.require_subcommand(1);

  int max_n = 8, min_n = 1, min_degree = 0;
  bool connected = false;
  std::string out_path;
  CLI::App* classes = app.add_subcommand(
      "classes", "all isomorphism classes up to max-n vertices, filtered");
  classes->add_option("--max-n", max_n)->check(CLI::Range(1, kMaxN));
  classes->add_option("--min-n", min_n);
  classes->add_option("--min-degree", min_degree);
  classes->add_flag("--connected", connected);
  classes->add_option("--out", out_path)->required();

  std::uint64_t seed = 20240601;
  int per_order = 150;
  CLI::App* sample = app.add_subcommand(
      "oracle-sample", "connected classes n<=6 plus random graphs n=7..9");
  sample->add_option("--seed", seed);
  sample->add_option("--per-order", per_order);
  sample->add_option("--out", out_path)->required();

  CLI::App* girth5 = app.add_subcommand(
      "girth5", "girth>=5, min degree 2 families on 9 and 10 vertices");
  girth5->add_option("--out", out_path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }
  if (classes->parsed())
    return cmd_classes(max_n, min_n, min_degree, connected, out_path);
  if (sample->parsed()) return cmd_oracle_sample(seed, per_order, out_path);
  if (girth5->parsed()) return cmd_girth5(out_path);
  return 2;
}
