#include "zf/bounds.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace zf {

int davila_kenter_bound(int girth, int delta) {
  if (girth < 3) throw std::domain_error("bound needs girth >= 3");
  if (delta < 2) throw std::domain_error("bound needs minimum degree >= 2");
  return delta + (delta - 2) * (girth - 3);
}

int davila_kenter_bound(const GirthValue& girth, int delta) {
  if (girth.is_acyclic()) throw std::domain_error("bound needs a finite girth");
  return davila_kenter_bound(girth.length(), delta);
}

long long min_order_bound(int girth, int delta) {
  if (girth < 5) throw std::domain_error("order bound needs girth >= 5");
  if (delta < 2) throw std::domain_error("order bound needs minimum degree >= 2");
  return static_cast<long long>(girth) * (delta - 1);
}

long long mantel_ex(long long n) {
  if (n < 1) throw std::domain_error("mantel_ex needs n >= 1");
  return n * n / 4;
}

long long abajo_dianez_ex(long long n, long long ell) {
  if (ell < 4 || n < ell + 1 || n > 2 * ell)
    throw std::domain_error(
        "abajo_dianez_ex is defined only for ell >= 4 and ell+1 <= n <= 2*ell");
  if (n <= 3 * ell / 2) return n;
  if (n <= 2 * ell - 1) return n + 1;
  return n + 2;  // n == 2*ell
}

namespace {

// Distance between u and v in the graph grown so far, or -1 if unreachable.
int dist_in(const std::vector<int>& adj, int n, int u, int v) {
  int dist[8];
  std::fill(dist, dist + n, -1);
  int queue[8];
  int head = 0, tail = 0;
  dist[u] = 0;
  queue[tail++] = u;
  while (head < tail) {
    int x = queue[head++];
    if (x == v) return dist[x];
    for (int y = 0; y < n; ++y)
      if ((adj[x] >> y) & 1 && dist[y] == -1) {
        dist[y] = dist[x] + 1;
        queue[tail++] = y;
      }
  }
  return -1;
}

struct ExtremalSearch {
  int n, ell;
  std::vector<std::pair<int, int>> slots;  // all candidate edges, lex order
  std::vector<int> adj;                    // adjacency masks of growing graph
  std::vector<std::pair<int, int>> chosen, best;

  void dfs(std::size_t idx) {
    if (chosen.size() + (slots.size() - idx) <= best.size()) return;
    if (idx == slots.size()) {
      best = chosen;
      return;
    }
    auto [u, v] = slots[idx];
    // Include slots[idx] only if that closes no cycle of length <= ell.
    int d = dist_in(adj, n, u, v);
    if (d == -1 || d >= ell) {
      adj[u] |= 1 << v;
      adj[v] |= 1 << u;
      chosen.push_back(slots[idx]);
      dfs(idx + 1);
      chosen.pop_back();
      adj[u] &= ~(1 << v);
      adj[v] &= ~(1 << u);
    }
    dfs(idx + 1);
  }
};

}  // namespace

ExtremalResult extremal_bruteforce(int n, int ell) {
  if (n < 1 || n > 8) throw std::invalid_argument("extremal_bruteforce needs 1 <= n <= 8");
  if (ell < 3) throw std::invalid_argument("extremal_bruteforce needs ell >= 3");
  ExtremalSearch search;
  search.n = n;
  search.ell = ell;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) search.slots.emplace_back(u, v);
  search.adj.assign(n, 0);
  search.dfs(0);
  ExtremalResult result;
  result.max_edges = static_cast<int>(search.best.size());
  result.witness = Graph::from_edges(n, search.best);
  return result;
}

BoundReport make_bound_report(const Graph& g, std::optional<int> z) {
  BoundReport r;
  r.girth = girth(g);
  r.min_degree = min_degree(g);
  r.bound = davila_kenter_bound(r.girth, r.min_degree);
  r.z = z;
  if (z) r.slack = *z - r.bound;
  if (r.girth.is_finite() && r.girth.length() >= 5)
    r.min_order = min_order_bound(r.girth.length(), r.min_degree);
  return r;
}

}  // namespace zf
