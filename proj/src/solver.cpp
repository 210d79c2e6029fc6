#include "zf/solver.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "zf/bounds.hpp"
#include "zf/forcing.hpp"

namespace zf {

namespace {

// Closure state that supports cheap "add one vertex and re-close" steps:
// black set plus, for every vertex, its current number of white neighbors.
struct ClosureState {
  Bitset black;
  std::vector<int> white_count;

  static ClosureState initial(const Graph& g) {
    ClosureState s;
    s.black = Bitset(g.vertex_count());
    s.white_count.resize(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) s.white_count[v] = g.degree(v);
    return s;
  }

  // Makes v black and runs the color-change rule to the new fixed point.
  void add_and_close(const Graph& g, int v) {
    std::vector<int> stack;
    auto blacken = [&](int u) {
      black.set(u);
      g.neighbors(u).for_each([&](int w) {
        if (--white_count[w] == 1 && black.test(w)) stack.push_back(w);
      });
      if (white_count[u] == 1) stack.push_back(u);
    };
    blacken(v);
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      if (!black.test(x) || white_count[x] != 1) continue;
      blacken((g.neighbors(x) - black).first());
    }
  }
};

struct HintError : std::invalid_argument {
  HintError()
      : std::invalid_argument(
            "start_lower_bound exceeds the zero forcing number") {}
};

// Shared state of one k-iteration across workers.
struct IterationShared {
  const Graph& g;
  int k;
  std::atomic<int> next_block{0};
  std::atomic<int> best_block{std::numeric_limits<int>::max()};
  std::vector<std::vector<int>> block_witness;
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<std::int64_t>* budget;  // null when unlimited
  std::atomic<bool> budget_dead{false};
  std::atomic<bool> hint_violated{false};

  explicit IterationShared(const Graph& graph, int kk,
                           std::atomic<std::int64_t>* b)
      : g(graph), k(kk), block_witness(graph.vertex_count()), budget(b) {}
};

class BlockSearch {
 public:
  BlockSearch(IterationShared& shared, int block)
      : s_(shared), block_(block), n_(shared.g.vertex_count()) {}

  // Lex-first DFS over k-subsets whose smallest element is `block`;
  // prefix closures are carried down the recursion.
  bool run() {
    ClosureState root = ClosureState::initial(s_.g);
    chosen_.clear();
    return extend(root, block_, 1);
  }

 private:
  // Charges one search node; returns false when the search must stop.
  bool charge_node() {
    s_.nodes.fetch_add(1, std::memory_order_relaxed);
    if (s_.budget &&
        s_.budget->fetch_sub(1, std::memory_order_relaxed) <= 0) {
      s_.budget_dead.store(true, std::memory_order_relaxed);
    }
    // A dead budget stops everything unless some block already holds a
    // witness; then the iteration finishes to keep the result canonical.
    if (s_.budget_dead.load(std::memory_order_relaxed) &&
        s_.best_block.load(std::memory_order_relaxed) ==
            std::numeric_limits<int>::max())
      return false;
    // Blocks above an already-found witness block cannot win.
    if (block_ > s_.best_block.load(std::memory_order_relaxed)) return false;
    return true;
  }

  bool extend(const ClosureState& state, int v, int depth) {
    if (!charge_node()) return false;
    ClosureState child = state;
    child.add_and_close(s_.g, v);
    chosen_.push_back(v);
    bool found = explore(child, v, depth);
    if (!found) chosen_.pop_back();
    return found;
  }

  bool explore(const ClosureState& state, int last, int depth) {
    if (state.black.count() == n_) {
      if (depth == s_.k) return true;
      // A forcing prefix smaller than k contradicts the starting bound.
      s_.hint_violated.store(true, std::memory_order_relaxed);
      return false;
    }
    if (depth == s_.k) return false;
    int need = s_.k - depth;
    // Candidates: white vertices above `last`, in index order.
    std::vector<int> cands;
    for (int v = last + 1; v < n_; ++v)
      if (!state.black.test(v)) cands.push_back(v);
    if (static_cast<int>(cands.size()) < need) return false;
    for (std::size_t i = 0; i + need <= cands.size(); ++i)
      if (extend(state, cands[i], depth + 1)) return true;
    return false;
  }

  IterationShared& s_;
  int block_;
  int n_;
  std::vector<int> chosen_;

 public:
  const std::vector<int>& witness() const { return chosen_; }
};

void worker_loop(IterationShared& s) {
  const int n = s.g.vertex_count();
  while (true) {
    int b = s.next_block.fetch_add(1, std::memory_order_relaxed);
    if (b > n - s.k) break;  // blocks need k vertices from [b, n)
    if (b > s.best_block.load(std::memory_order_relaxed)) continue;
    BlockSearch search(s, b);
    if (search.run()) {
      s.block_witness[b] = search.witness();
      int cur = s.best_block.load(std::memory_order_relaxed);
      while (b < cur &&
             !s.best_block.compare_exchange_weak(cur, b,
                                                 std::memory_order_relaxed)) {
      }
    }
  }
}

struct IterationOutcome {
  std::optional<std::vector<int>> witness;
  bool budget_dead = false;
  bool hint_violated = false;
  std::uint64_t nodes = 0;
};

IterationOutcome run_iteration(const Graph& g, int k, int workers,
                               std::atomic<std::int64_t>* budget) {
  IterationShared shared(g, k, budget);
  if (workers <= 1) {
    worker_loop(shared);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int i = 0; i < workers; ++i)
      pool.emplace_back([&shared] { worker_loop(shared); });
    for (auto& t : pool) t.join();
  }
  IterationOutcome out;
  out.nodes = shared.nodes.load();
  out.hint_violated = shared.hint_violated.load();
  int best = shared.best_block.load();
  if (best != std::numeric_limits<int>::max())
    out.witness = std::move(shared.block_witness[best]);
  else
    out.budget_dead = shared.budget_dead.load();
  return out;
}

int component_start_bound(const Graph& g) {
  GirthValue gv = girth(g);
  int delta = min_degree(g);
  if (gv.is_finite() && delta >= 2)
    return davila_kenter_bound(gv.length(), delta);
  return 1;
}

// Exact solve of one connected component (also fine for any graph, but the
// public entry splits components first so the bound seeds stay sharp).
SolveResult solve_whole(const Graph& g, int start_bound, int workers,
                        std::atomic<std::int64_t>* budget) {
  const int n = g.vertex_count();
  SolveResult r;
  r.lower_bound_used = std::min(std::max(start_bound, 1), n);
  for (int k = r.lower_bound_used; k <= n; ++k) {
    IterationOutcome out = run_iteration(g, k, workers, budget);
    r.nodes_explored += out.nodes;
    if (out.hint_violated) throw HintError();
    if (out.witness) {
      r.status = SolveStatus::exact;
      r.z = k;
      r.witness = std::move(*out.witness);
      r.lower_bound = r.upper_bound = k;
      return r;
    }
    if (out.budget_dead) {
      r.status = SolveStatus::budget;
      r.lower_bound = k;  // every size below k was exhausted
      r.upper_bound = n;
      return r;
    }
  }
  // The full vertex set forces, so the loop can only fall through when the
  // starting bound was above the true value.
  throw HintError();
}

}  // namespace

SolveResult zero_forcing_number(const Graph& g, const SolverConfig& cfg) {
  const int n = g.vertex_count();
  if (n < 1) throw std::invalid_argument("solver needs n >= 1");
  if (cfg.node_budget && *cfg.node_budget == 0)
    throw std::invalid_argument("node_budget must be positive");
  if (cfg.start_lower_bound && *cfg.start_lower_bound < 1)
    throw std::invalid_argument("start_lower_bound must be positive");
  if (cfg.worker_count < 0)
    throw std::invalid_argument("worker_count must be non-negative");

  int workers = cfg.worker_count;
  if (workers == 0)
    workers = std::max(1u, std::thread::hardware_concurrency());

  std::atomic<std::int64_t> budget_counter{0};
  std::atomic<std::int64_t>* budget = nullptr;
  if (cfg.node_budget) {
    budget_counter.store(static_cast<std::int64_t>(*cfg.node_budget));
    budget = &budget_counter;
  }

  auto comps = connected_components(g);
  if (comps.size() == 1) {
    int seed = component_start_bound(g);
    if (cfg.start_lower_bound) seed = std::max(seed, *cfg.start_lower_bound);
    return solve_whole(g, seed, workers, budget);
  }

  // Z is additive over components; solve each and stitch the witnesses
  // back together under the original labels.
  SolveResult total;
  total.z = 0;
  bool dead = false;
  for (const auto& comp : comps) {
    Bitset mask(n);
    for (int v : comp) mask.set(v);
    InducedSubgraph sub = induced_subgraph(g, mask);
    int seed = component_start_bound(sub.graph);
    total.lower_bound_used += std::min(seed, sub.graph.vertex_count());
    if (dead) {
      // Budget died earlier: only account proven bounds for the rest.
      total.lower_bound += std::min(seed, sub.graph.vertex_count());
      total.upper_bound += sub.graph.vertex_count();
      continue;
    }
    SolveResult part = solve_whole(sub.graph, seed, workers, budget);
    total.nodes_explored += part.nodes_explored;
    if (part.exact()) {
      total.z += part.z;
      total.lower_bound += part.z;
      total.upper_bound += part.z;
      for (int v : part.witness) total.witness.push_back(sub.to_parent[v]);
    } else {
      dead = true;
      total.lower_bound += part.lower_bound;
      total.upper_bound += part.upper_bound;
    }
  }
  if (dead) {
    total.status = SolveStatus::budget;
    total.z = -1;
    total.witness.clear();
  } else {
    std::sort(total.witness.begin(), total.witness.end());
  }
  return total;
}

SolveResult brute_force_oracle(const Graph& g) {
  const int n = g.vertex_count();
  if (n < 1) throw std::invalid_argument("oracle needs n >= 1");
  if (n > 12) throw std::invalid_argument("brute_force_oracle refuses n > 12");
  SolveResult r;
  r.lower_bound_used = 1;
  for (int k = 1; k <= n; ++k) {
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
      ++r.nodes_explored;
      Bitset s(n);
      for (int v : idx) s.set(v);
      if (is_zero_forcing_set(g, s)) {
        r.status = SolveStatus::exact;
        r.z = k;
        r.witness = idx;
        r.lower_bound = r.upper_bound = k;
        return r;
      }
      // Next k-combination in lexicographic order.
      int i = k - 1;
      while (i >= 0 && idx[i] == n - k + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  throw std::logic_error("unreachable: V itself is a zero forcing set");
}

bool verify_witness(const Graph& g, const SolveResult& result) {
  if (!result.exact()) return false;
  if (static_cast<int>(result.witness.size()) != result.z) return false;
  Bitset s(g.vertex_count());
  for (int v : result.witness) {
    if (v < 0 || v >= g.vertex_count() || s.test(v)) return false;
    s.set(v);
  }
  return is_zero_forcing_set(g, s);
}

}  // namespace zf
