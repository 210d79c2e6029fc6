#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "zf/forcing.hpp"
#include "zf/graph.hpp"

namespace zf {

/// A common-neighbor edge between forcers: positions j < i in X, certified
/// by the unique common neighbor `witness`.
struct CommonNeighborEdge {
  int j = -1;
  int i = -1;
  int witness = -1;
};

/// The full apparatus built from one (graph, zero forcing set, chronology)
/// triple: the first m = min(t, girth-2) forcers X, the sets S_i carved out
/// of the initial black set, and the auxiliary edge sets on X.
///
/// Everything is indexed by position in X (0-based); `x[pos]` gives the
/// graph vertex. Edges store positions, not vertices.
struct Machinery {
  Graph graph;
  Chronology chronology;
  int girth_length = 0;  // finite, >= 5

  std::vector<int> x;      // forcer vertices x_1..x_m in forcing order
  bool truncated = false;  // t < girth-2, so x is shorter than the full X

  std::vector<Bitset> s_sets;  // S_i: fresh initially-black neighbors of x_i
  Bitset s_x_star;             // union of the S_i
  Bitset s_x_isolated;         // (S ∩ X) \ S_X*; the isolated vertices of H1

  std::vector<std::pair<int, int>> e1;  // induced edges of G inside X
  std::vector<CommonNeighborEdge> e2;   // fresh common-neighbor edges

  // Connected components of H1 = (X, E1), largest first, ties broken by the
  // earliest forcer; positions ascending inside each component.
  std::vector<std::vector<int>> components;
  int l = 0;  // number of components of size >= 2

  std::vector<CommonNeighborEdge> e2_prime;        // inside one component
  std::vector<CommonNeighborEdge> e2_doubleprime;  // across components
  std::vector<std::pair<int, int>> h4_edges;  // component index pairs (p<q)

  int component_count() const { return static_cast<int>(components.size()); }
  int forcer_count() const { return static_cast<int>(x.size()); }
};

enum class CheckVerdict { pass, fail, inapplicable };

struct CheckResult {
  std::string name;
  CheckVerdict verdict = CheckVerdict::pass;
  std::string detail;  // on fail: the violating vertices/steps
};

/// Aggregated verdicts plus the observed quantities of the inequality chain.
/// The two displayed inequalities (|E2| >= g-3+|S_X| and |E2''| >= 2k-1) are
/// consequences of the refuted size hypothesis, so their sides are reported
/// here without being asserted.
struct LemmaReport {
  std::vector<CheckResult> checks;

  bool hypothesis_satisfied = false;  // |S| <= (δ-2)(g-3)+δ-1
  long long s_size = 0;
  long long s_threshold = 0;
  long long e2_size = 0;
  long long e2_lower = 0;    // g-3+|S_X|
  long long e2pp_size = 0;
  long long e2pp_lower = 0;  // 2k-1
  int k = 0;
  int l = 0;
  bool truncated = false;

  bool overall_pass() const {
    for (const auto& c : checks)
      if (c.verdict == CheckVerdict::fail) return false;
    return true;
  }
};

/// Builds the apparatus. Requires finite girth >= 5, a complete valid
/// chronology (its replay blackens all of V), and therefore an initial set
/// that is a zero forcing set; throws std::invalid_argument otherwise.
Machinery build_machinery(const Graph& g, const Chronology& chron);

/// |S_i| = deg(x_i) - 1 - #{j<i : {x_j,x_i} in E2} for every i.
CheckResult check_si_identity(const Machinery& m);

/// The E2 edges inside N(u) ∩ X form a star centered on the earliest forcer
/// in that set. Inapplicable when u has no neighbor in X.
CheckResult check_star(const Machinery& m, int u);

/// |E2(X_p)| = |X_p| - 2 for every component with at least two vertices, and
/// each such edge's witness lies inside X_p. Inapplicable when truncated.
CheckResult check_component_identity(const Machinery& m);

/// Rewrites a cycle of H3 = (X, E1 ∪ E2'') into a cycle of G by detouring
/// through witnesses: a lone E2 edge becomes the two witness edges, two
/// adjacent E2 edges sharing a witness collapse onto it. The result has
/// length at most λ + s (s = E2'' edges used) and is validated as a simple
/// cycle of G. `cycle` lists graph vertices in cyclic order.
std::vector<int> lift_cycle(const Machinery& m, const std::vector<int>& cycle);

/// Some cycle of H3, as graph vertices, or nullopt when H3 is a forest.
std::optional<std::vector<int>> find_h3_cycle(const Machinery& m);

/// Fills the hypothesis/size quantities and the one asserted fact: the size
/// hypothesis |S| <= (δ-2)(g-3)+δ-1 must be false for any zero forcing set.
LemmaReport hypothesis_report(const Graph& g, const Machinery& m);

/// Drives the whole suite: derived_set, build_machinery, every structural
/// invariant, the per-index and per-vertex lemma checks, a cycle lift when
/// H3 has a cycle, and the hypothesis report.
LemmaReport run_all_checks(const Graph& g, const Bitset& s);

}  // namespace zf
