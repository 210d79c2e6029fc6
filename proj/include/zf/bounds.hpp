#pragma once

#include <optional>

#include "zf/graph.hpp"

namespace zf {

/// delta + (delta-2)(girth-3). Requires finite girth >= 3 and delta >= 2;
/// throws std::domain_error otherwise (the hypothesis is part of the bound).
int davila_kenter_bound(int girth, int delta);
int davila_kenter_bound(const GirthValue& girth, int delta);

/// girth * (delta-1), the minimum order of a graph with girth >= 5 and
/// minimum degree delta >= 2. Throws std::domain_error for girth < 5 or
/// delta < 2 (the disjoint-neighborhood argument needs both).
long long min_order_bound(int girth, int delta);

/// floor(n^2/4): the maximum edge count of a triangle-free graph on n
/// vertices. n >= 1.
long long mantel_ex(long long n);

/// Maximum edge count of an n-vertex graph with girth >= ell+1, valid only
/// for ell >= 4 and ell+1 <= n <= 2*ell. Outside that window the formula is
/// not defined here and a std::domain_error is thrown; no extrapolation.
long long abajo_dianez_ex(long long n, long long ell);

struct ExtremalResult {
  int max_edges = 0;
  Graph witness;
};

/// Exhaustive maximum over all graphs on n labeled vertices with no cycle of
/// length <= ell (acyclic counts), by edge-subset DFS with incremental short-
/// cycle rejection. Guarded to n <= 8.
ExtremalResult extremal_bruteforce(int n, int ell);

/// Bound summary for one graph. Only built for graphs where the bound
/// applies (finite girth >= 3, min degree >= 2); min_order is present when
/// girth >= 5.
struct BoundReport {
  GirthValue girth = GirthValue::acyclic();
  int min_degree = 0;
  int bound = 0;
  std::optional<int> z;
  std::optional<int> slack;  // z - bound
  std::optional<long long> min_order;
};

BoundReport make_bound_report(const Graph& g, std::optional<int> z);

}  // namespace zf
