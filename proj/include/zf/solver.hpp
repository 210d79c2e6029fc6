#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "zf/graph.hpp"

namespace zf {

enum class SolveStatus {
  exact,   // z and witness are the exact answer
  budget,  // node budget ran out; only the bounds are proven
};

struct SolveResult {
  SolveStatus status = SolveStatus::exact;
  int z = -1;                 // valid when exact
  std::vector<int> witness;   // sorted; the lexicographically least witness
  int lower_bound = 0;        // proven lower bound (== z when exact)
  int upper_bound = 0;        // proven upper bound (== z when exact)
  std::uint64_t nodes_explored = 0;
  int lower_bound_used = 0;   // k the search started from

  bool exact() const { return status == SolveStatus::exact; }
};

struct SolverConfig {
  /// Trusted hint: the caller asserts Z(G) >= start_lower_bound. A hint
  /// above the true value is detected and rejected with an exception rather
  /// than silently returning a wrong number. Applied to connected input
  /// only; disconnected graphs are solved per component.
  std::optional<int> start_lower_bound;

  /// Search nodes (candidate-set closures) to spend before giving up with a
  /// SolveStatus::budget interval. Must be positive when present.
  std::optional<std::uint64_t> node_budget;

  /// Degree of parallelism; 0 means hardware concurrency.
  int worker_count = 1;
};

/// Exact zero forcing number by iterative deepening on the set size k,
/// starting from the girth/degree lower bound when it applies. Candidate
/// k-sets are enumerated lexicographically with closure memoization along
/// the prefix and frontier pruning, so the witness returned is the
/// lexicographically least minimum zero forcing set regardless of
/// worker_count. Disconnected graphs are solved per component (Z is
/// additive over components). Requires n >= 1.
SolveResult zero_forcing_number(const Graph& g, const SolverConfig& cfg = {});

/// Plain enumeration of all vertex subsets in size order with no pruning
/// beyond early exit; the cross-validation oracle. Refuses n > 12.
SolveResult brute_force_oracle(const Graph& g);

/// True iff the result is exact, |witness| == z, and the witness forces V.
bool verify_witness(const Graph& g, const SolveResult& result);

}  // namespace zf
