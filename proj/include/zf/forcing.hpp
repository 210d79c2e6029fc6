#pragma once

#include <utility>
#include <vector>

#include "zf/graph.hpp"

namespace zf {

/// A two-coloring of a graph's vertex set: black vertices in the set,
/// everything else white.
struct ColorState {
  Bitset black;
};

/// One application of the color-change rule: at step `step` (1-based),
/// `forcer` had `forced` as its unique white neighbor and turned it black.
struct ForceEvent {
  int forcer = -1;
  int forced = -1;
  int step = 0;
};

/// A replayable record of a closure run: the initial black set plus the
/// ordered force events. Forced vertices are pairwise distinct and disjoint
/// from the initial set.
struct Chronology {
  Bitset initial;
  std::vector<ForceEvent> events;

  int step_count() const { return static_cast<int>(events.size()); }

  /// initial plus every forced vertex.
  Bitset final_black() const {
    Bitset b = initial;
    for (const auto& e : events) b.set(e.forced);
    return b;
  }
};

struct DerivedSet {
  Bitset closure;
  Chronology chronology;
};

/// All applicable forces (forcer, forced) for the current coloring, sorted
/// by forcer index (each eligible forcer has exactly one forced vertex).
std::vector<std::pair<int, int>> eligible_forces(const Graph& g,
                                                 const ColorState& state);

/// Runs the color-change rule to its fixed point. The chronology applies one
/// force per step, always the eligible pair with the smallest forcer index
/// (ties broken by forced index). The closure itself is order-independent;
/// only the chronology depends on this canonical order.
DerivedSet derived_set(const Graph& g, const Bitset& s);

/// Fixed point only, no chronology; the solver's hot path.
Bitset closure_of(const Graph& g, const Bitset& s);

bool is_zero_forcing_set(const Graph& g, const Bitset& s);

/// Replays the chronology from its initial set and checks that every event
/// is a valid force at its step (forcer black, forced the unique white
/// neighbor, steps numbered 1..t).
bool validate_chronology(const Graph& g, const Chronology& chron);

}  // namespace zf
