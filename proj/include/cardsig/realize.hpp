// SPDX-License-Identifier: MIT
#pragma once

#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "cardsig/psl.hpp"

namespace cardsig {

// Which search-space reductions the counting engine applies.  Every one of
// them is sound (they never drop a valid realization); the test suite
// re-counts with each disabled to prove it.
struct PruneOptions {
  bool residual_feasibility = true;  // direction budgets vs. remaining supply
  bool crossing_conflicts = true;    // drop candidates crossing a chosen edge
  bool forced_edges = true;          // preseed hull edges of saturated halfspaces
  bool connectivity = true;          // saturated signatures must stay connectable
  std::vector<std::string> active_names() const;
};

struct CountOptions {
  PruneOptions prune;
  // Stop once this many realizations have been found (0 = unlimited).
  std::uint64_t limit = 0;
  // Worker threads exploring disjoint subtrees (1 = fully sequential).
  int threads = 1;
};

struct CountResult {
  std::uint64_t count = 0;
  bool hit_limit = false;
  std::vector<std::string> pruning;  // names of the reductions that were on
  double elapsed_ms = 0.0;
};

// Counts the PSL graphs on sig.points matching every cardinal degree.
// Validates the signature first.
CountResult count_realizations(const CardinalSignature& sig,
                               const CountOptions& opts = {});

// Enumerates them, invoking sink with each edge set (normalized, sorted).
// Deterministic order; emission is sequential even with threads.  Returns
// the number emitted (capped by opts.limit when nonzero).
std::uint64_t enumerate_realizations(
    const CardinalSignature& sig,
    const std::function<void(const std::vector<Edge>&)>& sink,
    const CountOptions& opts = {});

// All maximal noncrossing graphs on pts (every face but the outer one a
// triangle): candidates are all pairs, hull edges are forced, and the edge
// target 3n - c - 3 enforces maximality.  Returns how many were emitted.
std::uint64_t enumerate_triangulations(
    const std::vector<Point>& pts,
    const std::function<void(const std::vector<Edge>&)>& sink);

std::uint64_t count_triangulations(const std::vector<Point>& pts);

// Shared core: noncrossing supersets of `forced` drawn from `candidates`
// with exactly `target` edges.  Candidates must be normalized and unique;
// forced must be a subset of candidates.  Used both for full triangulations
// and for polygon-constrained enumeration (gadget cells), where `candidates`
// carries only the permitted diagonals.
std::uint64_t enumerate_max_noncrossing(
    const std::vector<Point>& pts,
    const std::vector<Edge>& candidates,
    const std::set<Edge>& forced,
    long long target,
    const std::function<void(const std::vector<Edge>&)>& sink);

}  // namespace cardsig
