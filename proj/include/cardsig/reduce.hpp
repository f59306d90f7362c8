// SPDX-License-Identifier: MIT
#pragma once

#include <map>
#include <set>
#include <vector>

#include "cardsig/tiling.hpp"

namespace cardsig {

// A graph with an explicit rotation system: for every vertex, its neighbors
// in counterclockwise cyclic order.  The edge set is implied.
struct EmbeddedGraph {
  std::vector<int> vertices;
  std::map<int, std::vector<int>> rotation;

  std::set<Edge> edge_set() const;
};

EmbeddedGraph embedded_graph_from_json(const Json& j);
Json embedded_graph_to_json(const EmbeddedGraph& g);

// Validation: degree exactly 3 everywhere (NotCubic), simple (LoopOrMulti),
// and the rotation system is planar — faces traced from rotations satisfy
// V - E + F = 2 on every connected component (NotPlanarEmbedding).
void validate_embedded_graph(const EmbeddedGraph& g);

struct Bipartition {
  std::set<int> red;   // contains the lowest id of each component
  std::set<int> blue;
};

// Two-coloring by breadth-first layering, deterministic.  Throws
// Error{OddCycle} with a closed odd walk in the message when impossible.
Bipartition bipartition(const EmbeddedGraph& g);

// A drawn reduction: the tiling plus provenance mapping each cycle (by its
// index in extract_cycles order) to the input vertex it represents.
struct DrawnReduction {
  Tiling tiling;
  std::map<int, int> provenance;  // cycle index -> input vertex id
};

// Lays the input out as one axis-aligned ring of wire tiles per vertex,
// ordered along a Hamiltonian spine, with each input edge realized by
// exactly one crossing block between the two rings.  Deterministic.  Throws
// Error{LayoutFailure} when no admissible layout fits the grid budget.
DrawnReduction draw_cycles(const EmbeddedGraph& g, const Bipartition& bip);

// Arbiter: the labeled intersection graph must equal g edge-for-edge
// (MissingEdge / ExtraEdge) with cycle colors matching the bipartition
// (ColorMismatch).
void verify_reduction(const EmbeddedGraph& g, const DrawnReduction& drawn);

Json provenance_to_json(const DrawnReduction& drawn);

}  // namespace cardsig
