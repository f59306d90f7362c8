// SPDX-License-Identifier: MIT
#pragma once

#include <array>
#include <map>
#include <set>
#include <vector>

#include "cardsig/geometry.hpp"

namespace cardsig {

// Plane straight-line graph: a vertex set in general position plus
// interior-disjoint straight edges given as id pairs.
struct PslGraph {
  std::vector<Point> points;
  std::vector<Edge> edges;  // normalized (first < second), no duplicates
};

enum Dir : int { DIR_N = 0, DIR_S = 1, DIR_E = 2, DIR_W = 3 };

// Per-vertex counts of incident edges whose other endpoint lies strictly
// north / south / east / west.
struct DegreeQuad {
  int n = 0, s = 0, e = 0, w = 0;
  int& operator[](int d);
  int operator[](int d) const;
  bool operator==(const DegreeQuad& o) const = default;
};

// A cardinal signature: the embedded vertex set together with all four
// cardinal degree maps.  Realizations are PSL graphs on the same points
// reproducing every count.
struct CardinalSignature {
  std::vector<Point> points;
  std::map<int, DegreeQuad> degrees;  // keyed by vertex id, total over points
};

// Axis-aligned closed halfspace through a vertex coordinate.
struct Halfspace {
  bool vertical_boundary = false;  // true: boundary line x = threshold
  bool lower = true;               // true: {coord <= threshold}, else >=
  Rat threshold;
};

// Full structural validation: general position, endpoints resolve
// (DanglingEndpoint), no loops or duplicate edges (ValidationFailure), and
// no two edges properly cross (CrossingEdges).
void validate_psl_graph(const PslGraph& g);

// Property: a noncrossing graph is maximal iff |E| = 3|V| - c - 3 with c
// the hull size.
bool is_maximal(const PslGraph& g);

// The signature of a valid graph.
CardinalSignature cardinal_signature(const PslGraph& g);

// Internal consistency: all four directional sums equal (their common value
// is the implied edge count m), per-vertex n+s == e+w, and every count is
// bounded by the number of points strictly in that direction.  Throws
// Error{InconsistentSignature} naming the first violation.
void validate_signature(const CardinalSignature& sig);

// Implied edge count m of a consistent signature (any directional sum).
long long signature_edge_count(const CardinalSignature& sig);

// True iff m = 3|V| - c - 3.
bool is_saturated(const CardinalSignature& sig);

// True iff the vertices inside h carry enough implied internal edges to
// meet the Euler maximum there: m_h = 3|V_h| - c_h - 3.  Halfspaces with
// fewer than three vertices are never saturated.
bool saturates_halfspace(const CardinalSignature& sig, const Halfspace& h);

// Union of the hull-cycle edges of V_h over all vertex-aligned halfspaces h
// that the signature saturates.  Every returned edge must appear in every
// realization of sig.
std::set<Edge> forced_hull_edges(const CardinalSignature& sig);

// Structural equality by vertex id (coordinates must match exactly too).
bool signatures_equal(const CardinalSignature& a, const CardinalSignature& b);

}  // namespace cardsig
