// SPDX-License-Identifier: MIT
#pragma once

#include <utility>
#include <vector>

#include "cardsig/rational.hpp"

namespace cardsig {

// A vertex: exact coordinates plus a stable integer id that decouples the
// combinatorics (edges, signatures) from the embedding.
struct Point {
  int id = 0;
  Rat x;
  Rat y;
};

// Unordered vertex pair, normalized to first < second everywhere.
using Edge = std::pair<int, int>;

inline Edge make_edge(int a, int b) { return a < b ? Edge{a, b} : Edge{b, a}; }

// Sign of the signed area of triangle (p, q, r): +1 counterclockwise,
// -1 clockwise, 0 collinear.  Exact.
int orientation(const Point& p, const Point& q, const Point& r);

// True iff the open interiors of segments ab and cd intersect.  Segments
// that merely share an endpoint do not properly cross.  Assumes general
// position (no three collinear among distinct endpoints).
bool proper_cross(const Point& a, const Point& b, const Point& c, const Point& d);

// True iff point p lies strictly inside the open segment ab.
bool strictly_between(const Point& a, const Point& b, const Point& p);

// Ids of the convex hull in counterclockwise order, starting at the
// westmost point so the cycle is canonical.  Throws
// Error{FewerThanThreePoints} if fewer than three points are given.
std::vector<int> convex_hull(const std::vector<Point>& pts);

// Checks strict general position: pairwise-distinct x, pairwise-distinct y,
// no three points collinear (exhaustive O(n^3) triple scan when
// check_collinear is set).  Duplicate ids are rejected as well.  Throws
// Error{DuplicateX | DuplicateY | CollinearTriple | ValidationFailure}.
void validate_general_position(const std::vector<Point>& pts, bool check_collinear = true);

// The shear (x, y) -> (x + lambda * y, y).  Preserves y-order always and
// x-order for small enough lambda; used by invariance tests.
Point shear(const Point& p, const Rat& lambda);
std::vector<Point> shear(const std::vector<Point>& pts, const Rat& lambda);

// Largest bound b such that every lambda with |lambda| < b keeps the
// x-order of pts intact under shear (returns 0 denominator-free positive
// value; pts must have distinct x and y).
Rat order_preserving_shear_bound(const std::vector<Point>& pts);

}  // namespace cardsig
