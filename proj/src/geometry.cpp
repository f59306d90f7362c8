// SPDX-License-Identifier: MIT
#include "cardsig/geometry.hpp"

#include <algorithm>
#include <map>

#include "cardsig/error.hpp"

namespace cardsig {

int orientation(const Point& p, const Point& q, const Point& r) {
  Rat cross = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
  return sgn(cross);
}

bool proper_cross(const Point& a, const Point& b, const Point& c, const Point& d) {
  int o1 = orientation(a, b, c);
  int o2 = orientation(a, b, d);
  int o3 = orientation(c, d, a);
  int o4 = orientation(c, d, b);
  return o1 * o2 < 0 && o3 * o4 < 0;
}

bool strictly_between(const Point& a, const Point& b, const Point& p) {
  if (orientation(a, b, p) != 0) return false;
  // Collinear: p is interior iff it lies strictly inside the bounding span.
  if (a.x != b.x) return (a.x < p.x && p.x < b.x) || (b.x < p.x && p.x < a.x);
  return (a.y < p.y && p.y < b.y) || (b.y < p.y && p.y < a.y);
}

std::vector<int> convex_hull(const std::vector<Point>& pts) {
  if (pts.size() < 3) {
    throw Error(Err::FewerThanThreePoints,
                "convex hull needs at least 3 points, got " + std::to_string(pts.size()));
  }
  std::vector<const Point*> sorted;
  sorted.reserve(pts.size());
  for (const auto& p : pts) sorted.push_back(&p);
  std::sort(sorted.begin(), sorted.end(), [](const Point* a, const Point* b) {
    if (a->x != b->x) return a->x < b->x;
    return a->y < b->y;
  });
  auto turn = [](const Point* o, const Point* a, const Point* b) {
    return orientation(*o, *a, *b);
  };
  // Andrew monotone chain; strict turns only, so collinear boundary points
  // would be dropped (they cannot occur under general position).
  std::vector<const Point*> lower, upper;
  for (const Point* p : sorted) {
    while (lower.size() >= 2 && turn(lower[lower.size() - 2], lower.back(), p) <= 0)
      lower.pop_back();
    lower.push_back(p);
  }
  for (auto it = sorted.rbegin(); it != sorted.rend(); ++it) {
    while (upper.size() >= 2 && turn(upper[upper.size() - 2], upper.back(), *it) <= 0)
      upper.pop_back();
    upper.push_back(*it);
  }
  std::vector<int> hull;
  for (size_t i = 0; i + 1 < lower.size(); ++i) hull.push_back(lower[i]->id);
  for (size_t i = 0; i + 1 < upper.size(); ++i) hull.push_back(upper[i]->id);
  return hull;  // starts at the westmost point, counterclockwise
}

void validate_general_position(const std::vector<Point>& pts, bool check_collinear) {
  std::map<int, const Point*> by_id;
  for (const auto& p : pts) {
    if (!by_id.emplace(p.id, &p).second) {
      throw Error(Err::ValidationFailure, "duplicate vertex id " + std::to_string(p.id));
    }
  }
  std::vector<const Point*> order;
  order.reserve(pts.size());
  for (const auto& p : pts) order.push_back(&p);

  std::sort(order.begin(), order.end(),
            [](const Point* a, const Point* b) { return a->x < b->x; });
  for (size_t i = 0; i + 1 < order.size(); ++i) {
    if (order[i]->x == order[i + 1]->x) {
      throw Error(Err::DuplicateX, "vertices " + std::to_string(order[i]->id) + " and " +
                                       std::to_string(order[i + 1]->id) +
                                       " share an x-coordinate");
    }
  }
  std::sort(order.begin(), order.end(),
            [](const Point* a, const Point* b) { return a->y < b->y; });
  for (size_t i = 0; i + 1 < order.size(); ++i) {
    if (order[i]->y == order[i + 1]->y) {
      throw Error(Err::DuplicateY, "vertices " + std::to_string(order[i]->id) + " and " +
                                       std::to_string(order[i + 1]->id) +
                                       " share a y-coordinate");
    }
  }
  if (check_collinear) {
    for (size_t i = 0; i < pts.size(); ++i)
      for (size_t j = i + 1; j < pts.size(); ++j)
        for (size_t k = j + 1; k < pts.size(); ++k)
          if (orientation(pts[i], pts[j], pts[k]) == 0) {
            throw Error(Err::CollinearTriple,
                        "vertices " + std::to_string(pts[i].id) + ", " +
                            std::to_string(pts[j].id) + ", " + std::to_string(pts[k].id) +
                            " are collinear");
          }
  }
}

Point shear(const Point& p, const Rat& lambda) {
  return Point{p.id, p.x + lambda * p.y, p.y};
}

std::vector<Point> shear(const std::vector<Point>& pts, const Rat& lambda) {
  std::vector<Point> out;
  out.reserve(pts.size());
  for (const auto& p : pts) out.push_back(shear(p, lambda));
  return out;
}

Rat order_preserving_shear_bound(const std::vector<Point>& pts) {
  // x-order flips first for the pair minimizing |dx/dy|; any |lambda| below
  // that ratio is safe for all pairs.
  Rat best = 0;
  bool have = false;
  for (size_t i = 0; i < pts.size(); ++i)
    for (size_t j = i + 1; j < pts.size(); ++j) {
      Rat dx = abs(pts[i].x - pts[j].x);
      Rat dy = abs(pts[i].y - pts[j].y);
      if (dy == 0) continue;
      Rat ratio = dx / dy;
      if (!have || ratio < best) {
        best = ratio;
        have = true;
      }
    }
  return have ? best : Rat(1);
}

}  // namespace cardsig
