// SPDX-License-Identifier: MIT
#include "cardsig/psl.hpp"

#include <algorithm>

#include "cardsig/error.hpp"

namespace cardsig {

int& DegreeQuad::operator[](int d) {
  switch (d) {
    case DIR_N: return n;
    case DIR_S: return s;
    case DIR_E: return e;
    default: return w;
  }
}

int DegreeQuad::operator[](int d) const {
  switch (d) {
    case DIR_N: return n;
    case DIR_S: return s;
    case DIR_E: return e;
    default: return w;
  }
}

namespace {

std::map<int, const Point*> index_points(const std::vector<Point>& pts) {
  std::map<int, const Point*> by_id;
  for (const auto& p : pts) by_id.emplace(p.id, &p);
  return by_id;
}

std::string edge_str(const Edge& e) {
  return "(" + std::to_string(e.first) + "," + std::to_string(e.second) + ")";
}

}  // namespace

void validate_psl_graph(const PslGraph& g) {
  validate_general_position(g.points);
  auto by_id = index_points(g.points);
  std::set<Edge> seen;
  for (const Edge& e : g.edges) {
    if (e.first == e.second) {
      throw Error(Err::ValidationFailure, "loop edge at vertex " + std::to_string(e.first));
    }
    if (e != make_edge(e.first, e.second)) {
      throw Error(Err::ValidationFailure, "edge " + edge_str(e) + " is not normalized");
    }
    if (!by_id.count(e.first) || !by_id.count(e.second)) {
      throw Error(Err::DanglingEndpoint, "edge " + edge_str(e) + " references a missing vertex");
    }
    if (!seen.insert(e).second) {
      throw Error(Err::ValidationFailure, "duplicate edge " + edge_str(e));
    }
  }
  for (size_t i = 0; i < g.edges.size(); ++i) {
    const Point& a = *by_id.at(g.edges[i].first);
    const Point& b = *by_id.at(g.edges[i].second);
    for (size_t j = i + 1; j < g.edges.size(); ++j) {
      const Point& c = *by_id.at(g.edges[j].first);
      const Point& d = *by_id.at(g.edges[j].second);
      if (proper_cross(a, b, c, d)) {
        throw Error(Err::CrossingEdges,
                    "edges " + edge_str(g.edges[i]) + " and " + edge_str(g.edges[j]) + " cross");
      }
    }
  }
}

bool is_maximal(const PslGraph& g) {
  long long n = static_cast<long long>(g.points.size());
  if (n < 3) return false;
  long long c = static_cast<long long>(convex_hull(g.points).size());
  return static_cast<long long>(g.edges.size()) == 3 * n - c - 3;
}

CardinalSignature cardinal_signature(const PslGraph& g) {
  validate_psl_graph(g);
  auto by_id = index_points(g.points);
  CardinalSignature sig;
  sig.points = g.points;
  for (const auto& p : g.points) sig.degrees[p.id];  // zero quad for isolated vertices
  for (const Edge& e : g.edges) {
    const Point& a = *by_id.at(e.first);
    const Point& b = *by_id.at(e.second);
    // General position: distinct y and distinct x, so each comparison is strict.
    sig.degrees[a.id][b.y > a.y ? DIR_N : DIR_S]++;
    sig.degrees[b.id][a.y > b.y ? DIR_N : DIR_S]++;
    sig.degrees[a.id][b.x > a.x ? DIR_E : DIR_W]++;
    sig.degrees[b.id][a.x > b.x ? DIR_E : DIR_W]++;
  }
  return sig;
}

void validate_signature(const CardinalSignature& sig) {
  validate_general_position(sig.points);
  for (const auto& p : sig.points) {
    if (!sig.degrees.count(p.id)) {
      throw Error(Err::InconsistentSignature,
                  "no degree entry for vertex " + std::to_string(p.id));
    }
  }
  if (sig.degrees.size() != sig.points.size()) {
    throw Error(Err::InconsistentSignature, "degree entries for unknown vertices");
  }
  long long sums[4] = {0, 0, 0, 0};
  for (const auto& [id, q] : sig.degrees) {
    for (int d = 0; d < 4; ++d) {
      if (q[d] < 0) {
        throw Error(Err::InconsistentSignature,
                    "negative count at vertex " + std::to_string(id));
      }
      sums[d] += q[d];
    }
    if (q.n + q.s != q.e + q.w) {
      throw Error(Err::InconsistentSignature,
                  "vertex " + std::to_string(id) + " has n+s != e+w");
    }
  }
  if (sums[DIR_N] != sums[DIR_S] || sums[DIR_E] != sums[DIR_W] ||
      sums[DIR_N] != sums[DIR_E]) {
    throw Error(Err::InconsistentSignature,
                "directional sums differ (N " + std::to_string(sums[DIR_N]) + ", S " +
                    std::to_string(sums[DIR_S]) + ", E " + std::to_string(sums[DIR_E]) +
                    ", W " + std::to_string(sums[DIR_W]) + ")");
  }
  // Supply bound: a vertex cannot have more neighbors in a direction than
  // there are points strictly in that direction.
  for (const auto& p : sig.points) {
    int supply[4] = {0, 0, 0, 0};
    for (const auto& o : sig.points) {
      if (o.id == p.id) continue;
      supply[o.y > p.y ? DIR_N : DIR_S]++;
      supply[o.x > p.x ? DIR_E : DIR_W]++;
    }
    const DegreeQuad& q = sig.degrees.at(p.id);
    for (int d = 0; d < 4; ++d) {
      if (q[d] > supply[d]) {
        static const char* names[4] = {"north", "south", "east", "west"};
        throw Error(Err::InconsistentSignature,
                    "vertex " + std::to_string(p.id) + " wants " + std::to_string(q[d]) +
                        " neighbors " + names[d] + " but only " +
                        std::to_string(supply[d]) + " points lie there");
      }
    }
  }
}

long long signature_edge_count(const CardinalSignature& sig) {
  long long m = 0;
  for (const auto& [id, q] : sig.degrees) m += q.n;
  return m;
}

bool is_saturated(const CardinalSignature& sig) {
  long long n = static_cast<long long>(sig.points.size());
  if (n < 3) return false;
  long long c = static_cast<long long>(convex_hull(sig.points).size());
  return signature_edge_count(sig) == 3 * n - c - 3;
}

bool saturates_halfspace(const CardinalSignature& sig, const Halfspace& h) {
  std::vector<Point> inside;
  for (const auto& p : sig.points) {
    const Rat& coord = h.vertical_boundary ? p.x : p.y;
    if (h.lower ? coord <= h.threshold : coord >= h.threshold) inside.push_back(p);
  }
  long long k = static_cast<long long>(inside.size());
  if (k < 3) return false;
  // Each edge internal to the halfspace is counted exactly once: at its
  // endpoint nearest the boundary line, looking back inward.  Neighbors in
  // the inward direction are always inside, so the sum never overcounts.
  int dir;
  if (h.vertical_boundary) {
    dir = h.lower ? DIR_W : DIR_E;  // boundary east of the set, or west
  } else {
    dir = h.lower ? DIR_S : DIR_N;  // boundary north of the set, or south
  }
  long long m_h = 0;
  for (const auto& p : inside) m_h += sig.degrees.at(p.id)[dir];
  long long c_h = static_cast<long long>(convex_hull(inside).size());
  return m_h == 3 * k - c_h - 3;
}

std::set<Edge> forced_hull_edges(const CardinalSignature& sig) {
  std::set<Edge> forced;
  for (const auto& anchor : sig.points) {
    for (int variant = 0; variant < 4; ++variant) {
      Halfspace h;
      h.vertical_boundary = variant < 2;
      h.lower = (variant % 2) == 0;
      h.threshold = h.vertical_boundary ? anchor.x : anchor.y;
      if (!saturates_halfspace(sig, h)) continue;
      std::vector<Point> inside;
      for (const auto& p : sig.points) {
        const Rat& coord = h.vertical_boundary ? p.x : p.y;
        if (h.lower ? coord <= h.threshold : coord >= h.threshold) inside.push_back(p);
      }
      std::vector<int> hull = convex_hull(inside);
      for (size_t i = 0; i < hull.size(); ++i) {
        forced.insert(make_edge(hull[i], hull[(i + 1) % hull.size()]));
      }
    }
  }
  return forced;
}

bool signatures_equal(const CardinalSignature& a, const CardinalSignature& b) {
  if (a.degrees != b.degrees) return false;
  if (a.points.size() != b.points.size()) return false;
  auto sorted = [](const std::vector<Point>& pts) {
    std::vector<Point> s = pts;
    std::sort(s.begin(), s.end(), [](const Point& x, const Point& y) { return x.id < y.id; });
    return s;
  };
  std::vector<Point> pa = sorted(a.points), pb = sorted(b.points);
  for (size_t i = 0; i < pa.size(); ++i) {
    if (pa[i].id != pb[i].id || pa[i].x != pb[i].x || pa[i].y != pb[i].y) return false;
  }
  return true;
}

}  // namespace cardsig
