// SPDX-License-Identifier: MIT
#include "cardsig/frame.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "cardsig/error.hpp"
#include "cardsig/geometry.hpp"

namespace cardsig {

namespace {

constexpr const char* kRoleNames[kRoleCount] = {
    "v0", "v1", "v2", "v3", "v4", "v5", "v6", "v7", "v8",
    "vb1", "vb2", "vb3", "vb4", "vb5", "vb6", "vb7",
    "p", "q",
};

// Canonical template coordinates.  The four corners form a parallelogram so
// every synthesized cell can carry an affine frame; the three subdivision
// vertices of each side cluster near the side's far end (as the coordinate
// orders require) and bulge east (vertical sides) or north (horizontal
// sides), which keeps the long multi-cell paths of a frame graph strictly
// convex across cell junctions.  East chain = west chain + v4; north chain
// = south chain + vb4, so neighbouring cells agree on shared sides.
constexpr long kCanon[kRoleCount][2] = {
    {95000, 95000},   // v0
    {95075, 93900},   // v1
    {95145, 92800},   // v2
    {95220, 91500},   // v3
    {100000, -5000},  // v4
    {98900, -4925},   // v5
    {97800, -4855},   // v6
    {96500, -4780},   // v7
    {0, 0},           // v8
    {93900, 95075},   // vb1
    {92800, 95145},   // vb2
    {91500, 95220},   // vb3
    {-5000, 100000},  // vb4
    {-4925, 98900},   // vb5
    {-4855, 97800},   // vb6
    {-4780, 96500},   // vb7
    {45000, 95500},   // p
    {95500, 45000},   // q
};

// Roles in strictly increasing x, and strictly increasing y.
constexpr int kXOrder[kRoleCount] = {
    R_VB4, R_VB5, R_VB6, R_VB7, R_V8, R_P, R_VB3, R_VB2, R_VB1,
    R_V0, R_V1, R_V2, R_V3, R_Q, R_V7, R_V6, R_V5, R_V4,
};
constexpr int kYOrder[kRoleCount] = {
    R_V4, R_V5, R_V6, R_V7, R_V8, R_Q, R_V3, R_V2, R_V1,
    R_V0, R_VB1, R_VB2, R_VB3, R_P, R_VB7, R_VB6, R_VB5, R_VB4,
};

const std::array<int, 16> kCcwBoundary = {
    R_V8, R_V7, R_V6, R_V5, R_V4, R_V3, R_V2, R_V1,
    R_V0, R_VB1, R_VB2, R_VB3, R_VB4, R_VB5, R_VB6, R_VB7,
};

Rat signed_area2(const std::vector<Point>& poly) {
  Rat s = 0;
  for (std::size_t k = 0; k < poly.size(); ++k) {
    const Point& a = poly[k];
    const Point& b = poly[(k + 1) % poly.size()];
    s += a.x * b.y - b.x * a.y;
  }
  return s;
}

// Strict interior test for a simple polygon (even-odd rule, exact).
bool strictly_inside(const std::vector<Point>& poly, const Point& pt) {
  bool inside = false;
  for (std::size_t k = 0; k < poly.size(); ++k) {
    const Point& a = poly[k];
    const Point& b = poly[(k + 1) % poly.size()];
    if (orientation(a, b, pt) == 0 &&
        std::min(a.x, b.x) <= pt.x && pt.x <= std::max(a.x, b.x) &&
        std::min(a.y, b.y) <= pt.y && pt.y <= std::max(a.y, b.y))
      return false;  // on the boundary
    if ((a.y > pt.y) != (b.y > pt.y)) {
      Rat t = (pt.y - a.y) / (b.y - a.y);
      Rat xi = a.x + t * (b.x - a.x);
      if (xi > pt.x) inside = !inside;
    }
  }
  return inside;
}

// Checks that a polyline turns strictly with the given sign at every
// interior vertex.
void check_chain(const std::vector<Point>& chain, int want_sign, const std::string& what,
                 std::vector<std::string>& out) {
  for (std::size_t k = 0; k + 2 < chain.size(); ++k) {
    int s = orientation(chain[k], chain[k + 1], chain[k + 2]);
    if (s != want_sign)
      out.push_back(what + ": chain is not strictly convex at point id " +
                    std::to_string(chain[k + 1].id));
  }
}

// ----- exact synthesis ---------------------------------------------------

// Lattice corner (i, j).  The linear terms lean every column slightly west
// and every row slightly south; the quadratic terms strengthen that lean as
// the index grows, which is what curves the long subdivided paths and puts
// each one on the hull of the region behind it.  The two axes use slightly
// different coefficients so that no three lattice points line up on the
// main diagonal.
Rat corner_x(int i, int j) { return Rat(100000) * i - Rat(5000) * j - Rat(1200) * j * j; }
Rat corner_y(int i, int j) { return Rat(100000) * j - Rat(5100) * i - Rat(1250) * i * i; }

// Coordinates of each canonical role in the basis (v4 - v8, vb4 - v8).
struct Basis {
  Rat a, b;
};

const Basis& role_basis(int role) {
  static const std::array<Basis, kRoleCount> table = [] {
    std::array<Basis, kRoleCount> t;
    const Rat det = Rat(100000) * Rat(100000) - Rat(5000) * Rat(5000);
    for (int r = 0; r < kRoleCount; ++r) {
      Rat x(kCanon[r][0]), y(kCanon[r][1]);
      t[r].a = (Rat(100000) * x + Rat(5000) * y) / det;
      t[r].b = (Rat(5000) * x + Rat(100000) * y) / det;
    }
    return t;
  }();
  return table[role];
}

// Image of a canonical role under cell (i, j)'s affine frame.
std::pair<Rat, Rat> cell_point(int role, int i, int j) {
  const Basis& c = role_basis(role);
  Rat uy = corner_y(i + 1, j) - corner_y(i, j);
  Rat vx = corner_x(i, j + 1) - corner_x(i, j);
  return {corner_x(i, j) + c.a * Rat(100000) + c.b * vx,
          corner_y(i, j) + c.a * uy + c.b * Rat(100000)};
}

// The vertices of the i-th nearly vertical path, south to north (ids).
std::vector<int> alpha_path(const FrameGraph& f, int i) {
  std::vector<int> out;
  bool east = i == f.w;  // the last path is the east side of the last column
  int col = east ? f.w - 1 : i;
  for (int j = 0; j < f.h; ++j) {
    const auto& roles = f.cells.at({col, j});
    out.push_back(roles[east ? R_V4 : R_V8]);
    out.push_back(roles[east ? R_V3 : R_VB7]);
    out.push_back(roles[east ? R_V2 : R_VB6]);
    out.push_back(roles[east ? R_V1 : R_VB5]);
  }
  out.push_back(f.cells.at({col, f.h - 1})[east ? R_V0 : R_VB4]);
  return out;
}

// The vertices of the j-th nearly horizontal path, west to east (ids).
std::vector<int> beta_path(const FrameGraph& f, int j) {
  std::vector<int> out;
  bool north = j == f.h;
  int row = north ? f.h - 1 : j;
  for (int i = 0; i < f.w; ++i) {
    const auto& roles = f.cells.at({i, row});
    out.push_back(roles[north ? R_VB4 : R_V8]);
    out.push_back(roles[north ? R_VB3 : R_V7]);
    out.push_back(roles[north ? R_VB2 : R_V6]);
    out.push_back(roles[north ? R_VB1 : R_V5]);
  }
  out.push_back(f.cells.at({f.w - 1, row})[north ? R_V0 : R_V4]);
  return out;
}

}  // namespace

const char* role_name(int role) {
  if (role < 0 || role >= kRoleCount)
    throw Error(Err::ValidationFailure, "role index out of range");
  return kRoleNames[role];
}

int role_from_name(const std::string& name) {
  for (int r = 0; r < kRoleCount; ++r)
    if (name == kRoleNames[r]) return r;
  throw Error(Err::ValidationFailure, "unknown frame-cell role \"" + name + "\"");
}

const std::array<int, 16>& ccw_boundary_roles() { return kCcwBoundary; }

bool is_corner_role(int role) {
  return role == R_V0 || role == R_V4 || role == R_V8 || role == R_VB4;
}

std::vector<Point> FrameCell::present_points() const {
  std::vector<Point> out;
  for (int r = 0; r < kRoleCount; ++r)
    if (has_role(r)) out.push_back(pts[r]);
  return out;
}

FrameCell canonical_cell(bool with_p, bool with_q) {
  FrameCell cell;
  cell.has_p = with_p;
  cell.has_q = with_q;
  for (int r = 0; r < kRoleCount; ++r)
    cell.pts[r] = Point{r, Rat(kCanon[r][0]), Rat(kCanon[r][1])};
  return cell;
}

std::vector<std::string> validate_frame_cell(const FrameCell& cell) {
  std::vector<std::string> out;

  // The two strict coordinate orders.
  const int* prev = nullptr;
  for (int k = 0; k < kRoleCount; ++k) {
    int r = kXOrder[k];
    if (!cell.has_role(r)) continue;
    if (prev && !(cell.pts[*prev].x < cell.pts[r].x))
      out.push_back(std::string("x-order: ") + kRoleNames[*prev] +
                    " must lie strictly west of " + kRoleNames[r]);
    prev = &kXOrder[k];
  }
  prev = nullptr;
  for (int k = 0; k < kRoleCount; ++k) {
    int r = kYOrder[k];
    if (!cell.has_role(r)) continue;
    if (prev && !(cell.pts[*prev].y < cell.pts[r].y))
      out.push_back(std::string("y-order: ") + kRoleNames[*prev] +
                    " must lie strictly south of " + kRoleNames[r]);
    prev = &kYOrder[k];
  }

  // Boundary: simple counterclockwise 16-gon.
  std::vector<Point> poly;
  for (int r : kCcwBoundary) poly.push_back(cell.pts[r]);
  if (!(signed_area2(poly) > 0))
    out.push_back("boundary: the 16-gon is not counterclockwise");
  for (std::size_t a = 0; a < poly.size(); ++a) {
    for (std::size_t b = a + 1; b < poly.size(); ++b) {
      std::size_t a2 = (a + 1) % poly.size(), b2 = (b + 1) % poly.size();
      if (a2 == b || b2 == a) continue;  // adjacent sides share a vertex
      if (proper_cross(poly[a], poly[a2], poly[b], poly[b2]))
        out.push_back("boundary: sides " + std::to_string(a) + " and " + std::to_string(b) +
                      " of the 16-gon cross");
    }
  }

  // The four boundary chains are strictly convex, the east/north ones
  // bulging away from the cell and the west/south ones into it.
  check_chain({cell.pts[R_V0], cell.pts[R_V1], cell.pts[R_V2], cell.pts[R_V3], cell.pts[R_V4]},
              -1, "east boundary", out);
  check_chain({cell.pts[R_VB4], cell.pts[R_VB5], cell.pts[R_VB6], cell.pts[R_VB7], cell.pts[R_V8]},
              -1, "west boundary", out);
  check_chain({cell.pts[R_V0], cell.pts[R_VB1], cell.pts[R_VB2], cell.pts[R_VB3], cell.pts[R_VB4]},
              1, "north boundary", out);
  check_chain({cell.pts[R_V4], cell.pts[R_V5], cell.pts[R_V6], cell.pts[R_V7], cell.pts[R_V8]},
              1, "south boundary", out);

  // Interior vertices: strictly inside the 16-gon and on the inner side of
  // their guard segments.
  if (cell.has_p) {
    if (!strictly_inside(poly, cell.pts[R_P]))
      out.push_back("p: not strictly inside the boundary");
    if (orientation(cell.pts[R_VB7], cell.pts[R_VB3], cell.pts[R_P]) >= 0)
      out.push_back("p: must lie strictly south and west of segment vb3-vb7");
  }
  if (cell.has_q) {
    if (!strictly_inside(poly, cell.pts[R_Q]))
      out.push_back("q: not strictly inside the boundary");
    if (orientation(cell.pts[R_V7], cell.pts[R_V3], cell.pts[R_Q]) <= 0)
      out.push_back("q: must lie strictly south and west of segment v3-v7");
  }
  return out;
}

FrameGraph synthesize_frame_geometry(int w, int h, const InteriorFlags& flags) {
  if (w < 1 || h < 1)
    throw Error(Err::ValidationFailure, "frame dimensions must be at least 1x1");
  FrameGraph f;
  f.w = w;
  f.h = h;
  std::map<std::tuple<int, int, int, int>, int> ids;  // (kind, i, j, k) -> id
  auto add = [&](int kind, int i, int j, int k, std::pair<Rat, Rat> xy) {
    int id = static_cast<int>(f.points.size());
    f.points.push_back(Point{id, std::move(xy.first), std::move(xy.second)});
    ids.emplace(std::make_tuple(kind, i, j, k), id);
    return id;
  };
  auto id_of = [&](int kind, int i, int j, int k) {
    auto it = ids.find(std::make_tuple(kind, i, j, k));
    return it == ids.end() ? -1 : it->second;
  };

  // Corners, then the subdivision vertices of every lattice edge.  Each
  // vertical edge is placed by the cell east of it and each horizontal edge
  // by the cell north of it, so shared sides get a single placement.
  for (int j = 0; j <= h; ++j)
    for (int i = 0; i <= w; ++i) add(0, i, j, 0, {corner_x(i, j), corner_y(i, j)});
  const int vroles[3] = {R_VB7, R_VB6, R_VB5};  // south to north along a vertical edge
  for (int i = 0; i <= w; ++i)
    for (int j = 0; j < h; ++j)
      for (int k = 1; k <= 3; ++k) add(1, i, j, k, cell_point(vroles[k - 1], i, j));
  const int hroles[3] = {R_V7, R_V6, R_V5};  // west to east along a horizontal edge
  for (int j = 0; j <= h; ++j)
    for (int i = 0; i < w; ++i)
      for (int k = 1; k <= 3; ++k) add(2, i, j, k, cell_point(hroles[k - 1], i, j));
  for (int j = 0; j < h; ++j)
    for (int i = 0; i < w; ++i) {
      auto it = flags.find({i, j});
      if (it == flags.end()) continue;
      if (it->second.first) add(3, i, j, 0, cell_point(R_P, i, j));
      if (it->second.second) add(4, i, j, 0, cell_point(R_Q, i, j));
    }

  // Role tables and boundary edges per cell.
  for (int j = 0; j < h; ++j)
    for (int i = 0; i < w; ++i) {
      std::array<int, 18> roles;
      roles[R_V8] = id_of(0, i, j, 0);
      roles[R_V4] = id_of(0, i + 1, j, 0);
      roles[R_V0] = id_of(0, i + 1, j + 1, 0);
      roles[R_VB4] = id_of(0, i, j + 1, 0);
      roles[R_VB7] = id_of(1, i, j, 1);
      roles[R_VB6] = id_of(1, i, j, 2);
      roles[R_VB5] = id_of(1, i, j, 3);
      roles[R_V3] = id_of(1, i + 1, j, 1);
      roles[R_V2] = id_of(1, i + 1, j, 2);
      roles[R_V1] = id_of(1, i + 1, j, 3);
      roles[R_V7] = id_of(2, i, j, 1);
      roles[R_V6] = id_of(2, i, j, 2);
      roles[R_V5] = id_of(2, i, j, 3);
      roles[R_VB3] = id_of(2, i, j + 1, 1);
      roles[R_VB2] = id_of(2, i, j + 1, 2);
      roles[R_VB1] = id_of(2, i, j + 1, 3);
      roles[R_P] = id_of(3, i, j, 0);
      roles[R_Q] = id_of(4, i, j, 0);
      f.cells[{i, j}] = roles;
      for (std::size_t k = 0; k < kCcwBoundary.size(); ++k) {
        int u = roles[kCcwBoundary[k]];
        int v = roles[kCcwBoundary[(k + 1) % kCcwBoundary.size()]];
        f.edges.insert(make_edge(u, v));
      }
    }

  // The cone fans to every vertex of the westmost and southmost paths.  It
  // moves southwest by powers of ten until both closing hull edges clear
  // the paths: every fan vertex must lie strictly inside the wedge between
  // cone->north end and cone->east end, split by cone->shared corner.
  std::vector<int> apath = alpha_path(f, 0);
  std::vector<int> bpath = beta_path(f, 0);
  int cone_id = static_cast<int>(f.points.size());
  const Point& sw_corner = f.points[apath.front()];
  const Point& north_end = f.points[apath.back()];
  const Point& east_end = f.points[bpath.back()];
  bool placed = false;
  Rat mag(1000000);
  for (int attempt = 0; attempt < 8 && !placed; ++attempt, mag *= 10) {
    // Deliberately off the main diagonal so the apex cannot line up with
    // lattice points that straddle it.
    Point cone{cone_id, -mag, -mag * Rat(6, 7)};
    placed = true;
    for (int id : apath) {
      const Point& pt = f.points[id];
      if ((id != north_end.id && orientation(cone, north_end, pt) >= 0) ||
          (id != sw_corner.id && orientation(cone, sw_corner, pt) <= 0)) {
        placed = false;
        break;
      }
    }
    for (std::size_t k = 0; placed && k < bpath.size(); ++k) {
      const Point& pt = f.points[bpath[k]];
      if ((pt.id != east_end.id && orientation(cone, east_end, pt) <= 0) ||
          (pt.id != sw_corner.id && orientation(cone, sw_corner, pt) >= 0)) {
        placed = false;
      }
    }
    if (placed) f.points.push_back(cone);
  }
  if (!placed)
    throw Error(Err::SynthesisFailure,
                "no cone position placed the westmost and southmost paths on the hull "
                "of the region behind them");
  f.cone_id = cone_id;
  for (int id : apath) f.edges.insert(make_edge(cone_id, id));
  for (int id : bpath) f.edges.insert(make_edge(cone_id, id));
  return f;
}

FrameCell cell_view(const FrameGraph& f, int i, int j) {
  auto it = f.cells.find({i, j});
  if (it == f.cells.end())
    throw Error(Err::ValidationFailure, "no frame cell at the requested position");
  FrameCell cell;
  cell.has_p = it->second[R_P] >= 0;
  cell.has_q = it->second[R_Q] >= 0;
  for (int r = 0; r < kRoleCount; ++r) {
    int id = it->second[r];
    if (id >= 0) cell.pts[r] = f.points[id];
  }
  return cell;
}

std::vector<std::string> validate_frame_geometry(const FrameGraph& f) {
  std::vector<std::string> out;
  if (f.w < 1 || f.h < 1 ||
      f.cells.size() != static_cast<std::size_t>(f.w) * static_cast<std::size_t>(f.h)) {
    out.push_back("structure: cell table does not match the stated dimensions");
    return out;
  }
  for (std::size_t k = 0; k < f.points.size(); ++k)
    if (f.points[k].id != static_cast<int>(k)) {
      out.push_back("structure: point ids must be dense and in order");
      return out;
    }
  for (const auto& [pos, roles] : f.cells)
    for (int r = 0; r < kBoundaryRoleCount; ++r)
      if (roles[r] < 0 || roles[r] >= static_cast<int>(f.points.size())) {
        out.push_back("structure: cell (" + std::to_string(pos.first) + "," +
                      std::to_string(pos.second) + ") lacks a boundary vertex");
        return out;
      }

  // Per-cell conditions.
  for (const auto& [pos, roles] : f.cells) {
    (void)roles;
    FrameCell cell = cell_view(f, pos.first, pos.second);
    for (const std::string& v : validate_frame_cell(cell))
      out.push_back("cell (" + std::to_string(pos.first) + "," + std::to_string(pos.second) +
                    "): " + v);
  }

  // Shared sides and per-cell boundary edges.
  for (const auto& [pos, roles] : f.cells) {
    auto [i, j] = pos;
    auto east = f.cells.find({i + 1, j});
    if (east != f.cells.end()) {
      const int ours[5] = {R_V0, R_V1, R_V2, R_V3, R_V4};
      const int theirs[5] = {R_VB4, R_VB5, R_VB6, R_VB7, R_V8};
      for (int k = 0; k < 5; ++k)
        if (roles[ours[k]] != east->second[theirs[k]])
          out.push_back("sharing: cell (" + std::to_string(i) + "," + std::to_string(j) +
                        ") disagrees with its east neighbour on a shared side vertex");
    }
    auto north = f.cells.find({i, j + 1});
    if (north != f.cells.end()) {
      const int ours[5] = {R_V0, R_VB1, R_VB2, R_VB3, R_VB4};
      const int theirs[5] = {R_V4, R_V5, R_V6, R_V7, R_V8};
      for (int k = 0; k < 5; ++k)
        if (roles[ours[k]] != north->second[theirs[k]])
          out.push_back("sharing: cell (" + std::to_string(i) + "," + std::to_string(j) +
                        ") disagrees with its north neighbour on a shared side vertex");
    }
    for (std::size_t k = 0; k < kCcwBoundary.size(); ++k) {
      int u = roles[kCcwBoundary[k]];
      int v = roles[kCcwBoundary[(k + 1) % kCcwBoundary.size()]];
      if (!f.edges.count(make_edge(u, v)))
        out.push_back("edges: cell (" + std::to_string(i) + "," + std::to_string(j) +
                      ") is missing a boundary edge");
    }
  }

  // Long paths: strict convexity, and the hull conditions that make every
  // one of them forced.  The region behind a path is everything on the
  // low-coordinate side of its first vertex; the path must lie on that
  // region's hull and the hull cycle must consist of frame edges only.
  auto path_checks = [&](const std::vector<int>& path, bool vertical, int index) {
    std::string what =
        (vertical ? "vertical path " : "horizontal path ") + std::to_string(index);
    for (std::size_t k = 0; k + 2 < path.size(); ++k) {
      int s = orientation(f.points[path[k]], f.points[path[k + 1]], f.points[path[k + 2]]);
      if (s != (vertical ? 1 : -1))
        out.push_back(what + ": not strictly convex at point id " +
                      std::to_string(path[k + 1]));
    }
    const Point& anchor = f.points[path.front()];
    std::vector<Point> side;
    for (const Point& pt : f.points)
      if (vertical ? pt.x <= anchor.x : pt.y <= anchor.y) side.push_back(pt);
    std::vector<int> hull;
    try {
      hull = convex_hull(side);
    } catch (const Error&) {
      out.push_back(what + ": fewer than three vertices behind it");
      return;
    }
    std::set<int> hull_ids(hull.begin(), hull.end());
    for (int id : path)
      if (!hull_ids.count(id)) {
        out.push_back(what + ": vertex " + std::to_string(id) +
                      " is not on the hull of the region behind the path");
        return;
      }
    for (std::size_t k = 0; k < hull.size(); ++k) {
      Edge e = make_edge(hull[k], hull[(k + 1) % hull.size()]);
      if (!f.edges.count(e))
        out.push_back(what + ": hull edge " + std::to_string(e.first) + "-" +
                      std::to_string(e.second) +
                      " of the region behind it is not a frame edge");
    }
  };
  for (int i = 0; i <= f.w; ++i) path_checks(alpha_path(f, i), true, i);
  for (int j = 0; j <= f.h; ++j) path_checks(beta_path(f, j), false, j);

  // Cone: strictly southwest of everything, fanning to exactly the westmost
  // and southmost paths.
  if (f.cone_id < 0 || f.cone_id >= static_cast<int>(f.points.size())) {
    out.push_back("cone: missing");
    return out;
  }
  const Point& cone = f.points[f.cone_id];
  for (const Point& pt : f.points)
    if (pt.id != cone.id && (pt.x <= cone.x || pt.y <= cone.y)) {
      out.push_back("cone: not strictly southwest of vertex " + std::to_string(pt.id));
      break;
    }
  std::set<Edge> want_fan;
  for (int id : alpha_path(f, 0)) want_fan.insert(make_edge(f.cone_id, id));
  for (int id : beta_path(f, 0)) want_fan.insert(make_edge(f.cone_id, id));
  std::set<Edge> have_fan;
  for (const Edge& e : f.edges)
    if (e.first == f.cone_id || e.second == f.cone_id) have_fan.insert(e);
  if (want_fan != have_fan)
    out.push_back("cone: fan edges differ from the westmost and southmost paths");

  // Global strict general position.
  try {
    validate_general_position(f.points, true);
  } catch (const Error& e) {
    out.push_back(std::string("general position: ") + e.what());
  }
  return out;
}

Json frame_to_json(const FrameGraph& f) {
  Json j;
  j["w"] = f.w;
  j["h"] = f.h;
  j["points"] = points_to_json(f.points).at("points");
  Json edges = Json::array();
  for (const Edge& e : f.edges) edges.push_back(Json::array({e.first, e.second}));
  j["edges"] = std::move(edges);
  j["cone"] = f.cone_id;
  std::map<int, Json> memberships;
  for (const auto& [pos, roles] : f.cells)
    for (int r = 0; r < kRoleCount; ++r) {
      if (roles[r] < 0) continue;
      memberships[roles[r]].push_back(Json{{"cell", Json::array({pos.first, pos.second})},
                                           {"role", kRoleNames[r]}});
    }
  Json cells = Json::object();
  for (auto& [id, arr] : memberships) cells[std::to_string(id)] = std::move(arr);
  j["cells"] = std::move(cells);
  return j;
}

}  // namespace cardsig
