// SPDX-License-Identifier: MIT
#include "cardsig/gadgets.hpp"

#include <algorithm>
#include <array>
#include <bitset>
#include <climits>
#include <cstdlib>
#include <fstream>
#include <string>

#include "cardsig/error.hpp"
#include "cardsig/realize.hpp"

#ifndef CARDSIG_DEFAULT_GADGETS
#define CARDSIG_DEFAULT_GADGETS "data/gadgets.json"
#endif

namespace cardsig {

namespace {

constexpr int kMaxDiagonals = 192;  // C(18,2) minus the boundary, with margin

struct ColorCode {
  EdgeColor color;
  const char* code;
};
constexpr ColorCode kColorCodes[] = {
    {EdgeColor::Black, "black"},
    {EdgeColor::LightRed, "lr"},
    {EdgeColor::DarkRed, "dr"},
    {EdgeColor::LightBlue, "lb"},
    {EdgeColor::DarkBlue, "db"},
};

bool shade_selected(EdgeColor c, const LocalColoring& chi) {
  switch (c) {
    case EdgeColor::Black: return true;
    case EdgeColor::LightRed: return chi.light_red;
    case EdgeColor::DarkRed: return !chi.light_red;
    case EdgeColor::LightBlue: return chi.light_blue;
    case EdgeColor::DarkBlue: return !chi.light_blue;
  }
  return false;
}

bool is_red_class(EdgeColor c) {
  return c == EdgeColor::LightRed || c == EdgeColor::DarkRed;
}
bool is_light_class(EdgeColor c) {
  return c == EdgeColor::LightRed || c == EdgeColor::LightBlue;
}

std::string coloring_name(const LocalColoring& chi) {
  return std::string(chi.light_red ? "light" : "dark") + "-red+" +
         (chi.light_blue ? "light" : "dark") + "-blue";
}

// The three subdivision roles on each cell side.
const std::array<int, 3>& side_interior_roles(Side s) {
  static const std::array<std::array<int, 3>, 4> roles = {{
      {R_VB1, R_VB2, R_VB3},  // North
      {R_V1, R_V2, R_V3},     // East
      {R_V5, R_V6, R_V7},     // South
      {R_VB5, R_VB6, R_VB7},  // West
  }};
  return roles[static_cast<int>(s)];
}

const char* side_name(Side s) {
  switch (s) {
    case Side::North: return "north";
    case Side::East: return "east";
    case Side::South: return "south";
    case Side::West: return "west";
  }
  return "?";
}

// Cardinal components of the edge a->b as seen from a.  General position
// guarantees strict inequality on both axes.
void edge_dirs(const Point& a, const Point& b, int& ns, int& ew) {
  ns = b.y > a.y ? DIR_N : DIR_S;
  ew = b.x > a.x ? DIR_E : DIR_W;
}

// Exact even-odd interior test against the cell's 16-gon; boundary counts
// as outside.
bool inside_cell_boundary(const FrameCell& cell, const Rat& px, const Rat& py) {
  const auto& ccw = ccw_boundary_roles();
  bool inside = false;
  for (std::size_t k = 0; k < ccw.size(); ++k) {
    const Point& a = cell.pts[ccw[k]];
    const Point& b = cell.pts[ccw[(k + 1) % ccw.size()]];
    Rat cross = (b.x - a.x) * (py - a.y) - (b.y - a.y) * (px - a.x);
    if (cross == 0 && std::min(a.x, b.x) <= px && px <= std::max(a.x, b.x) &&
        std::min(a.y, b.y) <= py && py <= std::max(a.y, b.y))
      return false;
    if ((a.y > py) != (b.y > py)) {
      Rat t = (py - a.y) / (b.y - a.y);
      Rat xi = a.x + t * (b.x - a.x);
      if (xi > px) inside = !inside;
    }
  }
  return inside;
}

std::string edge_label(const Edge& e) {
  return std::string(role_name(e.first)) + "-" + role_name(e.second);
}

// Any two edges of the set properly crossing, in the cell's geometry.
bool self_crossing(const FrameCell& cell, const std::set<Edge>& edges) {
  std::vector<Edge> v(edges.begin(), edges.end());
  for (std::size_t a = 0; a < v.size(); ++a)
    for (std::size_t b = a + 1; b < v.size(); ++b)
      if (proper_cross(cell.pts[v[a].first], cell.pts[v[a].second],
                       cell.pts[v[b].first], cell.pts[v[b].second]))
        return true;
  return false;
}

// Per-role, per-direction counts of interior edge ends.
using DegreeTable = std::array<std::array<int, 4>, kRoleCount>;

DegreeTable degree_table(const FrameCell& cell, const std::set<Edge>& edges) {
  DegreeTable t{};
  for (const Edge& e : edges) {
    int ns = 0, ew = 0;
    edge_dirs(cell.pts[e.first], cell.pts[e.second], ns, ew);
    t[e.first][ns]++;
    t[e.first][ew]++;
    edge_dirs(cell.pts[e.second], cell.pts[e.first], ns, ew);
    t[e.second][ns]++;
    t[e.second][ew]++;
  }
  return t;
}

// Exhaustive search for the triangulations whose constrained directional
// degrees match one of the four local colorings at every vertex, with one
// shared coloring along the west boundary and one along the south boundary.
struct ValidEnumerator {
  const FrameCell& cell;
  std::vector<Edge> diag;                      // candidate interior diagonals
  std::vector<std::bitset<kMaxDiagonals>> conflict;
  std::array<DegreeTable, 4> pattern{};        // one per local coloring
  DegreeTable caps{};                          // max over patterns (constrained)
  int target = 0;
  std::vector<std::set<Edge>> found;

  DegreeTable degs{};
  std::vector<int> chosen;

  ValidEnumerator(const GadgetSpec& spec, const FrameCell& c) : cell(c) {
    diag = cell_diagonals(cell);
    conflict.assign(diag.size(), {});
    for (std::size_t a = 0; a < diag.size(); ++a)
      for (std::size_t b = a + 1; b < diag.size(); ++b)
        if (proper_cross(cell.pts[diag[a].first], cell.pts[diag[a].second],
                         cell.pts[diag[b].first], cell.pts[diag[b].second])) {
          conflict[a].set(b);
          conflict[b].set(a);
        }
    for (int k = 0; k < 4; ++k)
      pattern[k] = degree_table(cell, spec.u_chi(kAllColorings[k]));
    for (int r = 0; r < kRoleCount; ++r)
      for (int d = 0; d < 4; ++d)
        caps[r][d] = direction_constrained(r, d)
                         ? std::max({pattern[0][r][d], pattern[1][r][d],
                                     pattern[2][r][d], pattern[3][r][d]})
                         : INT_MAX;
    target = 13 + 3 * (int(cell.has_p) + int(cell.has_q));
  }

  bool cap_allows(const Edge& e) const {
    int ns = 0, ew = 0;
    edge_dirs(cell.pts[e.first], cell.pts[e.second], ns, ew);
    if (degs[e.first][ns] + 1 > caps[e.first][ns]) return false;
    if (degs[e.first][ew] + 1 > caps[e.first][ew]) return false;
    edge_dirs(cell.pts[e.second], cell.pts[e.first], ns, ew);
    if (degs[e.second][ns] + 1 > caps[e.second][ns]) return false;
    if (degs[e.second][ew] + 1 > caps[e.second][ew]) return false;
    return true;
  }

  void bump(const Edge& e, int delta) {
    int ns = 0, ew = 0;
    edge_dirs(cell.pts[e.first], cell.pts[e.second], ns, ew);
    degs[e.first][ns] += delta;
    degs[e.first][ew] += delta;
    edge_dirs(cell.pts[e.second], cell.pts[e.first], ns, ew);
    degs[e.second][ns] += delta;
    degs[e.second][ew] += delta;
  }

  // Bitmask over the four colorings whose constrained degrees match at r.
  unsigned match_mask(int r) const {
    unsigned mask = 0;
    for (int k = 0; k < 4; ++k) {
      bool ok = true;
      for (int d = 0; d < 4 && ok; ++d)
        if (direction_constrained(r, d) && degs[r][d] != pattern[k][r][d]) ok = false;
      if (ok) mask |= 1u << k;
    }
    return mask;
  }

  void accept_if_matching() {
    unsigned west = 0xf, south = 0xf;
    for (int r = 0; r < kRoleCount; ++r) {
      if (!cell.has_role(r)) continue;
      unsigned m = match_mask(r);
      if (m == 0) return;
      if (r == R_VB4 || r == R_VB5 || r == R_VB6 || r == R_VB7 || r == R_V8) west &= m;
      if (r == R_V4 || r == R_V5 || r == R_V6 || r == R_V7 || r == R_V8) south &= m;
    }
    if (west == 0 || south == 0) return;
    found.emplace_back();
    for (int k : chosen) found.back().insert(diag[k]);
  }

  void dfs(std::size_t k, std::bitset<kMaxDiagonals> blocked) {
    if (static_cast<int>(chosen.size()) == target) {
      accept_if_matching();
      return;
    }
    if (k == diag.size()) return;
    if (chosen.size() + (diag.size() - k) < static_cast<std::size_t>(target)) return;
    if (!blocked.test(k) && cap_allows(diag[k])) {
      chosen.push_back(static_cast<int>(k));
      bump(diag[k], +1);
      dfs(k + 1, blocked | conflict[k]);
      bump(diag[k], -1);
      chosen.pop_back();
    }
    dfs(k + 1, blocked);
  }
};

}  // namespace

const char* edge_color_code(EdgeColor c) {
  for (const auto& e : kColorCodes)
    if (e.color == c) return e.code;
  throw Error(Err::ValidationFailure, "unknown edge color");
}

EdgeColor edge_color_from_code(const std::string& code) {
  for (const auto& e : kColorCodes)
    if (code == e.code) return e.color;
  throw Error(Err::ValidationFailure, "unknown edge color code '" + code + "'");
}

std::set<Edge> GadgetSpec::u_chi(const LocalColoring& chi) const {
  std::set<Edge> out;
  for (const ColoredEdge& e : edges)
    if (shade_selected(e.color, chi)) out.insert(make_edge(e.u, e.v));
  return out;
}

std::vector<std::set<Edge>> GadgetSpec::intended_realizations(const FrameCell& cell) const {
  std::vector<std::set<Edge>> out;
  for (const LocalColoring& chi : kAllColorings) {
    std::set<Edge> u = u_chi(chi);
    if (self_crossing(cell, u)) continue;
    if (std::find(out.begin(), out.end(), u) == out.end()) out.push_back(std::move(u));
  }
  return out;
}

bool direction_constrained(int role, int dir) {
  static const auto table = [] {
    std::array<std::array<bool, 4>, kRoleCount> t{};
    for (auto& row : t) row = {true, true, true, true};
    for (int r : {R_V0, R_VB1, R_VB2, R_VB3, R_VB4, R_V4}) t[r][DIR_N] = false;
    for (int r : {R_V0, R_V1, R_V2, R_V3, R_V4, R_VB4}) t[r][DIR_E] = false;
    for (int r : {R_V0, R_V1, R_V2, R_V3}) t[r][DIR_S] = false;
    for (int r : {R_V0, R_VB1, R_VB2, R_VB3}) t[r][DIR_W] = false;
    return t;
  }();
  return table[role][dir];
}

const std::set<Edge>& cell_boundary_edges() {
  static const std::set<Edge> edges = [] {
    std::set<Edge> out;
    const auto& ccw = ccw_boundary_roles();
    for (std::size_t k = 0; k < ccw.size(); ++k)
      out.insert(make_edge(ccw[k], ccw[(k + 1) % ccw.size()]));
    return out;
  }();
  return edges;
}

std::vector<Edge> cell_diagonals(const FrameCell& cell) {
  const std::set<Edge>& boundary = cell_boundary_edges();
  const auto& ccw = ccw_boundary_roles();
  std::vector<Edge> out;
  for (int a = 0; a < kRoleCount; ++a) {
    if (!cell.has_role(a)) continue;
    for (int b = a + 1; b < kRoleCount; ++b) {
      if (!cell.has_role(b)) continue;
      Edge e = make_edge(a, b);
      if (boundary.count(e)) continue;
      const Point& pa = cell.pts[a];
      const Point& pb = cell.pts[b];
      bool ok = true;
      for (std::size_t k = 0; k < ccw.size() && ok; ++k)
        if (proper_cross(pa, pb, cell.pts[ccw[k]], cell.pts[ccw[(k + 1) % ccw.size()]]))
          ok = false;
      if (!ok) continue;
      if (!inside_cell_boundary(cell, (pa.x + pb.x) / 2, (pa.y + pb.y) / 2)) continue;
      out.push_back(e);
    }
  }
  return out;
}

std::vector<std::string> validate_gadget(const GadgetSpec& spec, const FrameCell& cell) {
  std::vector<std::string> out;
  if (spec.has_p != cell.has_p)
    out.push_back(std::string("the gadget and the cell disagree about p (gadget ") +
                  (spec.has_p ? "declares" : "omits") + " it)");
  if (spec.has_q != cell.has_q)
    out.push_back(std::string("the gadget and the cell disagree about q (gadget ") +
                  (spec.has_q ? "declares" : "omits") + " it)");

  std::set<Edge> seen;
  std::set<Edge> valid_diagonals;
  for (const Edge& e : cell_diagonals(cell)) valid_diagonals.insert(e);
  std::array<std::array<int, 5>, kRoleCount> class_count{};
  bool structure_ok = true;

  for (const ColoredEdge& e : spec.edges) {
    if (e.u < 0 || e.u >= kRoleCount || e.v < 0 || e.v >= kRoleCount || e.u == e.v) {
      out.push_back("edge with out-of-range or equal endpoints");
      structure_ok = false;
      continue;
    }
    if (e.u > e.v) {
      out.push_back("edge " + edge_label({e.v, e.u}) + " is not normalized (u < v by role)");
      structure_ok = false;
    }
    Edge key = make_edge(e.u, e.v);
    if (!seen.insert(key).second) {
      out.push_back("duplicate edge " + edge_label(key));
      structure_ok = false;
    }
    for (int r : {e.u, e.v}) {
      if ((r == R_P && !spec.has_p) || (r == R_Q && !spec.has_q)) {
        out.push_back("edge " + edge_label(key) + " uses an undeclared interior vertex");
        structure_ok = false;
      }
      if (!cell.has_role(r)) {
        out.push_back("edge " + edge_label(key) + " uses a role absent from the cell");
        structure_ok = false;
      }
    }
    if (e.color != EdgeColor::Black) {
      if (is_corner_role(e.u) || is_corner_role(e.v))
        out.push_back("colored edge " + edge_label(key) + " touches a cell corner");
      class_count[e.u][static_cast<int>(e.color)]++;
      class_count[e.v][static_cast<int>(e.color)]++;
    }
  }
  if (!structure_ok) return out;

  for (int r = 0; r < kRoleCount; ++r)
    for (EdgeColor c : {EdgeColor::LightRed, EdgeColor::DarkRed, EdgeColor::LightBlue,
                        EdgeColor::DarkBlue})
      if (class_count[r][static_cast<int>(c)] > 1)
        out.push_back(std::string("vertex ") + role_name(r) + " carries " +
                      std::to_string(class_count[r][static_cast<int>(c)]) + " " +
                      edge_color_code(c) + " edges (at most one per class)");

  for (const ColoredEdge& e : spec.edges)
    if (!valid_diagonals.count(make_edge(e.u, e.v)))
      out.push_back("edge " + edge_label(make_edge(e.u, e.v)) +
                    " is not an interior diagonal of the cell");

  // Port consistency: on each side, same-vertex light/dark pairs of a color
  // cancel; what remains must be exactly one light end and one dark end on
  // ported sides and nothing elsewhere.
  for (Color color : {Color::Red, Color::Blue}) {
    for (Side side : {Side::North, Side::East, Side::South, Side::West}) {
      int lights = 0, darks = 0;
      for (int r : side_interior_roles(side)) {
        int l = 0, d = 0;
        for (const ColoredEdge& e : spec.edges) {
          if (e.color == EdgeColor::Black) continue;
          if (is_red_class(e.color) != (color == Color::Red)) continue;
          if (e.u != r && e.v != r) continue;
          (is_light_class(e.color) ? l : d)++;
        }
        int cancel = std::min(l, d);
        lights += l - cancel;
        darks += d - cancel;
      }
      bool port = has_port(spec.type, color, side);
      if (port && (lights != 1 || darks != 1))
        out.push_back(std::string(color_name(color)) + " port on the " + side_name(side) +
                      " side needs exactly one light and one dark end (found " +
                      std::to_string(lights) + "/" + std::to_string(darks) + ")");
      if (!port && (lights != 0 || darks != 0))
        out.push_back(std::string("unmatched ") + color_name(color) +
                      " ends on the unported " + side_name(side) + " side");
    }
  }

  // Each union is a triangulation of the cell polygon, except the
  // light-light union of a critical tile, which must self-cross.
  int interior = int(cell.has_p) + int(cell.has_q);
  for (const LocalColoring& chi : kAllColorings) {
    std::set<Edge> u = spec.u_chi(chi);
    bool crossing = self_crossing(cell, u);
    bool must_cross = is_critical(spec.type) && chi.light_red && chi.light_blue;
    if (must_cross) {
      if (!crossing)
        out.push_back("the " + coloring_name(chi) +
                      " union of a critical tile must self-cross but does not");
      continue;
    }
    if (crossing) {
      out.push_back("the " + coloring_name(chi) + " union self-crosses");
      continue;
    }
    int want = 13 + 3 * interior;
    if (static_cast<int>(u.size()) != want)
      out.push_back("the " + coloring_name(chi) + " union has " +
                    std::to_string(u.size()) + " edges, expected " + std::to_string(want));
  }
  return out;
}

std::vector<std::set<Edge>> enumerate_valid_gadget_triangulations(
    const GadgetSpec& spec, const FrameCell& cell) {
  ValidEnumerator e(spec, cell);
  e.dfs(0, {});
  return std::move(e.found);
}

GadgetCheck check_gadget_correctness(const GadgetSpec& spec, const FrameCell& cell) {
  GadgetCheck result;
  std::vector<std::set<Edge>> valid = enumerate_valid_gadget_triangulations(spec, cell);
  std::vector<std::set<Edge>> intended = spec.intended_realizations(cell);
  std::sort(valid.begin(), valid.end());
  std::sort(intended.begin(), intended.end());
  if (valid == intended) {
    result.ok = true;
    return result;
  }
  for (const auto& s : intended)
    if (!std::binary_search(valid.begin(), valid.end(), s)) {
      result.counterexample = s;
      result.missing_from_valid = true;
      return result;
    }
  for (const auto& s : valid)
    if (!std::binary_search(intended.begin(), intended.end(), s)) {
      result.counterexample = s;
      result.missing_from_valid = false;
      return result;
    }
  return result;
}

GadgetLibrary load_gadget_library(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw Error(Err::ValidationFailure, "cannot open gadget library '" + path + "'");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const std::exception& ex) {
    throw Error(Err::ValidationFailure,
                std::string("gadget library is not valid JSON: ") + ex.what());
  }
  if (!j.is_object())
    throw Error(Err::ValidationFailure, "gadget library must be a JSON object");

  GadgetLibrary lib;
  for (int k = 0; k < kTileTypeCount; ++k) {
    Tile t = static_cast<Tile>(k);
    std::string code = tile_code(t);
    if (!j.contains(code))
      throw Error(Err::ValidationFailure, "gadget library lacks an entry for '" + code + "'");
    const Json& entry = j.at(code);
    GadgetSpec spec;
    spec.type = t;
    for (const Json& name : entry.value("interior", Json::array())) {
      std::string s = name.get<std::string>();
      if (s == "p")
        spec.has_p = true;
      else if (s == "q")
        spec.has_q = true;
      else
        throw Error(Err::ValidationFailure,
                    "gadget " + code + ": unknown interior vertex '" + s + "'");
    }
    if (!entry.contains("edges") || !entry.at("edges").is_array())
      throw Error(Err::ValidationFailure, "gadget " + code + ": missing edge array");
    for (const Json& edge : entry.at("edges")) {
      ColoredEdge e;
      e.u = role_from_name(edge.at("u").get<std::string>());
      e.v = role_from_name(edge.at("v").get<std::string>());
      if (e.u > e.v) std::swap(e.u, e.v);
      e.color = edge_color_from_code(edge.at("color").get<std::string>());
      spec.edges.push_back(e);
    }
    std::vector<std::string> violations =
        validate_gadget(spec, canonical_cell(spec.has_p, spec.has_q));
    if (!violations.empty())
      throw Error(Err::ValidationFailure, "gadget " + code + ": " + violations.front());
    lib.emplace(t, std::move(spec));
  }
  std::set<std::string> known;
  for (int k = 0; k < kTileTypeCount; ++k) known.insert(tile_code(static_cast<Tile>(k)));
  for (const auto& item : j.items())
    if (!known.count(item.key()))
      throw Error(Err::ValidationFailure, "gadget library has unknown key '" + item.key() + "'");
  return lib;
}

std::string default_gadget_library_path() {
  const char* env = std::getenv("CARDSIG_GADGETS");
  if (env && *env) return env;
  return CARDSIG_DEFAULT_GADGETS;
}

FrameGraph synthesize_for_tiling(const Tiling& t, const GadgetLibrary& gl) {
  InteriorFlags flags;
  for (int row = 0; row < t.height; ++row) {
    for (int col = 0; col < t.width; ++col) {
      const GadgetSpec& spec = gl.at(t.at(row, col));
      if (spec.has_p || spec.has_q)
        flags[{col, t.height - 1 - row}] = {spec.has_p, spec.has_q};
    }
  }
  return synthesize_frame_geometry(t.width, t.height, flags);
}

namespace {

const char* dir_name(int d) {
  switch (d) {
    case DIR_N: return "north";
    case DIR_S: return "south";
    case DIR_E: return "east";
    case DIR_W: return "west";
  }
  return "?";
}

// Global ids of one gadget edge within cell (i, j) of the frame.
Edge global_edge(const FrameGraph& f, int i, int j, const ColoredEdge& e) {
  const auto& roles = f.cells.at({i, j});
  int gu = roles[e.u];
  int gv = roles[e.v];
  if (gu < 0 || gv < 0)
    throw Error(Err::ValidationFailure, "gadget edge uses a vertex missing from its cell");
  return make_edge(gu, gv);
}

}  // namespace

CardinalSignature build_signature(const Tiling& t, const GadgetLibrary& gl) {
  validate_tiling(t);
  FrameGraph f = synthesize_for_tiling(t, gl);
  std::vector<DegreeQuad> black(f.points.size());
  std::vector<std::array<int, 4>> colored(f.points.size(), {0, 0, 0, 0});

  auto add_end = [&](std::vector<DegreeQuad>* quads, std::vector<std::array<int, 4>>* halves,
                     int a, int b) {
    int ns = 0, ew = 0;
    edge_dirs(f.points[a], f.points[b], ns, ew);
    if (quads) {
      (*quads)[a][ns]++;
      (*quads)[a][ew]++;
    } else {
      (*halves)[a][ns]++;
      (*halves)[a][ew]++;
    }
  };

  for (const Edge& e : f.edges) {
    add_end(&black, nullptr, e.first, e.second);
    add_end(&black, nullptr, e.second, e.first);
  }
  for (int row = 0; row < t.height; ++row) {
    for (int col = 0; col < t.width; ++col) {
      const GadgetSpec& spec = gl.at(t.at(row, col));
      for (const ColoredEdge& e : spec.edges) {
        Edge g = global_edge(f, col, t.height - 1 - row, e);
        if (e.color == EdgeColor::Black) {
          add_end(&black, nullptr, g.first, g.second);
          add_end(&black, nullptr, g.second, g.first);
        } else {
          add_end(nullptr, &colored, g.first, g.second);
          add_end(nullptr, &colored, g.second, g.first);
        }
      }
    }
  }

  CardinalSignature sig;
  sig.points = f.points;
  for (std::size_t id = 0; id < f.points.size(); ++id) {
    DegreeQuad q = black[id];
    for (int d = 0; d < 4; ++d) {
      if (colored[id][d] % 2 != 0)
        throw Error(Err::OddColoredCount,
                    "vertex " + std::to_string(id) + " has an odd " + dir_name(d) +
                        " colored end count (" + std::to_string(colored[id][d]) + ")");
      q[d] += colored[id][d] / 2;
    }
    sig.degrees[static_cast<int>(id)] = q;
  }
  validate_signature(sig);
  return sig;
}

PslGraph build_selected_realization(const Tiling& t, const TileSelection& sel,
                                    const GadgetLibrary& gl) {
  validate_tiling(t);
  for (int row = 0; row < t.height; ++row)
    for (int col = 0; col < t.width; ++col)
      if (is_critical(t.at(row, col)) && sel.red.count({row, col}) &&
          sel.blue.count({row, col}))
        throw Error(Err::CrossingSelection,
                    "cell (" + std::to_string(row) + ", " + std::to_string(col) +
                        ") is critical and selected in both colors");

  FrameGraph f = synthesize_for_tiling(t, gl);
  std::set<Edge> edges = f.edges;
  for (int row = 0; row < t.height; ++row) {
    for (int col = 0; col < t.width; ++col) {
      const GadgetSpec& spec = gl.at(t.at(row, col));
      LocalColoring chi{sel.red.count({row, col}) > 0, sel.blue.count({row, col}) > 0};
      for (const ColoredEdge& e : spec.edges)
        if (shade_selected(e.color, chi))
          edges.insert(global_edge(f, col, t.height - 1 - row, e));
    }
  }
  PslGraph g;
  g.points = f.points;
  g.edges.assign(edges.begin(), edges.end());
  return g;
}

std::uint64_t structured_count(const Tiling& t) { return count_noncrossing_selections(t); }

}  // namespace cardsig
