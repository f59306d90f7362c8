// SPDX-License-Identifier: MIT
//
// Generates and verifies the tile gadget library.
//
// The wire and crossing drawings are tabulated below as colored diagonal
// classes over the canonical cell roles; the black completions that are not
// fixed by the tables are derived here by exhaustive search (every shade
// selection of every tile must triangulate its cell, with the mandatory
// self-crossing on the light-light selection of the two critical tiles).
// Everything is then re-verified through the public checking API, the
// cross-cell shade pairing discipline is checked for every adjacency the
// tiling validator admits, and the result is written as JSON.

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "cardsig/error.hpp"
#include "cardsig/frame.hpp"
#include "cardsig/gadgets.hpp"
#include "cardsig/realize.hpp"
#include "cardsig/tiling.hpp"

using namespace cardsig;

namespace {

struct RawGadget {
  const char* code;
  const char* interior;  // "", "p", "q", or "pq"
  const char* black;     // "" when derived here; space-separated "a-b" pairs
  const char* lr;
  const char* dr;
  const char* lb;
  const char* db;
  int expected_realizations;
};

// X2/X3 are the critical tiles (the drawn red and blue wires share a point
// under the light-light selection).  Twins with swapped colors use the same
// drawing with the shades exchanged, which keeps the boundary shade pairing
// criss-crossed on every shared side.
const RawGadget kRaw[] = {
    {".", "", "v8-vb3 v8-vb2 v8-vb1 v8-v0 v8-v1 v8-v2 vb3-vb5 vb3-vb6 vb3-vb7 v2-v7 v3-v5 v2-v6 v3-v6",
     "", "", "", "", 1},
    {"R-NS", "", "", "vb2-vb7 vb6-v7", "vb3-vb6 vb7-v6", "", "", 2},
    {"R-EW", "q", "", "vb5-v7 q-v2", "vb6-v7 q-v1", "", "", 2},
    {"R-NE", "pq",
     "vb7-v7 vb3-vb5 vb3-vb6 vb3-vb7 v3-v5 v3-v6 v3-v7 p-vb7 q-v7 p-vb2 p-vb1 p-v0 p-v1 p-q v1-q v2-v7",
     "vb7-vb2 p-v7 v2-q", "vb7-q p-vb3 v1-v7", "", "", 2},
    {"R-NW", "", "", "vb2-vb5", "vb3-vb6", "", "", 2},
    {"R-SE", "", "", "v2-v7", "v1-v6", "", "", 2},
    {"R-SW", "", "", "vb5-v7", "vb6-v6", "", "", 2},
    {"B-NS", "", "", "", "", "vb3-vb6 vb7-v6", "vb2-vb7 vb6-v7", 2},
    {"B-EW", "q", "", "", "", "vb6-v7 q-v1", "vb5-v7 q-v2", 2},
    {"B-NE", "pq",
     "vb7-v7 vb3-vb5 vb3-vb6 vb3-vb7 v3-v5 v3-v6 v3-v7 p-vb7 q-v7 p-vb2 p-vb1 p-v0 p-v1 p-q v1-q v2-v7",
     "", "", "vb7-q p-vb3 v1-v7", "vb7-vb2 p-v7 v2-q", 2},
    {"B-NW", "", "", "", "", "vb3-vb6", "vb2-vb5", 2},
    {"B-SE", "", "", "", "", "v1-v6", "v2-v7", 2},
    {"B-SW", "", "", "", "", "vb6-v6", "vb5-v7", 2},
    {"X1", "",
     "vb7-v7 vb6-v7 vb3-vb5 v3-v5 vb5-v6 vb3-v6 vb2-v6 vb1-v6 v0-v6 v1-v6 v2-v5",
     "vb5-v7", "vb6-v6", "v1-v5", "v2-v6", 4},
    {"X2", "",
     "v8-vb3 v8-vb2 v8-vb1 v8-v0 v8-v1 v8-v2 vb3-vb5 vb3-vb6 vb3-vb7 v2-v7 v3-v5",
     "v3-v7", "v2-v6", "v2-v5", "v3-v6", 3},
    {"X3", "", "", "vb6-v7 vb5-vb2", "vb7-v7 vb5-vb3", "vb7-vb2", "vb6-vb1", 3},
    {"X4", "p",
     "vb7-v7 vb3-vb5 v3-v5 v3-v6 vb7-p vb7-vb2 p-vb1 p-v0 p-v1 p-v2 p-v3 p-v6 vb2-vb6",
     "vb2-vb5", "vb3-vb6", "vb7-v6 p-vb2", "vb7-vb1 p-v7", 4},
};

bool is_light(EdgeColor c) {
  return c == EdgeColor::LightRed || c == EdgeColor::LightBlue;
}

std::vector<Edge> parse_edges(const std::string& text) {
  std::vector<Edge> out;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    auto dash = tok.find('-', 1);  // role names never start with '-'
    out.push_back(make_edge(role_from_name(tok.substr(0, dash)),
                            role_from_name(tok.substr(dash + 1))));
  }
  return out;
}

GadgetSpec make_spec(const RawGadget& raw) {
  GadgetSpec spec;
  spec.type = tile_from_code(raw.code);
  spec.has_p = std::string(raw.interior).find('p') != std::string::npos;
  spec.has_q = std::string(raw.interior).find('q') != std::string::npos;
  auto add = [&](const char* text, EdgeColor color) {
    for (const Edge& e : parse_edges(text))
      spec.edges.push_back({e.first, e.second, color});
  };
  add(raw.black, EdgeColor::Black);
  add(raw.lr, EdgeColor::LightRed);
  add(raw.dr, EdgeColor::DarkRed);
  add(raw.lb, EdgeColor::LightBlue);
  add(raw.db, EdgeColor::DarkBlue);
  return spec;
}

// Derives the black completion of `spec` (whose colored classes are already
// set): search for the triangulations that contain every dark edge and no
// light edge, strip the darks, and keep the completions for which every
// shade selection behaves (validate_gadget) and the full local check passes.
// Returns the number of admissible completions; the chosen one (the
// lexicographically least) is written into spec.
int derive_black(GadgetSpec& spec, const FrameCell& cell, bool verbose) {
  std::set<Edge> darks, lights;
  for (const ColoredEdge& e : spec.edges)
    (is_light(e.color) ? lights : darks).insert(make_edge(e.u, e.v));

  std::vector<Point> pts = cell.present_points();
  std::set<Edge> forced = cell_boundary_edges();
  std::vector<Edge> candidates(forced.begin(), forced.end());
  for (const Edge& d : cell_diagonals(cell))
    if (!lights.count(d)) candidates.push_back(d);
  for (const Edge& d : darks) forced.insert(d);
  std::sort(candidates.begin(), candidates.end());
  long long target = 2 * 16 + 3 * (int(cell.has_p) + int(cell.has_q)) - 3;

  std::vector<std::set<Edge>> completions;
  std::uint64_t seen = 0;
  enumerate_max_noncrossing(pts, candidates, forced, target,
                            [&](const std::vector<Edge>& tri) {
                              ++seen;
                              std::set<Edge> black;
                              const std::set<Edge>& boundary = cell_boundary_edges();
                              for (const Edge& e : tri)
                                if (!boundary.count(e) && !darks.count(e)) black.insert(e);
                              completions.push_back(std::move(black));
                            });

  int admissible = 0;
  std::set<Edge> best;
  for (const std::set<Edge>& black : completions) {
    GadgetSpec candidate = spec;
    for (const Edge& e : black)
      candidate.edges.push_back({e.first, e.second, EdgeColor::Black});
    if (!validate_gadget(candidate, cell).empty()) continue;
    if (!check_gadget_correctness(candidate, cell).ok) continue;
    if (admissible == 0 || black < best) best = black;
    ++admissible;
  }
  if (verbose)
    std::cerr << "  " << tile_code(spec.type) << ": " << seen
              << " dark-compatible triangulations, " << admissible
              << " admissible completions\n";
  if (admissible == 0) return 0;
  for (const Edge& e : best) spec.edges.push_back({e.first, e.second, EdgeColor::Black});
  return admissible;
}

// Per-vertex, per-direction shade end counts of one color class, in the
// cell's own coordinates.
struct ShadeEnds {
  int light[kRoleCount][4] = {};
  int dark[kRoleCount][4] = {};
};

ShadeEnds shade_ends(const GadgetSpec& spec, const FrameCell& cell, Color color) {
  ShadeEnds out;
  for (const ColoredEdge& e : spec.edges) {
    if (e.color == EdgeColor::Black) continue;
    bool red = e.color == EdgeColor::LightRed || e.color == EdgeColor::DarkRed;
    if (red != (color == Color::Red)) continue;
    bool light = is_light(e.color);
    for (auto [a, b] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}}) {
      int ns = cell.pts[b].y > cell.pts[a].y ? DIR_N : DIR_S;
      int ew = cell.pts[b].x > cell.pts[a].x ? DIR_E : DIR_W;
      (light ? out.light : out.dark)[a][ns]++;
      (light ? out.light : out.dark)[a][ew]++;
    }
  }
  return out;
}

// Checks that in every adjacency the tiling validator admits, the combined
// colored ends at each shared vertex stay balanced per direction: one light
// and one dark end of the crossing wire pair up across the boundary, while
// non-crossing colors must already be balanced within their own cell.
int check_adjacency_pairing(const std::map<Tile, GadgetSpec>& specs,
                            const std::map<Tile, FrameCell>& cells) {
  struct SharedSide {
    Side a_side, b_side;
    std::vector<std::pair<int, int>> ids;  // (role in A, role in B)
  };
  const SharedSide east{Side::East, Side::West,
                        {{R_V0, R_VB4}, {R_V1, R_VB5}, {R_V2, R_VB6}, {R_V3, R_VB7}, {R_V4, R_V8}}};
  const SharedSide north{Side::North, Side::South,
                         {{R_V0, R_V4}, {R_VB1, R_V5}, {R_VB2, R_V6}, {R_VB3, R_V7}, {R_VB4, R_V8}}};

  int violations = 0;
  for (const auto& [ta, sa] : specs) {
    for (const auto& [tb, sb] : specs) {
      for (const SharedSide& side : {east, north}) {
        bool legal = true;
        for (Color c : {Color::Red, Color::Blue})
          if (has_port(ta, c, side.a_side) != has_port(tb, c, side.b_side)) legal = false;
        if (side.a_side == Side::East)
          legal = legal && ((ta == Tile::X2) == (tb == Tile::X3));
        else
          legal = legal && ((tb == Tile::X2) == (ta == Tile::X4)) &&
                  ((tb == Tile::X1) == (ta == Tile::X3));
        if (!legal) continue;

        for (Color c : {Color::Red, Color::Blue}) {
          ShadeEnds ea = shade_ends(sa, cells.at(ta), c);
          ShadeEnds eb = shade_ends(sb, cells.at(tb), c);
          bool crossing = has_port(ta, c, side.a_side);
          for (auto [ra, rb] : side.ids) {
            for (int d = 0; d < 4; ++d) {
              bool ok = crossing
                            ? ea.light[ra][d] + eb.light[rb][d] ==
                                  ea.dark[ra][d] + eb.dark[rb][d]
                            : ea.light[ra][d] == ea.dark[ra][d] &&
                                  eb.light[rb][d] == eb.dark[rb][d];
              if (!ok) {
                std::cerr << "pairing violation: " << tile_code(ta) << " / "
                          << tile_code(tb) << " across " << (side.a_side == Side::East ? "east" : "north")
                          << " at roles " << role_name(ra) << "/" << role_name(rb)
                          << " dir " << d << " color " << color_name(c) << "\n";
                ++violations;
              }
            }
          }
        }
      }
    }
  }
  return violations;
}

}  // namespace

int main(int argc, char** argv) {
  std::string out_path = argc > 1 ? argv[1] : "data/gadgets.json";
  bool verbose = true;

  std::map<Tile, GadgetSpec> specs;
  std::map<Tile, FrameCell> cells;
  std::vector<Tile> derive_order;

  for (const RawGadget& raw : kRaw) {
    GadgetSpec spec = make_spec(raw);
    Tile t = spec.type;
    cells.emplace(t, canonical_cell(spec.has_p, spec.has_q));
    if (std::string(raw.black).empty()) derive_order.push_back(t);
    specs.emplace(t, std::move(spec));
  }

  std::cerr << "deriving black completions:\n";
  for (Tile t : derive_order) {
    int n = derive_black(specs.at(t), cells.at(t), verbose);
    if (n == 0) {
      std::cerr << "no admissible black completion for " << tile_code(t) << "\n";
      return 1;
    }
  }

  std::cerr << "verifying all 17 gadgets:\n";
  bool all_ok = true;
  for (const RawGadget& raw : kRaw) {
    Tile t = tile_from_code(raw.code);
    const GadgetSpec& spec = specs.at(t);
    const FrameCell& cell = cells.at(t);
    std::vector<std::string> violations = validate_gadget(spec, cell);
    for (const std::string& v : violations) {
      std::cerr << "  " << raw.code << ": " << v << "\n";
      all_ok = false;
    }
    GadgetCheck check = check_gadget_correctness(spec, cell);
    std::size_t intended = spec.intended_realizations(cell).size();
    if (!check.ok) {
      std::cerr << "  " << raw.code << ": local check failed ("
                << (check.missing_from_valid ? "intended realization not reachable"
                                             : "stray triangulation matches")
                << ")\n";
      all_ok = false;
    }
    if (static_cast<int>(intended) != raw.expected_realizations) {
      std::cerr << "  " << raw.code << ": " << intended << " realizations, expected "
                << raw.expected_realizations << "\n";
      all_ok = false;
    }
    if (verbose && check.ok)
      std::cerr << "  " << raw.code << ": ok, " << intended << " realizations\n";
  }

  std::cerr << "checking cross-cell shade pairing:\n";
  int pairing = check_adjacency_pairing(specs, cells);
  if (pairing != 0) {
    std::cerr << "  " << pairing << " pairing violations\n";
    all_ok = false;
  } else {
    std::cerr << "  ok\n";
  }
  if (!all_ok) return 1;

  Json doc = Json::object();
  for (const RawGadget& raw : kRaw) {
    const GadgetSpec& spec = specs.at(tile_from_code(raw.code));
    Json entry = Json::object();
    Json interior = Json::array();
    if (spec.has_p) interior.push_back("p");
    if (spec.has_q) interior.push_back("q");
    entry["interior"] = interior;
    std::vector<ColoredEdge> edges = spec.edges;
    std::sort(edges.begin(), edges.end(), [](const ColoredEdge& a, const ColoredEdge& b) {
      return std::tie(a.u, a.v, a.color) < std::tie(b.u, b.v, b.color);
    });
    Json arr = Json::array();
    for (const ColoredEdge& e : edges) {
      Json j = Json::object();
      j["u"] = role_name(e.u);
      j["v"] = role_name(e.v);
      j["color"] = edge_color_code(e.color);
      arr.push_back(j);
    }
    entry["edges"] = arr;
    doc[raw.code] = entry;
  }

  std::ofstream out(out_path);
  if (!out) {
    std::cerr << "cannot write " << out_path << "\n";
    return 1;
  }
  out << doc.dump(1) << "\n";
  std::cerr << "wrote " << out_path << "\n";
  return 0;
}
