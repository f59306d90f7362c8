// SPDX-License-Identifier: MIT
#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cardsig/frame.hpp"
#include "cardsig/tiling.hpp"

namespace cardsig {

enum class EdgeColor : int { Black = 0, LightRed, DarkRed, LightBlue, DarkBlue };

// Data-file color codes: "black", "lr", "dr", "lb", "db".
const char* edge_color_code(EdgeColor c);
EdgeColor edge_color_from_code(const std::string& code);

// A shade choice per color: the four local colorings.  An edge of U_G
// participates in U_G^chi iff it is black, or its shade matches chi.
struct LocalColoring {
  bool light_red = false;
  bool light_blue = false;
};
constexpr LocalColoring kAllColorings[4] = {
    {false, false}, {false, true}, {true, false}, {true, true}};

// One edge of a gadget, endpoints given as cell roles (normalized u < v).
struct ColoredEdge {
  int u = 0;
  int v = 0;
  EdgeColor color = EdgeColor::Black;
};

// The intended-union edge set U_G of one tile type, over the roles of a
// single cell.  p/q presence is implied by the edges using them.
struct GadgetSpec {
  Tile type = Tile::Blank;
  bool has_p = false;
  bool has_q = false;
  std::vector<ColoredEdge> edges;

  // Edges present under chi (black plus the matching shades), as role pairs.
  std::set<Edge> u_chi(const LocalColoring& chi) const;
  // Distinct noncrossing U_G^chi edge sets over the four colorings.
  std::vector<std::set<Edge>> intended_realizations(const FrameCell& cell) const;
};

using GadgetLibrary = std::map<Tile, GadgetSpec>;

// Loads and validates the 17-entry library.  File schema:
// { tile_code: { "interior": ["p","q"], "edges": [ {"u","v","color"}, ... ] } }
GadgetLibrary load_gadget_library(const std::string& path);

// CARDSIG_GADGETS env var if set, else the compiled-in default data file.
std::string default_gadget_library_path();

// Structural and geometric checks for one spec against a canonical cell:
// at most one edge per non-black color class at each vertex, no colored
// edges at cell corners, port consistency with the tile's side ports,
// each noncrossing U^chi triangulates the cell polygon, and crossings occur
// exactly at chi[light-red, light-blue] on critical tiles.  Empty = ok.
std::vector<std::string> validate_gadget(const GadgetSpec& spec, const FrameCell& cell);

// Whether `dir` (a Dir value) is constrained at `role`.  The unconstrained
// pairs are fixed: north for v0, vb1..vb4, v4; east for v0, v1..v4, vb4;
// south for v0..v3; west for v0, vb1..vb3.
bool direction_constrained(int role, int dir);

// The 16 cell boundary edges as normalized role pairs.
const std::set<Edge>& cell_boundary_edges();

// Every valid interior diagonal of the cell: both endpoints present, not a
// boundary edge, properly inside the polygon (no boundary crossing, midpoint
// strictly interior).  Role pairs, sorted.
std::vector<Edge> cell_diagonals(const FrameCell& cell);

// All triangulations of the cell's vertex set with the 16-gon boundary on
// the outer face that match some chi in every constrained direction at
// every vertex, with a single chi shared along the west boundary and a
// single chi shared along the south boundary.  Boundary edges are excluded
// from all degree counts here.  Edge sets use role pairs; deterministic
// order.
std::vector<std::set<Edge>> enumerate_valid_gadget_triangulations(
    const GadgetSpec& spec, const FrameCell& cell);

// ok (= nullopt) iff the valid triangulations equal the intended
// realizations exactly; otherwise one edge set from the symmetric
// difference.
struct GadgetCheck {
  bool ok = false;
  // A triangulation in the symmetric difference when not ok, plus whether
  // it was intended-but-not-valid (missing) or valid-but-not-intended.
  std::set<Edge> counterexample;
  bool missing_from_valid = false;
};
GadgetCheck check_gadget_correctness(const GadgetSpec& spec, const FrameCell& cell);

// ---- Assembly of the final instance from a tiling ---------------------------

// Frame for t with interior flags taken from each cell's gadget type.
// Tiling rows are top-first; frame cell (i, j) corresponds to tiling cell
// (row = h-1-j, col = i).
FrameGraph synthesize_for_tiling(const Tiling& t, const GadgetLibrary& gl);

// The cardinal signature of the whole instance: frame and cone edges count
// as black; each cell's gadget contributes its black edges in full and the
// colored classes at half weight (the per-direction colored count must be
// even at every vertex — Error{OddColoredCount} otherwise).
CardinalSignature build_signature(const Tiling& t, const GadgetLibrary& gl);

// The realization selected by sel: frame and cone edges plus each cell's
// U^chi where chi picks light red iff the cell is in sel.red and light blue
// iff in sel.blue.  Throws Error{CrossingSelection} when sel selects both
// colors on a critical cell.  The result passes validate_psl_graph and has
// signature equal to build_signature(t, gl).
PslGraph build_selected_realization(const Tiling& t, const TileSelection& sel,
                                    const GadgetLibrary& gl);

// The realization count of build_signature(t, gl), computed structurally as
// count_noncrossing_selections(t).
std::uint64_t structured_count(const Tiling& t);

}  // namespace cardsig
