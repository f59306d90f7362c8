// SPDX-License-Identifier: MIT
#pragma once

#include <array>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "cardsig/json_io.hpp"

namespace cardsig {

// Role indices of the up-to-18 vertices of one frame cell.  v0..v8 run
// clockwise from the northeast corner (v0) through the east and south
// boundaries to the southwest corner (v8); vb1..vb7 ("v-bar") run from next
// to v0 along the north and west boundaries back toward v8.  p and q are
// the optional interior vertices.
enum Role : int {
  R_V0 = 0, R_V1, R_V2, R_V3, R_V4, R_V5, R_V6, R_V7, R_V8,
  R_VB1, R_VB2, R_VB3, R_VB4, R_VB5, R_VB6, R_VB7,
  R_P, R_Q,
};
constexpr int kRoleCount = 18;
constexpr int kBoundaryRoleCount = 16;

const char* role_name(int role);            // "v0".."v8", "vb1".."vb7", "p", "q"
int role_from_name(const std::string& name); // throws Error{ValidationFailure}

// The 16 boundary roles in counterclockwise polygon order starting at the
// southwest corner: v8, v7, ..., v0, vb1, ..., vb7.
const std::array<int, 16>& ccw_boundary_roles();

// Corner roles: v0 (NE), v4 (SE), v8 (SW), vb4 (NW).
bool is_corner_role(int role);

// One cell's exact geometry.  Point ids are global vertex ids when the cell
// is a view into a FrameGraph, or the role indices themselves for a
// standalone canonical cell.
struct FrameCell {
  std::array<Point, 18> pts{};
  bool has_p = false;
  bool has_q = false;

  bool has_role(int role) const {
    if (role == R_P) return has_p;
    if (role == R_Q) return has_q;
    return true;
  }
  std::vector<Point> present_points() const;
};

// The canonical standalone cell used for gadget checking (ids = roles).
FrameCell canonical_cell(bool with_p, bool with_q);

// Checks every per-cell condition: the stated x-order and y-order of all
// present vertices, simplicity and orientation of the 16-gon, strict
// convexity of the four boundary chains, and the interior positions of
// p and q.  Returns human-readable violations (empty = ok).
std::vector<std::string> validate_frame_cell(const FrameCell& cell);

// A w x h grid of frame cells sharing boundary vertices, plus the cone.
// Cell (i, j) has i = column counted eastward, j = row counted northward
// (so (0, 0) is the southwest cell).
struct FrameGraph {
  int w = 0, h = 0;
  std::vector<Point> points;  // all vertices, cone included
  std::set<Edge> edges;       // cell boundaries + cone fan
  int cone_id = -1;
  // (i, j) -> role -> global vertex id (-1 where p/q is absent).
  std::map<std::pair<int, int>, std::array<int, 18>> cells;
};

// Per-cell interior flags: whether cell (i, j) carries p and/or q.
using InteriorFlags = std::map<std::pair<int, int>, std::pair<bool, bool>>;

// Deterministic exact-rational synthesis; the validator is the source of
// truth and synthesis retries coarser perturbation scales before giving up
// with Error{SynthesisFailure}.
FrameGraph synthesize_frame_geometry(int w, int h, const InteriorFlags& flags = {});

// All invariants, per cell and global: every cell passes
// validate_frame_cell, shared sides agree, the nearly-vertical paths are
// concave toward the west and on the hull of everything west of them (and
// the transposed condition for the nearly-horizontal paths), the cone sits
// southwest and fans exactly to the westmost and southmost paths, and the
// whole vertex set is in strict general position.  Empty result = ok.
std::vector<std::string> validate_frame_geometry(const FrameGraph& f);

// View of one cell's geometry with global ids.
FrameCell cell_view(const FrameGraph& f, int i, int j);

// Graph JSON of points/edges plus a "cells" sidecar mapping vertex ids to
// their (cell, role) memberships and the cone id.
Json frame_to_json(const FrameGraph& f);

}  // namespace cardsig
