// SPDX-License-Identifier: MIT
#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "cardsig/json_io.hpp"

namespace cardsig {

// The 17 tile types: blank, six red wire shapes, six blue wire shapes, and
// the four members of the crossing block.
enum class Tile : int {
  Blank = 0,
  RNS, REW, RNE, RNW, RSE, RSW,
  BNS, BEW, BNE, BNW, BSE, BSW,
  X1, X2, X3, X4,
};

constexpr int kTileTypeCount = 17;

// Text codes: "." for blank, "R-NS".."B-SW" for wires, "X1".."X4".
const char* tile_code(Tile t);
Tile tile_from_code(const std::string& code);

enum class Color : int { Red = 0, Blue = 1 };
const char* color_name(Color c);

// Grid side; rows are stored top-first, so North is toward row 0.
enum class Side : int { North = 0, East = 1, South = 2, West = 3 };
Side opposite(Side s);

// Whether t carries a wire of color c through side s.
bool has_port(Tile t, Color c, Side s);

// Critical tiles are the two crossing-block members where the red and the
// blue wire run through a common point (X2 and X3).
bool is_critical(Tile t);

struct Tiling {
  int width = 0;
  int height = 0;
  std::vector<std::vector<Tile>> rows;  // rows[0] is the TOP row
  Tile at(int row, int col) const { return rows[row][col]; }
};

// Text form: one row per line (first line = top row), codes separated by
// whitespace.  JSON form: { "w": int, "h": int, "rows": [[code,...],...] }.
Tiling tiling_from_text(const std::string& text);
std::string tiling_to_text(const Tiling& t);
Tiling tiling_from_json(const Json& j);
Json tiling_to_json(const Tiling& t);
// Accepts either representation (JSON iff the text starts with '{').
Tiling tiling_from_any(const std::string& text);

// Structural validation:
//  - interior interfaces agree per color: port meets port, blank side meets
//    blank side (PortMismatch);
//  - no port exits the grid boundary (OpenPath);
//  - every crossing tile sits in its complete 2x2 block (X4 has X2 due
//    north; X2 has X3 due east and X4 due south; X3 has X2 due west and X1
//    due north; X1 has X3 due south) (BrokenCrossingBlock).
// Port matching makes every trace close, so validity implies closed cycles.
void validate_tiling(const Tiling& t);

// A traced closed wire of one color.
struct Cycle {
  Color color = Color::Red;
  std::vector<std::pair<int, int>> cells;  // (row, col) along the trace
};

// All wires of a valid tiling, reds first, each starting from its
// lexicographically least cell; deterministic.
std::vector<Cycle> extract_cycles(const Tiling& t);

// One node per cycle; an edge wherever a red and a blue cycle run through
// the same crossing block (each block contributes at most one edge; two
// blocks between the same pair still give one simple edge).
struct IntersectionGraph {
  int node_count = 0;
  int red_count = 0;  // nodes [0, red_count) are the red cycles
  std::vector<std::pair<int, int>> edges;  // (red node, blue node)
};
IntersectionGraph intersection_graph(const Tiling& t);
Json intersection_graph_to_json(const IntersectionGraph& g);

// Exhaustive subset count of independent sets; an oracle, deliberately
// naive.  Throws Error{TooLarge} above max_nodes.
std::uint64_t count_independent_sets(const IntersectionGraph& g, int max_nodes = 25);

// A tile selection: the red-carrying tiles selected light, and likewise the
// blue-carrying ones.  Cells identified by (row, col).
struct TileSelection {
  std::set<std::pair<int, int>> red;   // subset of red-carrying cells
  std::set<std::pair<int, int>> blue;  // subset of blue-carrying cells
};

// True iff sel keeps each wire all-in or all-out (continuity per color
// across shared boundaries) and selects no critical tile in both colors.
bool is_noncrossing(const Tiling& t, const TileSelection& sel);

// Exact count of noncrossing selections.  Continuity collapses the choice
// to cycle subsets, counted with per-cycle conflict masks; an independent
// brute-force path over raw tile subsets cross-checks this on small grids.
std::uint64_t count_noncrossing_selections(const Tiling& t);

// The selection that keeps the given cycles (by index into extract_cycles
// order) fully selected and everything else unselected.
TileSelection selection_from_cycles(const Tiling& t, const std::vector<int>& kept);

// Brute-force reference: counts noncrossing selections by testing every
// subset pair over the red- and blue-carrying tiles.  Only for small grids;
// throws Error{TooLarge} when the carrying-tile count exceeds max_bits.
std::uint64_t count_noncrossing_selections_brute(const Tiling& t, int max_bits = 22);

// Every valid tiling of the given dimensions, in lexicographic order; the
// generator prunes by west/north interface matching and boundary ports.
std::vector<Tiling> all_valid_tilings(int width, int height);

// A pseudorandom valid tiling built by stamping non-overlapping wire motifs
// (rings and crossing pairs) onto a blank grid; deterministic per seed.
Tiling seeded_tiling(int width, int height, std::uint64_t seed);

}  // namespace cardsig
