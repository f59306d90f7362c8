// SPDX-License-Identifier: MIT
#include "cardsig/tiling.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "cardsig/error.hpp"

namespace cardsig {

namespace {

constexpr const char* kCodes[kTileTypeCount] = {
    ".",
    "R-NS", "R-EW", "R-NE", "R-NW", "R-SE", "R-SW",
    "B-NS", "B-EW", "B-NE", "B-NW", "B-SE", "B-SW",
    "X1", "X2", "X3", "X4",
};

constexpr std::uint8_t bit(Side s) { return static_cast<std::uint8_t>(1u << static_cast<int>(s)); }

// Side bitmasks per tile: which sides carry a red / blue wire end.
struct PortMask {
  std::uint8_t red;
  std::uint8_t blue;
};

constexpr std::uint8_t N = 1, E = 2, S = 4, W = 8;

constexpr PortMask kPorts[kTileTypeCount] = {
    {0, 0},                                                          // blank
    {N | S, 0}, {E | W, 0}, {N | E, 0}, {N | W, 0}, {S | E, 0}, {S | W, 0},
    {0, N | S}, {0, E | W}, {0, N | E}, {0, N | W}, {0, S | E}, {0, S | W},
    {W | S, E | S},  // X1
    {E | S, E | S},  // X2
    {W | N, W | N},  // X3
    {N | W, N | S},  // X4
};

std::uint8_t port_mask(Tile t, Color c) {
  const PortMask& pm = kPorts[static_cast<int>(t)];
  return c == Color::Red ? pm.red : pm.blue;
}

bool carries(Tile t, Color c) { return port_mask(t, c) != 0; }

const char* side_name(Side s) {
  switch (s) {
    case Side::North: return "north";
    case Side::East: return "east";
    case Side::South: return "south";
    case Side::West: return "west";
  }
  return "?";
}

std::pair<int, int> step(int row, int col, Side s) {
  switch (s) {
    case Side::North: return {row - 1, col};
    case Side::East: return {row, col + 1};
    case Side::South: return {row + 1, col};
    case Side::West: return {row, col - 1};
  }
  return {row, col};
}

// The other wire end of color c in tile t, given the end at side s.
Side other_port(Tile t, Color c, Side s) {
  std::uint8_t m = port_mask(t, c);
  m = static_cast<std::uint8_t>(m & ~bit(s));
  for (int k = 0; k < 4; ++k)
    if (m & (1u << k)) return static_cast<Side>(k);
  throw Error(Err::ValidationFailure, "wire trace stepped into a tile without a matching port");
}

std::string cell_str(int row, int col) {
  return "row " + std::to_string(row) + " col " + std::to_string(col);
}

void check_dims(const Tiling& t) {
  if (t.width < 1 || t.height < 1)
    throw Error(Err::ValidationFailure, "tiling must be at least 1x1");
  if (static_cast<int>(t.rows.size()) != t.height)
    throw Error(Err::ValidationFailure, "tiling row count does not match height");
  for (const auto& row : t.rows)
    if (static_cast<int>(row.size()) != t.width)
      throw Error(Err::ValidationFailure, "tiling row length does not match width");
}

bool in_grid(const Tiling& t, int row, int col) {
  return row >= 0 && row < t.height && col >= 0 && col < t.width;
}

bool tile_at_is(const Tiling& t, int row, int col, Tile want) {
  return in_grid(t, row, col) && t.at(row, col) == want;
}

}  // namespace

const char* tile_code(Tile t) { return kCodes[static_cast<int>(t)]; }

Tile tile_from_code(const std::string& code) {
  for (int i = 0; i < kTileTypeCount; ++i)
    if (code == kCodes[i]) return static_cast<Tile>(i);
  throw Error(Err::ValidationFailure, "unknown tile code \"" + code + "\"");
}

const char* color_name(Color c) { return c == Color::Red ? "red" : "blue"; }

Side opposite(Side s) {
  switch (s) {
    case Side::North: return Side::South;
    case Side::East: return Side::West;
    case Side::South: return Side::North;
    case Side::West: return Side::East;
  }
  return s;
}

bool has_port(Tile t, Color c, Side s) { return (port_mask(t, c) & bit(s)) != 0; }

bool is_critical(Tile t) { return t == Tile::X2 || t == Tile::X3; }

Tiling tiling_from_text(const std::string& text) {
  Tiling t;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    std::istringstream toks(line);
    std::vector<Tile> row;
    std::string tok;
    while (toks >> tok) row.push_back(tile_from_code(tok));
    if (row.empty()) continue;  // ignore blank lines
    t.rows.push_back(std::move(row));
  }
  t.height = static_cast<int>(t.rows.size());
  t.width = t.height == 0 ? 0 : static_cast<int>(t.rows[0].size());
  check_dims(t);
  return t;
}

std::string tiling_to_text(const Tiling& t) {
  std::string out;
  for (int r = 0; r < t.height; ++r) {
    for (int c = 0; c < t.width; ++c) {
      if (c) out += ' ';
      out += tile_code(t.at(r, c));
    }
    out += '\n';
  }
  return out;
}

Tiling tiling_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("w") || !j.contains("h") || !j.contains("rows"))
    throw Error(Err::ValidationFailure, "tiling JSON needs \"w\", \"h\" and \"rows\"");
  Tiling t;
  t.width = j.at("w").get<int>();
  t.height = j.at("h").get<int>();
  if (!j.at("rows").is_array())
    throw Error(Err::ValidationFailure, "tiling \"rows\" must be an array");
  for (const Json& jrow : j.at("rows")) {
    std::vector<Tile> row;
    if (!jrow.is_array())
      throw Error(Err::ValidationFailure, "each tiling row must be an array of codes");
    for (const Json& cell : jrow) {
      if (!cell.is_string())
        throw Error(Err::ValidationFailure, "tile codes must be strings");
      row.push_back(tile_from_code(cell.get<std::string>()));
    }
    t.rows.push_back(std::move(row));
  }
  check_dims(t);
  return t;
}

Json tiling_to_json(const Tiling& t) {
  Json rows = Json::array();
  for (int r = 0; r < t.height; ++r) {
    Json row = Json::array();
    for (int c = 0; c < t.width; ++c) row.push_back(tile_code(t.at(r, c)));
    rows.push_back(std::move(row));
  }
  return Json{{"w", t.width}, {"h", t.height}, {"rows", std::move(rows)}};
}

Tiling tiling_from_any(const std::string& text) {
  std::size_t i = text.find_first_not_of(" \t\r\n");
  if (i != std::string::npos && text[i] == '{') return tiling_from_json(parse_json(text));
  return tiling_from_text(text);
}

void validate_tiling(const Tiling& t) {
  check_dims(t);
  for (int r = 0; r < t.height; ++r) {
    for (int c = 0; c < t.width; ++c) {
      Tile tile = t.at(r, c);
      for (int si = 0; si < 4; ++si) {
        Side side = static_cast<Side>(si);
        auto [nr, nc] = step(r, c, side);
        if (!in_grid(t, nr, nc)) {
          for (Color col : {Color::Red, Color::Blue})
            if (has_port(tile, col, side))
              throw Error(Err::OpenPath, std::string(color_name(col)) + " wire at " +
                                             cell_str(r, c) + " exits the grid through its " +
                                             side_name(side) + " side");
          continue;
        }
        // Check each interior interface once, from its north/west cell.
        if (side != Side::East && side != Side::South) continue;
        Tile other = t.at(nr, nc);
        for (Color col : {Color::Red, Color::Blue}) {
          if (has_port(tile, col, side) != has_port(other, col, opposite(side)))
            throw Error(Err::PortMismatch,
                        std::string(color_name(col)) + " interface between " + cell_str(r, c) +
                            " and " + cell_str(nr, nc) + " has a wire end on one side only");
        }
      }
      // Each crossing tile must sit in its complete staircase block.
      bool block_ok = true;
      switch (tile) {
        case Tile::X1: block_ok = tile_at_is(t, r + 1, c, Tile::X3); break;
        case Tile::X2:
          block_ok = tile_at_is(t, r, c + 1, Tile::X3) && tile_at_is(t, r + 1, c, Tile::X4);
          break;
        case Tile::X3:
          block_ok = tile_at_is(t, r, c - 1, Tile::X2) && tile_at_is(t, r - 1, c, Tile::X1);
          break;
        case Tile::X4: block_ok = tile_at_is(t, r - 1, c, Tile::X2); break;
        default: break;
      }
      if (!block_ok)
        throw Error(Err::BrokenCrossingBlock, std::string(tile_code(tile)) + " at " +
                                                  cell_str(r, c) +
                                                  " is not part of a complete crossing block");
    }
  }
}

std::vector<Cycle> extract_cycles(const Tiling& t) {
  std::vector<Cycle> cycles;
  for (Color col : {Color::Red, Color::Blue}) {
    std::vector<std::vector<bool>> seen(t.height, std::vector<bool>(t.width, false));
    for (int r = 0; r < t.height; ++r) {
      for (int c = 0; c < t.width; ++c) {
        if (seen[r][c] || !carries(t.at(r, c), col)) continue;
        Cycle cyc;
        cyc.color = col;
        cyc.cells.push_back({r, c});
        seen[r][c] = true;
        // Leave the start through its lowest-numbered port side.
        std::uint8_t m = port_mask(t.at(r, c), col);
        Side exit = Side::North;
        for (int k = 0; k < 4; ++k)
          if (m & (1u << k)) { exit = static_cast<Side>(k); break; }
        int cr = r, cc = c;
        while (true) {
          auto [nr, nc] = step(cr, cc, exit);
          if (!in_grid(t, nr, nc))
            throw Error(Err::OpenPath, std::string(color_name(col)) + " wire at " +
                                           cell_str(cr, cc) + " exits the grid");
          if (nr == r && nc == c) break;
          cyc.cells.push_back({nr, nc});
          seen[nr][nc] = true;
          exit = other_port(t.at(nr, nc), col, opposite(exit));
          cr = nr;
          cc = nc;
        }
        cycles.push_back(std::move(cyc));
      }
    }
  }
  return cycles;
}

IntersectionGraph intersection_graph(const Tiling& t) {
  std::vector<Cycle> cycles = extract_cycles(t);
  IntersectionGraph g;
  g.node_count = static_cast<int>(cycles.size());
  std::map<std::pair<int, int>, int> red_at, blue_at;
  for (int i = 0; i < g.node_count; ++i) {
    auto& dest = cycles[i].color == Color::Red ? red_at : blue_at;
    if (cycles[i].color == Color::Red) g.red_count = i + 1;
    for (const auto& cell : cycles[i].cells) dest[cell] = i;
  }
  std::set<std::pair<int, int>> edges;
  for (int r = 0; r < t.height; ++r)
    for (int c = 0; c < t.width; ++c)
      if (t.at(r, c) == Tile::X2)  // exactly one X2 per crossing block
        edges.insert({red_at.at({r, c}), blue_at.at({r, c})});
  g.edges.assign(edges.begin(), edges.end());
  return g;
}

Json intersection_graph_to_json(const IntersectionGraph& g) {
  Json nodes = Json::array();
  std::vector<std::vector<int>> adj(g.node_count);
  for (const auto& [a, b] : g.edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  for (int i = 0; i < g.node_count; ++i) {
    std::sort(adj[i].begin(), adj[i].end());
    nodes.push_back(Json{{"id", i},
                         {"color", i < g.red_count ? "red" : "blue"},
                         {"adj", adj[i]}});
  }
  Json edges = Json::array();
  for (const auto& [a, b] : g.edges) edges.push_back(Json::array({a, b}));
  return Json{{"nodes", std::move(nodes)}, {"edges", std::move(edges)}};
}

std::uint64_t count_independent_sets(const IntersectionGraph& g, int max_nodes) {
  if (g.node_count > max_nodes)
    throw Error(Err::TooLarge, "independent-set oracle limited to " + std::to_string(max_nodes) +
                                   " nodes; graph has " + std::to_string(g.node_count));
  std::vector<std::uint32_t> adj(static_cast<std::size_t>(std::max(g.node_count, 1)), 0);
  for (const auto& [a, b] : g.edges) {
    adj[a] |= 1u << b;
    adj[b] |= 1u << a;
  }
  // Deliberately naive include/exclude sweep; this is the reference oracle.
  std::uint64_t total = 0;
  std::vector<std::pair<int, std::uint32_t>> stack{{0, 0u}};
  while (!stack.empty()) {
    auto [i, used] = stack.back();
    stack.pop_back();
    if (i == g.node_count) {
      ++total;
      continue;
    }
    stack.push_back({i + 1, used});
    if ((adj[i] & used) == 0) stack.push_back({i + 1, used | (1u << i)});
  }
  return total;
}

bool is_noncrossing(const Tiling& t, const TileSelection& sel) {
  for (const auto& [r, c] : sel.red)
    if (!in_grid(t, r, c) || !carries(t.at(r, c), Color::Red))
      throw Error(Err::ValidationFailure,
                  "selection names a cell without a red wire at " + cell_str(r, c));
  for (const auto& [r, c] : sel.blue)
    if (!in_grid(t, r, c) || !carries(t.at(r, c), Color::Blue))
      throw Error(Err::ValidationFailure,
                  "selection names a cell without a blue wire at " + cell_str(r, c));
  for (int r = 0; r < t.height; ++r) {
    for (int c = 0; c < t.width; ++c) {
      Tile tile = t.at(r, c);
      // Continuity across each interface a wire runs through.
      for (Side side : {Side::East, Side::South}) {
        auto [nr, nc] = step(r, c, side);
        if (!in_grid(t, nr, nc)) continue;
        for (Color col : {Color::Red, Color::Blue}) {
          if (!has_port(tile, col, side)) continue;
          const auto& chosen = col == Color::Red ? sel.red : sel.blue;
          if (chosen.count({r, c}) != chosen.count({nr, nc})) return false;
        }
      }
      if (is_critical(tile) && sel.red.count({r, c}) && sel.blue.count({r, c})) return false;
    }
  }
  return true;
}

TileSelection selection_from_cycles(const Tiling& t, const std::vector<int>& kept) {
  std::vector<Cycle> cycles = extract_cycles(t);
  TileSelection sel;
  for (int i : kept) {
    if (i < 0 || i >= static_cast<int>(cycles.size()))
      throw Error(Err::ValidationFailure, "cycle index " + std::to_string(i) + " out of range");
    auto& dest = cycles[i].color == Color::Red ? sel.red : sel.blue;
    dest.insert(cycles[i].cells.begin(), cycles[i].cells.end());
  }
  return sel;
}

std::uint64_t count_noncrossing_selections(const Tiling& t) {
  validate_tiling(t);
  std::vector<Cycle> cycles = extract_cycles(t);
  int n = static_cast<int>(cycles.size());
  if (n > 25)
    throw Error(Err::TooLarge,
                "selection count limited to 25 wires; tiling has " + std::to_string(n));
  int reds = 0;
  while (reds < n && cycles[reds].color == Color::Red) ++reds;
  int blues = n - reds;
  // conflict[i] = blue cycles meeting red cycle i in a critical tile.
  std::map<std::pair<int, int>, int> blue_at;
  for (int j = reds; j < n; ++j)
    for (const auto& cell : cycles[j].cells) blue_at[cell] = j - reds;
  std::vector<std::uint32_t> conflict(static_cast<std::size_t>(std::max(reds, 1)), 0);
  for (int i = 0; i < reds; ++i)
    for (const auto& [r, c] : cycles[i].cells)
      if (is_critical(t.at(r, c))) conflict[i] |= 1u << blue_at.at({r, c});
  // Sum over red subsets: blues avoiding every selected red's conflicts.
  std::uint64_t total = 0;
  std::vector<std::pair<int, std::uint32_t>> stack{{0, 0u}};
  while (!stack.empty()) {
    auto [i, forb] = stack.back();
    stack.pop_back();
    if (i == reds) {
      int blocked = 0;
      for (std::uint32_t m = forb; m; m &= m - 1) ++blocked;
      total += std::uint64_t{1} << (blues - blocked);
      continue;
    }
    stack.push_back({i + 1, forb});
    stack.push_back({i + 1, forb | conflict[i]});
  }
  return total;
}

std::uint64_t count_noncrossing_selections_brute(const Tiling& t, int max_bits) {
  validate_tiling(t);
  // One bit per wire-carrying (cell, color) slot.
  std::map<std::pair<int, int>, int> red_bit, blue_bit;
  int bits = 0;
  for (int r = 0; r < t.height; ++r)
    for (int c = 0; c < t.width; ++c) {
      if (carries(t.at(r, c), Color::Red)) red_bit[{r, c}] = bits++;
      if (carries(t.at(r, c), Color::Blue)) blue_bit[{r, c}] = bits++;
    }
  if (bits > max_bits)
    throw Error(Err::TooLarge, "brute-force selection count limited to " +
                                   std::to_string(max_bits) + " wire slots; tiling has " +
                                   std::to_string(bits));
  // Continuity: equal bits across every interface a wire runs through.
  std::vector<std::pair<int, int>> equal, exclusive;
  for (int r = 0; r < t.height; ++r)
    for (int c = 0; c < t.width; ++c) {
      for (Side side : {Side::East, Side::South}) {
        auto [nr, nc] = step(r, c, side);
        if (!in_grid(t, nr, nc)) continue;
        if (has_port(t.at(r, c), Color::Red, side))
          equal.push_back({red_bit.at({r, c}), red_bit.at({nr, nc})});
        if (has_port(t.at(r, c), Color::Blue, side))
          equal.push_back({blue_bit.at({r, c}), blue_bit.at({nr, nc})});
      }
      if (is_critical(t.at(r, c)))
        exclusive.push_back({red_bit.at({r, c}), blue_bit.at({r, c})});
    }
  std::uint64_t total = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << bits); ++mask) {
    bool ok = true;
    for (const auto& [a, b] : equal)
      if (((mask >> a) & 1) != ((mask >> b) & 1)) { ok = false; break; }
    if (ok)
      for (const auto& [a, b] : exclusive)
        if (((mask >> a) & 1) && ((mask >> b) & 1)) { ok = false; break; }
    if (ok) ++total;
  }
  return total;
}

namespace {

// Interface and block rules checkable when cells to the west and north are
// already placed; the final validate_tiling call is the arbiter.
bool placement_ok(const Tiling& t, int r, int c, Tile cand) {
  for (Color col : {Color::Red, Color::Blue}) {
    if (c == 0 && has_port(cand, col, Side::West)) return false;
    if (r == 0 && has_port(cand, col, Side::North)) return false;
    if (c == t.width - 1 && has_port(cand, col, Side::East)) return false;
    if (r == t.height - 1 && has_port(cand, col, Side::South)) return false;
    if (c > 0 && has_port(cand, col, Side::West) !=
                     has_port(t.at(r, c - 1), col, Side::East))
      return false;
    if (r > 0 && has_port(cand, col, Side::North) !=
                     has_port(t.at(r - 1, c), col, Side::South))
      return false;
  }
  if (cand == Tile::X4 && !tile_at_is(t, r - 1, c, Tile::X2)) return false;
  if (cand == Tile::X3 &&
      !(tile_at_is(t, r, c - 1, Tile::X2) && tile_at_is(t, r - 1, c, Tile::X1)))
    return false;
  if (r > 0 && t.at(r - 1, c) == Tile::X2 && cand != Tile::X4) return false;
  if (r > 0 && t.at(r - 1, c) == Tile::X1 && cand != Tile::X3) return false;
  if (c > 0 && t.at(r, c - 1) == Tile::X2 && cand != Tile::X3) return false;
  return true;
}

void generate(Tiling& t, int r, int c, std::vector<Tiling>& out) {
  if (r == t.height) {
    validate_tiling(t);  // the generator must only reach valid grids
    out.push_back(t);
    return;
  }
  int nr = c + 1 == t.width ? r + 1 : r;
  int nc = c + 1 == t.width ? 0 : c + 1;
  for (int k = 0; k < kTileTypeCount; ++k) {
    Tile cand = static_cast<Tile>(k);
    if (!placement_ok(t, r, c, cand)) continue;
    t.rows[r][c] = cand;
    generate(t, nr, nc, out);
  }
  t.rows[r][c] = Tile::Blank;
}

}  // namespace

std::vector<Tiling> all_valid_tilings(int width, int height) {
  if (width < 1 || height < 1)
    throw Error(Err::ValidationFailure, "tiling dimensions must be positive");
  Tiling t;
  t.width = width;
  t.height = height;
  t.rows.assign(height, std::vector<Tile>(width, Tile::Blank));
  std::vector<Tiling> out;
  generate(t, 0, 0, out);
  return out;
}

namespace {

Tile ring_tile(Color col, int r, int c, int r0, int c0, int r1, int c1) {
  bool top = r == r0, bottom = r == r1, left = c == c0, right = c == c1;
  Tile red;
  if (top && left) red = Tile::RSE;
  else if (top && right) red = Tile::RSW;
  else if (bottom && left) red = Tile::RNE;
  else if (bottom && right) red = Tile::RNW;
  else if (top || bottom) red = Tile::REW;
  else red = Tile::RNS;
  if (col == Color::Red) return red;
  return static_cast<Tile>(static_cast<int>(red) + 6);  // blue block mirrors red
}

// The smallest grid holding one crossing: two interlocking wires whose
// staircase block occupies the middle.
const char* kCrossingMotif =
    "R-SE R-EW X1 B-SW\n"
    "R-NS X2 X3 B-NS\n"
    "R-NE X4 . B-NS\n"
    ". B-NE B-EW B-NW\n";

}  // namespace

Tiling seeded_tiling(int width, int height, std::uint64_t seed) {
  if (width < 2 || height < 2)
    throw Error(Err::ValidationFailure, "seeded tilings need at least a 2x2 grid");
  std::mt19937_64 rng(seed);
  Tiling t;
  t.width = width;
  t.height = height;
  t.rows.assign(height, std::vector<Tile>(width, Tile::Blank));
  std::vector<std::vector<bool>> used(height, std::vector<bool>(width, false));
  Tiling cross = tiling_from_text(kCrossingMotif);

  auto box_free = [&](int r0, int c0, int hh, int ww) {
    for (int r = r0; r < r0 + hh; ++r)
      for (int c = c0; c < c0 + ww; ++c)
        if (used[r][c]) return false;
    return true;
  };
  auto box_mark = [&](int r0, int c0, int hh, int ww) {
    for (int r = r0; r < r0 + hh; ++r)
      for (int c = c0; c < c0 + ww; ++c) used[r][c] = true;
  };

  int motifs = 1 + static_cast<int>(rng() % 4);
  for (int m = 0; m < motifs; ++m) {
    int kind = static_cast<int>(rng() % 3);  // 0 red ring, 1 blue ring, 2 crossing
    if (kind == 2 && (width < 4 || height < 4)) kind = static_cast<int>(rng() % 2);
    for (int attempt = 0; attempt < 60; ++attempt) {
      if (kind == 2) {
        int r0 = static_cast<int>(rng() % static_cast<std::uint64_t>(height - 3));
        int c0 = static_cast<int>(rng() % static_cast<std::uint64_t>(width - 3));
        if (!box_free(r0, c0, 4, 4)) continue;
        for (int r = 0; r < 4; ++r)
          for (int c = 0; c < 4; ++c) t.rows[r0 + r][c0 + c] = cross.at(r, c);
        box_mark(r0, c0, 4, 4);
        break;
      }
      int hh = 2 + static_cast<int>(rng() % static_cast<std::uint64_t>(height - 1));
      int ww = 2 + static_cast<int>(rng() % static_cast<std::uint64_t>(width - 1));
      if (hh > height) hh = height;
      if (ww > width) ww = width;
      int r0 = static_cast<int>(rng() % static_cast<std::uint64_t>(height - hh + 1));
      int c0 = static_cast<int>(rng() % static_cast<std::uint64_t>(width - ww + 1));
      if (!box_free(r0, c0, hh, ww)) continue;
      Color col = kind == 0 ? Color::Red : Color::Blue;
      int r1 = r0 + hh - 1, c1 = c0 + ww - 1;
      for (int r = r0; r <= r1; ++r)
        for (int c = c0; c <= c1; ++c)
          if (r == r0 || r == r1 || c == c0 || c == c1)
            t.rows[r][c] = ring_tile(col, r, c, r0, c0, r1, c1);
      box_mark(r0, c0, hh, ww);
      break;
    }
  }
  validate_tiling(t);
  return t;
}

}  // namespace cardsig
