// SPDX-License-Identifier: MIT
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <vector>

#include "cardsig/error.hpp"
#include "cardsig/realize.hpp"

using namespace cardsig;

namespace {

Point pt(int id, long x, long y) { return Point{id, Rat(x), Rat(y)}; }

std::vector<Point> random_points(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coord(0, 400);
  while (true) {
    std::vector<Point> pts;
    for (int i = 0; i < n; ++i) {
      pts.push_back(pt(i, coord(rng), coord(rng)));
    }
    try {
      validate_general_position(pts);
      return pts;
    } catch (const Error&) {
      continue;  // resample until strictly generic
    }
  }
}

// Independent reference: count signature realizations by brute force over
// all 2^(n choose 2) edge subsets.  Only for tiny n.
std::uint64_t brute_count(const CardinalSignature& sig) {
  const std::vector<Point>& pts = sig.points;
  int n = static_cast<int>(pts.size());
  std::vector<std::pair<int, int>> cand;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) cand.push_back({i, j});
  int m = static_cast<int>(cand.size());
  REQUIRE(m <= 20);
  std::vector<std::uint32_t> conflict(m, 0);
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b)
      if (proper_cross(pts[cand[a].first], pts[cand[a].second],
                       pts[cand[b].first], pts[cand[b].second])) {
        conflict[a] |= 1u << b;
        conflict[b] |= 1u << a;
      }
  std::uint64_t count = 0;
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    bool crossing = false;
    for (int a = 0; a < m && !crossing; ++a)
      if ((mask >> a) & 1u) crossing = (mask & conflict[a]) != 0;
    if (crossing) continue;
    std::map<int, DegreeQuad> quads;
    for (const auto& p : pts) quads[p.id];
    for (int a = 0; a < m; ++a) {
      if (!((mask >> a) & 1u)) continue;
      const Point& u = pts[cand[a].first];
      const Point& v = pts[cand[a].second];
      quads[u.id][v.y > u.y ? DIR_N : DIR_S]++;
      quads[v.id][u.y > v.y ? DIR_N : DIR_S]++;
      quads[u.id][v.x > u.x ? DIR_E : DIR_W]++;
      quads[v.id][u.x > v.x ? DIR_E : DIR_W]++;
    }
    if (quads == sig.degrees) count++;
  }
  return count;
}

std::vector<std::vector<Edge>> collect(const CardinalSignature& sig,
                                       const CountOptions& opts = {}) {
  std::vector<std::vector<Edge>> out;
  enumerate_realizations(
      sig, [&](const std::vector<Edge>& e) { out.push_back(e); }, opts);
  return out;
}

}  // namespace

TEST_CASE("triangulation counts of convex polygons are Catalan numbers") {
  std::vector<Point> four = {pt(0, 0, 0), pt(1, 5, 1), pt(2, 6, 6), pt(3, 1, 5)};
  std::vector<Point> five = {pt(0, 0, 3), pt(1, 2, 0), pt(2, 6, 1), pt(3, 7, 5),
                             pt(4, 3, 7)};
  std::vector<Point> six = {pt(0, 0, 3), pt(1, 2, 0), pt(2, 5, 1),
                            pt(3, 7, 4), pt(4, 4, 8), pt(5, 1, 6)};
  REQUIRE(convex_hull(four).size() == 4);
  REQUIRE(convex_hull(five).size() == 5);
  REQUIRE(convex_hull(six).size() == 6);
  CHECK(count_triangulations(four) == 2);
  CHECK(count_triangulations(five) == 5);
  CHECK(count_triangulations(six) == 14);
}

TEST_CASE("every enumerated triangulation is a valid maximal PSL graph") {
  std::vector<Point> pts = {pt(0, 0, 0), pt(1, 5, 1), pt(2, 6, 6), pt(3, 1, 5),
                            pt(4, 3, 2)};
  std::uint64_t count = enumerate_triangulations(pts, [&](const std::vector<Edge>& edges) {
    PslGraph g{pts, edges};
    CHECK_NOTHROW(validate_psl_graph(g));
    CHECK(is_maximal(g));
    CHECK(edges.size() == 3 * 5 - 4 - 3);
  });
  CHECK(count > 0);
}

TEST_CASE("count matches brute force on random small instances") {
  // Saturated signatures (from triangulations) and sparse ones (from
  // subgraphs) on 4 and 5 points.
  for (std::uint64_t seed : {1u, 2u, 3u, 4u, 5u, 6u}) {
    std::vector<Point> pts = random_points(seed % 2 ? 4 : 5, seed);
    // Build one triangulation to take signatures from.
    std::vector<std::vector<Edge>> tris;
    enumerate_triangulations(pts, [&](const std::vector<Edge>& e) {
      if (tris.empty()) tris.push_back(e);
    });
    REQUIRE(!tris.empty());

    PslGraph full{pts, tris[0]};
    CardinalSignature sat = cardinal_signature(full);
    CHECK(count_realizations(sat).count == brute_count(sat));

    PslGraph sparse{pts, {tris[0].begin(), tris[0].begin() + 2}};
    CardinalSignature thin = cardinal_signature(sparse);
    CHECK(count_realizations(thin).count == brute_count(thin));

    // The empty signature has exactly one realization: the empty graph.
    PslGraph empty{pts, {}};
    CardinalSignature zero = cardinal_signature(empty);
    CHECK(count_realizations(zero).count == 1);
  }
}

TEST_CASE("triangulations partition by signature and the engine counts each class") {
  std::vector<Point> pts = {pt(0, 0, 0), pt(1, 5, 1), pt(2, 6, 6), pt(3, 1, 5),
                            pt(4, 3, 2)};
  std::map<std::string, std::uint64_t> classes;
  std::map<std::string, CardinalSignature> rep;
  enumerate_triangulations(pts, [&](const std::vector<Edge>& e) {
    CardinalSignature s = cardinal_signature(PslGraph{pts, e});
    std::string key;
    for (const auto& [id, q] : s.degrees) {
      key += std::to_string(id) + ":" + std::to_string(q.n) + "," +
             std::to_string(q.s) + "," + std::to_string(q.e) + "," +
             std::to_string(q.w) + ";";
    }
    classes[key]++;
    rep.emplace(key, s);
  });
  REQUIRE(!classes.empty());
  for (const auto& [key, expected] : classes) {
    CardinalSignature sig = rep.at(key);
    CHECK(is_saturated(sig));
    CHECK(count_realizations(sig).count == expected);
    // Every realization of a saturated signature is maximal.
    for (const auto& edges : collect(sig)) {
      CHECK(is_maximal(PslGraph{pts, edges}));
    }
  }
}

TEST_CASE("the originating graph is among its signature's realizations") {
  for (std::uint64_t seed : {11u, 12u, 13u}) {
    std::vector<Point> pts = random_points(6, seed);
    std::vector<Edge> first;
    enumerate_triangulations(pts, [&](const std::vector<Edge>& e) {
      if (first.empty()) first = e;
    });
    REQUIRE(!first.empty());
    CardinalSignature sig = cardinal_signature(PslGraph{pts, first});
    std::set<Edge> forced = forced_hull_edges(sig);
    bool found = false;
    for (const auto& edges : collect(sig)) {
      if (edges == first) found = true;
      // Forced edges occur in every realization.
      for (const Edge& f : forced) {
        CHECK(std::binary_search(edges.begin(), edges.end(), f));
      }
    }
    CHECK(found);
  }
}

TEST_CASE("prunings do not change counts, only speed") {
  std::vector<Point> pts = random_points(6, 99);
  std::vector<Edge> first;
  enumerate_triangulations(pts, [&](const std::vector<Edge>& e) {
    if (first.empty()) first = e;
  });
  CardinalSignature sat = cardinal_signature(PslGraph{pts, first});
  PslGraph half{pts, {first.begin(), first.begin() + 4}};
  CardinalSignature thin = cardinal_signature(half);

  for (const CardinalSignature* sig : {&sat, &thin}) {
    std::uint64_t reference = 0;
    for (int mask = 0; mask < 16; ++mask) {
      CountOptions opts;
      opts.prune.residual_feasibility = mask & 1;
      opts.prune.crossing_conflicts = mask & 2;
      opts.prune.forced_edges = mask & 4;
      opts.prune.connectivity = mask & 8;
      std::uint64_t got = count_realizations(*sig, opts).count;
      if (mask == 0) {
        reference = got;
      } else {
        CHECK(got == reference);
      }
    }
    CHECK(reference > 0);
  }
}

TEST_CASE("enumeration is deterministic and the limit is honored") {
  std::vector<Point> pts = {pt(0, 0, 0), pt(1, 5, 1), pt(2, 6, 6), pt(3, 1, 5),
                            pt(4, 3, 2)};
  std::vector<Edge> first;
  enumerate_triangulations(pts, [&](const std::vector<Edge>& e) {
    if (first.empty()) first = e;
  });
  CardinalSignature sig = cardinal_signature(PslGraph{pts, first});

  auto a = collect(sig);
  auto b = collect(sig);
  CHECK(a == b);
  REQUIRE(a.size() >= 1);

  CountOptions limited;
  limited.limit = 1;
  CountResult r = count_realizations(sig, limited);
  CHECK(r.count == 1);
  if (a.size() > 1) CHECK(r.hit_limit);

  CountOptions threaded;
  threaded.threads = 3;
  CHECK(count_realizations(sig, threaded).count == a.size());

  CountResult plain = count_realizations(sig);
  CHECK(plain.pruning ==
        std::vector<std::string>{"residual", "conflict", "forced", "connectivity"});
  CHECK(plain.elapsed_ms >= 0.0);
}

TEST_CASE("thread splitting matches sequential counts on busier instances") {
  std::vector<Point> pts = random_points(7, 1234);
  std::vector<Edge> first;
  enumerate_triangulations(pts, [&](const std::vector<Edge>& e) {
    if (first.empty()) first = e;
  });
  CardinalSignature sig = cardinal_signature(PslGraph{pts, first});
  std::uint64_t seq = count_realizations(sig).count;
  for (int threads : {2, 4}) {
    CountOptions opts;
    opts.threads = threads;
    CHECK(count_realizations(sig, opts).count == seq);
  }
}

TEST_CASE("fixed-size noncrossing enumeration handles polygons and errors") {
  // Convex quadrilateral as a polygon: boundary forced, one of the two
  // diagonals completes each triangulation.
  std::vector<Point> quad = {pt(0, 0, 0), pt(1, 5, 1), pt(2, 6, 6), pt(3, 1, 5)};
  std::vector<Edge> cands = {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 2}, {1, 3}};
  std::set<Edge> forced = {{0, 1}, {1, 2}, {2, 3}, {0, 3}};
  std::uint64_t cnt = enumerate_max_noncrossing(
      quad, cands, forced, 2 * 4 + 3 * 0 - 3, [](const std::vector<Edge>&) {});
  CHECK(cnt == 2);

  // Nonconvex quadrilateral (dart): only the diagonal to the reflex vertex
  // is admissible, so exactly one triangulation.
  std::vector<Point> dart = {pt(0, 0, 0), pt(1, 6, 1), pt(2, 2, 2), pt(3, 3, 7)};
  std::vector<Edge> dart_cands = {{0, 1}, {1, 3}, {2, 3}, {0, 2}, {1, 2}};
  std::set<Edge> dart_forced = {{0, 1}, {1, 3}, {2, 3}, {0, 2}};
  CHECK(enumerate_max_noncrossing(dart, dart_cands, dart_forced, 5,
                                  [](const std::vector<Edge>&) {}) == 1);

  try {
    enumerate_max_noncrossing(quad, cands, {{0, 5}}, 5, [](const std::vector<Edge>&) {});
    FAIL_CHECK("expected ValidationFailure");
  } catch (const Error& e) {
    CHECK(e.code() == Err::ValidationFailure);
  }
}
