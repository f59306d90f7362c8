// SPDX-License-Identifier: MIT
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "cardsig/error.hpp"
#include "cardsig/geometry.hpp"
#include "cardsig/rational.hpp"

using namespace cardsig;

namespace {

Point pt(int id, long x, long y) { return Point{id, Rat(x), Rat(y)}; }

template <typename F>
void expect_err(Err code, F&& f) {
  try {
    f();
    FAIL_CHECK("expected error ", to_string(code), " but nothing was thrown");
  } catch (const Error& e) {
    CHECK(e.code() == code);
  }
}

}  // namespace

TEST_CASE("rational parse and format round-trip") {
  CHECK(format_rat(parse_rat("8/4")) == "2/1");
  CHECK(format_rat(parse_rat("-3")) == "-3/1");
  CHECK(format_rat(parse_rat("3/-6")) == "-1/2");
  CHECK(format_rat(parse_rat("0/5")) == "0/1");
  CHECK(parse_rat("1/3") + parse_rat("1/6") == parse_rat("1/2"));
  expect_err(Err::ValidationFailure, [] { parse_rat(""); });
  expect_err(Err::ValidationFailure, [] { parse_rat("1/0"); });
  expect_err(Err::ValidationFailure, [] { parse_rat("a/2"); });
  expect_err(Err::ValidationFailure, [] { parse_rat("1 / 2"); });
  expect_err(Err::ValidationFailure, [] { parse_rat("1/2/3"); });
  expect_err(Err::ValidationFailure, [] { parse_rat("1.5"); });
}

TEST_CASE("orientation sign convention") {
  Point a = pt(0, 0, 0), b = pt(1, 1, 0), c = pt(2, 0, 1);
  CHECK(orientation(a, b, c) == 1);   // counterclockwise
  CHECK(orientation(a, c, b) == -1);  // clockwise
  CHECK(orientation(a, b, pt(3, 2, 0)) == 0);
  // Exactness: a slope mismatch of 1/10^12 is still detected.
  Point f1 = pt(0, 0, 0);
  Point f2 = Point{1, Rat(1), Rat(1)};
  Point f3 = Point{2, Rat(2), Rat(2) + parse_rat("1/1000000000000")};
  CHECK(orientation(f1, f2, f3) == 1);
}

TEST_CASE("proper crossing is open-interior intersection") {
  Point a = pt(0, 0, 0), b = pt(1, 4, 4), c = pt(2, 0, 4), d = pt(3, 4, 0);
  CHECK(proper_cross(a, b, c, d));
  CHECK(proper_cross(c, d, a, b));
  // Shared endpoint never counts as a crossing.
  CHECK_FALSE(proper_cross(a, b, a, c));
  CHECK_FALSE(proper_cross(a, b, b, c));
  // Disjoint segments.
  CHECK_FALSE(proper_cross(a, c, pt(4, 1, 0), pt(5, 4, 1)));
  // An endpoint touching the other segment's interior is not a proper cross.
  CHECK_FALSE(proper_cross(a, b, pt(4, 2, 2), pt(5, 3, 0)));
}

TEST_CASE("strictly_between") {
  Point a = pt(0, 0, 0), b = pt(1, 4, 2);
  CHECK(strictly_between(a, b, pt(2, 2, 1)));
  CHECK_FALSE(strictly_between(a, b, a));
  CHECK_FALSE(strictly_between(a, b, b));
  CHECK_FALSE(strictly_between(a, b, pt(2, 6, 3)));   // collinear but outside
  CHECK_FALSE(strictly_between(a, b, pt(2, 2, 2)));   // off the line
}

TEST_CASE("convex hull is counterclockwise from the westmost point") {
  std::vector<Point> square = {pt(10, 0, 0), pt(11, 5, 1), pt(12, 6, 6), pt(13, 1, 5)};
  CHECK(convex_hull(square) == std::vector<int>{10, 11, 12, 13});

  // Interior points are excluded.
  std::vector<Point> with_inner = square;
  with_inner.push_back(pt(14, 3, 3));
  CHECK(convex_hull(with_inner) == std::vector<int>{10, 11, 12, 13});

  std::vector<Point> tri = {pt(1, 0, 0), pt(2, 4, 1), pt(3, 2, 5)};
  CHECK(convex_hull(tri) == std::vector<int>{1, 2, 3});

  expect_err(Err::FewerThanThreePoints,
             [] { convex_hull({pt(0, 0, 0), pt(1, 1, 1)}); });
}

TEST_CASE("general-position validation") {
  std::vector<Point> good = {pt(0, 0, 0), pt(1, 2, 1), pt(2, 1, 3), pt(3, 3, 2)};
  CHECK_NOTHROW(validate_general_position(good));

  expect_err(Err::DuplicateX, [] {
    validate_general_position({pt(0, 0, 0), pt(1, 0, 1), pt(2, 1, 2)});
  });
  expect_err(Err::DuplicateY, [] {
    validate_general_position({pt(0, 0, 0), pt(1, 1, 2), pt(2, 2, 0)});
  });
  expect_err(Err::CollinearTriple, [] {
    validate_general_position({pt(0, 0, 0), pt(1, 1, 1), pt(2, 2, 2), pt(3, 3, 5)});
  });
  expect_err(Err::ValidationFailure, [] {
    validate_general_position({pt(0, 0, 0), pt(0, 1, 2), pt(2, 2, 1)});
  });
  // Collinear scan can be skipped on request.
  CHECK_NOTHROW(validate_general_position(
      {pt(0, 0, 0), pt(1, 1, 1), pt(2, 2, 2), pt(3, 3, 5)}, false));
}

TEST_CASE("shear keeps y and shifts x by lambda*y") {
  Point p = Point{7, Rat(3), Rat(4)};
  Point q = shear(p, parse_rat("1/2"));
  CHECK(q.id == 7);
  CHECK(q.x == Rat(5));
  CHECK(q.y == Rat(4));
}

TEST_CASE("order-preserving shear bound is tight") {
  std::vector<Point> pts = {pt(0, 0, 0), pt(1, 2, 7), pt(2, 5, 3), pt(3, 9, 10)};
  Rat bound = order_preserving_shear_bound(pts);
  CHECK(bound > 0);

  auto x_order = [](const std::vector<Point>& v) {
    std::vector<int> ids;
    std::vector<const Point*> s;
    for (const auto& p : v) s.push_back(&p);
    std::sort(s.begin(), s.end(),
              [](const Point* a, const Point* b) { return a->x < b->x; });
    for (const Point* p : s) ids.push_back(p->id);
    return ids;
  };
  std::vector<int> before = x_order(pts);

  for (const char* lam : {"1/2", "-1/2", "999/1000", "-999/1000"}) {
    std::vector<Point> sheared = shear(pts, parse_rat(lam) * bound);
    CHECK(x_order(sheared) == before);
    CHECK_NOTHROW(validate_general_position(sheared, false));
    // Orientation of every triple is invariant under any shear.
    for (size_t i = 0; i < pts.size(); ++i)
      for (size_t j = 0; j < pts.size(); ++j)
        for (size_t k = 0; k < pts.size(); ++k)
          CHECK(orientation(sheared[i], sheared[j], sheared[k]) ==
                orientation(pts[i], pts[j], pts[k]));
  }

  // At exactly the bound (in one direction or the other) some pair
  // collides in x, so the bound is tight.
  bool collide = false;
  for (const Rat& lambda : {Rat(bound), Rat(-bound)}) {
    std::vector<Point> at_bound = shear(pts, lambda);
    for (size_t i = 0; i < at_bound.size(); ++i)
      for (size_t j = i + 1; j < at_bound.size(); ++j)
        if (at_bound[i].x == at_bound[j].x) collide = true;
  }
  CHECK(collide);
}
