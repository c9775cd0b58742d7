#include <doctest.h>

#include <algorithm>

#include "rectlay/enumerate.hpp"
#include "rectlay/errors.hpp"
#include "rectlay/fixtures.hpp"
#include "rectlay/geometry.hpp"

using namespace rectlay;

namespace {

Layout unit_square() {
  Rect bbox{"bbox", 0, 0, 1, 1};
  return validate_layout(bbox, {{"r1", 0, 0, 1, 1}});
}

Layout vertical_split() {
  Rect bbox{"bbox", 0, 0, 1, 1};
  return validate_layout(
      bbox, {{"r1", 0, 0, Rational(1, 2), 1}, {"r2", Rational(1, 2), 0, 1, 1}});
}

Layout quadrant_cross() {
  Rect bbox{"bbox", 0, 0, 1, 1};
  Rational h(1, 2);
  return validate_layout(bbox, {{"a", 0, 0, h, h},
                                {"b", h, 0, 1, h},
                                {"c", 0, h, h, 1},
                                {"d", h, h, 1, 1}});
}

}  // namespace

TEST_CASE("validate_layout accepts the identity case") {
  Layout l = unit_square();
  CHECK(l.rects.size() == 1);
  CHECK(l.generic);
}

TEST_CASE("validate_layout accepts a two-rect split") {
  CHECK(vertical_split().generic);
}

TEST_CASE("four quadrants meeting at the center are nongeneric") {
  CHECK_FALSE(quadrant_cross().generic);
}

TEST_CASE("validate_layout rejects overlap, gaps and duplicate ids") {
  Rect bbox{"bbox", 0, 0, 1, 1};
  CHECK_THROWS_AS(
      validate_layout(bbox, {{"a", 0, 0, Rational(2, 3), 1},
                             {"b", Rational(1, 3), 0, 1, 1}}),
      OverlapError);
  CHECK_THROWS_AS(
      validate_layout(bbox, {{"a", 0, 0, Rational(1, 2), 1}}), CoverageError);
  CHECK_THROWS_AS(
      validate_layout(bbox, {{"a", 0, 0, Rational(1, 2), 1},
                             {"a", Rational(1, 2), 0, 1, 1}}),
      DuplicateIdError);
}

TEST_CASE("two-rect split has one maximal segment and one vertical contact") {
  Layout l = vertical_split();
  auto segs = maximal_segments(l);
  REQUIRE(segs.size() == 1);
  CHECK(segs[0].orientation == Orientation::kVertical);
  CHECK(segs[0].axis_coord == Rational(1, 2));
  CHECK(segs[0].is_side_of_some_rect());

  auto cs = contacts(l);
  REQUIRE(cs.size() == 1);
  CHECK(cs[0].a == "r1");
  CHECK(cs[0].b == "r2");
  CHECK(cs[0].orientation == Orientation::kVertical);
}

TEST_CASE("pinwheel has four maximal segments and eight contacts") {
  Layout l = fixtures::pinwheel(false);
  CHECK(maximal_segments(l).size() == 4);
  auto cs = contacts(l);
  CHECK(cs.size() == 8);
  // center touches all four arms
  int center_contacts = 0;
  for (const auto& c : cs)
    if (c.a == "c" || c.b == "c") ++center_contacts;
  CHECK(center_contacts == 4);
}

TEST_CASE("three-rect stack has exactly the two adjacent contacts") {
  Layout l = fixtures::stack(3);
  auto cs = contacts(l);
  REQUIRE(cs.size() == 2);
  CHECK(cs[0].a == "r0001");
  CHECK(cs[0].b == "r0002");
  CHECK(cs[1].a == "r0002");
  CHECK(cs[1].b == "r0003");
  for (const auto& c : cs) CHECK(c.orientation == Orientation::kHorizontal);
}

TEST_CASE("nongeneric layouts are rejected by segment and contact queries") {
  Layout cross = quadrant_cross();
  CHECK_THROWS_AS(maximal_segments(cross), NongenericError);
  CHECK_THROWS_AS(contacts(cross), NongenericError);
}

TEST_CASE("segment count is n-1 over the full enumeration") {
  for (std::size_t n = 1; n <= 6; ++n) {
    for (const auto& tree : enumerate_slicing_trees(n)) {
      Layout l = tree_to_layout(*tree);
      CHECK(maximal_segments(l).size() == n - 1);
    }
  }
}

TEST_CASE("contacts are independent of rect order") {
  Layout l = fixtures::brick();
  std::vector<Rect> shuffled = l.rects;
  std::reverse(shuffled.begin(), shuffled.end());
  Layout m = validate_layout(l.bbox, shuffled);
  CHECK(contacts(l) == contacts(m));
}

TEST_CASE("revalidating a constructed layout never fails") {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (const auto& tree : enumerate_slicing_trees(n)) {
      Layout l = tree_to_layout(*tree);
      Layout again = validate_layout(l.bbox, l.rects);
      CHECK(again.generic == l.generic);
      Layout norm = normalized(l);
      CHECK(norm.bbox.width() == Rational(1));
      CHECK(norm.bbox.x_lo == Rational(0));
      CHECK(norm.bbox.y_lo == Rational(0));
      CHECK_NOTHROW(validate_layout(norm.bbox, norm.rects));
    }
  }
}

TEST_CASE("transforms preserve validity") {
  Layout l = fixtures::pinwheel(false);
  Layout r = rotated_ccw(l);
  CHECK_NOTHROW(validate_layout(r.bbox, r.rects));
  CHECK(r.bbox.width() == l.bbox.height());
  Layout s = scaled(l, Rational(3), Rational(5, 7));
  CHECK_NOTHROW(validate_layout(s.bbox, s.rects));
  CHECK_THROWS_AS(scaled(l, Rational(-1), Rational(1)), Error);
}
