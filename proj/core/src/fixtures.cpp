#include "rectlay/fixtures.hpp"

#include <cstdio>

namespace rectlay {
namespace fixtures {

namespace {
std::string padded(const char* prefix, std::size_t i) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%s%04zu", prefix, i);
  return buf;
}
}  // namespace

Layout brick() {
  Rect bbox{"bbox", 0, 0, 2, 3};
  std::vector<Rect> rects = {
      {"r2", 0, 0, 1, 2},  // bottom-left, tall
      {"r1", 0, 2, 1, 3},  // top-left
      {"r4", 1, 0, 2, 1},  // bottom-right, short
      {"r3", 1, 1, 2, 3},  // top-right, tall
  };
  return validate_layout(bbox, std::move(rects));
}

Layout brick_mirrored() {
  Rect bbox{"bbox", 0, 0, 2, 3};
  std::vector<Rect> rects = {
      {"r2", 1, 0, 2, 2},
      {"r1", 1, 2, 2, 3},
      {"r4", 0, 0, 1, 1},
      {"r3", 0, 1, 1, 3},
  };
  return validate_layout(bbox, std::move(rects));
}

Layout pinwheel(bool clockwise) {
  Rect bbox{"bbox", 0, 0, 3, 3};
  std::vector<Rect> rects;
  if (!clockwise) {
    rects = {
        {"c", 1, 1, 2, 2},
        {"r1", 0, 0, 2, 1},  // bottom arm
        {"r2", 2, 0, 3, 2},  // right arm
        {"r3", 1, 2, 3, 3},  // top arm
        {"r4", 0, 1, 1, 3},  // left arm
    };
  } else {
    rects = {
        {"c", 1, 1, 2, 2},
        {"r1", 1, 0, 3, 1},
        {"r2", 0, 0, 1, 2},
        {"r3", 0, 2, 2, 3},
        {"r4", 2, 1, 3, 3},
    };
  }
  return validate_layout(bbox, std::move(rects));
}

Layout pinwheel_split_arm() {
  Rect bbox{"bbox", 0, 0, 3, 3};
  std::vector<Rect> rects = {
      {"c", 1, 1, 2, 2},
      {"r1a", 0, 0, Rational(1, 2), 1},
      {"r1b", Rational(1, 2), 0, 2, 1},
      {"r2", 2, 0, 3, 2},
      {"r3", 1, 2, 3, 3},
      {"r4", 0, 1, 1, 3},
  };
  return validate_layout(bbox, std::move(rects));
}

Layout pinwheel_banded() {
  Rect bbox{"bbox", 0, -1, 3, 3};
  std::vector<Rect> rects = {
      {"b", 0, -1, 3, 0},
      {"c", 1, 1, 2, 2},
      {"r1", 0, 0, 2, 1},
      {"r2", 2, 0, 3, 2},
      {"r3", 1, 2, 3, 3},
      {"r4", 0, 1, 1, 3},
  };
  return validate_layout(bbox, std::move(rects));
}

Layout pinwheel_brick_arm() {
  Rect bbox{"bbox", 0, 0, 3, 3};
  const Rational x_split(3, 4);
  std::vector<Rect> rects = {
      {"c", 1, 1, 2, 2},
      {"a1", 0, 0, x_split, Rational(1, 3)},
      {"a2", 0, Rational(1, 3), x_split, 1},
      {"a3", x_split, 0, 2, Rational(2, 3)},
      {"a4", x_split, Rational(2, 3), 2, 1},
      {"r2", 2, 0, 3, 2},
      {"r3", 1, 2, 3, 3},
      {"r4", 0, 1, 1, 3},
  };
  return validate_layout(bbox, std::move(rects));
}

Layout stack(std::size_t n) {
  Rect bbox{"bbox", 0, 0, 1, BigInt(n)};
  std::vector<Rect> rects;
  for (std::size_t i = 0; i < n; ++i)
    rects.push_back({padded("r", i + 1), 0, BigInt(i), 1, BigInt(i + 1)});
  return validate_layout(bbox, std::move(rects));
}

PlaneGraph stack_dual(std::size_t n) {
  PlaneGraph g;
  for (std::size_t i = 0; i < n; ++i) g.labels.push_back(padded("v", i + 1));
  g.rotation.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (i > 0) g.rotation[i].push_back(static_cast<int>(i - 1));
    if (i + 1 < n) g.rotation[i].push_back(static_cast<int>(i + 1));
  }
  if (n == 1) {
    g.outer_face = {0};
    return g;
  }
  for (std::size_t i = 0; i < n; ++i)
    g.outer_face.push_back(static_cast<int>(i));
  for (std::size_t i = n - 1; i-- > 1;)
    g.outer_face.push_back(static_cast<int>(i));
  return g;
}

PlaneGraph fan_dual(std::size_t n) {
  PlaneGraph g;
  const std::size_t m = n - 1;  // rim size
  g.labels.push_back("h");
  for (std::size_t i = 0; i < m; ++i) g.labels.push_back(padded("p", i + 1));
  g.rotation.resize(n);
  for (std::size_t i = 1; i <= m; ++i)
    g.rotation[0].push_back(static_cast<int>(i));
  for (std::size_t i = 1; i <= m; ++i) {
    if (i > 1) g.rotation[i].push_back(static_cast<int>(i - 1));
    if (i < m) g.rotation[i].push_back(static_cast<int>(i + 1));
    g.rotation[i].push_back(0);
  }
  g.outer_face.push_back(0);
  for (std::size_t i = 1; i <= m; ++i)
    g.outer_face.push_back(static_cast<int>(i));
  return g;
}

}  // namespace fixtures
}  // namespace rectlay
