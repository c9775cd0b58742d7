#pragma once

#include <string>
#include <vector>

#include "rectlay/rational.hpp"

namespace rectlay {

enum class Orientation { kHorizontal, kVertical };

std::string to_string(Orientation o);

struct Rect {
  std::string id;
  Rational x_lo, y_lo, x_hi, y_hi;

  Rational width() const { return x_hi - x_lo; }
  Rational height() const { return y_hi - y_lo; }
  /// Aspect ratio is height / width.
  Rational aspect() const { return height() / width(); }
};

/// A subdivision of bbox into rects with pairwise disjoint interiors.
/// generic == true iff no point is a corner of four rects.
struct Layout {
  Rect bbox;
  std::vector<Rect> rects;
  bool generic = true;

  const Rect* find(const std::string& id) const;
};

/// One rect side (or part of it) lying on a maximal segment.
struct SegmentSide {
  std::string rect_id;
  Rational lo, hi;
};

/// Inclusion-maximal run of collinear inner edges. For a vertical segment
/// the sides are left (left_or_below) and right (right_or_above); for a
/// horizontal segment below and above. Each side list partitions [lo, hi].
struct MaximalSegment {
  Orientation orientation;  // direction of the segment itself
  Rational axis_coord;
  Rational lo, hi;
  std::vector<SegmentSide> left_or_below;
  std::vector<SegmentSide> right_or_above;

  /// True iff the full segment equals one side of a single rect.
  bool is_side_of_some_rect() const;
};

/// Positive-length shared boundary between two rects. Canonical order:
/// for a vertical contact a is the left rect, for a horizontal contact a
/// is the lower rect. orientation describes the shared segment.
struct Contact {
  std::string a, b;
  Orientation orientation;
  Rational lo, hi;

  friend bool operator==(const Contact& x, const Contact& y) {
    return x.a == y.a && x.b == y.b && x.orientation == y.orientation;
  }
  friend bool operator<(const Contact& x, const Contact& y) {
    if (x.a != y.a) return x.a < y.a;
    if (x.b != y.b) return x.b < y.b;
    return x.orientation < y.orientation;
  }
};

/// Checks the subdivision invariants and computes the generic flag.
/// Throws OverlapError, CoverageError or DuplicateIdError.
Layout validate_layout(const Rect& bbox, std::vector<Rect> rects);

/// All maximal segments of a generic layout. Throws NongenericError.
std::vector<MaximalSegment> maximal_segments(const Layout& layout);

/// All contacts of a generic layout, sorted canonically.
/// Throws NongenericError.
std::vector<Contact> contacts(const Layout& layout);

/// Pairwise contact scan that also accepts nongeneric layouts; used when
/// comparing a possibly degenerate realization against its source.
std::vector<Contact> contacts_any(const Layout& layout);

/// Translate to the origin and scale so the bounding box has width 1.
Layout normalized(const Layout& layout);

Layout translated(const Layout& layout, const Rational& dx, const Rational& dy);
Layout scaled(const Layout& layout, const Rational& sx, const Rational& sy);
/// Quarter turn counterclockwise: (x, y) -> (-y, x).
Layout rotated_ccw(const Layout& layout);

}  // namespace rectlay
