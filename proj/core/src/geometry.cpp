#include "rectlay/geometry.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

#include "rectlay/errors.hpp"

namespace rectlay {

std::string to_string(Orientation o) {
  return o == Orientation::kHorizontal ? "horizontal" : "vertical";
}

const Rect* Layout::find(const std::string& id) const {
  for (const auto& r : rects)
    if (r.id == id) return &r;
  return nullptr;
}

bool MaximalSegment::is_side_of_some_rect() const {
  auto full = [&](const std::vector<SegmentSide>& sides) {
    return sides.size() == 1 && sides[0].lo == lo && sides[0].hi == hi;
  };
  return full(left_or_below) || full(right_or_above);
}

namespace {

bool interval_overlaps(const Rational& a0, const Rational& a1,
                       const Rational& b0, const Rational& b1) {
  return max(a0, b0) < min(a1, b1);
}

}  // namespace

Layout validate_layout(const Rect& bbox, std::vector<Rect> rects) {
  if (rects.empty()) throw CoverageError("layout has no rects");
  if (!(bbox.x_lo < bbox.x_hi) || !(bbox.y_lo < bbox.y_hi))
    throw CoverageError("bbox has empty interior");

  std::set<std::string> ids;
  for (const auto& r : rects) {
    if (!(r.x_lo < r.x_hi) || !(r.y_lo < r.y_hi))
      throw CoverageError("rect '" + r.id + "' has empty interior");
    if (!ids.insert(r.id).second)
      throw DuplicateIdError("duplicate rect id '" + r.id + "'");
    if (r.x_lo < bbox.x_lo || r.x_hi > bbox.x_hi || r.y_lo < bbox.y_lo ||
        r.y_hi > bbox.y_hi)
      throw CoverageError("rect '" + r.id + "' extends outside the bbox");
  }
  for (std::size_t i = 0; i < rects.size(); ++i) {
    for (std::size_t j = i + 1; j < rects.size(); ++j) {
      const Rect& a = rects[i];
      const Rect& b = rects[j];
      if (interval_overlaps(a.x_lo, a.x_hi, b.x_lo, b.x_hi) &&
          interval_overlaps(a.y_lo, a.y_hi, b.y_lo, b.y_hi))
        throw OverlapError("rects '" + a.id + "' and '" + b.id +
                           "' have intersecting interiors");
    }
  }
  Rational area_sum = 0;
  for (const auto& r : rects) area_sum += r.width() * r.height();
  if (area_sum != bbox.width() * bbox.height())
    throw CoverageError("rect areas do not sum to the bbox area");

  // A cross is a point that is a corner of four rects.
  std::map<std::pair<std::string, std::string>, int> corner_multiplicity;
  auto key = [](const Rational& x, const Rational& y) {
    return std::make_pair(x.to_string(), y.to_string());
  };
  bool generic = true;
  for (const auto& r : rects) {
    for (const auto& pt :
         {key(r.x_lo, r.y_lo), key(r.x_hi, r.y_lo), key(r.x_lo, r.y_hi),
          key(r.x_hi, r.y_hi)}) {
      if (++corner_multiplicity[pt] == 4) generic = false;
    }
  }

  Layout layout;
  layout.bbox = bbox;
  layout.rects = std::move(rects);
  layout.generic = generic;
  return layout;
}

namespace {

struct LineEntry {
  Rational lo, hi;
  std::string rect_id;
  bool high_side;  // side with the greater perpendicular coordinate
};

std::vector<MaximalSegment> segments_on_lines(
    const Layout& layout, Orientation orient,
    const Rational& boundary_lo, const Rational& boundary_hi) {
  // Group rect sides perpendicular to `orient` by their line coordinate.
  std::map<Rational, std::vector<LineEntry>> lines;
  for (const auto& r : layout.rects) {
    Rational c_lo, c_hi, s_lo, s_hi;
    if (orient == Orientation::kVertical) {
      c_lo = r.x_lo; c_hi = r.x_hi; s_lo = r.y_lo; s_hi = r.y_hi;
    } else {
      c_lo = r.y_lo; c_hi = r.y_hi; s_lo = r.x_lo; s_hi = r.x_hi;
    }
    if (c_lo != boundary_lo)
      lines[c_lo].push_back({s_lo, s_hi, r.id, true});
    if (c_hi != boundary_hi)
      lines[c_hi].push_back({s_lo, s_hi, r.id, false});
  }

  std::vector<MaximalSegment> out;
  for (auto& [coord, entries] : lines) {
    std::sort(entries.begin(), entries.end(),
              [](const LineEntry& a, const LineEntry& b) {
                if (a.lo != b.lo) return a.lo < b.lo;
                return a.rect_id < b.rect_id;
              });
    // Merge touching or overlapping intervals into maximal runs.
    std::size_t i = 0;
    while (i < entries.size()) {
      Rational run_lo = entries[i].lo;
      Rational run_hi = entries[i].hi;
      std::size_t j = i + 1;
      while (j < entries.size() && entries[j].lo <= run_hi) {
        run_hi = max(run_hi, entries[j].hi);
        ++j;
      }
      MaximalSegment seg;
      seg.orientation = orient;
      seg.axis_coord = coord;
      seg.lo = run_lo;
      seg.hi = run_hi;
      for (std::size_t k = i; k < j; ++k) {
        SegmentSide side{entries[k].rect_id, entries[k].lo, entries[k].hi};
        if (entries[k].high_side)
          seg.right_or_above.push_back(side);
        else
          seg.left_or_below.push_back(side);
      }
      out.push_back(std::move(seg));
      i = j;
    }
  }
  return out;
}

}  // namespace

std::vector<MaximalSegment> maximal_segments(const Layout& layout) {
  if (!layout.generic)
    throw NongenericError("maximal segments require a generic layout");
  std::vector<MaximalSegment> out = segments_on_lines(
      layout, Orientation::kVertical, layout.bbox.x_lo, layout.bbox.x_hi);
  std::vector<MaximalSegment> horiz = segments_on_lines(
      layout, Orientation::kHorizontal, layout.bbox.y_lo, layout.bbox.y_hi);
  out.insert(out.end(), std::make_move_iterator(horiz.begin()),
             std::make_move_iterator(horiz.end()));
  return out;
}

std::vector<Contact> contacts(const Layout& layout) {
  std::vector<Contact> out;
  for (const auto& seg : maximal_segments(layout)) {
    for (const auto& low : seg.left_or_below) {
      for (const auto& high : seg.right_or_above) {
        Rational lo = max(low.lo, high.lo);
        Rational hi = min(low.hi, high.hi);
        if (lo < hi)
          out.push_back({low.rect_id, high.rect_id, seg.orientation, lo, hi});
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Contact> contacts_any(const Layout& layout) {
  std::vector<Contact> out;
  for (std::size_t i = 0; i < layout.rects.size(); ++i) {
    for (std::size_t j = 0; j < layout.rects.size(); ++j) {
      if (i == j) continue;
      const Rect& a = layout.rects[i];
      const Rect& b = layout.rects[j];
      if (a.x_hi == b.x_lo) {
        Rational lo = max(a.y_lo, b.y_lo), hi = min(a.y_hi, b.y_hi);
        if (lo < hi)
          out.push_back({a.id, b.id, Orientation::kVertical, lo, hi});
      }
      if (a.y_hi == b.y_lo) {
        Rational lo = max(a.x_lo, b.x_lo), hi = min(a.x_hi, b.x_hi);
        if (lo < hi)
          out.push_back({a.id, b.id, Orientation::kHorizontal, lo, hi});
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Layout translated(const Layout& layout, const Rational& dx,
                  const Rational& dy) {
  Layout r = layout;
  auto shift = [&](Rect& rect) {
    rect.x_lo += dx;
    rect.x_hi += dx;
    rect.y_lo += dy;
    rect.y_hi += dy;
  };
  shift(r.bbox);
  for (auto& rect : r.rects) shift(rect);
  return r;
}

Layout scaled(const Layout& layout, const Rational& sx, const Rational& sy) {
  if (!sx.is_positive() || !sy.is_positive())
    throw Error("scale factors must be positive");
  Layout r = layout;
  auto scale = [&](Rect& rect) {
    rect.x_lo *= sx;
    rect.x_hi *= sx;
    rect.y_lo *= sy;
    rect.y_hi *= sy;
  };
  scale(r.bbox);
  for (auto& rect : r.rects) scale(rect);
  return r;
}

Layout rotated_ccw(const Layout& layout) {
  Layout r = layout;
  auto rot = [](Rect& rect) {
    Rect t = rect;
    rect.x_lo = -t.y_hi;
    rect.x_hi = -t.y_lo;
    rect.y_lo = t.x_lo;
    rect.y_hi = t.x_hi;
  };
  rot(r.bbox);
  for (auto& rect : r.rects) rot(rect);
  return r;
}

Layout normalized(const Layout& layout) {
  Layout r = translated(layout, -layout.bbox.x_lo, -layout.bbox.y_lo);
  Rational inv_w = r.bbox.width().reciprocal();
  return scaled(r, inv_w, inv_w);
}

}  // namespace rectlay
