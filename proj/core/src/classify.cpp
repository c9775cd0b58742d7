#include "rectlay/classify.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "rectlay/errors.hpp"

namespace rectlay {

std::shared_ptr<SlicingTree> SlicingTree::leaf(std::string id) {
  auto t = std::make_shared<SlicingTree>();
  t->leaf_id = std::move(id);
  return t;
}

std::shared_ptr<SlicingTree> SlicingTree::node(
    Orientation cut, std::shared_ptr<SlicingTree> first,
    std::shared_ptr<SlicingTree> second) {
  auto t = std::make_shared<SlicingTree>();
  t->cut = cut;
  t->first = std::move(first);
  t->second = std::move(second);
  return t;
}

std::vector<std::string> SlicingTree::leaf_ids() const {
  std::vector<std::string> out;
  if (is_leaf()) {
    out.push_back(*leaf_id);
    return out;
  }
  for (const auto* child : {first.get(), second.get()}) {
    auto ids = child->leaf_ids();
    out.insert(out.end(), ids.begin(), ids.end());
  }
  return out;
}

std::string SlicingTree::to_text() const {
  if (is_leaf()) return *leaf_id;
  std::string o = cut == Orientation::kVertical ? "V" : "H";
  return o + "(" + first->to_text() + "," + second->to_text() + ")";
}

std::string to_string(AruClass c) {
  switch (c) {
    case AruClass::kStronglyARU: return "StronglyARU";
    case AruClass::kWeaklyARUOnly: return "WeaklyARUOnly";
    case AruClass::kNotARU: return "NotARU";
  }
  return "?";
}

namespace {

// Recursive guillotine extraction over an index subset of layout.rects.
std::optional<std::shared_ptr<SlicingTree>> extract(
    const Layout& layout, const std::vector<int>& region) {
  if (region.size() == 1)
    return SlicingTree::leaf(layout.rects[region[0]].id);

  Rational x0 = layout.rects[region[0]].x_lo, x1 = layout.rects[region[0]].x_hi;
  Rational y0 = layout.rects[region[0]].y_lo, y1 = layout.rects[region[0]].y_hi;
  for (int i : region) {
    const Rect& r = layout.rects[i];
    x0 = min(x0, r.x_lo);
    x1 = max(x1, r.x_hi);
    y0 = min(y0, r.y_lo);
    y1 = max(y1, r.y_hi);
  }

  // A vertical line x = c is a slice iff no rect interior straddles it.
  auto try_cut = [&](Orientation orient) -> std::optional<Rational> {
    std::set<Rational> candidates;
    for (int i : region) {
      const Rect& r = layout.rects[i];
      const Rational& c =
          orient == Orientation::kVertical ? r.x_hi : r.y_hi;
      const Rational& lo = orient == Orientation::kVertical ? x0 : y0;
      const Rational& hi = orient == Orientation::kVertical ? x1 : y1;
      if (lo < c && c < hi) candidates.insert(c);
    }
    for (const Rational& c : candidates) {
      bool clean = true;
      for (int i : region) {
        const Rect& r = layout.rects[i];
        const Rational& a =
            orient == Orientation::kVertical ? r.x_lo : r.y_lo;
        const Rational& b =
            orient == Orientation::kVertical ? r.x_hi : r.y_hi;
        if (a < c && c < b) {
          clean = false;
          break;
        }
      }
      if (clean) return c;
    }
    return std::nullopt;
  };

  Orientation orient = Orientation::kVertical;
  std::optional<Rational> cut = try_cut(Orientation::kVertical);
  if (!cut) {
    orient = Orientation::kHorizontal;
    cut = try_cut(Orientation::kHorizontal);
  }
  if (!cut) return std::nullopt;

  std::vector<int> first_part, second_part;
  for (int i : region) {
    const Rect& r = layout.rects[i];
    const Rational& hi = orient == Orientation::kVertical ? r.x_hi : r.y_hi;
    (hi <= *cut ? first_part : second_part).push_back(i);
  }
  auto lhs = extract(layout, first_part);
  if (!lhs) return std::nullopt;
  auto rhs = extract(layout, second_part);
  if (!rhs) return std::nullopt;
  return SlicingTree::node(orient, *lhs, *rhs);
}

}  // namespace

std::optional<std::shared_ptr<SlicingTree>> slicing_tree(const Layout& layout) {
  if (!layout.generic)
    throw NongenericError("slicing_tree requires a generic layout");
  std::vector<int> all(layout.rects.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
  return extract(layout, all);
}

namespace {

bool segments_cross(const MaximalSegment& a, const MaximalSegment& b) {
  if (a.orientation == b.orientation) return false;
  const MaximalSegment& v = a.orientation == Orientation::kVertical ? a : b;
  const MaximalSegment& h = a.orientation == Orientation::kVertical ? b : a;
  return h.lo < v.axis_coord && v.axis_coord < h.hi && v.lo < h.axis_coord &&
         h.axis_coord < v.hi;
}

// True iff `p` (a point on the line of `host`) lies strictly inside host.
bool endpoint_in_interior(const Rational& along, const MaximalSegment& host) {
  return host.lo < along && along < host.hi;
}

}  // namespace

std::optional<Windmill> find_windmill(const Layout& layout) {
  auto segs = maximal_segments(layout);

  // Segment holding a given rect side, if any.
  auto seg_with_side = [&](Orientation orient, const Rational& axis,
                           const Rational& lo,
                           const Rational& hi) -> const MaximalSegment* {
    for (const auto& s : segs) {
      if (s.orientation != orient || s.axis_coord != axis) continue;
      if (!(lo < s.hi) || !(s.lo < hi)) continue;
      if (s.lo <= lo && hi <= s.hi) return &s;
    }
    return nullptr;
  };

  std::vector<const Rect*> order;
  for (const auto& r : layout.rects) order.push_back(&r);
  std::sort(order.begin(), order.end(),
            [](const Rect* a, const Rect* b) { return a->id < b->id; });

  for (const Rect* r : order) {
    const MaximalSegment* bottom =
        seg_with_side(Orientation::kHorizontal, r->y_lo, r->x_lo, r->x_hi);
    const MaximalSegment* right =
        seg_with_side(Orientation::kVertical, r->x_hi, r->y_lo, r->y_hi);
    const MaximalSegment* top =
        seg_with_side(Orientation::kHorizontal, r->y_hi, r->x_lo, r->x_hi);
    const MaximalSegment* left =
        seg_with_side(Orientation::kVertical, r->x_lo, r->y_lo, r->y_hi);
    if (!bottom || !right || !top || !left) continue;

    const MaximalSegment* arms[4] = {bottom, right, top, left};
    bool crossing = false;
    for (int i = 0; i < 4 && !crossing; ++i)
      for (int j = i + 1; j < 4 && !crossing; ++j)
        crossing = segments_cross(*arms[i], *arms[j]);
    if (crossing) continue;

    // ccw chirality: bottom ends inside right, right inside top, top inside
    // left, left inside bottom. cw is the mirror pattern. The far endpoint
    // of an arm lies on the host's line; the arm's own line coordinate must
    // fall strictly inside the host's span.
    bool ccw = bottom->hi == right->axis_coord &&
               endpoint_in_interior(bottom->axis_coord, *right) &&
               right->hi == top->axis_coord &&
               endpoint_in_interior(right->axis_coord, *top) &&
               top->lo == left->axis_coord &&
               endpoint_in_interior(top->axis_coord, *left) &&
               left->lo == bottom->axis_coord &&
               endpoint_in_interior(left->axis_coord, *bottom);
    bool cw = bottom->lo == left->axis_coord &&
              endpoint_in_interior(bottom->axis_coord, *left) &&
              left->hi == top->axis_coord &&
              endpoint_in_interior(left->axis_coord, *top) &&
              top->hi == right->axis_coord &&
              endpoint_in_interior(top->axis_coord, *right) &&
              right->lo == bottom->axis_coord &&
              endpoint_in_interior(right->axis_coord, *bottom);
    if (!ccw && !cw) continue;

    Windmill w;
    w.center = r->id;
    w.arms = {*bottom, *right, *top, *left};
    w.clockwise = cw;
    return w;
  }
  return std::nullopt;
}

OneSidedReport is_one_sided(const Layout& layout) {
  OneSidedReport report;
  for (const auto& seg : maximal_segments(layout)) {
    if (!seg.is_side_of_some_rect()) {
      report.one_sided = false;
      report.violations.push_back(seg);
    }
  }
  return report;
}

AruClass aru_class(const Layout& layout) {
  bool sliceable = slicing_tree(layout).has_value();
  if (!sliceable) return AruClass::kNotARU;
  return is_one_sided(layout).one_sided ? AruClass::kStronglyARU
                                        : AruClass::kWeaklyARUOnly;
}

}  // namespace rectlay
