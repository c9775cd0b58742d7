#include "rectlay/realize.hpp"

#include <algorithm>
#include <set>

#include "rectlay/errors.hpp"

namespace rectlay {

namespace {

const Rational& ratio_for(const AspectAssignment& alpha,
                          const std::string& id) {
  auto it = alpha.ratios.find(id);
  if (it == alpha.ratios.end())
    throw Error("assignment is missing rect '" + id + "'");
  if (!it->second.is_positive())
    throw Error("assignment for '" + id + "' must be positive");
  return it->second;
}

// Raw recursive composition; coordinates are normalized by the caller.
Layout compose(const SlicingTree& tree, const AspectAssignment& alpha) {
  if (tree.is_leaf()) {
    Layout leaf;
    leaf.bbox = {"bbox", 0, 0, 1, ratio_for(alpha, *tree.leaf_id)};
    leaf.rects.push_back({*tree.leaf_id, 0, 0, 1, leaf.bbox.y_hi});
    leaf.generic = true;
    return leaf;
  }
  Layout a = compose(*tree.first, alpha);
  Layout b = compose(*tree.second, alpha);
  if (tree.cut == Orientation::kVertical) {
    // Uniform-scale b to a's height and attach on the right.
    Rational s = a.bbox.height() / b.bbox.height();
    b = scaled(b, s, s);
    b = translated(b, a.bbox.x_hi - b.bbox.x_lo, a.bbox.y_lo - b.bbox.y_lo);
  } else {
    Rational s = a.bbox.width() / b.bbox.width();
    b = scaled(b, s, s);
    b = translated(b, a.bbox.x_lo - b.bbox.x_lo, a.bbox.y_hi - b.bbox.y_lo);
  }
  Layout out;
  out.bbox = {"bbox", a.bbox.x_lo, a.bbox.y_lo,
              tree.cut == Orientation::kVertical ? b.bbox.x_hi : a.bbox.x_hi,
              tree.cut == Orientation::kVertical ? a.bbox.y_hi : b.bbox.y_hi};
  out.rects = a.rects;
  out.rects.insert(out.rects.end(), b.rects.begin(), b.rects.end());
  return out;
}

}  // namespace

Layout realize_sliceable(const SlicingTree& tree,
                         const AspectAssignment& alpha) {
  Layout raw = compose(tree, alpha);
  raw = normalized(raw);
  // Revalidation computes the generic flag; the composition itself can
  // produce a cross when cuts on both sides of a slice align.
  return validate_layout(raw.bbox, raw.rects);
}

RealizationReport strong_realizability(const Layout& layout,
                                       const AspectAssignment& alpha) {
  auto tree = slicing_tree(layout);
  if (!tree) throw NotSliceableError("layout admits no slicing tree");

  RealizationReport report;
  report.mode = RealizeMode::kStrong;
  report.layout = realize_sliceable(**tree, alpha);
  report.generic = report.layout.generic;

  std::vector<Contact> before = contacts_any(layout);
  std::vector<Contact> after = contacts_any(report.layout);
  std::set_difference(after.begin(), after.end(), before.begin(), before.end(),
                      std::back_inserter(report.gained));
  std::set_difference(before.begin(), before.end(), after.begin(), after.end(),
                      std::back_inserter(report.lost));
  report.equivalent =
      report.gained.empty() && report.lost.empty() && report.generic;
  return report;
}

namespace {

// Swap the two axes of a layout (reflection across the diagonal).
Layout transposed(const Layout& layout) {
  Layout t = layout;
  auto flip = [](Rect& r) {
    std::swap(r.x_lo, r.y_lo);
    std::swap(r.x_hi, r.y_hi);
  };
  flip(t.bbox);
  for (auto& r : t.rects) flip(r);
  return t;
}

struct NodeRegion {
  const SlicingTree* node;
  Rational x0, y0, x1, y1;
};

// Region of every node of the tree, as realized in `layout` itself.
void node_regions(const SlicingTree& t, const Layout& layout,
                  std::vector<NodeRegion>& out) {
  Rational x0, y0, x1, y1;
  bool first = true;
  for (const auto& id : t.leaf_ids()) {
    const Rect* r = layout.find(id);
    if (!r) throw Error("tree leaf not present in layout");
    if (first) {
      x0 = r->x_lo; y0 = r->y_lo; x1 = r->x_hi; y1 = r->y_hi;
      first = false;
    } else {
      x0 = min(x0, r->x_lo);
      y0 = min(y0, r->y_lo);
      x1 = max(x1, r->x_hi);
      y1 = max(y1, r->y_hi);
    }
  }
  out.push_back({&t, x0, y0, x1, y1});
  if (!t.is_leaf()) {
    node_regions(*t.first, layout, out);
    node_regions(*t.second, layout, out);
  }
}

// Multiplies the assignment ratio of every leaf under `node` by `factor`
// (a pure vertical stretch of that region).
void stretch_region(const SlicingTree& node, const Rational& factor,
                    AspectAssignment& alpha) {
  for (const auto& id : node.leaf_ids()) alpha.ratios[id] *= factor;
}

std::optional<AspectAssignment> brick_witness_vertical(
    const Layout& layout, const MaximalSegment& ell) {
  auto tree_opt = slicing_tree(layout);
  if (!tree_opt) throw NotSliceableError("layout admits no slicing tree");
  const SlicingTree& tree = **tree_opt;

  std::vector<NodeRegion> regions;
  node_regions(tree, layout, regions);

  // The tree node whose vertical cut realizes ell.
  const NodeRegion* host = nullptr;
  for (const auto& nr : regions) {
    if (nr.node->is_leaf() || nr.node->cut != Orientation::kVertical) continue;
    // cut coordinate = right edge of the first child's region
    std::vector<NodeRegion> sub;
    node_regions(*nr.node->first, layout, sub);
    if (sub.front().x1 == ell.axis_coord && nr.y0 == ell.lo &&
        nr.y1 == ell.hi) {
      host = &nr;
      break;
    }
  }
  if (!host) throw Error("segment does not match any tree cut");

  // Descend to the subtrees abutting ell from the left and from the right;
  // they keep the full height of the host region.
  const SlicingTree* left = host->node->first.get();
  while (!left->is_leaf() && left->cut == Orientation::kVertical)
    left = left->second.get();
  const SlicingTree* right = host->node->second.get();
  while (!right->is_leaf() && right->cut == Orientation::kVertical)
    right = right->first.get();
  if (left->is_leaf() || right->is_leaf())
    throw Error("two-sided segment bounded by a single rect");
  if (left->cut != Orientation::kHorizontal ||
      right->cut != Orientation::kHorizontal)
    throw Error("expected horizontal cuts beside a two-sided segment");

  auto region_of = [&](const SlicingTree* node) -> const NodeRegion& {
    for (const auto& nr : regions)
      if (nr.node == node) return nr;
    throw Error("node region not found");
  };
  const NodeRegion& lb = region_of(left->first.get());
  const NodeRegion& rb = region_of(right->first.get());
  Rational a = lb.y1;  // left cut height
  Rational b = rb.y1;  // right cut height

  AspectAssignment alpha;
  for (const auto& r : layout.rects) alpha.ratios[r.id] = r.aspect();

  // Give the four regions bounding-box ratios that swap the stagger.
  auto set_region_ratio = [&](const SlicingTree* node, const Rational& target) {
    const NodeRegion& nr = region_of(node);
    Rational current = (nr.y1 - nr.y0) / (nr.x1 - nr.x0);
    stretch_region(*node, target / current, alpha);
  };
  if (a > b) {
    set_region_ratio(left->first.get(), Rational(1));
    set_region_ratio(left->second.get(), Rational(2));
    set_region_ratio(right->first.get(), Rational(2));
    set_region_ratio(right->second.get(), Rational(1));
  } else {
    set_region_ratio(left->first.get(), Rational(2));
    set_region_ratio(left->second.get(), Rational(1));
    set_region_ratio(right->first.get(), Rational(1));
    set_region_ratio(right->second.get(), Rational(2));
  }
  return alpha;
}

}  // namespace

std::optional<AspectAssignment> brick_witness(const Layout& layout) {
  if (!slicing_tree(layout))
    throw NotSliceableError("brick_witness requires a sliceable layout");
  OneSidedReport report = is_one_sided(layout);
  if (report.one_sided) return std::nullopt;

  // Deterministic pick: first violation, vertical before horizontal, then
  // by coordinates.
  std::vector<MaximalSegment> violations = report.violations;
  std::sort(violations.begin(), violations.end(),
            [](const MaximalSegment& x, const MaximalSegment& y) {
              if (x.orientation != y.orientation)
                return x.orientation == Orientation::kVertical;
              if (x.axis_coord != y.axis_coord)
                return x.axis_coord < y.axis_coord;
              return x.lo < y.lo;
            });
  const MaximalSegment& ell = violations.front();
  if (ell.orientation == Orientation::kVertical)
    return brick_witness_vertical(layout, ell);

  // Horizontal segment: work in the transposed layout, then invert ratios.
  Layout t = transposed(layout);
  t = validate_layout(t.bbox, t.rects);
  MaximalSegment flipped = ell;
  flipped.orientation = Orientation::kVertical;
  auto beta = brick_witness_vertical(t, flipped);
  if (!beta) return std::nullopt;
  AspectAssignment alpha;
  for (const auto& [id, ratio] : beta->ratios)
    alpha.ratios[id] = ratio.reciprocal();
  return alpha;
}

namespace {

// A sub-rectangle region whose interior rects tile it exactly.
struct SubRegion {
  Rational x0, y0, x1, y1;
  std::vector<std::size_t> members;  // indices into layout.rects
};

std::vector<SubRegion> sublayout_regions(const Layout& layout,
                                         bool include_full) {
  std::set<Rational> xs, ys;
  for (const auto& r : layout.rects) {
    xs.insert(r.x_lo);
    xs.insert(r.x_hi);
    ys.insert(r.y_lo);
    ys.insert(r.y_hi);
  }
  std::vector<Rational> xv(xs.begin(), xs.end()), yv(ys.begin(), ys.end());
  std::vector<SubRegion> out;
  for (std::size_t i = 0; i < xv.size(); ++i) {
    for (std::size_t j = i + 1; j < xv.size(); ++j) {
      for (std::size_t k = 0; k < yv.size(); ++k) {
        for (std::size_t l = k + 1; l < yv.size(); ++l) {
          SubRegion reg{xv[i], yv[k], xv[j], yv[l], {}};
          bool ok = true;
          Rational area = 0;
          for (std::size_t m = 0; m < layout.rects.size() && ok; ++m) {
            const Rect& r = layout.rects[m];
            bool inside = reg.x0 <= r.x_lo && r.x_hi <= reg.x1 &&
                          reg.y0 <= r.y_lo && r.y_hi <= reg.y1;
            bool outside = !(max(reg.x0, r.x_lo) < min(reg.x1, r.x_hi) &&
                             max(reg.y0, r.y_lo) < min(reg.y1, r.y_hi));
            if (inside) {
              reg.members.push_back(m);
              area += r.width() * r.height();
            } else if (!outside) {
              ok = false;
            }
          }
          if (!ok || reg.members.size() < 2) continue;
          if (area != (reg.x1 - reg.x0) * (reg.y1 - reg.y0)) continue;
          if (!include_full && reg.members.size() == layout.rects.size())
            continue;
          out.push_back(std::move(reg));
        }
      }
    }
  }
  return out;
}

Layout extract_sublayout(const Layout& layout, const SubRegion& reg) {
  Rect bbox{"bbox", reg.x0, reg.y0, reg.x1, reg.y1};
  std::vector<Rect> rects;
  for (std::size_t m : reg.members) rects.push_back(layout.rects[m]);
  return validate_layout(bbox, std::move(rects));
}

bool region_sliceable(const Layout& layout, const SubRegion& reg) {
  return slicing_tree(extract_sublayout(layout, reg)).has_value();
}

}  // namespace

std::optional<AspectAssignment> windmill_witness(const Layout& layout) {
  if (slicing_tree(layout)) return std::nullopt;

  // Minimal (by rect count) nonsliceable sub-rectangle region.
  std::vector<SubRegion> candidates = sublayout_regions(layout, true);
  const SubRegion* minimal = nullptr;
  for (const auto& reg : candidates) {
    if (region_sliceable(layout, reg)) continue;
    if (!minimal || reg.members.size() < minimal->members.size())
      minimal = &reg;
  }
  if (!minimal) throw Error("nonsliceable layout without nonsliceable core");

  Layout core = extract_sublayout(layout, *minimal);

  // Collapse maximal proper sublayouts of the core until irreducible.
  struct Group {
    std::string id;
    Layout sub;  // the collapsed sublayout in original coordinates
  };
  std::vector<Group> groups;
  int group_counter = 0;
  while (true) {
    std::vector<SubRegion> subs = sublayout_regions(core, false);
    if (subs.empty()) break;
    const SubRegion* biggest = &subs.front();
    for (const auto& s : subs)
      if (s.members.size() > biggest->members.size()) biggest = &s;
    Group g;
    g.id = "__group" + std::to_string(++group_counter);
    g.sub = extract_sublayout(core, *biggest);
    // Replace members with one rect.
    std::vector<Rect> remaining;
    std::set<std::size_t> drop(biggest->members.begin(),
                               biggest->members.end());
    for (std::size_t m = 0; m < core.rects.size(); ++m)
      if (!drop.count(m)) remaining.push_back(core.rects[m]);
    remaining.push_back(
        {g.id, biggest->x0, biggest->y0, biggest->x1, biggest->y1});
    core = validate_layout(core.bbox, std::move(remaining));
    groups.push_back(std::move(g));
  }

  auto windmill = find_windmill(core);
  if (!windmill) throw Error("irreducible nonsliceable core has no windmill");
  const Rect* center = core.find(windmill->center);
  const std::size_t n = core.rects.size();
  const Rational six_n(BigInt(6) * BigInt(n));
  const Rational six_n_sq(BigInt(6) * BigInt(n) * BigInt(n));
  const Rational q13 = six_n;                     // Q1 / Q3
  const Rational q24 = six_n_sq.reciprocal();     // Q2 / Q4
  const Rational split_h = six_n + six_n_sq.reciprocal();
  const Rational split_v =
      (six_n.reciprocal() + six_n_sq).reciprocal();

  struct Ray {
    Orientation orient;
    Rational coord;      // line coordinate
    Rational lo, hi;     // span
  };
  std::vector<Ray> h_rays, v_rays;
  const Rect& bb = core.bbox;
  if (!windmill->clockwise) {
    h_rays.push_back({Orientation::kHorizontal, center->y_lo, center->x_hi,
                      bb.x_hi});  // east
    h_rays.push_back({Orientation::kHorizontal, center->y_hi, bb.x_lo,
                      center->x_lo});  // west
    v_rays.push_back({Orientation::kVertical, center->x_hi, center->y_hi,
                      bb.y_hi});  // north
    v_rays.push_back({Orientation::kVertical, center->x_lo, bb.y_lo,
                      center->y_lo});  // south
  } else {
    h_rays.push_back({Orientation::kHorizontal, center->y_lo, bb.x_lo,
                      center->x_lo});  // west
    h_rays.push_back({Orientation::kHorizontal, center->y_hi, center->x_hi,
                      bb.x_hi});  // east
    v_rays.push_back({Orientation::kVertical, center->x_lo, center->y_hi,
                      bb.y_hi});  // north
    v_rays.push_back({Orientation::kVertical, center->x_hi, bb.y_lo,
                      center->y_lo});  // south
  }

  auto split_by = [](const Rect& r, const Ray& ray) {
    if (ray.orient == Orientation::kHorizontal)
      return r.y_lo < ray.coord && ray.coord < r.y_hi &&
             max(r.x_lo, ray.lo) < min(r.x_hi, ray.hi);
    return r.x_lo < ray.coord && ray.coord < r.x_hi &&
           max(r.y_lo, ray.lo) < min(r.y_hi, ray.hi);
  };

  AspectAssignment reduced;
  for (const auto& r : core.rects) {
    if (r.id == windmill->center) {
      reduced.ratios[r.id] = Rational(1);
      continue;
    }
    bool hs = split_by(r, h_rays[0]) || split_by(r, h_rays[1]);
    bool vs = split_by(r, v_rays[0]) || split_by(r, v_rays[1]);
    if (hs) {
      reduced.ratios[r.id] = split_h;
      continue;
    }
    if (vs) {
      reduced.ratios[r.id] = split_v;
      continue;
    }
    // Quadrant of the rect's center point.
    Rational px = (r.x_lo + r.x_hi) / Rational(2);
    Rational py = (r.y_lo + r.y_hi) / Rational(2);
    bool q1, q2, q3, q4;
    if (!windmill->clockwise) {
      q1 = px > center->x_hi && py > center->y_lo;
      q2 = py > center->y_hi && px < center->x_hi;
      q3 = px < center->x_lo && py < center->y_hi;
      q4 = py < center->y_lo && px > center->x_lo;
    } else {
      q1 = py > center->y_hi && px > center->x_lo;
      q2 = px < center->x_lo && py > center->y_lo;
      q3 = py < center->y_lo && px < center->x_hi;
      q4 = px > center->x_hi && py < center->y_hi;
    }
    if (q1 || q3)
      reduced.ratios[r.id] = q13;
    else if (q2 || q4)
      reduced.ratios[r.id] = q24;
    else
      throw Error("rect '" + r.id + "' not classified by any quadrant");
  }

  // Expand collapsed groups in reverse order: give each group's sublayout
  // the group's ratio by a vertical stretch and read off leaf ratios.
  std::map<std::string, Rational> expanded(reduced.ratios.begin(),
                                           reduced.ratios.end());
  for (auto it = groups.rbegin(); it != groups.rend(); ++it) {
    auto found = expanded.find(it->id);
    if (found == expanded.end())
      throw Error("collapsed group lost its assigned ratio");
    Rational target = found->second;
    expanded.erase(found);
    Rational current = it->sub.bbox.height() / it->sub.bbox.width();
    Rational stretch = target / current;
    for (const auto& r : it->sub.rects)
      expanded[r.id] = r.aspect() * stretch;
  }

  AspectAssignment alpha;
  for (const auto& r : layout.rects) {
    auto found = expanded.find(r.id);
    alpha.ratios[r.id] = found != expanded.end() ? found->second : r.aspect();
  }
  return alpha;
}

}  // namespace rectlay
