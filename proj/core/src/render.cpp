#include "rectlay/render.hpp"

#include <set>

#include "rectlay/errors.hpp"

namespace rectlay {

namespace {

const char* kDefaultFills[] = {"#a6cee3", "#b2df8a", "#fdbf6f", "#cab2d6",
                               "#fb9a99", "#ffff99", "#80b1d3", "#fccde5"};

std::string fmt(const Rational& r) { return r.to_decimal(6); }

}  // namespace

std::string render_svg(const Layout& layout, const RenderOptions& opts) {
  if (opts.width_px < 64) throw Error("width_px must be at least 64");

  const Rect& bb = layout.bbox;
  Rational scale = Rational(opts.width_px) / bb.width();
  Rational height_px = bb.height() * scale;

  auto sx = [&](const Rational& x) { return fmt((x - bb.x_lo) * scale); };
  auto sy = [&](const Rational& y) { return fmt((bb.y_hi - y) * scale); };

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " +
         std::to_string(opts.width_px) + " " + fmt(height_px) +
         "\" width=\"" + std::to_string(opts.width_px) + "\" height=\"" +
         fmt(height_px) + "\">\n";

  std::set<std::string> highlighted(opts.highlight_rects.begin(),
                                    opts.highlight_rects.end());
  const bool mono = opts.palette == "mono";
  std::size_t color_idx = 0;
  for (const auto& r : layout.rects) {
    std::string fill =
        mono ? "#ffffff"
             : kDefaultFills[color_idx++ %
                             (sizeof kDefaultFills / sizeof *kDefaultFills)];
    svg += "  <rect x=\"" + sx(r.x_lo) + "\" y=\"" + sy(r.y_hi) +
           "\" width=\"" + fmt(r.width() * scale) + "\" height=\"" +
           fmt(r.height() * scale) + "\" fill=\"" + fill +
           "\" stroke=\"#444444\" stroke-width=\"1\"/>\n";
    if (opts.label) {
      Rational cx = (r.x_lo + r.x_hi) / Rational(2);
      Rational cy = (r.y_lo + r.y_hi) / Rational(2);
      svg += "  <text x=\"" + sx(cx) + "\" y=\"" + sy(cy) +
             "\" font-size=\"12\" text-anchor=\"middle\" "
             "dominant-baseline=\"middle\">" +
             r.id + "</text>\n";
    }
  }
  for (const auto& r : layout.rects) {
    if (!highlighted.count(r.id)) continue;
    svg += "  <rect x=\"" + sx(r.x_lo) + "\" y=\"" + sy(r.y_hi) +
           "\" width=\"" + fmt(r.width() * scale) + "\" height=\"" +
           fmt(r.height() * scale) +
           "\" fill=\"none\" stroke=\"#d62728\" stroke-width=\"3\"/>\n";
  }
  if (!opts.highlight_segments.empty()) {
    auto segs = maximal_segments(layout);
    for (std::size_t idx : opts.highlight_segments) {
      if (idx >= segs.size()) throw Error("highlight segment out of range");
      const MaximalSegment& s = segs[idx];
      std::string x1, y1, x2, y2;
      if (s.orientation == Orientation::kVertical) {
        x1 = x2 = sx(s.axis_coord);
        y1 = sy(s.lo);
        y2 = sy(s.hi);
      } else {
        y1 = y2 = sy(s.axis_coord);
        x1 = sx(s.lo);
        x2 = sx(s.hi);
      }
      svg += "  <line x1=\"" + x1 + "\" y1=\"" + y1 + "\" x2=\"" + x2 +
             "\" y2=\"" + y2 +
             "\" stroke=\"#d62728\" stroke-width=\"3\"/>\n";
    }
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace rectlay
