#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "rectlay/geometry.hpp"

namespace rectlay {

struct RenderOptions {
  int width_px = 512;  // must be >= 64
  bool label = false;
  std::vector<std::string> highlight_rects;
  std::vector<std::size_t> highlight_segments;  // indices into
                                                // maximal_segments(layout)
  std::string palette = "default";              // "default" or "mono"
};

/// Deterministic SVG: one filled rect element per rect plus one stroke
/// element per highlight. Byte-identical output for identical inputs;
/// rationals are rounded to 6 significant digits only here.
std::string render_svg(const Layout& layout, const RenderOptions& opts);

}  // namespace rectlay
