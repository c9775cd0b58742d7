#pragma once

#include <cstddef>

#include "rectlay/dualgraph.hpp"
#include "rectlay/geometry.hpp"

namespace rectlay {
namespace fixtures {

/// Four rects in two columns with staggered horizontal cuts: sliceable but
/// not one-sided. r2 sits bottom-left under r1, r4 bottom-right under r3;
/// the left cut (y = 2/3) is above the right cut (y = 1/3), so r2 and r3
/// are in contact.
Layout brick();

/// Mirrored stagger with the same dual up to relabeling.
Layout brick_mirrored();

/// Five rects spiraling around a center: one-sided but not sliceable.
Layout pinwheel(bool clockwise = false);

/// Pinwheel whose bottom arm is split in two: six rects, still one-sided,
/// still not sliceable.
Layout pinwheel_split_arm();

/// Pinwheel on top of a full-width band: six rects, not sliceable.
Layout pinwheel_banded();

/// Pinwheel whose bottom arm is a two-column stagger: eight rects, not
/// sliceable and not one-sided.
Layout pinwheel_brick_arm();

/// n rects stacked bottom-to-top in a unit-width column.
Layout stack(std::size_t n);

/// Dual of stack(n): the path graph v0001 - v0002 - ... with its embedding.
PlaneGraph stack_dual(std::size_t n);

/// Dual of a full-height rect beside an (n-1)-stack: hub adjacent to every
/// stack rect. Vertex h is the hub; p0001..p(n-1) form the rim path.
PlaneGraph fan_dual(std::size_t n);

}  // namespace fixtures
}  // namespace rectlay
