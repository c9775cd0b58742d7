#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rectlay/classify.hpp"
#include "rectlay/geometry.hpp"

namespace rectlay {

/// Aspect ratio (height/width) per rect id. All values must be positive.
struct AspectAssignment {
  std::map<std::string, Rational> ratios;
};

enum class RealizeMode { kStrong, kWeak };

struct RealizationReport {
  Layout layout;  // the realization, normalized, possibly nongeneric
  RealizeMode mode = RealizeMode::kStrong;
  bool equivalent = false;
  std::vector<Contact> gained;  // contacts present only in the realization
  std::vector<Contact> lost;    // contacts present only in the input
  bool generic = true;
};

/// Composes the unique realization of a slicing tree under an aspect
/// assignment: a leaf of ratio a is a 1 x a box; children are uniformly
/// scaled so the shared edge matches. Output is normalized to width 1 with
/// the lower-left corner at the origin.
Layout realize_sliceable(const SlicingTree& tree, const AspectAssignment& alpha);

/// Exact decision procedure for strong realizability of an assignment on a
/// sliceable layout: realize, then compare contacts. Throws
/// NotSliceableError when the layout has no slicing tree.
RealizationReport strong_realizability(const Layout& layout,
                                       const AspectAssignment& alpha);

/// For a sliceable layout that is not one-sided, builds an assignment that
/// is strongly non-realizable by staggering the cuts beside a two-sided
/// segment. Returns nullopt for one-sided layouts.
std::optional<AspectAssignment> brick_witness(const Layout& layout);

/// For a non-sliceable layout, builds the quadrant-based assignment around
/// a windmill of the reduced irreducible core. Returns nullopt for
/// sliceable layouts.
std::optional<AspectAssignment> windmill_witness(const Layout& layout);

}  // namespace rectlay
