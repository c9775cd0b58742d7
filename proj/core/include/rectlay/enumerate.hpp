#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "rectlay/classify.hpp"
#include "rectlay/dualgraph.hpp"
#include "rectlay/geometry.hpp"

namespace rectlay {

/// Multiway guillotine tree in canonical form: no child of an H node is an
/// H node and no child of a V node is a V node.
struct CanonicalTree {
  bool leaf = true;
  Orientation orient = Orientation::kVertical;
  std::vector<std::shared_ptr<CanonicalTree>> children;

  static std::shared_ptr<CanonicalTree> make_leaf();
  static std::shared_ptr<CanonicalTree> make_node(
      Orientation o, std::vector<std::shared_ptr<CanonicalTree>> children);

  std::size_t leaf_count() const;
  std::string to_text() const;  // e.g. "H(.,V(.,.))"
};

bool tree_equal(const CanonicalTree& a, const CanonicalTree& b);

/// Collapse binary nodes of equal orientation into multiway nodes.
std::shared_ptr<CanonicalTree> canonical_form(const SlicingTree& t);

/// All canonical trees with exactly n leaves. Throws CapError above cap.
std::vector<std::shared_ptr<CanonicalTree>> enumerate_slicing_trees(
    std::size_t n, std::size_t cap = 8);

/// Instantiate a tree on the unit bbox with near-equal splits, skewed per
/// node so that all cut coordinates are distinct and the layout is generic.
/// Leaves are labeled r1..rn bottom-to-top / left-to-right.
Layout tree_to_layout(const CanonicalTree& t);

/// Randomized-split instantiation (testing aid): same combinatorics, random
/// cut fractions drawn from the seeded generator.
Layout tree_to_layout_random(const CanonicalTree& t, std::uint64_t seed);

struct Census {
  std::size_t sliceable = 0;
  std::size_t one_sided_sliceable = 0;
  std::size_t dual_iso_classes = 0;
};

/// Counts over enumerate_slicing_trees(n). Throws CapError above cap.
Census census(std::size_t n, std::size_t cap = 8);

struct DualCatalog {
  std::vector<PlaneGraph> positive;  // duals of one-sided sliceable layouts
  std::vector<PlaneGraph> negative;  // duals of other enumerated layouts,
                                     // not isomorphic to any positive
};

DualCatalog dual_catalog(std::size_t n, std::size_t cap = 8);

/// Minimum vertex cut size, brute-forced over subsets of size <= 4.
/// nullopt when no such cut exists (e.g. complete graphs).
std::optional<std::size_t> min_vertex_cut(const PlaneGraph& g);

}  // namespace rectlay
