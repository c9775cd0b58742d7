#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "rectlay/geometry.hpp"

namespace rectlay {

/// Binary guillotine-cut tree. For a V node `first` is the left part, for
/// an H node the bottom part.
struct SlicingTree {
  // Leaf when leaf_id is set; otherwise an internal cut node.
  std::optional<std::string> leaf_id;
  Orientation cut = Orientation::kVertical;
  std::shared_ptr<SlicingTree> first, second;

  bool is_leaf() const { return leaf_id.has_value(); }

  static std::shared_ptr<SlicingTree> leaf(std::string id);
  static std::shared_ptr<SlicingTree> node(Orientation cut,
                                           std::shared_ptr<SlicingTree> first,
                                           std::shared_ptr<SlicingTree> second);

  std::vector<std::string> leaf_ids() const;
  std::string to_text() const;  // compact debug form, e.g. V(H(a,b),c)
};

/// Four pairwise noncrossing maximal segments spiraling around a center
/// rect; arms are listed ccw starting from the segment holding the bottom
/// side of the center.
struct Windmill {
  std::string center;
  std::vector<MaximalSegment> arms;  // size 4
  bool clockwise = false;
};

/// Greedy guillotine extraction. Ties prefer the vertical slice with the
/// smallest x, else the horizontal slice with the smallest y; multiway cuts
/// are binarized left-to-right / bottom-to-top. Returns nullopt when some
/// region admits no full slice.
std::optional<std::shared_ptr<SlicingTree>> slicing_tree(const Layout& layout);

/// Independent windmill search (not derived from slicing).
std::optional<Windmill> find_windmill(const Layout& layout);

struct OneSidedReport {
  bool one_sided = true;
  std::vector<MaximalSegment> violations;
};

/// True iff every maximal segment is the full side of some rect.
OneSidedReport is_one_sided(const Layout& layout);

enum class AruClass { kStronglyARU, kWeaklyARUOnly, kNotARU };

std::string to_string(AruClass c);

/// StronglyARU iff sliceable and one-sided; WeaklyARUOnly iff sliceable but
/// not one-sided; NotARU iff not sliceable.
AruClass aru_class(const Layout& layout);

}  // namespace rectlay
