#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rectlay/dualgraph.hpp"
#include "rectlay/geometry.hpp"

namespace rectlay {

/// Recognition instance: a connected near-triangulation with minimum corner
/// counts C and ordered consecutive-corner pairs P. A pair (a, b) demands
/// rect(a) at some bbox corner k and rect(b) at corner k+1 (ccw, corners
/// numbered from the bottom-left).
struct Instance {
  PlaneGraph graph;
  std::vector<int> corner_count;            // C, by vertex index, 0..4
  std::vector<std::pair<int, int>> pairs;   // P, by vertex index, deduped

  int total_corners() const;                // C(V)
  std::vector<int> positive_vertices() const;  // K = { v : C(v) > 0 }
  int count_of(const std::string& label) const;
};

/// Validates the graph, clamps counts into [0, 4] and checks that pair
/// endpoints lie on the outer face. Throws InvalidInputError.
Instance make_instance(
    const PlaneGraph& g, const std::map<std::string, int>& corner_count,
    const std::vector<std::pair<std::string, std::string>>& pairs);

/// Splits at a cut vertex into the two component instances. Throws
/// NotCutVertexError and MoreThanTwoComponentsError.
std::pair<Instance, Instance> split_instance(const Instance& inst,
                                             const std::string& v);

/// Removes an outer non-cut vertex as a pivot. Returns nullopt when some
/// pair's ccw outer path passes strictly through v (the pivot fails).
/// Throws CutVertexError and NotOuterError on misuse.
std::optional<Instance> remove_instance(const Instance& inst,
                                        const std::string& v);

struct CornerLabeledLayout {
  Layout layout;
  std::map<std::string, std::string> vertex_map;  // graph vertex -> rect id
  std::array<std::string, 4> corner_rects;  // ccw from the bottom-left
};

struct RecognizeStats {
  std::size_t nodes = 0;
  std::size_t splits = 0;
  std::size_t removes = 0;
  std::size_t branch_forced_remove = 0;  // C(v) = 2
  std::size_t branch_pair = 0;           // P = {(u,v)} duplication branch
  std::size_t branch_k3 = 0;             // |K| = 3 duplication branch
  std::size_t branch_k0 = 0;             // |K| = 0 duplication branch
  std::size_t local_check_failures = 0;
  std::size_t max_k3_on_path = 0;    // |K| = 3 entries along one path
  std::size_t max_pair_on_path = 0;  // pair-branch entries along one path
  bool remove_total_decreased = false;  // C(V) must not drop across Remove
  int min_sub_total = 4;  // smallest C(V) over all produced sub-instances
};

struct VerifyReport {
  bool ok = true;
  std::string detail;
};

/// Full check of a candidate against an instance: the vertex map must be a
/// bijection onto the rect ids, the layout's dual must equal the instance
/// graph under that map (exact adjacency), corner counts and pairs must be
/// satisfied, and the layout must be one-sided and sliceable.
VerifyReport verify_realization(const CornerLabeledLayout& cand,
                                const Instance& inst);

/// The recursive decision procedure with constructive reconstruction.
/// Returns a verified layout or nullopt. Throws InternalVerificationError
/// if the final verification rejects a reconstructed layout.
std::optional<CornerLabeledLayout> main_recognize(
    const Instance& inst, RecognizeStats* stats = nullptr);

/// Decides whether g is the dual graph of a one-sided sliceable layout and
/// returns a verified normalized witness layout. Throws InvalidInputError
/// when g is not a connected simple near-triangulation with a coherent
/// embedding.
std::optional<CornerLabeledLayout> recognize_dual(
    const PlaneGraph& g, RecognizeStats* stats = nullptr);

}  // namespace rectlay
