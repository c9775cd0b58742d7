#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "rectlay/dualgraph.hpp"
#include "rectlay/geometry.hpp"

namespace rectlay {

enum class EdgeColor { kRed, kBlue };

std::string to_string(EdgeColor c);

/// Color and direction of one inner edge of an extended dual.
struct EdgeLabel {
  EdgeColor color;
  int from, to;  // vertex indices in the extended dual's graph
};

/// Oriented 2-coloring of the inner edges of an extended dual. Red edges
/// flow bottom-to-top (above-below contacts), blue edges left-to-right.
struct TransversalStructure {
  ExtendedDual dual;
  std::map<std::pair<int, int>, EdgeLabel> labels;  // key: (min, max)

  const EdgeLabel& label(int u, int v) const;
  bool has_edge_label(int u, int v) const;
  /// Canonical text form of the labeling, for hashing and comparison.
  std::string canonical_key() const;
};

/// Alternating 4-cycle: vertices in cyclic order with edge colors
/// alternating around the cycle.
struct AlternatingCycle {
  std::vector<int> vertices;        // size 4, cyclic order a,b,c,d
  std::set<int> interior_vertices;  // vertices strictly inside the cycle

  bool empty_interior() const { return interior_vertices.empty(); }
};

/// Transversal structure geometrically derived from a generic layout:
/// red and upward for horizontal contacts, blue and rightward for vertical
/// contacts; boundary spokes colored per their boundary vertex.
TransversalStructure transversal_of(const Layout& layout);

struct TsValidation {
  bool ok = true;
  std::string violation;  // first violating vertex or edge, when !ok
};

/// Checks the boundary conditions and the four-block condition at every
/// inner vertex.
TsValidation validate_ts(const TransversalStructure& ts);

/// All alternating 4-cycles with their interior vertex sets.
std::vector<AlternatingCycle> alternating_4cycles(
    const TransversalStructure& ts);

/// Recolors every edge strictly inside the cycle (for an empty cycle, just
/// the inner diagonal) and rederives directions. Throws InvalidCycleError
/// when c is not an alternating cycle of ts.
TransversalStructure flip(const TransversalStructure& ts,
                          const AlternatingCycle& c);

struct FlipClosure {
  std::size_t size = 0;
  bool exceeded_cap = false;
};

/// Number of distinct transversal structures on the extended dual of
/// `layout`, computed as the breadth-first closure of flips.
FlipClosure flip_closure_size(const Layout& layout, std::size_t cap);

/// Recomputes every edge direction from colors alone (plus the embedding
/// and boundary anchors). Returns nullopt when the coloring admits no
/// consistent orientation.
std::optional<std::map<std::pair<int, int>, EdgeLabel>> directions_from_colors(
    const ExtendedDual& dual,
    const std::map<std::pair<int, int>, EdgeColor>& colors);

}  // namespace rectlay
