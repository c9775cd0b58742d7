#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rectlay/geometry.hpp"

namespace rectlay {

/// Combinatorial plane graph: a rotation system (counterclockwise neighbor
/// order per vertex) plus the counterclockwise outer boundary walk. The walk
/// may repeat vertices when the graph has cut vertices.
struct PlaneGraph {
  std::vector<std::string> labels;
  std::vector<std::vector<int>> rotation;  // ccw neighbor order, by index
  std::vector<int> outer_face;             // ccw boundary walk, by index

  int index_of(const std::string& label) const;  // -1 when absent
  std::size_t vertex_count() const { return labels.size(); }
  std::size_t edge_count() const;
  bool adjacent(int u, int v) const;

  std::vector<std::string> outer_labels() const;
};

/// Validates simplicity, rotation symmetry, connectivity, face-tracing
/// consistency (Euler's formula) and that outer_face matches a traced face.
/// Throws EmbeddingError / DisconnectedError.
void validate_plane_graph(const PlaneGraph& g);

/// All faces traced from the rotation system. Each face is the vertex cycle
/// with the face region to the left of each directed edge; the outer face
/// therefore appears as the boundary walk in clockwise order.
std::vector<std::vector<int>> trace_faces(const PlaneGraph& g);

/// Index into trace_faces(g) of the outer face (the trace matching the
/// reversed outer walk).
std::size_t outer_face_index(const PlaneGraph& g,
                             const std::vector<std::vector<int>>& faces);

/// Extended dual: dual graph plus four boundary vertices in the outer
/// 4-cycle. boundary_labels holds the labels used for S, W, N, E.
struct ExtendedDual {
  PlaneGraph graph;
  std::string south, west, north, east;

  bool is_boundary(const std::string& label) const {
    return label == south || label == west || label == north || label == east;
  }
};

/// Dual graph of a generic layout: one vertex per rect, one edge per
/// contact, rotation from the geometric order of contacts around each rect,
/// outer face from the ccw boundary walk of the bbox. Throws NongenericError.
PlaneGraph dual(const Layout& layout);

/// Dual augmented with S/W/N/E boundary vertices. Throws NongenericError.
ExtendedDual extended_dual(const Layout& layout);

/// True iff every bounded face is a triangle (vacuously true for trees).
bool is_near_triangulation(const PlaneGraph& g);

/// Articulation vertices. Throws DisconnectedError.
std::vector<std::string> cut_vertices(const PlaneGraph& g);

/// Some 2-cut of a biconnected graph, or nullopt when 3-connected.
/// Outer-face vertex pairs are scanned first, then all pairs, in
/// lexicographic label order. Throws NotBiconnectedError.
std::optional<std::pair<std::string, std::string>> find_two_cut(
    const PlaneGraph& g);

/// Abstract-graph isomorphism (embeddings are not compared).
/// Throws SizeLimitError above `size_limit` vertices.
bool plane_isomorphic(const PlaneGraph& g1, const PlaneGraph& g2,
                      std::size_t size_limit = 24);

bool is_connected(const PlaneGraph& g);

}  // namespace rectlay
