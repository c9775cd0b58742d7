#include <doctest.h>

#include <map>
#include <set>

#include "rectlay/dualgraph.hpp"
#include "rectlay/enumerate.hpp"
#include "rectlay/errors.hpp"
#include "rectlay/fixtures.hpp"

using namespace rectlay;

namespace {

PlaneGraph make_graph(
    const std::vector<std::string>& labels,
    const std::map<std::string, std::vector<std::string>>& rotation,
    const std::vector<std::string>& outer) {
  PlaneGraph g;
  g.labels = labels;
  g.rotation.resize(labels.size());
  for (std::size_t v = 0; v < labels.size(); ++v)
    for (const auto& w : rotation.at(labels[v]))
      g.rotation[v].push_back(g.index_of(w));
  for (const auto& w : outer) g.outer_face.push_back(g.index_of(w));
  return g;
}

PlaneGraph triangle() {
  return make_graph({"a", "b", "c"},
                    {{"a", {"b", "c"}}, {"b", {"c", "a"}}, {"c", {"a", "b"}}},
                    {"a", "b", "c"});
}

PlaneGraph square4cycle() {
  return make_graph({"a", "b", "c", "d"},
                    {{"a", {"b", "d"}},
                     {"b", {"c", "a"}},
                     {"c", {"d", "b"}},
                     {"d", {"a", "c"}}},
                    {"a", "b", "c", "d"});
}

PlaneGraph k4() {
  return make_graph({"a", "b", "c", "d"},
                    {{"a", {"b", "d", "c"}},
                     {"b", {"c", "d", "a"}},
                     {"c", {"a", "d", "b"}},
                     {"d", {"c", "a", "b"}}},
                    {"a", "b", "c"});
}

PlaneGraph k4_minus_edge() {
  return make_graph({"a", "b", "c", "d"},
                    {{"a", {"b", "c", "d"}},
                     {"b", {"c", "a"}},
                     {"c", {"d", "a", "b"}},
                     {"d", {"c", "a"}}},
                    {"a", "b", "c", "d"});
}

PlaneGraph two_triangles_sharing_v() {
  return make_graph({"a", "b", "v", "c", "d"},
                    {{"a", {"b", "v"}},
                     {"b", {"v", "a"}},
                     {"v", {"c", "a", "b", "d"}},
                     {"c", {"v", "d"}},
                     {"d", {"c", "v"}}},
                    {"a", "b", "v", "d", "c", "v"});
}

bool has_edge(const PlaneGraph& g, const std::string& u,
              const std::string& v) {
  return g.adjacent(g.index_of(u), g.index_of(v));
}

// Exhaustive 2-cut oracle.
bool two_cut_exists(const PlaneGraph& g) {
  const int n = static_cast<int>(g.vertex_count());
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      std::set<int> gone{a, b};
      int start = -1, expect = 0;
      for (int v = 0; v < n; ++v)
        if (!gone.count(v)) {
          ++expect;
          if (start < 0) start = v;
        }
      if (expect < 2) continue;
      std::vector<int> stack{start};
      std::set<int> seen{start};
      while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : g.rotation[v])
          if (!gone.count(w) && seen.insert(w).second) stack.push_back(w);
      }
      if (static_cast<int>(seen.size()) != expect) return true;
    }
  }
  return false;
}

}  // namespace

TEST_CASE("all handmade fixtures pass embedding validation") {
  for (const auto& g :
       {triangle(), square4cycle(), k4(), k4_minus_edge(),
        two_triangles_sharing_v(), fixtures::stack_dual(1),
        fixtures::stack_dual(2), fixtures::stack_dual(5),
        fixtures::fan_dual(3), fixtures::fan_dual(6)}) {
    CHECK_NOTHROW(validate_plane_graph(g));
  }
}

TEST_CASE("dual of a three-rect stack is the path graph") {
  PlaneGraph d = dual(fixtures::stack(3));
  CHECK(d.vertex_count() == 3);
  CHECK(d.edge_count() == 2);
  CHECK(has_edge(d, "r0001", "r0002"));
  CHECK(has_edge(d, "r0002", "r0003"));
  CHECK_FALSE(has_edge(d, "r0001", "r0003"));
  CHECK_NOTHROW(validate_plane_graph(d));
}

TEST_CASE("dual of the pinwheel is the 5-wheel") {
  PlaneGraph d = dual(fixtures::pinwheel(false));
  CHECK(d.vertex_count() == 5);
  CHECK(d.edge_count() == 8);
  for (const char* arm : {"r1", "r2", "r3", "r4"}) CHECK(has_edge(d, "c", arm));
  CHECK(has_edge(d, "r1", "r2"));
  CHECK(has_edge(d, "r2", "r3"));
  CHECK(has_edge(d, "r3", "r4"));
  CHECK(has_edge(d, "r4", "r1"));
  CHECK_FALSE(has_edge(d, "r1", "r3"));
  CHECK_FALSE(has_edge(d, "r2", "r4"));
  CHECK_NOTHROW(validate_plane_graph(d));
}

TEST_CASE("staggered brick variants share an abstract dual") {
  // Two strongly inequivalent staggered layouts with isomorphic duals; one
  // of many layouts realizing the same graph.
  PlaneGraph d1 = dual(fixtures::brick());
  PlaneGraph d2 = dual(fixtures::brick_mirrored());
  CHECK(plane_isomorphic(d1, d2));
}

TEST_CASE("extended dual of a single rect is the wheel on the 4-cycle") {
  Rect bbox{"bbox", 0, 0, 1, 1};
  Layout l = validate_layout(bbox, {{"r1", 0, 0, 1, 1}});
  ExtendedDual ext = extended_dual(l);
  const PlaneGraph& g = ext.graph;
  CHECK(g.vertex_count() == 5);
  CHECK(g.edge_count() == 8);
  for (const auto& b : {ext.south, ext.west, ext.north, ext.east})
    CHECK(has_edge(g, "r1", b));
  CHECK_NOTHROW(validate_plane_graph(g));
  CHECK(is_near_triangulation(g));
}

TEST_CASE("extended dual invariants across the enumeration") {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (const auto& tree : enumerate_slicing_trees(n)) {
      Layout l = tree_to_layout(*tree);
      ExtendedDual ext = extended_dual(l);
      const PlaneGraph& g = ext.graph;
      CHECK_NOTHROW(validate_plane_graph(g));

      // outer face is exactly the boundary 4-cycle
      CHECK(g.outer_face.size() == 4);

      // every inner face is a triangle
      CHECK(is_near_triangulation(g));

      // inner vertices have degree >= 4
      for (std::size_t v = 0; v < g.vertex_count(); ++v)
        if (!ext.is_boundary(g.labels[v]))
          CHECK(g.rotation[v].size() >= 4);

      // no separating triangle
      const int nv = static_cast<int>(g.vertex_count());
      for (int a = 0; a < nv; ++a)
        for (int b = a + 1; b < nv; ++b)
          for (int c = b + 1; c < nv; ++c) {
            if (!(g.adjacent(a, b) && g.adjacent(b, c) && g.adjacent(a, c)))
              continue;
            std::set<int> gone{a, b, c};
            int start = -1, expect = 0;
            for (int v = 0; v < nv; ++v)
              if (!gone.count(v)) {
                ++expect;
                if (start < 0) start = v;
              }
            if (expect < 2) continue;
            std::vector<int> stack{start};
            std::set<int> seen{start};
            while (!stack.empty()) {
              int v = stack.back();
              stack.pop_back();
              for (int w : g.rotation[v])
                if (!gone.count(w) && seen.insert(w).second)
                  stack.push_back(w);
            }
            CHECK(static_cast<int>(seen.size()) == expect);
          }
    }
  }
}

TEST_CASE("near-triangulation recognition") {
  CHECK(is_near_triangulation(triangle()));
  CHECK_FALSE(is_near_triangulation(square4cycle()));
  CHECK(is_near_triangulation(fixtures::stack_dual(3)));  // vacuous: no
                                                          // bounded faces
  CHECK(is_near_triangulation(k4()));
  CHECK(is_near_triangulation(k4_minus_edge()));
}

TEST_CASE("cut vertices") {
  CHECK(cut_vertices(fixtures::stack_dual(3)) ==
        std::vector<std::string>{"v0002"});
  CHECK(cut_vertices(triangle()).empty());
  CHECK(cut_vertices(two_triangles_sharing_v()) ==
        std::vector<std::string>{"v"});
}

TEST_CASE("find_two_cut matches the exhaustive oracle") {
  CHECK_THROWS_AS(find_two_cut(fixtures::stack_dual(3)), NotBiconnectedError);

  auto fan4 = k4_minus_edge();
  auto cut = find_two_cut(fan4);
  REQUIRE(cut.has_value());
  CHECK(cut->first == "a");
  CHECK(cut->second == "c");
  CHECK(two_cut_exists(fan4));

  CHECK_FALSE(find_two_cut(k4()).has_value());
  CHECK_FALSE(two_cut_exists(k4()));

  PlaneGraph wheel5 = dual(fixtures::pinwheel(false));
  CHECK(find_two_cut(wheel5).has_value() == two_cut_exists(wheel5));

  PlaneGraph fan6 = fixtures::fan_dual(6);
  CHECK(find_two_cut(fan6).has_value() == two_cut_exists(fan6));
}

TEST_CASE("plane_isomorphic") {
  PlaneGraph p1 = fixtures::stack_dual(3);
  PlaneGraph p2 = make_graph(
      {"x", "y", "z"}, {{"x", {"z"}}, {"z", {"x", "y"}}, {"y", {"z"}}},
      {"x", "z", "y", "z"});
  CHECK(plane_isomorphic(p1, p2));
  CHECK_FALSE(plane_isomorphic(p1, triangle()));
  CHECK_THROWS_AS(plane_isomorphic(fixtures::stack_dual(30),
                                   fixtures::stack_dual(30)),
                  SizeLimitError);
}

TEST_CASE("embedding validation rejects broken graphs") {
  PlaneGraph g = triangle();
  g.rotation[0] = {1};  // asymmetric
  CHECK_THROWS_AS(validate_plane_graph(g), EmbeddingError);

  PlaneGraph loop = make_graph({"a"}, {{"a", {"a"}}}, {"a"});
  CHECK_THROWS_AS(validate_plane_graph(loop), EmbeddingError);

  PlaneGraph disc;
  disc.labels = {"a", "b"};
  disc.rotation = {{}, {}};
  disc.outer_face = {0};
  CHECK_THROWS_AS(validate_plane_graph(disc), DisconnectedError);

  // a rotation system whose outer walk does not match any traced face
  PlaneGraph bad = k4();
  bad.outer_face = {0, 1, 3};
  CHECK_THROWS_AS(validate_plane_graph(bad), EmbeddingError);
}

TEST_CASE("strongly equivalent instantiations give identical duals") {
  for (std::size_t n = 2; n <= 5; ++n) {
    for (const auto& tree : enumerate_slicing_trees(n)) {
      Layout a = tree_to_layout(*tree);
      if (!is_one_sided(a).one_sided) continue;  // one-sided pins the class
      Layout b = tree_to_layout_random(*tree, 42 + n);
      PlaneGraph da = dual(a);
      PlaneGraph db = dual(b);
      REQUIRE(da.labels == db.labels);
      CHECK(da.rotation == db.rotation);
      CHECK(da.outer_face == db.outer_face);
    }
  }
}
