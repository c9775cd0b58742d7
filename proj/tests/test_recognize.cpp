#include <doctest.h>

#include <map>
#include <set>

#include "rectlay/classify.hpp"
#include "rectlay/enumerate.hpp"
#include "rectlay/errors.hpp"
#include "rectlay/fixtures.hpp"
#include "rectlay/recognize.hpp"

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

PlaneGraph two_triangles_sharing_v() {
  return make_graph({"a", "b", "v", "c", "d"},
                    {{"a", {"b", "v"}},
                     {"b", {"v", "a"}},
                     {"v", {"c", "a", "b", "d"}},
                     {"c", {"v", "d"}},
                     {"d", {"c", "v"}}},
                    {"a", "b", "v", "d", "c", "v"});
}

bool pair_present(const Instance& inst, const std::string& a,
                  const std::string& b) {
  int ia = inst.graph.index_of(a), ib = inst.graph.index_of(b);
  for (auto [x, y] : inst.pairs)
    if (x == ia && y == ib) return true;
  return false;
}

}  // namespace

TEST_CASE("make_instance validates its input") {
  CHECK_NOTHROW(make_instance(triangle(), {}, {}));
  CHECK_THROWS_AS(
      make_instance(triangle(), {{"z", 1}}, {}), InvalidInputError);

  // a 4-cycle without a chord is not a near-triangulation
  PlaneGraph square = make_graph({"a", "b", "c", "d"},
                                 {{"a", {"b", "d"}},
                                  {"b", {"c", "a"}},
                                  {"c", {"d", "b"}},
                                  {"d", {"a", "c"}}},
                                 {"a", "b", "c", "d"});
  CHECK_THROWS_AS(make_instance(square, {}, {}), InvalidInputError);
}

TEST_CASE("splitting two triangles at the shared vertex") {
  Instance inst = make_instance(two_triangles_sharing_v(), {}, {});
  auto [i1, i2] = split_instance(inst, "v");
  // components {a, b} and {c, d}, each endpoint picking up one corner and
  // the component's boundary pair
  const Instance& ab = i1.graph.index_of("a") >= 0 ? i1 : i2;
  const Instance& cd = i1.graph.index_of("a") >= 0 ? i2 : i1;
  CHECK(ab.graph.vertex_count() == 2);
  CHECK(ab.count_of("a") == 1);
  CHECK(ab.count_of("b") == 1);
  CHECK((pair_present(ab, "a", "b") || pair_present(ab, "b", "a")));
  CHECK(cd.count_of("c") == 1);
  CHECK(cd.count_of("d") == 1);
  CHECK((pair_present(cd, "c", "d") || pair_present(cd, "d", "c")));
}

TEST_CASE("splitting a path at the middle gives doubled corner counts") {
  Instance inst = make_instance(fixtures::stack_dual(3), {}, {});
  auto [i1, i2] = split_instance(inst, "v0002");
  CHECK(i1.graph.vertex_count() == 1);
  CHECK(i2.graph.vertex_count() == 1);
  const Instance& first = i1.graph.index_of("v0001") >= 0 ? i1 : i2;
  const Instance& third = i1.graph.index_of("v0001") >= 0 ? i2 : i1;
  CHECK(first.count_of("v0001") == 2);
  CHECK(pair_present(first, "v0001", "v0001"));
  CHECK(third.count_of("v0003") == 2);
  CHECK(pair_present(third, "v0003", "v0003"));
}

TEST_CASE("split rejects non-cut vertices") {
  Instance inst = make_instance(triangle(), {}, {});
  CHECK_THROWS_AS(split_instance(inst, "a"), NotCutVertexError);
}

TEST_CASE("removing a triangle corner") {
  Instance inst = make_instance(triangle(), {}, {});
  auto sub = remove_instance(inst, "c");
  REQUIRE(sub.has_value());
  CHECK(sub->graph.vertex_count() == 2);
  CHECK(sub->count_of("a") == 1);
  CHECK(sub->count_of("b") == 1);
  CHECK(sub->pairs.size() == 1);
}

TEST_CASE("removing an edge endpoint doubles the survivor's count") {
  PlaneGraph edge = fixtures::stack_dual(2);
  Instance inst = make_instance(
      edge, {{"v0001", 1}, {"v0002", 1}}, {{"v0001", "v0002"}});
  auto sub = remove_instance(inst, "v0001");
  REQUIRE(sub.has_value());
  CHECK(sub->graph.vertex_count() == 1);
  CHECK(sub->count_of("v0002") == 3);
  // and the instance is accepted: a single vertex realizes as the square
  CHECK(main_recognize(*sub).has_value());
}

TEST_CASE("a pivot whose removal strands a pair path is rejected") {
  // fan with outer walk (h, p1, p2, p3): the ccw path from p0001 to p0003
  // passes strictly through p0002, so p0002 cannot be the pivot, while the
  // hub is untouched by the pair.
  PlaneGraph fan = fixtures::fan_dual(4);
  Instance inst = make_instance(
      fan, {{"p0001", 1}, {"p0003", 1}}, {{"p0001", "p0003"}});
  CHECK_FALSE(remove_instance(inst, "p0002").has_value());
  CHECK(remove_instance(inst, "h").has_value());
}

TEST_CASE("remove rejects misuse") {
  Instance path = make_instance(fixtures::stack_dual(3), {}, {});
  CHECK_THROWS_AS(remove_instance(path, "v0002"), CutVertexError);
  PlaneGraph k4ish = fixtures::fan_dual(4);
  Instance inst = make_instance(k4ish, {}, {});
  CHECK_THROWS_AS(remove_instance(inst, "nope"), NotOuterError);
  // the 5-wheel hub is an interior vertex
  Instance wheel = make_instance(dual(fixtures::pinwheel(false)), {}, {});
  CHECK_THROWS_AS(remove_instance(wheel, "c"), NotOuterError);
}

TEST_CASE("single vertex realizes as the unit square") {
  Instance inst = make_instance(fixtures::stack_dual(1), {}, {});
  auto result = main_recognize(inst);
  REQUIRE(result.has_value());
  CHECK(result->layout.rects.size() == 1);
  CHECK(result->layout.bbox.width() == Rational(1));
  for (const auto& c : result->corner_rects) CHECK(c == "v0001");
}

TEST_CASE("triangle realizes as a three-rect layout with the right dual") {
  auto result = recognize_dual(triangle());
  REQUIRE(result.has_value());
  CHECK(result->layout.rects.size() == 3);
  CHECK(verify_realization(*result, make_instance(triangle(), {}, {})).ok);
}

TEST_CASE("path graph realizes as a stack") {
  auto result = recognize_dual(fixtures::stack_dual(3));
  REQUIRE(result.has_value());
  PlaneGraph d = dual(result->layout);
  CHECK(d.edge_count() == 2);
  CHECK(d.adjacent(d.index_of("v0001"), d.index_of("v0002")));
  CHECK(d.adjacent(d.index_of("v0002"), d.index_of("v0003")));
}

TEST_CASE("the 5-wheel is recognized") {
  PlaneGraph wheel = dual(fixtures::pinwheel(false));
  auto result = recognize_dual(wheel);
  REQUIRE(result.has_value());
  CHECK(result->layout.rects.size() == 5);
  CHECK(is_one_sided(result->layout).one_sided);
  CHECK(slicing_tree(result->layout).has_value());
}

TEST_CASE("fans are recognized") {
  for (std::size_t n : {4, 6, 9}) {
    auto result = recognize_dual(fixtures::fan_dual(n));
    REQUIRE(result.has_value());
    CHECK(result->layout.rects.size() == n);
  }
}

TEST_CASE("verify_realization flags corner and bijection violations") {
  auto result = recognize_dual(triangle());
  REQUIRE(result.has_value());
  Instance inst = make_instance(triangle(), {}, {});
  CHECK(verify_realization(*result, inst).ok);

  // demand three corners from a rect that has fewer
  std::string one_corner_vertex;
  for (const auto& label : {"a", "b", "c"}) {
    int hits = 0;
    for (const auto& o : result->corner_rects)
      if (o == label) ++hits;
    if (hits == 1) one_corner_vertex = label;
  }
  REQUIRE(!one_corner_vertex.empty());
  Instance greedy = make_instance(triangle(), {{one_corner_vertex, 3}}, {});
  CHECK_FALSE(verify_realization(*result, greedy).ok);

  CornerLabeledLayout broken = *result;
  broken.vertex_map["a"] = broken.vertex_map["b"];
  CHECK_FALSE(verify_realization(broken, inst).ok);
}

TEST_CASE("invalid inputs are rejected with InvalidInputError") {
  PlaneGraph square = make_graph({"a", "b", "c", "d"},
                                 {{"a", {"b", "d"}},
                                  {"b", {"c", "a"}},
                                  {"c", {"d", "b"}},
                                  {"d", {"a", "c"}}},
                                 {"a", "b", "c", "d"});
  CHECK_THROWS_AS(recognize_dual(square), InvalidInputError);

  PlaneGraph disconnected;
  disconnected.labels = {"a", "b"};
  disconnected.rotation = {{}, {}};
  disconnected.outer_face = {0};
  CHECK_THROWS_AS(recognize_dual(disconnected), InvalidInputError);
}

TEST_CASE("catalog equivalence up to five vertices") {
  for (std::size_t n = 1; n <= 5; ++n) {
    DualCatalog catalog = dual_catalog(n);
    CHECK(!catalog.positive.empty());
    for (const auto& g : catalog.positive) {
      RecognizeStats stats;
      auto result = recognize_dual(g, &stats);
      REQUIRE_MESSAGE(result.has_value(),
                      "positive catalog graph rejected at n=", n);
      CHECK(verify_realization(*result, make_instance(g, {}, {})).ok);
      CHECK(stats.max_k3_on_path <= 1);
      CHECK(stats.max_pair_on_path <= 1);
      CHECK_FALSE(stats.remove_total_decreased);
      if (stats.removes + stats.splits > 0) CHECK(stats.min_sub_total >= 2);
    }
    for (const auto& g : catalog.negative) {
      CHECK_FALSE(recognize_dual(g).has_value());
    }
  }
}

TEST_CASE("recognizer answers match the catalog on the fixture duals") {
  DualCatalog cat5 = dual_catalog(5);
  DualCatalog cat6 = dual_catalog(6);
  auto in_positive = [](const DualCatalog& cat, const PlaneGraph& g) {
    for (const auto& p : cat.positive)
      if (plane_isomorphic(p, g)) return true;
    return false;
  };
  for (bool cw : {false, true}) {
    PlaneGraph g = dual(fixtures::pinwheel(cw));
    CHECK(recognize_dual(g).has_value() == in_positive(cat5, g));
  }
  for (const Layout& l :
       {fixtures::pinwheel_split_arm(), fixtures::pinwheel_banded()}) {
    PlaneGraph g = dual(l);
    CHECK(recognize_dual(g).has_value() == in_positive(cat6, g));
  }
}
