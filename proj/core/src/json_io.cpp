#include "rectlay/json_io.hpp"

#include <json.hpp>

#include <functional>

#include "rectlay/errors.hpp"

namespace rectlay {

using nlohmann::json;

namespace {

json rational_to_json(const Rational& r) { return r.to_string(); }

Rational rational_from_json(const json& j, const char* what) {
  std::string s;
  if (j.is_string())
    s = j.get<std::string>();
  else if (j.is_number_integer())
    s = std::to_string(j.get<long long>());
  else
    throw InvalidInputError(std::string(what) + ": expected a rational string");
  auto r = Rational::parse(s);
  if (!r) throw InvalidInputError(std::string(what) + ": bad rational '" + s + "'");
  return *r;
}

json parse(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw InvalidInputError("malformed JSON");
  return j;
}

json rect_to_json(const Rect& r, bool with_id) {
  json j;
  if (with_id) j["id"] = r.id;
  j["x0"] = rational_to_json(r.x_lo);
  j["y0"] = rational_to_json(r.y_lo);
  j["x1"] = rational_to_json(r.x_hi);
  j["y1"] = rational_to_json(r.y_hi);
  return j;
}

Rect rect_from_json(const json& j, const std::string& id) {
  Rect r;
  r.id = id;
  r.x_lo = rational_from_json(j.at("x0"), "x0");
  r.y_lo = rational_from_json(j.at("y0"), "y0");
  r.x_hi = rational_from_json(j.at("x1"), "x1");
  r.y_hi = rational_from_json(j.at("y1"), "y1");
  return r;
}

json contact_to_json(const Contact& c) {
  return json{{"a", c.a},
              {"b", c.b},
              {"orientation", to_string(c.orientation)}};
}

}  // namespace

std::string layout_to_json(const Layout& layout) {
  json j;
  j["bbox"] = rect_to_json(layout.bbox, false);
  j["rects"] = json::array();
  for (const auto& r : layout.rects) j["rects"].push_back(rect_to_json(r, true));
  return j.dump(2) + "\n";
}

Layout layout_from_json(const std::string& text) {
  json j = parse(text);
  if (!j.contains("bbox") || !j.contains("rects"))
    throw InvalidInputError("layout document needs bbox and rects");
  Rect bbox = rect_from_json(j["bbox"], "bbox");
  std::vector<Rect> rects;
  for (const auto& rj : j["rects"]) {
    if (!rj.contains("id") || !rj["id"].is_string())
      throw InvalidInputError("rect without string id");
    rects.push_back(rect_from_json(rj, rj["id"].get<std::string>()));
  }
  try {
    return validate_layout(bbox, std::move(rects));
  } catch (const Error& e) {
    throw InvalidInputError(std::string("invalid layout: ") + e.what());
  }
}

std::string plane_graph_to_json(const PlaneGraph& g) {
  json j;
  j["vertices"] = json::array();
  for (const auto& label : g.labels) j["vertices"].push_back(label);
  j["rotation"] = json::object();
  for (std::size_t v = 0; v < g.rotation.size(); ++v) {
    json nbrs = json::array();
    for (int w : g.rotation[v]) nbrs.push_back(g.labels[w]);
    j["rotation"][g.labels[v]] = std::move(nbrs);
  }
  j["outer_face"] = json::array();
  for (int v : g.outer_face) j["outer_face"].push_back(g.labels[v]);
  return j.dump(2) + "\n";
}

PlaneGraph plane_graph_from_json(const std::string& text) {
  json j = parse(text);
  if (!j.contains("vertices") || !j.contains("rotation") ||
      !j.contains("outer_face"))
    throw InvalidInputError(
        "graph document needs vertices, rotation and outer_face");
  PlaneGraph g;
  for (const auto& v : j["vertices"]) {
    if (!v.is_string()) throw InvalidInputError("vertex label must be string");
    g.labels.push_back(v.get<std::string>());
  }
  g.rotation.resize(g.labels.size());
  for (std::size_t v = 0; v < g.labels.size(); ++v) {
    const auto& label = g.labels[v];
    if (!j["rotation"].contains(label))
      throw InvalidInputError("rotation missing for vertex " + label);
    for (const auto& w : j["rotation"][label]) {
      int idx = g.index_of(w.get<std::string>());
      if (idx < 0) throw InvalidInputError("rotation names unknown vertex");
      g.rotation[v].push_back(idx);
    }
  }
  for (const auto& v : j["outer_face"]) {
    int idx = g.index_of(v.get<std::string>());
    if (idx < 0) throw InvalidInputError("outer_face names unknown vertex");
    g.outer_face.push_back(idx);
  }
  return g;
}

std::string slicing_tree_to_json(const SlicingTree& t) {
  std::function<json(const SlicingTree&)> conv =
      [&](const SlicingTree& node) -> json {
    if (node.is_leaf()) return json{{"leaf", *node.leaf_id}};
    return json{{"cut", node.cut == Orientation::kVertical ? "V" : "H"},
                {"first", conv(*node.first)},
                {"second", conv(*node.second)}};
  };
  return conv(t).dump(2) + "\n";
}

SlicingTree slicing_tree_from_json(const std::string& text) {
  json j = parse(text);
  std::function<std::shared_ptr<SlicingTree>(const json&)> conv =
      [&](const json& node) -> std::shared_ptr<SlicingTree> {
    if (node.contains("leaf"))
      return SlicingTree::leaf(node["leaf"].get<std::string>());
    if (!node.contains("cut") || !node.contains("first") ||
        !node.contains("second"))
      throw InvalidInputError("tree node needs cut, first and second");
    std::string cut = node["cut"].get<std::string>();
    if (cut != "V" && cut != "H")
      throw InvalidInputError("tree cut must be V or H");
    return SlicingTree::node(
        cut == "V" ? Orientation::kVertical : Orientation::kHorizontal,
        conv(node["first"]), conv(node["second"]));
  };
  return *conv(j);
}

std::string assignment_to_json(const AspectAssignment& a) {
  json ratios = json::object();
  for (const auto& [id, ratio] : a.ratios) ratios[id] = rational_to_json(ratio);
  return json{{"ratios", std::move(ratios)}}.dump(2) + "\n";
}

AspectAssignment assignment_from_json(const std::string& text) {
  json j = parse(text);
  if (!j.contains("ratios") || !j["ratios"].is_object())
    throw InvalidInputError("assignment document needs a ratios object");
  AspectAssignment a;
  for (const auto& [id, value] : j["ratios"].items())
    a.ratios[id] = rational_from_json(value, id.c_str());
  return a;
}

std::string transversal_to_json(const TransversalStructure& ts) {
  const PlaneGraph& g = ts.dual.graph;
  json edges = json::array();
  for (const auto& [key, label] : ts.labels) {
    edges.push_back(json{
        {"u", g.labels[key.first]},
        {"v", g.labels[key.second]},
        {"color", to_string(label.color)},
        {"dir", label.from == key.first ? "uv" : "vu"}});
  }
  json j;
  j["boundary"] = {{"S", ts.dual.south},
                   {"W", ts.dual.west},
                   {"N", ts.dual.north},
                   {"E", ts.dual.east}};
  j["edges"] = std::move(edges);
  return j.dump(2) + "\n";
}

std::string realization_report_to_json(const RealizationReport& report) {
  json j;
  j["mode"] = report.mode == RealizeMode::kStrong ? "strong" : "weak";
  j["equivalent"] = report.equivalent;
  j["generic"] = report.generic;
  j["gained"] = json::array();
  for (const auto& c : report.gained) j["gained"].push_back(contact_to_json(c));
  j["lost"] = json::array();
  for (const auto& c : report.lost) j["lost"].push_back(contact_to_json(c));
  return j.dump(2) + "\n";
}

std::string recognition_to_json(const CornerLabeledLayout& result) {
  json j;
  j["layout"] = json::parse(layout_to_json(result.layout));
  json vm = json::object();
  for (const auto& [vertex, rect] : result.vertex_map) vm[vertex] = rect;
  j["vertex_map"] = std::move(vm);
  j["corner_rects"] = json::array();
  for (const auto& c : result.corner_rects) j["corner_rects"].push_back(c);
  return j.dump(2) + "\n";
}

}  // namespace rectlay
