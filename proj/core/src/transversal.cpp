#include "rectlay/transversal.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "rectlay/errors.hpp"

namespace rectlay {

std::string to_string(EdgeColor c) {
  return c == EdgeColor::kRed ? "red" : "blue";
}

namespace {

std::pair<int, int> edge_key(int u, int v) {
  return {std::min(u, v), std::max(u, v)};
}

enum class EdgeState { kOutRed, kInBlue, kInRed, kOutBlue };

// ccw block order around an inner vertex.
constexpr EdgeState kBlockOrder[4] = {EdgeState::kOutRed, EdgeState::kInBlue,
                                      EdgeState::kInRed, EdgeState::kOutBlue};

EdgeState state_at(const EdgeLabel& label, int v) {
  bool outgoing = label.from == v;
  if (label.color == EdgeColor::kRed)
    return outgoing ? EdgeState::kOutRed : EdgeState::kInRed;
  return outgoing ? EdgeState::kOutBlue : EdgeState::kInBlue;
}

}  // namespace

const EdgeLabel& TransversalStructure::label(int u, int v) const {
  auto it = labels.find(edge_key(u, v));
  if (it == labels.end()) throw Error("no label for requested edge");
  return it->second;
}

bool TransversalStructure::has_edge_label(int u, int v) const {
  return labels.count(edge_key(u, v)) > 0;
}

std::string TransversalStructure::canonical_key() const {
  std::string s;
  for (const auto& [key, label] : labels) {
    s += std::to_string(key.first) + "-" + std::to_string(key.second) + ":";
    s += label.color == EdgeColor::kRed ? "r" : "b";
    s += label.from == key.first ? ">" : "<";
    s += ";";
  }
  return s;
}

TransversalStructure transversal_of(const Layout& layout) {
  TransversalStructure ts;
  ts.dual = extended_dual(layout);
  const PlaneGraph& g = ts.dual.graph;
  int s = g.index_of(ts.dual.south), w = g.index_of(ts.dual.west);
  int n = g.index_of(ts.dual.north), e = g.index_of(ts.dual.east);

  auto idx = [&](const std::string& id) { return g.index_of(id); };
  for (const auto& c : contacts(layout)) {
    int a = idx(c.a), b = idx(c.b);
    EdgeColor color = c.orientation == Orientation::kHorizontal
                          ? EdgeColor::kRed
                          : EdgeColor::kBlue;
    ts.labels[edge_key(a, b)] = {color, a, b};
  }
  for (const auto& r : layout.rects) {
    int v = idx(r.id);
    if (r.y_lo == layout.bbox.y_lo)
      ts.labels[edge_key(s, v)] = {EdgeColor::kRed, s, v};
    if (r.y_hi == layout.bbox.y_hi)
      ts.labels[edge_key(v, n)] = {EdgeColor::kRed, v, n};
    if (r.x_lo == layout.bbox.x_lo)
      ts.labels[edge_key(w, v)] = {EdgeColor::kBlue, w, v};
    if (r.x_hi == layout.bbox.x_hi)
      ts.labels[edge_key(v, e)] = {EdgeColor::kBlue, v, e};
  }
  return ts;
}

TsValidation validate_ts(const TransversalStructure& ts) {
  const PlaneGraph& g = ts.dual.graph;
  int s = g.index_of(ts.dual.south), w = g.index_of(ts.dual.west);
  int n = g.index_of(ts.dual.north), e = g.index_of(ts.dual.east);
  std::set<int> boundary{s, w, n, e};

  auto fail = [](std::string msg) {
    TsValidation v;
    v.ok = false;
    v.violation = std::move(msg);
    return v;
  };

  // Every inner edge must carry a label joining its endpoints.
  for (std::size_t u = 0; u < g.rotation.size(); ++u) {
    for (int v : g.rotation[u]) {
      if (static_cast<int>(u) > v) continue;
      bool outer_edge =
          boundary.count(static_cast<int>(u)) && boundary.count(v);
      auto it = ts.labels.find(edge_key(static_cast<int>(u), v));
      if (outer_edge) {
        if (it != ts.labels.end())
          return fail("outer edge " + g.labels[u] + "-" + g.labels[v] +
                      " must not be labeled");
        continue;
      }
      if (it == ts.labels.end())
        return fail("edge " + g.labels[u] + "-" + g.labels[v] + " unlabeled");
      const EdgeLabel& lab = it->second;
      if (edge_key(lab.from, lab.to) != it->first)
        return fail("label endpoints mismatch on " + g.labels[u] + "-" +
                    g.labels[v]);
    }
  }
  for (const auto& [key, lab] : ts.labels)
    if (!g.adjacent(key.first, key.second))
      return fail("label on non-edge");

  // Boundary conditions.
  struct BoundaryRule {
    int vertex;
    EdgeColor color;
    bool outgoing;
  };
  for (const BoundaryRule& rule :
       {BoundaryRule{s, EdgeColor::kRed, true},
        BoundaryRule{w, EdgeColor::kBlue, true},
        BoundaryRule{n, EdgeColor::kRed, false},
        BoundaryRule{e, EdgeColor::kBlue, false}}) {
    for (int v : g.rotation[rule.vertex]) {
      if (boundary.count(v)) continue;
      const EdgeLabel& lab = ts.label(rule.vertex, v);
      if (lab.color != rule.color)
        return fail("edge at " + g.labels[rule.vertex] + " has wrong color");
      bool outgoing = lab.from == rule.vertex;
      if (outgoing != rule.outgoing)
        return fail("edge at " + g.labels[rule.vertex] +
                    " has wrong direction");
    }
  }

  // Four nonempty contiguous blocks at every inner vertex, in ccw order
  // outgoing red, incoming blue, incoming red, outgoing blue.
  for (std::size_t v = 0; v < g.rotation.size(); ++v) {
    if (boundary.count(static_cast<int>(v))) continue;
    std::vector<EdgeState> states;
    for (int u : g.rotation[v])
      states.push_back(state_at(ts.label(static_cast<int>(v), u),
                                static_cast<int>(v)));
    // Collapse cyclic runs.
    std::vector<EdgeState> runs;
    for (std::size_t i = 0; i < states.size(); ++i)
      if (runs.empty() || runs.back() != states[i]) runs.push_back(states[i]);
    if (runs.size() > 1 && runs.front() == runs.back()) runs.pop_back();
    if (runs.size() != 4)
      return fail("vertex " + g.labels[v] +
                  " does not split into four blocks");
    int start = -1;
    for (int i = 0; i < 4; ++i)
      if (runs[i] == EdgeState::kOutRed) start = i;
    if (start < 0)
      return fail("vertex " + g.labels[v] + " lacks an outgoing red block");
    for (int i = 0; i < 4; ++i)
      if (runs[(start + i) % 4] != kBlockOrder[i])
        return fail("vertex " + g.labels[v] + " has blocks out of order");
  }
  return {};
}

namespace {

struct FaceStructure {
  std::vector<std::vector<int>> faces;
  std::size_t outer;
  std::map<std::pair<int, int>, std::size_t> dart_face;
};

FaceStructure face_structure(const PlaneGraph& g) {
  FaceStructure fs;
  fs.faces = trace_faces(g);
  fs.outer = outer_face_index(g, fs.faces);
  for (std::size_t f = 0; f < fs.faces.size(); ++f) {
    const auto& cyc = fs.faces[f];
    for (std::size_t i = 0; i < cyc.size(); ++i)
      fs.dart_face[{cyc[i], cyc[(i + 1) % cyc.size()]}] = f;
  }
  return fs;
}

// Faces enclosed by a 4-cycle (those not reachable from the outer face
// without crossing a cycle edge).
std::vector<char> enclosed_faces(const PlaneGraph& g, const FaceStructure& fs,
                                 const std::set<std::pair<int, int>>& cycle) {
  std::vector<char> outside(fs.faces.size(), 0);
  std::deque<std::size_t> queue{fs.outer};
  outside[fs.outer] = 1;
  while (!queue.empty()) {
    std::size_t f = queue.front();
    queue.pop_front();
    const auto& cyc = fs.faces[f];
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      int u = cyc[i], v = cyc[(i + 1) % cyc.size()];
      if (cycle.count(edge_key(u, v))) continue;
      std::size_t other = fs.dart_face.at({v, u});
      if (!outside[other]) {
        outside[other] = 1;
        queue.push_back(other);
      }
    }
  }
  for (auto& o : outside) o = !o;
  return outside;  // now marks enclosed faces
}

}  // namespace

std::vector<AlternatingCycle> alternating_4cycles(
    const TransversalStructure& ts) {
  const PlaneGraph& g = ts.dual.graph;
  std::set<int> boundary{g.index_of(ts.dual.south), g.index_of(ts.dual.west),
                         g.index_of(ts.dual.north), g.index_of(ts.dual.east)};
  const int n = static_cast<int>(g.vertex_count());

  FaceStructure fs = face_structure(g);
  std::set<std::set<std::pair<int, int>>> seen;
  std::vector<AlternatingCycle> out;

  for (int a = 0; a < n; ++a) {
    if (boundary.count(a)) continue;
    for (int c = a + 1; c < n; ++c) {
      if (boundary.count(c)) continue;
      std::vector<int> common;
      for (int x : g.rotation[a]) {
        if (boundary.count(x)) continue;
        if (g.adjacent(c, x)) common.push_back(x);
      }
      for (std::size_t i = 0; i < common.size(); ++i) {
        for (std::size_t j = i + 1; j < common.size(); ++j) {
          int b = common[i], d = common[j];
          const EdgeLabel& ab = ts.label(a, b);
          const EdgeLabel& bc = ts.label(b, c);
          const EdgeLabel& cd = ts.label(c, d);
          const EdgeLabel& da = ts.label(d, a);
          if (ab.color != cd.color || bc.color != da.color ||
              ab.color == bc.color)
            continue;
          std::set<std::pair<int, int>> edges{edge_key(a, b), edge_key(b, c),
                                              edge_key(c, d), edge_key(d, a)};
          if (edges.size() != 4 || !seen.insert(edges).second) continue;

          AlternatingCycle cyc;
          cyc.vertices = {a, b, c, d};
          auto enclosed = enclosed_faces(g, fs, edges);
          std::set<int> cyc_verts{a, b, c, d};
          for (std::size_t f = 0; f < enclosed.size(); ++f) {
            if (!enclosed[f]) continue;
            for (int v : fs.faces[f])
              if (!cyc_verts.count(v)) cyc.interior_vertices.insert(v);
          }
          out.push_back(std::move(cyc));
        }
      }
    }
  }
  return out;
}

std::optional<std::map<std::pair<int, int>, EdgeLabel>> directions_from_colors(
    const ExtendedDual& dual,
    const std::map<std::pair<int, int>, EdgeColor>& colors) {
  const PlaneGraph& g = dual.graph;
  int s = g.index_of(dual.south), w = g.index_of(dual.west);
  int n = g.index_of(dual.north), e = g.index_of(dual.east);
  std::set<int> boundary{s, w, n, e};
  const int nv = static_cast<int>(g.vertex_count());

  auto color_of = [&](int u, int v) -> std::optional<EdgeColor> {
    auto it = colors.find(edge_key(u, v));
    if (it == colors.end()) return std::nullopt;
    return it->second;
  };

  // Runs of equal color around each inner vertex; each run will become one
  // block. For a valid structure there are exactly four, alternating.
  struct VertexRuns {
    std::vector<std::vector<int>> run_members;  // neighbor lists per run
    std::vector<EdgeColor> run_colors;
  };
  std::vector<VertexRuns> runs(nv);
  for (int v = 0; v < nv; ++v) {
    if (boundary.count(v)) continue;
    const auto& rot = g.rotation[v];
    VertexRuns vr;
    for (int u : rot) {
      auto col = color_of(v, u);
      if (!col) return std::nullopt;
      if (vr.run_colors.empty() || vr.run_colors.back() != *col) {
        vr.run_colors.push_back(*col);
        vr.run_members.push_back({});
      }
      vr.run_members.back().push_back(u);
    }
    if (vr.run_colors.size() > 1 &&
        vr.run_colors.front() == vr.run_colors.back()) {
      // cyclic wrap: merge last run into first
      auto& first = vr.run_members.front();
      auto& last = vr.run_members.back();
      first.insert(first.begin(), last.begin(), last.end());
      vr.run_members.pop_back();
      vr.run_colors.pop_back();
    }
    if (vr.run_colors.size() != 4) return std::nullopt;
    runs[v] = std::move(vr);
  }

  // choice[v]: index of the run that is the outgoing-red block.
  std::vector<int> choice(nv, -1);
  std::map<std::pair<int, int>, EdgeLabel> result;

  auto run_of = [&](int v, int u) {
    const auto& vr = runs[v];
    for (std::size_t r = 0; r < vr.run_members.size(); ++r)
      for (int x : vr.run_members[r])
        if (x == u) return static_cast<int>(r);
    return -1;
  };
  // Block of run r given the outgoing-red run index c: (r - c) mod 4 in
  // ccw block order (out-red, in-blue, in-red, out-blue).
  auto state_of_run = [&](int r, int c) {
    return kBlockOrder[((r - c) % 4 + 4) % 4];
  };

  auto set_label = [&](int u, int v, EdgeColor col, int from,
                       int to) -> bool {
    auto key = edge_key(u, v);
    auto it = result.find(key);
    if (it != result.end())
      return it->second.from == from && it->second.to == to;
    result[key] = {col, from, to};
    return true;
  };

  std::deque<int> queue;
  auto assign = [&](int v, int c) -> bool {
    if (choice[v] != -1) return choice[v] == c;
    // The assignment must be color-consistent: run c red, c+1 blue, etc.
    const auto& vr = runs[v];
    for (int r = 0; r < 4; ++r) {
      EdgeState st = state_of_run(r, c);
      EdgeColor need = (st == EdgeState::kOutRed || st == EdgeState::kInRed)
                           ? EdgeColor::kRed
                           : EdgeColor::kBlue;
      if (vr.run_colors[r] != need) return false;
    }
    choice[v] = c;
    queue.push_back(v);
    return true;
  };

  // Seed from boundary spokes.
  for (const auto& [rule_vertex, rule] :
       std::vector<std::pair<int, std::pair<EdgeColor, bool>>>{
           {s, {EdgeColor::kRed, true}},
           {w, {EdgeColor::kBlue, true}},
           {n, {EdgeColor::kRed, false}},
           {e, {EdgeColor::kBlue, false}}}) {
    for (int v : g.rotation[rule_vertex]) {
      if (boundary.count(v)) continue;
      auto col = color_of(rule_vertex, v);
      if (!col || *col != rule.first) return std::nullopt;
      int from = rule.second ? rule_vertex : v;
      int to = rule.second ? v : rule_vertex;
      if (!set_label(rule_vertex, v, *col, from, to)) return std::nullopt;
      // Constrain v: the spoke's state at v.
      EdgeState st;
      if (rule.first == EdgeColor::kRed)
        st = rule.second ? EdgeState::kInRed : EdgeState::kOutRed;
      else
        st = rule.second ? EdgeState::kInBlue : EdgeState::kOutBlue;
      int r = run_of(v, rule_vertex);
      if (r < 0) return std::nullopt;
      // find c with state_of_run(r, c) == st
      int c = -1;
      for (int k = 0; k < 4; ++k)
        if (state_of_run(r, k) == st) c = k;
      if (c < 0 || !assign(v, c)) return std::nullopt;
    }
  }

  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    const auto& vr = runs[v];
    for (int r = 0; r < 4; ++r) {
      EdgeState st = state_of_run(r, choice[v]);
      for (int u : vr.run_members[r]) {
        EdgeColor col = *color_of(v, u);
        bool outgoing =
            st == EdgeState::kOutRed || st == EdgeState::kOutBlue;
        int from = outgoing ? v : u;
        int to = outgoing ? u : v;
        if (!set_label(v, u, col, from, to)) return std::nullopt;
        if (boundary.count(u)) continue;
        // Induce u's choice from this edge's state at u.
        EdgeState at_u;
        if (col == EdgeColor::kRed)
          at_u = outgoing ? EdgeState::kInRed : EdgeState::kOutRed;
        else
          at_u = outgoing ? EdgeState::kInBlue : EdgeState::kOutBlue;
        int ru = run_of(u, v);
        if (ru < 0) return std::nullopt;
        int cu = -1;
        for (int k = 0; k < 4; ++k)
          if (state_of_run(ru, k) == at_u) cu = k;
        if (cu < 0 || !assign(u, cu)) return std::nullopt;
      }
    }
  }

  for (int v = 0; v < nv; ++v)
    if (!boundary.count(v) && choice[v] == -1) return std::nullopt;
  if (result.size() != colors.size()) return std::nullopt;
  return result;
}

TransversalStructure flip(const TransversalStructure& ts,
                          const AlternatingCycle& c) {
  const PlaneGraph& g = ts.dual.graph;
  if (c.vertices.size() != 4) throw InvalidCycleError("cycle must have 4 vertices");
  std::set<std::pair<int, int>> cycle_edges;
  for (int i = 0; i < 4; ++i) {
    int u = c.vertices[i], v = c.vertices[(i + 1) % 4];
    if (!ts.has_edge_label(u, v))
      throw InvalidCycleError("cycle edge is not a labeled edge");
    cycle_edges.insert(edge_key(u, v));
  }
  if (cycle_edges.size() != 4)
    throw InvalidCycleError("cycle edges are not distinct");
  const EdgeLabel& e0 = ts.label(c.vertices[0], c.vertices[1]);
  const EdgeLabel& e1 = ts.label(c.vertices[1], c.vertices[2]);
  const EdgeLabel& e2 = ts.label(c.vertices[2], c.vertices[3]);
  const EdgeLabel& e3 = ts.label(c.vertices[3], c.vertices[0]);
  if (e0.color != e2.color || e1.color != e3.color || e0.color == e1.color)
    throw InvalidCycleError("cycle is not alternating");

  FaceStructure fs = face_structure(g);
  auto enclosed = enclosed_faces(g, fs, cycle_edges);

  // Edges strictly inside: darts of enclosed faces minus the cycle edges.
  std::set<std::pair<int, int>> inside;
  for (std::size_t f = 0; f < enclosed.size(); ++f) {
    if (!enclosed[f]) continue;
    const auto& cyc = fs.faces[f];
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      auto key = edge_key(cyc[i], cyc[(i + 1) % cyc.size()]);
      if (!cycle_edges.count(key)) inside.insert(key);
    }
  }
  if (inside.empty()) throw InvalidCycleError("cycle encloses no edge");

  std::map<std::pair<int, int>, EdgeColor> colors;
  for (const auto& [key, label] : ts.labels) {
    EdgeColor col = label.color;
    if (inside.count(key))
      col = col == EdgeColor::kRed ? EdgeColor::kBlue : EdgeColor::kRed;
    colors[key] = col;
  }
  auto relabeled = directions_from_colors(ts.dual, colors);
  if (!relabeled)
    throw InvalidCycleError("flip produced an inconsistent structure");
  TransversalStructure out;
  out.dual = ts.dual;
  out.labels = std::move(*relabeled);
  return out;
}

FlipClosure flip_closure_size(const Layout& layout, std::size_t cap) {
  TransversalStructure start = transversal_of(layout);
  std::set<std::string> seen{start.canonical_key()};
  std::deque<TransversalStructure> queue{start};
  FlipClosure closure;
  while (!queue.empty()) {
    TransversalStructure ts = std::move(queue.front());
    queue.pop_front();
    for (const auto& cyc : alternating_4cycles(ts)) {
      TransversalStructure next = flip(ts, cyc);
      if (seen.insert(next.canonical_key()).second) {
        if (seen.size() > cap) {
          closure.size = cap;
          closure.exceeded_cap = true;
          return closure;
        }
        queue.push_back(std::move(next));
      }
    }
  }
  closure.size = seen.size();
  return closure;
}

}  // namespace rectlay
