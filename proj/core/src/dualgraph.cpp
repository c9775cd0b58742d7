#include "rectlay/dualgraph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "rectlay/errors.hpp"

namespace rectlay {

int PlaneGraph::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == label) return static_cast<int>(i);
  return -1;
}

std::size_t PlaneGraph::edge_count() const {
  std::size_t darts = 0;
  for (const auto& nbrs : rotation) darts += nbrs.size();
  return darts / 2;
}

bool PlaneGraph::adjacent(int u, int v) const {
  const auto& nbrs = rotation[u];
  return std::find(nbrs.begin(), nbrs.end(), v) != nbrs.end();
}

std::vector<std::string> PlaneGraph::outer_labels() const {
  std::vector<std::string> out;
  std::set<int> seen;
  for (int v : outer_face)
    if (seen.insert(v).second) out.push_back(labels[v]);
  return out;
}

bool is_connected(const PlaneGraph& g) {
  if (g.labels.empty()) return false;
  std::vector<char> seen(g.labels.size(), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  std::size_t count = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : g.rotation[v]) {
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == g.labels.size();
}

namespace {

// Position of u in the rotation at v.
int rot_pos(const PlaneGraph& g, int v, int u) {
  const auto& nbrs = g.rotation[v];
  for (std::size_t i = 0; i < nbrs.size(); ++i)
    if (nbrs[i] == u) return static_cast<int>(i);
  return -1;
}

// Next dart when tracing the face to the left of (u, v): at v, take the
// predecessor of u in the ccw rotation.
std::pair<int, int> next_dart(const PlaneGraph& g, int u, int v) {
  int pos = rot_pos(g, v, u);
  const auto& nbrs = g.rotation[v];
  int prev = nbrs[(pos + nbrs.size() - 1) % nbrs.size()];
  return {v, prev};
}

bool cyclic_equal(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size()) return false;
  if (a.empty()) return true;
  const std::size_t n = a.size();
  for (std::size_t shift = 0; shift < n; ++shift) {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i)
      ok = a[i] == b[(i + shift) % n];
    if (ok) return true;
  }
  return false;
}

}  // namespace

std::vector<std::vector<int>> trace_faces(const PlaneGraph& g) {
  std::map<std::pair<int, int>, bool> used;
  for (std::size_t v = 0; v < g.rotation.size(); ++v)
    for (int w : g.rotation[v]) used[{static_cast<int>(v), w}] = false;

  std::vector<std::vector<int>> faces;
  for (auto& [dart, done] : used) {
    if (done) continue;
    std::vector<int> face;
    std::pair<int, int> cur = dart;
    while (!used[cur]) {
      used[cur] = true;
      face.push_back(cur.first);
      cur = next_dart(g, cur.first, cur.second);
    }
    faces.push_back(std::move(face));
  }
  return faces;
}

std::size_t outer_face_index(const PlaneGraph& g,
                             const std::vector<std::vector<int>>& faces) {
  if (g.labels.size() == 1) return 0;
  std::vector<int> reversed(g.outer_face.rbegin(), g.outer_face.rend());
  for (std::size_t i = 0; i < faces.size(); ++i)
    if (cyclic_equal(faces[i], reversed)) return i;
  throw EmbeddingError("outer_face does not match any traced face");
}

void validate_plane_graph(const PlaneGraph& g) {
  const std::size_t n = g.labels.size();
  if (n == 0) throw EmbeddingError("graph has no vertices");
  if (g.rotation.size() != n)
    throw EmbeddingError("rotation size does not match vertex count");
  std::set<std::string> uniq(g.labels.begin(), g.labels.end());
  if (uniq.size() != n) throw EmbeddingError("duplicate vertex labels");

  for (std::size_t v = 0; v < n; ++v) {
    std::set<int> seen;
    for (int w : g.rotation[v]) {
      if (w < 0 || static_cast<std::size_t>(w) >= n)
        throw EmbeddingError("rotation references unknown vertex");
      if (w == static_cast<int>(v)) throw EmbeddingError("self-loop");
      if (!seen.insert(w).second) throw EmbeddingError("multi-edge");
      if (rot_pos(g, w, static_cast<int>(v)) < 0)
        throw EmbeddingError("rotation is not symmetric");
    }
  }
  if (!is_connected(g)) throw DisconnectedError("graph is disconnected");

  if (n == 1) {
    if (!(g.outer_face.size() == 1 && g.outer_face[0] == 0))
      throw EmbeddingError("single-vertex outer face must be [v]");
    return;
  }
  for (int v : g.outer_face)
    if (v < 0 || static_cast<std::size_t>(v) >= n)
      throw EmbeddingError("outer_face references unknown vertex");

  auto faces = trace_faces(g);
  const std::size_t e = g.edge_count();
  if (static_cast<long long>(n) - static_cast<long long>(e) +
          static_cast<long long>(faces.size()) !=
      2)
    throw EmbeddingError("face tracing violates Euler's formula");
  outer_face_index(g, faces);  // throws when the walk matches no face
}

PlaneGraph dual(const Layout& layout) {
  if (!layout.generic) throw NongenericError("dual requires a generic layout");

  PlaneGraph g;
  std::map<std::string, int> idx;
  for (const auto& r : layout.rects) {
    idx[r.id] = static_cast<int>(g.labels.size());
    g.labels.push_back(r.id);
  }
  g.rotation.assign(g.labels.size(), {});

  // Per rect, contacts grouped by side.
  struct Nbr {
    Rational pos;  // lower end of the shared interval
    int other;
  };
  std::vector<std::vector<Nbr>> bottom(g.labels.size()), right(g.labels.size()),
      top(g.labels.size()), left(g.labels.size());
  for (const auto& c : contacts(layout)) {
    int a = idx[c.a], b = idx[c.b];
    if (c.orientation == Orientation::kVertical) {
      // a left of b, shared vertical interval [lo, hi]
      right[a].push_back({c.lo, b});
      left[b].push_back({c.lo, a});
    } else {
      // a below b
      top[a].push_back({c.lo, b});
      bottom[b].push_back({c.lo, a});
    }
  }
  auto asc = [](std::vector<Nbr>& v) {
    std::sort(v.begin(), v.end(),
              [](const Nbr& x, const Nbr& y) { return x.pos < y.pos; });
  };
  auto desc = [](std::vector<Nbr>& v) {
    std::sort(v.begin(), v.end(),
              [](const Nbr& x, const Nbr& y) { return y.pos < x.pos; });
  };
  for (std::size_t v = 0; v < g.labels.size(); ++v) {
    asc(bottom[v]);
    asc(right[v]);
    desc(top[v]);
    desc(left[v]);
    // ccw around the rect: bottom (x asc), right (y asc), top (x desc),
    // left (y desc).
    for (const auto& group : {bottom[v], right[v], top[v], left[v]})
      for (const auto& nbr : group) g.rotation[v].push_back(nbr.other);
  }

  // Outer walk: rects along the bbox boundary, ccw from the bottom-left.
  std::vector<std::pair<Rational, int>> side;
  std::vector<int> walk;
  auto flush = [&](bool reverse) {
    std::sort(side.begin(), side.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    if (reverse) std::reverse(side.begin(), side.end());
    for (const auto& [pos, v] : side) walk.push_back(v);
    side.clear();
  };
  for (const auto& r : layout.rects)
    if (r.y_lo == layout.bbox.y_lo) side.push_back({r.x_lo, idx[r.id]});
  flush(false);  // bottom, left to right
  for (const auto& r : layout.rects)
    if (r.x_hi == layout.bbox.x_hi) side.push_back({r.y_lo, idx[r.id]});
  flush(false);  // right, bottom to top
  for (const auto& r : layout.rects)
    if (r.y_hi == layout.bbox.y_hi) side.push_back({r.x_lo, idx[r.id]});
  flush(true);  // top, right to left
  for (const auto& r : layout.rects)
    if (r.x_lo == layout.bbox.x_lo) side.push_back({r.y_lo, idx[r.id]});
  flush(true);  // left, top to bottom

  // Collapse consecutive repeats (a rect often spans a corner).
  std::vector<int> outer;
  for (int v : walk)
    if (outer.empty() || outer.back() != v) outer.push_back(v);
  while (outer.size() > 1 && outer.front() == outer.back()) outer.pop_back();
  g.outer_face = std::move(outer);
  return g;
}

ExtendedDual extended_dual(const Layout& layout) {
  PlaneGraph d = dual(layout);

  auto fresh = [&](std::string base) {
    while (d.index_of(base) >= 0) base += "_";
    return base;
  };
  ExtendedDual ext;
  ext.south = fresh("S");
  ext.west = fresh("W");
  ext.north = fresh("N");
  ext.east = fresh("E");

  PlaneGraph g = d;
  int s = static_cast<int>(g.labels.size());
  g.labels.push_back(ext.south);
  int w = static_cast<int>(g.labels.size());
  g.labels.push_back(ext.west);
  int n = static_cast<int>(g.labels.size());
  g.labels.push_back(ext.north);
  int e = static_cast<int>(g.labels.size());
  g.labels.push_back(ext.east);
  g.rotation.resize(g.labels.size());

  std::map<std::string, int> idx;
  for (std::size_t i = 0; i < d.labels.size(); ++i) idx[d.labels[i]] = (int)i;

  std::vector<std::pair<Rational, int>> bottom, rightv, topv, leftv;
  for (const auto& r : layout.rects) {
    int v = idx[r.id];
    if (r.y_lo == layout.bbox.y_lo) bottom.push_back({r.x_lo, v});
    if (r.x_hi == layout.bbox.x_hi) rightv.push_back({r.y_lo, v});
    if (r.y_hi == layout.bbox.y_hi) topv.push_back({r.x_lo, v});
    if (r.x_lo == layout.bbox.x_lo) leftv.push_back({r.y_lo, v});
  }
  auto by_pos = [](std::vector<std::pair<Rational, int>>& v) {
    std::sort(v.begin(), v.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
  };
  by_pos(bottom);
  by_pos(rightv);
  by_pos(topv);
  by_pos(leftv);

  // S sees E, then the bottom rects right-to-left, then W.
  g.rotation[s].push_back(e);
  for (auto it = bottom.rbegin(); it != bottom.rend(); ++it)
    g.rotation[s].push_back(it->second);
  g.rotation[s].push_back(w);
  // W: S, then left rects bottom-to-top, then N.
  g.rotation[w].push_back(s);
  for (const auto& [pos, v] : leftv) g.rotation[w].push_back(v);
  g.rotation[w].push_back(n);
  // N: W, then top rects left-to-right, then E.
  g.rotation[n].push_back(w);
  for (const auto& [pos, v] : topv) g.rotation[n].push_back(v);
  g.rotation[n].push_back(e);
  // E: N, then right rects top-to-bottom, then S.
  g.rotation[e].push_back(n);
  for (auto it = rightv.rbegin(); it != rightv.rend(); ++it)
    g.rotation[e].push_back(it->second);
  g.rotation[e].push_back(s);

  // Insert boundary vertices into each rect's rotation, keeping the ccw
  // order bottom, right, top, left used by dual().
  for (const auto& r : layout.rects) {
    int v = idx[r.id];
    std::vector<int> rot;
    bool on_s = r.y_lo == layout.bbox.y_lo;
    bool on_e = r.x_hi == layout.bbox.x_hi;
    bool on_n = r.y_hi == layout.bbox.y_hi;
    bool on_w = r.x_lo == layout.bbox.x_lo;
    // dual() emitted: bottom contacts, right contacts, top contacts, left
    // contacts. A rect side on the bbox boundary has no contacts there, so
    // the boundary vertex slots in at that side's position.
    const auto& old = d.rotation[v];
    std::size_t i = 0;
    auto count_side = [&](int which) {
      // Recount group sizes by re-deriving them from the geometry.
      std::size_t c = 0;
      for (const auto& other : layout.rects) {
        if (other.id == r.id) continue;
        bool horiz_overlap =
            max(r.x_lo, other.x_lo) < min(r.x_hi, other.x_hi);
        bool vert_overlap = max(r.y_lo, other.y_lo) < min(r.y_hi, other.y_hi);
        switch (which) {
          case 0: if (other.y_hi == r.y_lo && horiz_overlap) ++c; break;
          case 1: if (other.x_lo == r.x_hi && vert_overlap) ++c; break;
          case 2: if (other.y_lo == r.y_hi && horiz_overlap) ++c; break;
          case 3: if (other.x_hi == r.x_lo && vert_overlap) ++c; break;
        }
      }
      return c;
    };
    std::size_t nb = count_side(0), nr = count_side(1), nt = count_side(2),
                nl = count_side(3);
    if (on_s) rot.push_back(s);
    for (std::size_t k = 0; k < nb; ++k) rot.push_back(old[i++]);
    if (on_e) rot.push_back(e);
    for (std::size_t k = 0; k < nr; ++k) rot.push_back(old[i++]);
    if (on_n) rot.push_back(n);
    for (std::size_t k = 0; k < nt; ++k) rot.push_back(old[i++]);
    if (on_w) rot.push_back(w);
    for (std::size_t k = 0; k < nl; ++k) rot.push_back(old[i++]);
    g.rotation[v] = std::move(rot);
  }

  g.outer_face = {s, e, n, w};
  ext.graph = std::move(g);
  return ext;
}

bool is_near_triangulation(const PlaneGraph& g) {
  if (g.labels.size() <= 2) return true;
  auto faces = trace_faces(g);
  std::size_t outer = outer_face_index(g, faces);
  for (std::size_t i = 0; i < faces.size(); ++i) {
    if (i == outer) continue;
    if (faces[i].size() != 3) return false;
  }
  return true;
}

std::vector<std::string> cut_vertices(const PlaneGraph& g) {
  if (!is_connected(g)) throw DisconnectedError("graph is disconnected");
  const int n = static_cast<int>(g.labels.size());
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<char> is_cut(n, 0);
  int timer = 0;

  // Iterative DFS to avoid recursion limits on long paths.
  struct Frame {
    int v, parent;
    std::size_t next_child = 0;
    int child_count = 0;
  };
  for (int root = 0; root < n; ++root) {
    if (disc[root] != -1) continue;
    std::vector<Frame> stack;
    stack.push_back({root, -1});
    disc[root] = low[root] = timer++;
    while (!stack.empty()) {
      Frame& f = stack.back();
      if (f.next_child < g.rotation[f.v].size()) {
        int w = g.rotation[f.v][f.next_child++];
        if (w == f.parent) continue;
        if (disc[w] == -1) {
          disc[w] = low[w] = timer++;
          ++f.child_count;
          stack.push_back({w, f.v});
        } else {
          low[f.v] = std::min(low[f.v], disc[w]);
        }
      } else {
        int v = f.v, parent = f.parent, children = f.child_count;
        stack.pop_back();
        if (parent != -1) {
          Frame& pf = stack.back();
          low[pf.v] = std::min(low[pf.v], low[v]);
          if (low[v] >= disc[pf.v] && pf.parent != -1) is_cut[pf.v] = 1;
        }
        if (parent == -1 && children > 1) is_cut[v] = 1;
      }
    }
  }
  std::vector<std::string> out;
  for (int v = 0; v < n; ++v)
    if (is_cut[v]) out.push_back(g.labels[v]);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

bool connected_without(const PlaneGraph& g, int a, int b) {
  const int n = static_cast<int>(g.labels.size());
  int start = -1;
  int expect = 0;
  for (int v = 0; v < n; ++v) {
    if (v == a || v == b) continue;
    ++expect;
    if (start == -1) start = v;
  }
  if (expect == 0) return true;
  std::vector<char> seen(n, 0);
  std::vector<int> stack{start};
  seen[start] = 1;
  int count = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : g.rotation[v]) {
      if (w == a || w == b || seen[w]) continue;
      seen[w] = 1;
      ++count;
      stack.push_back(w);
    }
  }
  return count == expect;
}

}  // namespace

std::optional<std::pair<std::string, std::string>> find_two_cut(
    const PlaneGraph& g) {
  if (!cut_vertices(g).empty() || g.labels.size() < 2)
    throw NotBiconnectedError("find_two_cut requires a biconnected graph");
  if (g.labels.size() < 4) return std::nullopt;

  auto ordered = [&](std::vector<int> vs) {
    std::sort(vs.begin(), vs.end(),
              [&](int a, int b) { return g.labels[a] < g.labels[b]; });
    return vs;
  };
  std::set<int> outer_set(g.outer_face.begin(), g.outer_face.end());
  std::vector<int> outer = ordered({outer_set.begin(), outer_set.end()});
  std::vector<int> all(g.labels.size());
  std::iota(all.begin(), all.end(), 0);
  all = ordered(all);

  auto scan = [&](const std::vector<int>& xs, const std::vector<int>& ys)
      -> std::optional<std::pair<std::string, std::string>> {
    for (int a : xs) {
      for (int b : ys) {
        if (g.labels[a] >= g.labels[b]) continue;
        if (!connected_without(g, a, b))
          return std::make_pair(g.labels[a], g.labels[b]);
      }
    }
    return std::nullopt;
  };
  if (auto hit = scan(outer, outer)) return hit;
  return scan(all, all);
}

namespace {

// Backtracking isomorphism with degree pruning.
bool iso_search(const std::vector<std::vector<char>>& a,
                const std::vector<std::vector<char>>& b,
                const std::vector<int>& deg_a, const std::vector<int>& deg_b,
                std::vector<int>& map_ab, std::vector<char>& used,
                std::size_t v) {
  const std::size_t n = a.size();
  if (v == n) return true;
  for (std::size_t w = 0; w < n; ++w) {
    if (used[w] || deg_a[v] != deg_b[w]) continue;
    bool ok = true;
    for (std::size_t u = 0; u < v && ok; ++u)
      ok = a[v][u] == b[w][map_ab[u]];
    if (!ok) continue;
    map_ab[v] = static_cast<int>(w);
    used[w] = 1;
    if (iso_search(a, b, deg_a, deg_b, map_ab, used, v + 1)) return true;
    used[w] = 0;
  }
  return false;
}

}  // namespace

bool plane_isomorphic(const PlaneGraph& g1, const PlaneGraph& g2,
                      std::size_t size_limit) {
  if (g1.labels.size() != g2.labels.size()) return false;
  if (g1.edge_count() != g2.edge_count()) return false;
  const std::size_t n = g1.labels.size();
  if (n > size_limit)
    throw SizeLimitError("isomorphism test beyond configured size limit");

  auto matrix = [](const PlaneGraph& g) {
    std::vector<std::vector<char>> m(g.labels.size(),
                                     std::vector<char>(g.labels.size(), 0));
    for (std::size_t v = 0; v < g.rotation.size(); ++v)
      for (int w : g.rotation[v]) m[v][w] = 1;
    return m;
  };
  auto degrees = [](const PlaneGraph& g) {
    std::vector<int> d;
    d.reserve(g.rotation.size());
    for (const auto& nbrs : g.rotation) d.push_back((int)nbrs.size());
    return d;
  };
  std::vector<int> da = degrees(g1), db = degrees(g2);
  std::vector<int> sa = da, sb = db;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa != sb) return false;

  auto a = matrix(g1);
  auto b = matrix(g2);
  std::vector<int> map_ab(n, -1);
  std::vector<char> used(n, 0);
  return iso_search(a, b, da, db, map_ab, used, 0);
}

}  // namespace rectlay
