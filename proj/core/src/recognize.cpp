#include "rectlay/recognize.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "rectlay/classify.hpp"
#include "rectlay/errors.hpp"

namespace rectlay {

int Instance::total_corners() const {
  int t = 0;
  for (int c : corner_count) t += c;
  return t;
}

std::vector<int> Instance::positive_vertices() const {
  std::vector<int> k;
  for (std::size_t v = 0; v < corner_count.size(); ++v)
    if (corner_count[v] > 0) k.push_back(static_cast<int>(v));
  return k;
}

int Instance::count_of(const std::string& label) const {
  int i = graph.index_of(label);
  return i < 0 ? 0 : corner_count[i];
}

namespace {

constexpr int kCornerCap = 4;

// ---------------------------------------------------------------------
// Internal instance state. Corner-pair demands are kept as *chains*:
// a chain (c1, ..., ck) demands a placement m with rect(c_i) incident to
// bbox corner (m + i - 1) mod 4. Plain pairs are 2-chains; Split and
// Remove extend chains across their own anchor pair because the geometry
// pins the new corners right next to the old ones. The public Instance
// view flattens chains to their consecutive links.

using Chain = std::vector<int>;

struct IState {
  PlaneGraph graph;
  std::vector<int> corner_count;
  std::vector<Chain> chains;

  int total_corners() const {
    int t = 0;
    for (int c : corner_count) t += c;
    return t;
  }
  std::vector<int> positive_vertices() const {
    std::vector<int> k;
    for (std::size_t v = 0; v < corner_count.size(); ++v)
      if (corner_count[v] > 0) k.push_back(static_cast<int>(v));
    return k;
  }
};

IState to_state(const Instance& inst) {
  IState s;
  s.graph = inst.graph;
  s.corner_count = inst.corner_count;
  for (auto [a, b] : inst.pairs) s.chains.push_back({a, b});
  return s;
}

Instance to_instance(const IState& s) {
  Instance inst;
  inst.graph = s.graph;
  inst.corner_count = s.corner_count;
  for (const Chain& c : s.chains)
    for (std::size_t i = 0; i + 1 < c.size(); ++i)
      inst.pairs.push_back({c[i], c[i + 1]});
  std::sort(inst.pairs.begin(), inst.pairs.end());
  inst.pairs.erase(std::unique(inst.pairs.begin(), inst.pairs.end()),
                   inst.pairs.end());
  return inst;
}

void dedup_chains(std::vector<Chain>& chains) {
  std::sort(chains.begin(), chains.end());
  chains.erase(std::unique(chains.begin(), chains.end()), chains.end());
}

// A chain longer than four corners must wrap consistently.
std::optional<Chain> normalize_chain(Chain c) {
  if (c.size() > 8) return std::nullopt;
  for (std::size_t i = 4; i < c.size(); ++i)
    if (c[i] != c[i - 4]) return std::nullopt;
  if (c.size() > 4) c.resize(4);
  return c;
}

std::vector<int> component_ids(const PlaneGraph& g, int removed) {
  const int n = static_cast<int>(g.vertex_count());
  std::vector<int> comp(n, -1);
  int next = 0;
  for (int start = 0; start < n; ++start) {
    if (start == removed || comp[start] != -1) continue;
    comp[start] = next;
    std::vector<int> stack{start};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : g.rotation[v]) {
        if (w == removed || comp[w] != -1) continue;
        comp[w] = next;
        stack.push_back(w);
      }
    }
    ++next;
  }
  return comp;
}

// Restriction of g to the kept vertices; rotation order is preserved.
PlaneGraph restrict_graph(const PlaneGraph& g, const std::vector<char>& keep,
                          std::vector<int>& old_to_new) {
  PlaneGraph sub;
  old_to_new.assign(g.vertex_count(), -1);
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (!keep[v]) continue;
    old_to_new[v] = static_cast<int>(sub.labels.size());
    sub.labels.push_back(g.labels[v]);
  }
  sub.rotation.resize(sub.labels.size());
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (!keep[v]) continue;
    for (int w : g.rotation[v])
      if (keep[w]) sub.rotation[old_to_new[v]].push_back(old_to_new[w]);
  }
  return sub;
}

// Traces the outer face of `sub` starting from dart (q, p), where (p, q)
// was a ccw boundary dart of the parent graph; returns the ccw walk.
std::vector<int> trace_outer(const PlaneGraph& sub, int q, int p) {
  auto rot_pos = [&](int v, int u) {
    const auto& nbrs = sub.rotation[v];
    for (std::size_t i = 0; i < nbrs.size(); ++i)
      if (nbrs[i] == u) return static_cast<int>(i);
    return -1;
  };
  std::vector<int> face;
  int cu = q, cv = p;
  const int start_u = q, start_v = p;
  do {
    face.push_back(cu);
    int pos = rot_pos(cv, cu);
    const auto& nbrs = sub.rotation[cv];
    int prev = nbrs[(pos + nbrs.size() - 1) % nbrs.size()];
    cu = cv;
    cv = prev;
  } while (!(cu == start_u && cv == start_v));
  std::reverse(face.begin(), face.end());
  return face;
}

std::vector<int> sub_outer_walk(const PlaneGraph& parent,
                                const std::vector<char>& keep,
                                const std::vector<int>& old_to_new,
                                const PlaneGraph& sub) {
  if (sub.labels.size() == 1) return {0};
  const auto& walk = parent.outer_face;
  for (std::size_t i = 0; i < walk.size(); ++i) {
    int p = walk[i];
    int q = walk[(i + 1) % walk.size()];
    if (p != q && keep[p] && keep[q])
      return trace_outer(sub, old_to_new[q], old_to_new[p]);
  }
  throw Error("component has no surviving boundary dart");
}

struct RemoveOutcome {
  IState sub;
  std::string u, w;   // cw-extreme neighbors of the removed vertex
  Chain anchor;       // merged chain containing the (u, w) link (sub indices)
  std::size_t link;   // index of u within anchor
};

struct SplitOutcome {
  IState sub1, sub2;
  std::string u1, w1, u2, w2;
  Chain anchor1, anchor2;     // merged anchor chains per side (sub indices)
  std::size_t link1, link2;   // index of u_i within anchor_i
};

std::vector<std::size_t> walk_occurrences(const std::vector<int>& walk,
                                          int v) {
  std::vector<std::size_t> occ;
  for (std::size_t i = 0; i < walk.size(); ++i)
    if (walk[i] == v) occ.push_back(i);
  return occ;
}

// The ccw outer path from a to b (first occurrences), exclusive interior.
std::vector<int> walk_interior(const std::vector<int>& walk, int a, int b) {
  std::vector<int> interior;
  if (a == b) return interior;
  std::size_t start = walk.size();
  for (std::size_t i = 0; i < walk.size(); ++i) {
    if (walk[i] == a) {
      start = i;
      break;
    }
  }
  if (start == walk.size()) throw Error("pair endpoint missing from walk");
  for (std::size_t step = 1; step < walk.size(); ++step) {
    int x = walk[(start + step) % walk.size()];
    if (x == b) return interior;
    interior.push_back(x);
  }
  throw Error("pair endpoints not connected along the walk");
}

// Aligns `incoming` (link at q) onto `merged` (link at `link`), extending
// both ends; offsets are relative to the link start.
bool merge_at_link(Chain& merged, std::size_t& link, const Chain& incoming,
                   std::size_t q) {
  std::map<long long, int> slots;
  for (std::size_t i = 0; i < merged.size(); ++i)
    slots[static_cast<long long>(i) - static_cast<long long>(link)] =
        merged[i];
  for (std::size_t i = 0; i < incoming.size(); ++i) {
    long long off = static_cast<long long>(i) - static_cast<long long>(q);
    auto it = slots.find(off);
    if (it != slots.end()) {
      if (it->second != incoming[i]) return false;
    } else {
      slots[off] = incoming[i];
    }
  }
  // slots must form a contiguous range
  long long lo = slots.begin()->first;
  long long hi = slots.rbegin()->first;
  if (hi - lo + 1 != static_cast<long long>(slots.size())) return false;
  // fold wrapped duplicates
  for (const auto& [off, vert] : slots) {
    if (off + 4 <= hi) {
      auto it = slots.find(off + 4);
      if (it != slots.end() && it->second != vert) return false;
    }
  }
  Chain out;
  std::size_t new_link = 0;
  long long stop = std::min(hi, lo + 3);
  for (long long off = lo; off <= stop; ++off) {
    auto it = slots.find(off);
    if (it == slots.end()) return false;
    if (off == 0) new_link = out.size();
    out.push_back(it->second);
  }
  if (stop < 0) return false;  // the link must survive the fold
  merged = std::move(out);
  link = new_link;
  return true;
}

// Substitutes the pivot v (about to span corners j, j+1 with u at j and w
// at j+1) inside a chain that mentions it. Returns the rewritten chain,
// which always contains the (u, w) link, or nullopt when no placement is
// possible.
std::optional<Chain> substitute_pivot(const Chain& c, int v, int u, int w) {
  std::vector<std::size_t> where;
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i] == v) where.push_back(i);
  if (where.size() == 2 && where[1] == where[0] + 1) {
    Chain out = c;
    out[where[0]] = u;
    out[where[1]] = w;
    return out;
  }
  if (where.size() != 1) return std::nullopt;
  std::size_t p = where[0];
  // option 1: v sits at corner j, so v -> u and the successor must be w
  bool opt1 = p + 1 >= c.size() || c[p + 1] == w;
  // option 2: v sits at corner j+1, so v -> w and the predecessor must be u
  bool opt2 = p == 0 || c[p - 1] == u;
  if (opt1) {
    Chain out = c;
    out[p] = u;
    if (p + 1 == out.size()) out.push_back(w);
    return out;
  }
  if (opt2) {
    Chain out = c;
    out[p] = w;
    if (p == 0) out.insert(out.begin(), u);
    return out;
  }
  return std::nullopt;
}

std::optional<RemoveOutcome> remove_details(const IState& inst, int v) {
  const PlaneGraph& g = inst.graph;
  const auto& walk = g.outer_face;
  auto occ = walk_occurrences(walk, v);
  if (occ.empty()) throw NotOuterError("vertex is not on the outer face");
  if (g.vertex_count() < 2) throw Error("remove requires >= 2 vertices");
  if (occ.size() > 1)
    throw CutVertexError("vertex occurs on the outer face more than once");

  // A pivot fails when the ccw outer path of any demanded link passes
  // strictly through v.
  for (const Chain& c : inst.chains) {
    for (std::size_t i = 0; i + 1 < c.size(); ++i) {
      if (c[i] == v || c[i + 1] == v) continue;
      for (int x : walk_interior(walk, c[i], c[i + 1]))
        if (x == v) return std::nullopt;
    }
  }

  std::size_t i = occ[0];
  int u = walk[(i + walk.size() - 1) % walk.size()];
  int w = walk[(i + 1) % walk.size()];

  std::vector<char> keep(g.vertex_count(), 1);
  keep[v] = 0;
  std::vector<int> old_to_new;
  PlaneGraph sub = restrict_graph(g, keep, old_to_new);
  if (!is_connected(sub))
    throw CutVertexError("removal disconnects the graph");
  sub.outer_face = sub_outer_walk(g, keep, old_to_new, sub);

  RemoveOutcome out;
  out.u = g.labels[u];
  out.w = g.labels[w];
  out.sub.graph = std::move(sub);
  out.sub.corner_count.assign(out.sub.graph.vertex_count(), 0);
  for (std::size_t x = 0; x < g.vertex_count(); ++x)
    if (old_to_new[x] >= 0)
      out.sub.corner_count[old_to_new[x]] = inst.corner_count[x];
  auto bump = [&](int old_idx) {
    int& c = out.sub.corner_count[old_to_new[old_idx]];
    c = std::min(kCornerCap, c + 1);
  };
  bump(u);
  bump(w);

  Chain merged = {u, w};
  std::size_t link = 0;
  for (const Chain& c : inst.chains) {
    bool has_v = std::find(c.begin(), c.end(), v) != c.end();
    if (!has_v) {
      out.sub.chains.push_back(c);  // remapped below
      continue;
    }
    auto replaced = substitute_pivot(c, v, u, w);
    if (!replaced) return std::nullopt;
    // locate the (u, w) link
    std::size_t q = replaced->size();
    for (std::size_t t = 0; t + 1 < replaced->size(); ++t)
      if ((*replaced)[t] == u && (*replaced)[t + 1] == w) {
        q = t;
        break;
      }
    if (q == replaced->size()) return std::nullopt;
    if (!merge_at_link(merged, link, *replaced, q)) return std::nullopt;
  }
  auto folded = normalize_chain(merged);
  if (!folded) return std::nullopt;
  if (static_cast<long long>(link) >= static_cast<long long>(folded->size()))
    return std::nullopt;
  merged = *folded;
  out.sub.chains.push_back(merged);

  for (auto& c : out.sub.chains)
    for (auto& x : c) x = old_to_new[x];
  dedup_chains(out.sub.chains);

  out.anchor.clear();
  for (int x : merged) out.anchor.push_back(old_to_new[x]);
  out.link = link;
  return out;
}

std::optional<SplitOutcome> split_details(const IState& inst, int v) {
  const PlaneGraph& g = inst.graph;
  std::vector<int> comp = component_ids(g, v);
  int ncomp = *std::max_element(comp.begin(), comp.end()) + 1;
  if (ncomp < 2) throw NotCutVertexError("vertex is not a cut vertex");
  if (ncomp > 2) return std::nullopt;  // no rect splits a box in three

  for (const Chain& c : inst.chains)
    for (int x : c)
      if (x == v) return std::nullopt;

  auto occ = walk_occurrences(g.outer_face, v);
  if (occ.size() != 2) return std::nullopt;
  const auto& walk = g.outer_face;
  auto pred = [&](std::size_t i) {
    return walk[(i + walk.size() - 1) % walk.size()];
  };
  auto succ = [&](std::size_t i) { return walk[(i + 1) % walk.size()]; };
  int p0 = pred(occ[0]), s0 = succ(occ[0]);
  int p1 = pred(occ[1]), s1 = succ(occ[1]);
  if (comp[p0] == comp[s0] || comp[p1] == comp[s1]) return std::nullopt;
  if (comp[p0] != comp[s1] || comp[p1] != comp[s0]) return std::nullopt;

  // Component of pred(occ[0]): cw neighbor sequence of v there runs from
  // pred(occ[0]) to succ(occ[1]); the other component symmetrically.
  struct Side {
    int comp_id;
    int u, w;
    IState sub;
    std::vector<int> old_to_new;
    Chain anchor;
    std::size_t link = 0;
  };
  Side sides[2] = {{comp[p0], p0, s1, {}, {}, {}, 0},
                   {comp[p1], p1, s0, {}, {}, {}, 0}};

  // Each component's neighbors must form one contiguous arc of v's
  // rotation whose cw traversal runs from u to w.
  {
    const auto& rot = g.rotation[v];
    const std::size_t m = rot.size();
    for (const Side& side : sides) {
      std::vector<char> mine(m, 0);
      std::size_t count = 0;
      for (std::size_t i = 0; i < m; ++i) {
        if (comp[rot[i]] == side.comp_id) {
          mine[i] = 1;
          ++count;
        }
      }
      if (count == 0) return std::nullopt;
      std::size_t transitions = 0;
      for (std::size_t i = 0; i < m; ++i)
        if (mine[i] != mine[(i + 1) % m]) ++transitions;
      if (transitions != 2 && count != m) return std::nullopt;
      std::size_t first = 0;
      while (first < m && !(mine[first] && !mine[(first + m - 1) % m]))
        ++first;
      if (first < m) {
        std::size_t last = first;
        while (mine[(last + 1) % m]) last = (last + 1) % m;
        if (rot[first] != side.w || rot[last] != side.u) return std::nullopt;
      }
    }
  }

  for (Side& side : sides) {
    std::vector<char> keep(g.vertex_count(), 0);
    for (std::size_t x = 0; x < g.vertex_count(); ++x)
      keep[x] = static_cast<int>(x) != v && comp[x] == side.comp_id;
    side.sub.graph = restrict_graph(g, keep, side.old_to_new);
    side.sub.graph.outer_face =
        sub_outer_walk(g, keep, side.old_to_new, side.sub.graph);
    side.sub.corner_count.assign(side.sub.graph.vertex_count(), 0);
    for (std::size_t x = 0; x < g.vertex_count(); ++x)
      if (side.old_to_new[x] >= 0)
        side.sub.corner_count[side.old_to_new[x]] = inst.corner_count[x];
    auto bump = [&](int old_idx) {
      int& c = side.sub.corner_count[side.old_to_new[old_idx]];
      c = std::min(kCornerCap, c + 1);
    };
    bump(side.u);
    bump(side.w);
    side.anchor = {side.u, side.w};  // parent indices until the remap below
    side.link = 0;
  }

  // Distribute chains. Crossing links attach the chain pieces to the
  // anchors: the piece leaving a component continues into that component's
  // (u, w) corners, the piece arriving is preceded by them.
  for (const Chain& c : inst.chains) {
    // split into runs of equal component
    std::vector<std::pair<int, Chain>> runs;  // (side index, piece)
    for (int x : c) {
      int s = comp[x] == sides[0].comp_id ? 0 : 1;
      if (runs.empty() || runs.back().first != s)
        runs.push_back({s, {}});
      runs.back().second.push_back(x);
    }
    if (runs.size() == 1) {
      sides[runs[0].first].sub.chains.push_back(runs[0].second);
      continue;
    }
    for (std::size_t r = 0; r < runs.size(); ++r) {
      Side& side = sides[runs[r].first];
      Chain piece = runs[r].second;
      std::size_t q;
      bool crossing_before = r > 0;
      bool crossing_after = r + 1 < runs.size();
      if (crossing_after) {
        q = piece.size();
        piece.push_back(side.u);
        piece.push_back(side.w);
      }
      if (crossing_before) {
        piece.insert(piece.begin(), side.w);
        piece.insert(piece.begin(), side.u);
        q = 0;
      } else if (!crossing_after) {
        q = 0;  // unreachable: runs.size() >= 2 means one crossing side
      }
      if (crossing_before && crossing_after) {
        // the piece wraps through both anchor copies; fold them
        auto folded = normalize_chain(piece);
        if (!folded) return std::nullopt;
        piece = *folded;
        q = 0;
      }
      if (!merge_at_link(side.anchor, side.link, piece, q))
        return std::nullopt;
    }
  }
  for (Side& side : sides) {
    auto folded = normalize_chain(side.anchor);
    if (!folded) return std::nullopt;
    if (side.link >= folded->size()) return std::nullopt;
    side.anchor = *folded;
    side.sub.chains.push_back(side.anchor);
    for (auto& chain : side.sub.chains)
      for (auto& x : chain) x = side.old_to_new[x];
    dedup_chains(side.sub.chains);
    Chain remapped;
    for (int x : side.anchor) remapped.push_back(side.old_to_new[x]);
    side.anchor = std::move(remapped);
  }

  SplitOutcome out;
  std::string smallest;
  bool first = true;
  for (std::size_t x = 0; x < g.vertex_count(); ++x) {
    if (static_cast<int>(x) == v) continue;
    if (first || g.labels[x] < smallest) {
      smallest = g.labels[x];
      first = false;
    }
  }
  bool side0_first = comp[g.index_of(smallest)] == sides[0].comp_id;
  Side& a = side0_first ? sides[0] : sides[1];
  Side& b = side0_first ? sides[1] : sides[0];
  out.sub1 = std::move(a.sub);
  out.sub2 = std::move(b.sub);
  out.u1 = g.labels[a.u];
  out.w1 = g.labels[a.w];
  out.u2 = g.labels[b.u];
  out.w2 = g.labels[b.w];
  out.anchor1 = std::move(a.anchor);
  out.link1 = a.link;
  out.anchor2 = std::move(b.anchor);
  out.link2 = b.link;
  return out;
}

// ---------------------------------------------------------------------
// Reconstruction.

struct Build {
  std::vector<Rect> rects;            // rect ids are vertex labels
  std::array<std::string, 4> corner;  // owners at BL, BR, TR, TL
  Rational x0, y0, x1, y1;            // bounding box
};

void rotate_ccw_once(Build& b) {
  for (auto& r : b.rects) {
    Rect t = r;
    r.x_lo = -t.y_hi;
    r.x_hi = -t.y_lo;
    r.y_lo = t.x_lo;
    r.y_hi = t.x_hi;
  }
  Rational nx0 = -b.y1, nx1 = -b.y0, ny0 = b.x0, ny1 = b.x1;
  b.x0 = nx0;
  b.x1 = nx1;
  b.y0 = ny0;
  b.y1 = ny1;
  std::array<std::string, 4> c;
  for (int p = 0; p < 4; ++p) c[p] = b.corner[(p + 3) % 4];
  b.corner = c;
}

void rotate_build(Build& b, int quarter_turns) {
  for (int i = 0; i < quarter_turns; ++i) rotate_ccw_once(b);
}

void scale_build(Build& b, const Rational& s) {
  for (auto& r : b.rects) {
    r.x_lo *= s;
    r.x_hi *= s;
    r.y_lo *= s;
    r.y_hi *= s;
  }
  b.x0 *= s;
  b.x1 *= s;
  b.y0 *= s;
  b.y1 *= s;
}

void translate_build(Build& b, const Rational& dx, const Rational& dy) {
  for (auto& r : b.rects) {
    r.x_lo += dx;
    r.x_hi += dx;
    r.y_lo += dy;
    r.y_hi += dy;
  }
  b.x0 += dx;
  b.x1 += dx;
  b.y0 += dy;
  b.y1 += dy;
}

// Placement of a label chain on the corner array: smallest m such that
// chain[i] sits at corner (m + i) mod 4.
int chain_placement(const Build& b, const std::vector<std::string>& chain) {
  for (int m = 0; m < 4; ++m) {
    bool ok = true;
    for (std::size_t i = 0; i < chain.size() && ok; ++i)
      ok = b.corner[(m + i) % 4] == chain[i];
    if (ok) return m;
  }
  return -1;
}

bool counts_satisfied(const Build& b, const IState& inst) {
  for (std::size_t v = 0; v < inst.corner_count.size(); ++v) {
    if (inst.corner_count[v] == 0) continue;
    int have = 0;
    for (const auto& owner : b.corner)
      if (owner == inst.graph.labels[v]) ++have;
    if (have < inst.corner_count[v]) return false;
  }
  return true;
}

bool chains_satisfied(const Build& b, const IState& inst) {
  for (const Chain& c : inst.chains) {
    std::vector<std::string> labels;
    for (int x : c) labels.push_back(inst.graph.labels[x]);
    if (chain_placement(b, labels) < 0) return false;
  }
  return true;
}

std::set<std::string> side_rects(const Build& b, int k) {
  std::set<std::string> out;
  for (const auto& r : b.rects) {
    switch (k) {
      case 0: if (r.y_lo == b.y0) out.insert(r.id); break;
      case 1: if (r.x_hi == b.x1) out.insert(r.id); break;
      case 2: if (r.y_hi == b.y1) out.insert(r.id); break;
      case 3: if (r.x_lo == b.x0) out.insert(r.id); break;
    }
  }
  return out;
}

std::set<std::string> neighbor_labels(const PlaneGraph& g, int v) {
  std::set<std::string> out;
  for (int w : g.rotation[v]) out.insert(g.labels[w]);
  return out;
}

// Attach the pivot's rect along the side pinned by the anchor chain.
std::optional<Build> attach_pivot(Build sub, const RemoveOutcome& rd,
                                  const IState& parent, int v) {
  std::vector<std::string> anchor_labels;
  for (int x : rd.anchor) anchor_labels.push_back(rd.sub.graph.labels[x]);
  int m = chain_placement(sub, anchor_labels);
  if (m < 0) return std::nullopt;
  int k = (m + static_cast<int>(rd.link)) % 4;
  if (side_rects(sub, k) != neighbor_labels(parent.graph, v))
    return std::nullopt;

  const std::string& label = parent.graph.labels[v];
  const Rational one(1);
  switch (k) {
    case 0:
      sub.rects.push_back({label, sub.x0, sub.y0 - one, sub.x1, sub.y0});
      sub.y0 -= one;
      break;
    case 1:
      sub.rects.push_back({label, sub.x1, sub.y0, sub.x1 + one, sub.y1});
      sub.x1 += one;
      break;
    case 2:
      sub.rects.push_back({label, sub.x0, sub.y1, sub.x1, sub.y1 + one});
      sub.y1 += one;
      break;
    case 3:
      sub.rects.push_back({label, sub.x0 - one, sub.y0, sub.x0, sub.y1});
      sub.x0 -= one;
      break;
  }
  sub.corner[k] = label;
  sub.corner[(k + 1) % 4] = label;
  if (!counts_satisfied(sub, parent) || !chains_satisfied(sub, parent))
    return std::nullopt;
  return sub;
}

// Rebuild the layout for a split: sub1 rotated so its anchored (u1, w1)
// side faces east, sub2 so its anchored side faces west, glued to a square
// for v.
std::optional<Build> compose_split(Build b1, Build b2, const SplitOutcome& sp,
                                   const IState& parent, int v) {
  std::vector<std::string> anchor1, anchor2;
  for (int x : sp.anchor1) anchor1.push_back(sp.sub1.graph.labels[x]);
  for (int x : sp.anchor2) anchor2.push_back(sp.sub2.graph.labels[x]);
  int m1 = chain_placement(b1, anchor1);
  int m2 = chain_placement(b2, anchor2);
  if (m1 < 0 || m2 < 0) return std::nullopt;
  int k1 = (m1 + static_cast<int>(sp.link1)) % 4;
  int k2 = (m2 + static_cast<int>(sp.link2)) % 4;
  rotate_build(b1, (1 - k1 + 4) % 4);
  rotate_build(b2, (3 - k2 + 4) % 4);

  std::set<std::string> nbrs = neighbor_labels(parent.graph, v);
  std::set<std::string> left_side = side_rects(b1, 1);
  std::set<std::string> right_side = side_rects(b2, 3);
  std::set<std::string> expected_left, expected_right;
  for (const auto& nb : nbrs) {
    if (sp.sub1.graph.index_of(nb) >= 0) expected_left.insert(nb);
    if (sp.sub2.graph.index_of(nb) >= 0) expected_right.insert(nb);
  }
  if (left_side != expected_left || right_side != expected_right)
    return std::nullopt;

  Rational h1 = b1.y1 - b1.y0;
  Rational h2 = b2.y1 - b2.y0;
  scale_build(b1, h2);
  scale_build(b2, h1);
  Rational height = h1 * h2;
  translate_build(b1, -b1.x1, -b1.y0);
  translate_build(b2, height - b2.x0, -b2.y0);

  Build out;
  out.rects = std::move(b1.rects);
  out.rects.push_back(
      {parent.graph.labels[v], Rational(0), Rational(0), height, height});
  out.rects.insert(out.rects.end(), b2.rects.begin(), b2.rects.end());
  out.x0 = b1.x0;
  out.y0 = 0;
  out.x1 = b2.x1;
  out.y1 = height;
  out.corner = {b1.corner[0], b2.corner[1], b2.corner[2], b1.corner[3]};
  if (!counts_satisfied(out, parent) || !chains_satisfied(out, parent))
    return std::nullopt;
  return out;
}

// Deterministic try order: outer walk from the lexicographically smallest
// outer vertex, then remaining vertices by label.
std::vector<int> canonical_order(const IState& inst) {
  const PlaneGraph& g = inst.graph;
  std::vector<int> dedup;
  std::set<int> seen;
  std::size_t start = 0;
  for (std::size_t i = 1; i < g.outer_face.size(); ++i)
    if (g.labels[g.outer_face[i]] < g.labels[g.outer_face[start]]) start = i;
  for (std::size_t s = 0; s < g.outer_face.size(); ++s) {
    int x = g.outer_face[(start + s) % g.outer_face.size()];
    if (seen.insert(x).second) dedup.push_back(x);
  }
  std::vector<int> rest;
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    if (!seen.count(static_cast<int>(v))) rest.push_back(static_cast<int>(v));
  std::sort(rest.begin(), rest.end(), [&](int a, int b) {
    return g.labels[a] < g.labels[b];
  });
  dedup.insert(dedup.end(), rest.begin(), rest.end());
  return dedup;
}

struct RunContext {
  RecognizeStats* stats;
  std::size_t k3_on_path = 0;
  std::size_t pair_on_path = 0;
};

std::optional<Build> run(const IState& inst, RunContext ctx);

std::optional<Build> try_remove(const IState& inst, int v, RunContext ctx) {
  RecognizeStats& stats = *ctx.stats;
  ++stats.removes;
  std::optional<RemoveOutcome> rd;
  try {
    rd = remove_details(inst, v);
  } catch (const NotOuterError&) {
    return std::nullopt;
  } catch (const CutVertexError&) {
    return std::nullopt;
  }
  if (!rd) return std::nullopt;
  int parent_total = inst.total_corners();
  int sub_total = rd->sub.total_corners();
  if (sub_total < parent_total) stats.remove_total_decreased = true;
  stats.min_sub_total = std::min(stats.min_sub_total, sub_total);
  auto sub = run(rd->sub, ctx);
  if (!sub) return std::nullopt;
  auto made = attach_pivot(std::move(*sub), *rd, inst, v);
  if (!made) ++stats.local_check_failures;
  return made;
}

std::optional<Build> run(const IState& inst, RunContext ctx) {
  RecognizeStats& stats = *ctx.stats;
  ++stats.nodes;
  const PlaneGraph& g = inst.graph;
  const std::size_t n = g.vertex_count();

  if (n == 1) {
    Build b;
    b.x0 = 0;
    b.y0 = 0;
    b.x1 = 1;
    b.y1 = 1;
    b.rects.push_back({g.labels[0], 0, 0, 1, 1});
    b.corner = {g.labels[0], g.labels[0], g.labels[0], g.labels[0]};
    return b;
  }
  for (int c : inst.corner_count)
    if (c > 2) return std::nullopt;

  // Corner demands are only satisfiable by boundary rects.
  std::set<int> outer(g.outer_face.begin(), g.outer_face.end());
  for (std::size_t v = 0; v < n; ++v)
    if (inst.corner_count[v] > 0 && !outer.count(static_cast<int>(v)))
      return std::nullopt;
  for (const Chain& c : inst.chains)
    for (int x : c)
      if (!outer.count(x)) return std::nullopt;

  auto cuts = cut_vertices(g);
  if (!cuts.empty()) {
    ++stats.splits;
    int v = g.index_of(cuts.front());
    // A cut rect is bounded by two opposite bbox sides and two slices, so
    // it can satisfy no corner demand.
    if (inst.corner_count[v] > 0) return std::nullopt;
    std::optional<SplitOutcome> sp = split_details(inst, v);
    if (!sp) return std::nullopt;
    stats.min_sub_total =
        std::min({stats.min_sub_total, sp->sub1.total_corners(),
                  sp->sub2.total_corners()});
    auto b1 = run(sp->sub1, ctx);
    if (!b1) return std::nullopt;
    auto b2 = run(sp->sub2, ctx);
    if (!b2) return std::nullopt;
    auto made = compose_split(std::move(*b1), std::move(*b2), *sp, inst, v);
    if (!made) ++stats.local_check_failures;
    return made;
  }

  auto order = canonical_order(inst);
  for (int v : order) {
    if (inst.corner_count[v] == 2) {
      ++stats.branch_forced_remove;
      return try_remove(inst, v, ctx);
    }
  }

  std::vector<int> k = inst.positive_vertices();
  bool single_link = inst.chains.size() == 1 && inst.chains[0].size() == 2;
  if (single_link && k.size() == 2) {
    int a = inst.chains[0][0], b = inst.chains[0][1];
    if (a != b && inst.corner_count[a] == 1 && inst.corner_count[b] == 1) {
      ++stats.branch_pair;
      ++ctx.pair_on_path;
      stats.max_pair_on_path =
          std::max(stats.max_pair_on_path, ctx.pair_on_path);
      if (auto r = try_remove(inst, a, ctx)) return r;
      if (auto r = try_remove(inst, b, ctx)) return r;
      if (n >= 4) {
        if (auto two = find_two_cut(g)) {
          if (auto r = try_remove(inst, g.index_of(two->first), ctx))
            return r;
          if (auto r = try_remove(inst, g.index_of(two->second), ctx))
            return r;
        }
      }
      return std::nullopt;
    }
  }
  if (k.size() == 3) {
    ++stats.branch_k3;
    ++ctx.k3_on_path;
    stats.max_k3_on_path = std::max(stats.max_k3_on_path, ctx.k3_on_path);
    for (int v : order) {
      if (inst.corner_count[v] == 0) continue;
      if (auto r = try_remove(inst, v, ctx)) return r;
    }
    return std::nullopt;
  }
  if (k.empty()) {
    ++stats.branch_k0;
    for (int v : order) {
      if (!outer.count(v)) continue;
      if (auto r = try_remove(inst, v, ctx)) return r;
    }
    return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace

Instance make_instance(
    const PlaneGraph& g, const std::map<std::string, int>& corner_count,
    const std::vector<std::pair<std::string, std::string>>& pairs) {
  try {
    validate_plane_graph(g);
  } catch (const Error& e) {
    throw InvalidInputError(std::string("invalid graph: ") + e.what());
  }
  if (!is_near_triangulation(g))
    throw InvalidInputError("graph is not a near-triangulation");

  Instance inst;
  inst.graph = g;
  inst.corner_count.assign(g.vertex_count(), 0);
  for (const auto& [label, count] : corner_count) {
    int v = g.index_of(label);
    if (v < 0) throw InvalidInputError("corner count for unknown vertex");
    if (count < 0) throw InvalidInputError("negative corner count");
    inst.corner_count[v] = std::min(kCornerCap, count);
  }
  std::set<int> outer(g.outer_face.begin(), g.outer_face.end());
  for (const auto& [a, b] : pairs) {
    int ia = g.index_of(a), ib = g.index_of(b);
    if (ia < 0 || ib < 0) throw InvalidInputError("pair on unknown vertex");
    if (!outer.count(ia) || !outer.count(ib))
      throw InvalidInputError("pair endpoint not on the outer face");
    inst.pairs.push_back({ia, ib});
  }
  std::sort(inst.pairs.begin(), inst.pairs.end());
  inst.pairs.erase(std::unique(inst.pairs.begin(), inst.pairs.end()),
                   inst.pairs.end());
  return inst;
}

std::pair<Instance, Instance> split_instance(const Instance& inst,
                                             const std::string& v) {
  int idx = inst.graph.index_of(v);
  if (idx < 0) throw NotCutVertexError("unknown vertex");
  auto cuts = cut_vertices(inst.graph);
  if (std::find(cuts.begin(), cuts.end(), v) == cuts.end())
    throw NotCutVertexError("vertex is not a cut vertex");
  std::vector<int> comp = component_ids(inst.graph, idx);
  if (*std::max_element(comp.begin(), comp.end()) + 1 > 2)
    throw MoreThanTwoComponentsError(
        "removal leaves more than two components");
  auto sp = split_details(to_state(inst), idx);
  if (!sp) throw Error("split cannot route the corner pairs");
  return {to_instance(sp->sub1), to_instance(sp->sub2)};
}

std::optional<Instance> remove_instance(const Instance& inst,
                                        const std::string& v) {
  int idx = inst.graph.index_of(v);
  if (idx < 0) throw NotOuterError("unknown vertex");
  auto rd = remove_details(to_state(inst), idx);
  if (!rd) return std::nullopt;
  return to_instance(rd->sub);
}

VerifyReport verify_realization(const CornerLabeledLayout& cand,
                                const Instance& inst) {
  auto fail = [](std::string detail) {
    VerifyReport r;
    r.ok = false;
    r.detail = std::move(detail);
    return r;
  };
  const PlaneGraph& g = inst.graph;

  if (cand.vertex_map.size() != g.vertex_count())
    return fail("vertex map size mismatch");
  std::set<std::string> mapped;
  for (const auto& [vertex, rect] : cand.vertex_map) {
    if (g.index_of(vertex) < 0) return fail("vertex map names unknown vertex");
    if (!cand.layout.find(rect)) return fail("vertex map names unknown rect");
    if (!mapped.insert(rect).second)
      return fail("vertex map is not injective");
  }
  if (cand.layout.rects.size() != g.vertex_count())
    return fail("rect count differs from vertex count");

  Layout revalidated;
  try {
    revalidated = validate_layout(cand.layout.bbox, cand.layout.rects);
  } catch (const Error& e) {
    return fail(std::string("layout invalid: ") + e.what());
  }
  if (!revalidated.generic) return fail("layout is not generic");

  // Exact adjacency comparison under the vertex map: the instance's edges
  // mapped through the bijection must equal the dual's edge set.
  PlaneGraph d = dual(revalidated);
  std::map<std::string, int> dual_index;
  for (std::size_t i = 0; i < d.labels.size(); ++i)
    dual_index[d.labels[i]] = static_cast<int>(i);
  std::vector<int> to_dual(g.vertex_count());
  for (std::size_t a = 0; a < g.vertex_count(); ++a)
    to_dual[a] = dual_index.at(cand.vertex_map.at(g.labels[a]));
  std::vector<std::pair<int, int>> want, have;
  for (std::size_t a = 0; a < g.vertex_count(); ++a)
    for (int b : g.rotation[a])
      if (static_cast<int>(a) < b)
        want.push_back({std::min(to_dual[a], to_dual[b]),
                        std::max(to_dual[a], to_dual[b])});
  for (std::size_t a = 0; a < d.rotation.size(); ++a)
    for (int b : d.rotation[a])
      if (static_cast<int>(a) < b) have.push_back({static_cast<int>(a), b});
  std::sort(want.begin(), want.end());
  std::sort(have.begin(), have.end());
  if (want != have) return fail("dual adjacency mismatch");

  auto owner_of = [&](const Rational& x, const Rational& y) -> std::string {
    for (const auto& r : revalidated.rects)
      if (r.x_lo <= x && x <= r.x_hi && r.y_lo <= y && y <= r.y_hi)
        return r.id;
    return "";
  };
  const Rect& bb = revalidated.bbox;
  std::array<std::string, 4> owners = {
      owner_of(bb.x_lo, bb.y_lo), owner_of(bb.x_hi, bb.y_lo),
      owner_of(bb.x_hi, bb.y_hi), owner_of(bb.x_lo, bb.y_hi)};
  if (owners != cand.corner_rects) return fail("corner_rects mismatch");

  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    int have_corners = 0;
    const std::string& rect = cand.vertex_map.at(g.labels[v]);
    for (const auto& o : owners)
      if (o == rect) ++have_corners;
    if (have_corners < inst.corner_count[v])
      return fail("corner count not met at " + g.labels[v]);
  }
  for (auto [a, b] : inst.pairs) {
    const std::string& ra = cand.vertex_map.at(g.labels[a]);
    const std::string& rb = cand.vertex_map.at(g.labels[b]);
    bool ok = false;
    for (int m = 0; m < 4 && !ok; ++m)
      ok = owners[m] == ra && owners[(m + 1) % 4] == rb;
    if (!ok)
      return fail("pair (" + g.labels[a] + "," + g.labels[b] +
                  ") not on consecutive corners");
  }

  if (!is_one_sided(revalidated).one_sided)
    return fail("layout is not one-sided");
  if (!slicing_tree(revalidated)) return fail("layout is not sliceable");
  return {};
}

std::optional<CornerLabeledLayout> main_recognize(const Instance& inst,
                                                  RecognizeStats* stats) {
  RecognizeStats local;
  RunContext ctx;
  ctx.stats = stats ? stats : &local;
  auto build = run(to_state(inst), ctx);
  if (!build) return std::nullopt;

  CornerLabeledLayout out;
  Rect bbox{"bbox", build->x0, build->y0, build->x1, build->y1};
  out.layout = validate_layout(bbox, build->rects);
  for (const auto& label : inst.graph.labels) out.vertex_map[label] = label;
  out.corner_rects = build->corner;

  VerifyReport report = verify_realization(out, inst);
  if (!report.ok)
    throw InternalVerificationError(
        "reconstructed layout failed final verification: " + report.detail);
  out.layout = normalized(out.layout);
  return out;
}

std::optional<CornerLabeledLayout> recognize_dual(const PlaneGraph& g,
                                                  RecognizeStats* stats) {
  Instance inst = make_instance(g, {}, {});
  return main_recognize(inst, stats);
}

}  // namespace rectlay
