#include "rectlay/enumerate.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "rectlay/errors.hpp"
#include "rectlay/fixtures.hpp"

namespace rectlay {

std::shared_ptr<CanonicalTree> CanonicalTree::make_leaf() {
  return std::make_shared<CanonicalTree>();
}

std::shared_ptr<CanonicalTree> CanonicalTree::make_node(
    Orientation o, std::vector<std::shared_ptr<CanonicalTree>> children) {
  auto t = std::make_shared<CanonicalTree>();
  t->leaf = false;
  t->orient = o;
  t->children = std::move(children);
  return t;
}

std::size_t CanonicalTree::leaf_count() const {
  if (leaf) return 1;
  std::size_t n = 0;
  for (const auto& c : children) n += c->leaf_count();
  return n;
}

std::string CanonicalTree::to_text() const {
  if (leaf) return ".";
  std::string s = orient == Orientation::kVertical ? "V(" : "H(";
  for (std::size_t i = 0; i < children.size(); ++i) {
    if (i) s += ",";
    s += children[i]->to_text();
  }
  return s + ")";
}

bool tree_equal(const CanonicalTree& a, const CanonicalTree& b) {
  if (a.leaf != b.leaf) return false;
  if (a.leaf) return true;
  if (a.orient != b.orient || a.children.size() != b.children.size())
    return false;
  for (std::size_t i = 0; i < a.children.size(); ++i)
    if (!tree_equal(*a.children[i], *b.children[i])) return false;
  return true;
}

std::shared_ptr<CanonicalTree> canonical_form(const SlicingTree& t) {
  if (t.is_leaf()) return CanonicalTree::make_leaf();
  std::vector<std::shared_ptr<CanonicalTree>> children;
  // Flatten runs of equal orientation.
  auto absorb = [&](const SlicingTree& sub, auto&& self) -> void {
    if (!sub.is_leaf() && sub.cut == t.cut) {
      self(*sub.first, self);
      self(*sub.second, self);
    } else {
      children.push_back(canonical_form(sub));
    }
  };
  absorb(*t.first, absorb);
  absorb(*t.second, absorb);
  return CanonicalTree::make_node(t.cut, std::move(children));
}

namespace {

using TreeList = std::vector<std::shared_ptr<CanonicalTree>>;

// Trees with n leaves whose root is a leaf or a node of orientation `o`.
const TreeList& rooted_trees(std::size_t n, Orientation o,
                             std::map<std::pair<std::size_t, int>, TreeList>&
                                 memo) {
  auto key = std::make_pair(n, o == Orientation::kVertical ? 1 : 0);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;

  TreeList result;
  if (n == 1) {
    result.push_back(CanonicalTree::make_leaf());
  } else {
    Orientation child_o = o == Orientation::kVertical
                              ? Orientation::kHorizontal
                              : Orientation::kVertical;
    // Enumerate compositions of n into >= 2 parts.
    std::vector<std::size_t> parts;
    std::vector<std::size_t> child_pick;
    auto emit = [&](auto&& self, std::size_t remaining) -> void {
      if (remaining == 0) {
        if (parts.size() < 2) return;
        // Cartesian product over child choices.
        std::vector<TreeList::const_iterator> iters;
        std::vector<const TreeList*> lists;
        for (std::size_t p : parts) {
          lists.push_back(&rooted_trees(p, child_o, memo));
          if (lists.back()->empty()) return;
        }
        std::vector<std::size_t> idx(parts.size(), 0);
        while (true) {
          std::vector<std::shared_ptr<CanonicalTree>> children;
          children.reserve(parts.size());
          for (std::size_t i = 0; i < parts.size(); ++i)
            children.push_back((*lists[i])[idx[i]]);
          result.push_back(CanonicalTree::make_node(o, std::move(children)));
          std::size_t i = parts.size();
          while (i > 0) {
            --i;
            if (++idx[i] < lists[i]->size()) break;
            idx[i] = 0;
            if (i == 0) return;
          }
        }
      } else {
        for (std::size_t p = 1; p <= remaining; ++p) {
          parts.push_back(p);
          self(self, remaining - p);
          parts.pop_back();
        }
      }
    };
    emit(emit, n);
  }
  return memo.emplace(key, std::move(result)).first->second;
}

}  // namespace

std::vector<std::shared_ptr<CanonicalTree>> enumerate_slicing_trees(
    std::size_t n, std::size_t cap) {
  if (n == 0 || n > cap)
    throw CapError("enumerate_slicing_trees: n out of range");
  if (n == 1) return {CanonicalTree::make_leaf()};
  std::map<std::pair<std::size_t, int>, TreeList> memo;
  TreeList out = rooted_trees(n, Orientation::kVertical, memo);
  const TreeList& h = rooted_trees(n, Orientation::kHorizontal, memo);
  out.insert(out.end(), h.begin(), h.end());
  return out;
}

namespace {

struct Instantiator {
  // fraction of cut j (1-based) among k children at internal node `node_idx`
  virtual Rational cut_fraction(int node_idx, std::size_t j, std::size_t k) = 0;
  virtual ~Instantiator() = default;
};

struct SkewInstantiator : Instantiator {
  BigInt d;
  BigInt mult;
  BigInt cut_seq = 0;
  SkewInstantiator(BigInt denom, BigInt multiplier)
      : d(std::move(denom)), mult(std::move(multiplier)) {}
  Rational cut_fraction(int, std::size_t j, std::size_t k) override {
    // j/k plus a nudge that is unique per cut. The caller checks the
    // genericity of the result exactly and retries with fresh parameters,
    // so the nudges only have to avoid coincidences generically.
    ++cut_seq;
    return Rational(j, k) + Rational(cut_seq * mult, d);
  }
};

struct RandomInstantiator : Instantiator {
  std::mt19937_64 rng;
  explicit RandomInstantiator(std::uint64_t seed) : rng(seed) {}
  Rational cut_fraction(int, std::size_t j, std::size_t k) override {
    // Uniform-ish in (j-1/2, j+1/2)/k to preserve ordering.
    std::uniform_int_distribution<int> dist(-499, 499);
    return Rational(BigInt(j) * 1000 + dist(rng), BigInt(k) * 1000);
  }
};

Layout instantiate(const CanonicalTree& t, Instantiator& inst) {
  std::vector<Rect> rects;
  int leaf_counter = 0;
  int node_counter = 0;
  auto emit = [&](auto&& self, const CanonicalTree& node, Rational x0,
                  Rational y0, Rational x1, Rational y1) -> void {
    if (node.leaf) {
      ++leaf_counter;
      rects.push_back(
          {"r" + std::to_string(leaf_counter), x0, y0, x1, y1});
      return;
    }
    int idx = node_counter++;
    const std::size_t k = node.children.size();
    if (node.orient == Orientation::kHorizontal) {
      Rational lo = y0;
      for (std::size_t j = 0; j < k; ++j) {
        Rational hi = j + 1 == k
                          ? y1
                          : y0 + (y1 - y0) * inst.cut_fraction(idx, j + 1, k);
        self(self, *node.children[j], x0, lo, x1, hi);
        lo = hi;
      }
    } else {
      Rational lo = x0;
      for (std::size_t j = 0; j < k; ++j) {
        Rational hi = j + 1 == k
                          ? x1
                          : x0 + (x1 - x0) * inst.cut_fraction(idx, j + 1, k);
        self(self, *node.children[j], lo, y0, hi, y1);
        lo = hi;
      }
    }
  };
  emit(emit, t, Rational(0), Rational(0), Rational(1), Rational(1));
  Rect bbox{"bbox", 0, 0, 1, 1};
  return validate_layout(bbox, std::move(rects));
}

}  // namespace

Layout tree_to_layout(const CanonicalTree& t) {
  const BigInt n(t.leaf_count());
  constexpr int kMultipliers[] = {1, 5, 23, 101, 397};
  BigInt d = 64 * n * n + 64;
  for (int attempt = 0; attempt < 64; ++attempt) {
    BigInt mult(kMultipliers[attempt % 5]);
    SkewInstantiator inst(d * mult, mult);
    Layout layout = instantiate(t, inst);
    if (layout.generic) return layout;
    d *= 3;
  }
  throw Error("tree_to_layout: could not find a generic instantiation");
}

Layout tree_to_layout_random(const CanonicalTree& t, std::uint64_t seed) {
  for (int attempt = 0; attempt < 256; ++attempt) {
    RandomInstantiator inst(seed + attempt * 7919);
    Layout layout = instantiate(t, inst);
    if (layout.generic) return layout;
  }
  throw Error("tree_to_layout_random: could not find a generic instantiation");
}

namespace {

// Invariant-bucketed isomorphism classes.
std::vector<PlaneGraph> iso_representatives(std::vector<PlaneGraph> graphs) {
  auto invariant = [](const PlaneGraph& g) {
    std::vector<int> deg;
    for (const auto& nbrs : g.rotation) deg.push_back((int)nbrs.size());
    std::sort(deg.begin(), deg.end());
    std::string key = std::to_string(g.vertex_count()) + ":" +
                      std::to_string(g.edge_count());
    for (int d : deg) key += "," + std::to_string(d);
    return key;
  };
  std::map<std::string, std::vector<PlaneGraph>> buckets;
  for (auto& g : graphs) buckets[invariant(g)].push_back(std::move(g));
  std::vector<PlaneGraph> reps;
  for (auto& [key, bucket] : buckets) {
    for (auto& g : bucket) {
      bool fresh = true;
      for (std::size_t i = reps.size(); i-- > 0;) {
        if (invariant(reps[i]) != key) break;  // reps grouped per bucket
        if (plane_isomorphic(reps[i], g)) {
          fresh = false;
          break;
        }
      }
      if (fresh) reps.push_back(std::move(g));
    }
  }
  return reps;
}

bool iso_to_any(const PlaneGraph& g, const std::vector<PlaneGraph>& reps) {
  for (const auto& r : reps)
    if (plane_isomorphic(g, r)) return true;
  return false;
}

std::vector<Layout> nonsliceable_fixtures(std::size_t n) {
  std::vector<Layout> out;
  if (n == 5) {
    out.push_back(fixtures::pinwheel(false));
    out.push_back(fixtures::pinwheel(true));
  } else if (n == 6) {
    out.push_back(fixtures::pinwheel_split_arm());
    out.push_back(fixtures::pinwheel_banded());
  } else if (n == 8) {
    out.push_back(fixtures::pinwheel_brick_arm());
  }
  return out;
}

}  // namespace

Census census(std::size_t n, std::size_t cap) {
  Census c;
  std::vector<PlaneGraph> one_sided_duals;
  for (const auto& tree : enumerate_slicing_trees(n, cap)) {
    Layout layout = tree_to_layout(*tree);
    ++c.sliceable;
    if (is_one_sided(layout).one_sided) {
      ++c.one_sided_sliceable;
      one_sided_duals.push_back(dual(layout));
    }
  }
  c.dual_iso_classes = iso_representatives(std::move(one_sided_duals)).size();
  return c;
}

DualCatalog dual_catalog(std::size_t n, std::size_t cap) {
  std::vector<PlaneGraph> positive_raw, negative_raw;
  for (const auto& tree : enumerate_slicing_trees(n, cap)) {
    Layout layout = tree_to_layout(*tree);
    if (is_one_sided(layout).one_sided)
      positive_raw.push_back(dual(layout));
    else
      negative_raw.push_back(dual(layout));
  }
  for (const auto& fixture : nonsliceable_fixtures(n))
    negative_raw.push_back(dual(fixture));

  DualCatalog catalog;
  catalog.positive = iso_representatives(std::move(positive_raw));
  for (auto& g : iso_representatives(std::move(negative_raw)))
    if (!iso_to_any(g, catalog.positive))
      catalog.negative.push_back(std::move(g));
  return catalog;
}

std::optional<std::size_t> min_vertex_cut(const PlaneGraph& g) {
  const int n = static_cast<int>(g.vertex_count());
  if (n < 2 || !is_connected(g)) throw Error("min_vertex_cut: need a connected graph with >= 2 vertices");

  auto disconnected_without = [&](const std::vector<int>& removed) {
    std::vector<char> gone(n, 0);
    for (int v : removed) gone[v] = 1;
    int start = -1, expect = 0;
    for (int v = 0; v < n; ++v) {
      if (gone[v]) continue;
      ++expect;
      if (start == -1) start = v;
    }
    if (expect < 2) return false;
    std::vector<char> seen(n, 0);
    std::vector<int> stack{start};
    seen[start] = 1;
    int count = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : g.rotation[v]) {
        if (gone[w] || seen[w]) continue;
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
    }
    return count != expect;
  };

  std::vector<int> subset;
  auto search = [&](auto&& self, int start, std::size_t k) -> bool {
    if (subset.size() == k) return disconnected_without(subset);
    for (int v = start; v < n; ++v) {
      subset.push_back(v);
      if (self(self, v + 1, k)) return true;
      subset.pop_back();
    }
    return false;
  };
  for (std::size_t k = 1; k <= 4; ++k) {
    subset.clear();
    if (search(search, 0, k)) return k;
  }
  return std::nullopt;
}

}  // namespace rectlay
