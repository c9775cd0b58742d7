// Acceptance suite: one self-contained check per shipped guarantee, each
// printing a single PASS/FAIL line. Oracles here are independent of the
// library paths they check (recurrences, exhaustive sweeps, catalogs).

#include <chrono>
#include <cmath>
#include <cstdint>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <vector>

#include "rectlay/classify.hpp"
#include "rectlay/enumerate.hpp"
#include "rectlay/fixtures.hpp"
#include "rectlay/realize.hpp"
#include "rectlay/recognize.hpp"
#include "rectlay/transversal.hpp"

using namespace rectlay;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int criterion, bool ok, const std::string& what,
            const std::string& detail, double seconds) {
  std::ostringstream line;
  line << "criterion " << criterion << ": " << (ok ? "PASS" : "FAIL") << " - "
       << what;
  if (!detail.empty()) line << " (" << detail << ")";
  line.precision(2);
  line << " [" << std::fixed << seconds << "s]";
  std::cout << line.str() << "\n";
  if (!ok) ++failures;
}

double elapsed(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Big Schroeder numbers via the three-term recurrence.
BigInt schroeder(std::size_t n) {
  BigInt prev2 = 1, prev1 = 2;
  if (n == 0) return prev2;
  if (n == 1) return prev1;
  for (std::size_t k = 2; k <= n; ++k) {
    BigInt next =
        (BigInt(3) * BigInt(2 * k - 1) * prev1 - BigInt(k - 2) * prev2) /
        BigInt(k + 1);
    prev2 = prev1;
    prev1 = next;
  }
  return prev1;
}

// Independent count of one-sided-admitting canonical trees: compositions
// into >= 2 parts with no two adjacent parts >= 2, big parts weighted by
// the same count with orientations swapped.
BigInt one_sided_rooted(std::size_t n, std::map<std::size_t, BigInt>& memo) {
  if (n == 1) return 1;
  auto it = memo.find(n);
  if (it != memo.end()) return it->second;
  BigInt total = 0;
  // walk compositions recursively: (remaining, prev_was_big, parts_so_far)
  struct Walker {
    std::map<std::size_t, BigInt>& memo;
    BigInt total = 0;
    void go(std::size_t remaining, bool prev_big, std::size_t parts,
            const BigInt& weight) {
      if (remaining == 0) {
        if (parts >= 2) total += weight;
        return;
      }
      go(remaining - 1, false, parts + 1, weight);
      if (!prev_big) {
        for (std::size_t p = 2; p <= remaining; ++p) {
          if (parts == 0 && p == remaining) continue;  // k >= 2
          go(remaining - p, true, parts + 1,
             weight * one_sided_rooted(p, memo));
        }
      }
    }
  };
  Walker w{memo};
  w.go(n, false, 0, 1);
  total = w.total;
  memo[n] = total;
  return total;
}

BigInt one_sided_count(std::size_t n) {
  std::map<std::size_t, BigInt> memo;
  if (n == 1) return 1;
  return BigInt(2) * one_sided_rooted(n, memo);
}

void criterion_1() {
  auto t0 = Clock::now();
  bool ok = true;
  std::string detail;
  for (std::size_t n = 1; n <= 7; ++n) {
    Census c = census(n);
    BigInt expected = schroeder(n - 1);
    if (BigInt(c.sliceable) != expected) {
      ok = false;
      detail = "n=" + std::to_string(n) + ": got " +
               std::to_string(c.sliceable) + ", recurrence says " +
               expected.str();
      break;
    }
  }
  double dt = elapsed(t0);
  if (ok && dt >= 60.0) {
    ok = false;
    detail = "runtime budget of 60s exceeded";
  }
  report(1, ok, "sliceable census matches the Schroeder recurrence for n=1..7",
         detail, dt);
}

void criterion_2() {
  auto t0 = Clock::now();
  // Pinned expected counts for n = 1..7, cross-derived from the
  // composition recurrence below and from the geometric census.
  const std::vector<long long> pinned = {1, 2, 6, 20, 70, 254, 948};
  bool ok = true;
  std::string detail;
  for (std::size_t n = 1; n <= 7 && ok; ++n) {
    BigInt recurrence = one_sided_count(n);
    if (recurrence != BigInt(pinned[n - 1])) {
      ok = false;
      detail = "pinned value diverges from the recurrence at n=" +
               std::to_string(n);
      break;
    }
    Census c = census(n);
    if (BigInt(c.one_sided_sliceable) != BigInt(pinned[n - 1])) {
      ok = false;
      detail = "n=" + std::to_string(n) + ": census says " +
               std::to_string(c.one_sided_sliceable) + ", pinned " +
               std::to_string(pinned[n - 1]);
    }
  }
  report(2, ok, "one-sided sliceable census matches the pinned sequence",
         detail, elapsed(t0));
}

void criterion_3() {
  auto t0 = Clock::now();
  bool ok = true;
  std::string detail;
  std::size_t checked = 0;
  for (std::size_t n = 1; n <= 5 && ok; ++n) {
    for (const auto& tree : enumerate_slicing_trees(n)) {
      Layout l = tree_to_layout(*tree);
      bool unique = flip_closure_size(l, 512).size == 1;
      bool strongly = is_one_sided(l).one_sided;  // sliceable by construction
      ++checked;
      if (unique != strongly) {
        ok = false;
        detail = "mismatch on " + tree->to_text();
        break;
      }
    }
  }
  for (bool cw : {false, true}) {
    Layout pw = fixtures::pinwheel(cw);
    bool unique = flip_closure_size(pw, 512).size == 1;
    ++checked;
    if (unique) {
      ok = false;
      detail = "pinwheel closure collapsed to one structure";
    }
  }
  double dt = elapsed(t0);
  if (ok && dt >= 120.0) {
    ok = false;
    detail = "runtime budget of 120s exceeded";
  }
  report(3, ok,
         "unique transversal structure iff one-sided and sliceable (n<=5 "
         "plus pinwheels, " + std::to_string(checked) + " layouts)",
         detail, dt);
}

// Random canonical tree whose adjacent children always include a leaf.
std::shared_ptr<CanonicalTree> random_one_sided_tree(std::size_t n,
                                                     std::mt19937_64& rng) {
  if (n == 1) return CanonicalTree::make_leaf();
  std::vector<std::size_t> parts;
  while (true) {
    parts.clear();
    std::size_t remaining = n;
    bool prev_big = false;
    while (remaining > 0) {
      bool can_big = !prev_big && remaining >= 2 &&
                     !(parts.empty() && remaining == n && false);
      bool take_big = can_big && (rng() & 1);
      if (parts.empty() && remaining == n && take_big) {
        std::uniform_int_distribution<std::size_t> d(2, remaining - 1);
        std::size_t p = remaining >= 3 ? d(rng) : 0;
        if (p == 0) take_big = false;
        if (take_big) {
          parts.push_back(p);
          remaining -= p;
          prev_big = true;
          continue;
        }
      } else if (take_big) {
        std::uniform_int_distribution<std::size_t> d(2, remaining);
        std::size_t p = d(rng);
        parts.push_back(p);
        remaining -= p;
        prev_big = true;
        continue;
      }
      parts.push_back(1);
      remaining -= 1;
      prev_big = false;
    }
    if (parts.size() >= 2) break;
  }
  Orientation o =
      (rng() & 1) ? Orientation::kVertical : Orientation::kHorizontal;
  std::vector<std::shared_ptr<CanonicalTree>> children;
  for (std::size_t p : parts) {
    if (p == 1) {
      children.push_back(CanonicalTree::make_leaf());
    } else {
      // Build the child with the opposite orientation at its root.
      auto child = random_one_sided_tree(p, rng);
      while (!child->leaf && child->orient == o)
        child = random_one_sided_tree(p, rng);
      children.push_back(child);
    }
  }
  return CanonicalTree::make_node(o, std::move(children));
}

void criterion_4() {
  auto t0 = Clock::now();
  std::mt19937_64 rng(0xABCDEF12345ull);
  std::uniform_int_distribution<int> size_dist(2, 10);
  std::uniform_int_distribution<int> ratio_dist(1, 1000);
  bool ok = true;
  std::string detail;
  for (int trial = 0; trial < 1000 && ok; ++trial) {
    std::size_t n = static_cast<std::size_t>(size_dist(rng));
    auto tree = random_one_sided_tree(n, rng);
    Layout l = tree_to_layout(*tree);
    if (!is_one_sided(l).one_sided) {
      ok = false;
      detail = "generator produced a non-one-sided layout";
      break;
    }
    AspectAssignment alpha;
    for (const auto& r : l.rects)
      alpha.ratios[r.id] = Rational(ratio_dist(rng), ratio_dist(rng));
    RealizationReport rep = strong_realizability(l, alpha);
    if (!rep.equivalent) {
      ok = false;
      detail = "assignment rejected on trial " + std::to_string(trial);
      break;
    }
    for (const auto& r : rep.layout.rects) {
      if (r.aspect() != alpha.ratios.at(r.id)) {
        ok = false;
        detail = "inexact ratio for " + r.id;
        break;
      }
    }
  }
  report(4, ok,
         "1000 random assignments over random one-sided sliceable layouts "
         "(n <= 10) realize exactly",
         detail, elapsed(t0));
}

void criterion_5() {
  auto t0 = Clock::now();
  Layout brick = fixtures::brick();
  AspectAssignment alpha;
  alpha.ratios["r1"] = Rational(2);
  alpha.ratios["r2"] = Rational(1);
  alpha.ratios["r3"] = Rational(1);
  alpha.ratios["r4"] = Rational(2);
  RealizationReport rep = strong_realizability(brick, alpha);
  bool gained_r1_r4 = false;
  for (const auto& c : rep.gained)
    gained_r1_r4 = gained_r1_r4 || (c.a == "r1" && c.b == "r4");
  bool ok = !rep.equivalent && gained_r1_r4;
  report(5, ok,
         "brick with ratios (2,1,1,2) gains the r1-r4 contact and is "
         "rejected",
         ok ? "" : "report did not show the forced contact", elapsed(t0));
}

void criterion_6() {
  auto t0 = Clock::now();
  bool ok = true;
  std::string detail;
  std::size_t checked = 0;
  for (std::size_t n = 4; n <= 6 && ok; ++n) {
    for (const auto& tree : enumerate_slicing_trees(n)) {
      Layout l = tree_to_layout(*tree);
      if (is_one_sided(l).one_sided) continue;
      auto witness = brick_witness(l);
      if (!witness) {
        ok = false;
        detail = "missing witness for " + tree->to_text();
        break;
      }
      RealizationReport rep = strong_realizability(l, *witness);
      ++checked;
      if (rep.equivalent) {
        ok = false;
        detail = "witness realized on " + tree->to_text();
        break;
      }
    }
  }
  report(6, ok,
         "brick witness defeats every sliceable-not-one-sided layout up to "
         "n=6 (" + std::to_string(checked) + " layouts)",
         detail, elapsed(t0));
}

void criterion_7() {
  auto t0 = Clock::now();
  bool ok = true;
  std::string detail;
  std::size_t positives = 0, negatives = 0;
  for (std::size_t n = 1; n <= 6 && ok; ++n) {
    DualCatalog catalog = dual_catalog(n);
    for (const auto& g : catalog.positive) {
      auto result = recognize_dual(g);
      ++positives;
      if (!result) {
        ok = false;
        detail = "positive member rejected at n=" + std::to_string(n);
        break;
      }
      VerifyReport verify = verify_realization(*result, make_instance(g, {}, {}));
      if (!verify.ok) {
        ok = false;
        detail = "verification failed: " + verify.detail;
        break;
      }
    }
    for (const auto& g : catalog.negative) {
      ++negatives;
      if (recognize_dual(g)) {
        ok = false;
        detail = "negative member accepted at n=" + std::to_string(n);
        break;
      }
    }
  }
  double dt = elapsed(t0);
  if (ok && dt >= 600.0) {
    ok = false;
    detail = "runtime budget of 10min exceeded";
  }
  report(7, ok,
         "recognizer agrees with the enumeration catalog for n<=6 (" +
             std::to_string(positives) + " positive, " +
             std::to_string(negatives) + " negative classes)",
         detail, dt);
}

void criterion_8() {
  auto t0 = Clock::now();
  bool ok = true;
  std::string detail;
  std::size_t checked = 0;
  for (std::size_t n = 4; n <= 6 && ok; ++n) {
    for (const auto& g : dual_catalog(n).positive) {
      if (g.vertex_count() < 4) continue;
      auto cut = min_vertex_cut(g);
      ++checked;
      if (!cut || *cut > 3) {
        ok = false;
        detail = "cut bound violated at n=" + std::to_string(n);
        break;
      }
    }
  }
  report(8, ok,
         "every positive-catalog dual with >= 4 vertices has a vertex cut "
         "of size <= 3 (" + std::to_string(checked) + " graphs)",
         detail, elapsed(t0));
}

void criterion_9() {
  auto t0 = Clock::now();
  const std::vector<std::size_t> sizes = {250, 500, 1000, 2000};
  bool ok = true;
  std::string detail;
  double worst_exponent = 0.0;
  double worst_time_2000 = 0.0;
  for (auto kind : {0, 1}) {
    std::vector<double> times;
    for (std::size_t n : sizes) {
      PlaneGraph g =
          kind == 0 ? fixtures::stack_dual(n) : fixtures::fan_dual(n);
      auto s0 = Clock::now();
      auto result = recognize_dual(g);
      double dt = elapsed(s0);
      if (!result) {
        ok = false;
        detail = "recognizer failed on a realizable input";
      }
      times.push_back(dt);
      if (n == 2000) worst_time_2000 = std::max(worst_time_2000, dt);
    }
    // least-squares slope of log t against log n
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < sizes.size(); ++i) {
      double x = std::log(static_cast<double>(sizes[i]));
      double y = std::log(std::max(times[i], 1e-6));
      sx += x;
      sy += y;
      sxx += x * x;
      sxy += x * y;
    }
    double k = static_cast<double>(sizes.size());
    double slope = (k * sxy - sx * sy) / (k * sxx - sx * sx);
    worst_exponent = std::max(worst_exponent, slope);
  }
  if (worst_exponent > 2.5) {
    ok = false;
    detail = "fitted exponent " + std::to_string(worst_exponent);
  }
  if (worst_time_2000 >= 10.0) {
    ok = false;
    detail = "n=2000 took " + std::to_string(worst_time_2000) + "s";
  }
  std::ostringstream extra;
  extra.precision(2);
  extra << std::fixed << "exponent " << worst_exponent << ", t(2000) "
        << worst_time_2000 << "s";
  report(9, ok, "recognizer scaling on stacks and fans up to n=2000",
         detail.empty() ? extra.str() : detail, elapsed(t0));
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  if (failures) {
    std::cout << failures << " criterion(s) failed\n";
    return 1;
  }
  std::cout << "all criteria passed\n";
  return 0;
}
