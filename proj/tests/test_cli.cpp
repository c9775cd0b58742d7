#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "rectlay/fixtures.hpp"
#include "rectlay/json_io.hpp"
#include "rectlay/realize.hpp"
#include "rectlay/recognize.hpp"

using namespace rectlay;
namespace fs = std::filesystem;

namespace {

struct CliResult {
  int exit_code;
  std::string out;
};

CliResult run_cli(const std::string& args) {
  std::string cmd = std::string(RECTLAY_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe);
  CliResult result;
  char buf[4096];
  while (std::size_t got = fread(buf, 1, sizeof buf, pipe))
    result.out.append(buf, got);
  int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

fs::path scratch_dir() {
  fs::path dir = fs::temp_directory_path() /
                 ("rectlay_cli_test_" + std::to_string(getpid()));
  fs::create_directories(dir);
  return dir;
}

std::string write(const fs::path& p, const std::string& content) {
  std::ofstream out(p);
  out << content;
  return p.string();
}

}  // namespace

TEST_CASE("recognize a path graph succeeds with a stack layout") {
  auto dir = scratch_dir();
  std::string path =
      write(dir / "path3.json", plane_graph_to_json(fixtures::stack_dual(3)));
  CliResult r = run_cli("recognize " + path);
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"vertex_map\"") != std::string::npos);
  CHECK(r.out.find("v0002") != std::string::npos);
}

TEST_CASE("recognize exit codes mirror the library decision") {
  auto dir = scratch_dir();
  for (const Layout& l :
       {fixtures::pinwheel_banded(), fixtures::pinwheel_split_arm()}) {
    PlaneGraph g = dual(l);
    bool realizable = recognize_dual(g).has_value();
    std::string path = write(dir / "g.json", plane_graph_to_json(g));
    CliResult r = run_cli("recognize " + path);
    CHECK(r.exit_code == (realizable ? 0 : 1));
  }
}

TEST_CASE("recognize rejects non-near-triangulations with exit 2") {
  auto dir = scratch_dir();
  // 4-cycle without a chord
  std::string path = write(dir / "square.json", R"({
    "vertices": ["a", "b", "c", "d"],
    "rotation": {"a": ["b", "d"], "b": ["c", "a"],
                 "c": ["d", "b"], "d": ["a", "c"]},
    "outer_face": ["a", "b", "c", "d"]
  })");
  CHECK(run_cli("recognize " + path).exit_code == 2);
  std::string bad = write(dir / "bad.json", "{nope");
  CHECK(run_cli("recognize " + bad).exit_code == 2);
}

TEST_CASE("realize reports the brick prototype failure with exit 1") {
  auto dir = scratch_dir();
  std::string layout =
      write(dir / "brick.json", layout_to_json(fixtures::brick()));
  AspectAssignment alpha;
  alpha.ratios["r1"] = Rational(2);
  alpha.ratios["r2"] = Rational(1);
  alpha.ratios["r3"] = Rational(1);
  alpha.ratios["r4"] = Rational(2);
  std::string assignment =
      write(dir / "brick2112.json", assignment_to_json(alpha));
  std::string out_path = (dir / "realized.json").string();
  CliResult r = run_cli("realize " + layout + " " + assignment +
                        " --mode strong -o " + out_path);
  CHECK(r.exit_code == 1);
  CHECK(r.out.find("\"equivalent\": false") != std::string::npos);
  CHECK(r.out.find("\"r1\"") != std::string::npos);
  CHECK(r.out.find("\"r4\"") != std::string::npos);
  CHECK(fs::exists(out_path));
  // the written layout is valid JSON and loads
  std::ifstream in(out_path);
  std::string content((std::istreambuf_iterator<char>(in)),
                      std::istreambuf_iterator<char>());
  Layout realized = layout_from_json(content);
  CHECK(realized.rects.size() == 4);
}

TEST_CASE("realize with the layout's own ratios is equivalent") {
  auto dir = scratch_dir();
  Layout brick = fixtures::brick();
  std::string layout = write(dir / "brick.json", layout_to_json(brick));
  AspectAssignment alpha;
  for (const auto& r : brick.rects) alpha.ratios[r.id] = r.aspect();
  std::string assignment = write(dir / "own.json", assignment_to_json(alpha));
  CliResult r = run_cli("realize " + layout + " " + assignment);
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"equivalent\": true") != std::string::npos);
}

TEST_CASE("realize on a non-sliceable layout is a negative decision") {
  auto dir = scratch_dir();
  Layout pw = fixtures::pinwheel(false);
  std::string layout = write(dir / "pw.json", layout_to_json(pw));
  AspectAssignment alpha;
  for (const auto& r : pw.rects) alpha.ratios[r.id] = Rational(1);
  std::string assignment = write(dir / "ones.json", assignment_to_json(alpha));
  CHECK(run_cli("realize " + layout + " " + assignment).exit_code == 1);
}

TEST_CASE("weak mode reports the nongeneric cross") {
  auto dir = scratch_dir();
  Layout brick = fixtures::brick();
  std::string layout = write(dir / "brick.json", layout_to_json(brick));
  AspectAssignment alpha;
  for (const auto& r : brick.rects) alpha.ratios[r.id] = Rational(1);
  std::string assignment = write(dir / "ones.json", assignment_to_json(alpha));
  CliResult r = run_cli("realize " + layout + " " + assignment + " --mode weak");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"mode\": \"weak\"") != std::string::npos);
  CHECK(r.out.find("\"generic\": false") != std::string::npos);
}

TEST_CASE("census prints one JSON line per n") {
  CliResult r = run_cli("census 4");
  CHECK(r.exit_code == 0);
  std::size_t lines = 0, pos = 0;
  while ((pos = r.out.find('\n', pos)) != std::string::npos) {
    ++lines;
    ++pos;
  }
  CHECK(lines == 4);
  CHECK(r.out.find("\"n\":4") != std::string::npos);
  CHECK(r.out.find("\"sliceable\":22") != std::string::npos);
  CHECK(r.out.find("\"one_sided_sliceable\":20") != std::string::npos);
  CHECK(run_cli("census 9").exit_code == 2);  // beyond the default cap
  CliResult seeded = run_cli("census 3 --seed 7");
  CHECK(seeded.exit_code == 0);
  CHECK(seeded.out.find("\"randomized_check_mismatches\":0") !=
        std::string::npos);
}

TEST_CASE("witness emits the brick assignment and fails on strong-ARU input") {
  auto dir = scratch_dir();
  std::string brick =
      write(dir / "brick.json", layout_to_json(fixtures::brick()));
  CliResult r = run_cli("witness " + brick);
  CHECK(r.exit_code == 0);
  AspectAssignment a = assignment_from_json(r.out);
  CHECK(a.ratios.at("r1") == Rational(2));
  CHECK(a.ratios.at("r2") == Rational(1));

  std::string stack =
      write(dir / "stack.json", layout_to_json(fixtures::stack(3)));
  CHECK(run_cli("witness " + stack).exit_code == 1);

  std::string pw =
      write(dir / "pinwheel.json", layout_to_json(fixtures::pinwheel(false)));
  CliResult w = run_cli("witness " + pw);
  CHECK(w.exit_code == 0);
  AspectAssignment wa = assignment_from_json(w.out);
  CHECK(wa.ratios.at("c") == Rational(1));
}

TEST_CASE("classify reports class and witness") {
  auto dir = scratch_dir();
  std::string pw =
      write(dir / "pinwheel.json", layout_to_json(fixtures::pinwheel(false)));
  CliResult r = run_cli("classify " + pw);
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"aru_class\": \"NotARU\"") != std::string::npos);
  CHECK(r.out.find("\"windmill\"") != std::string::npos);

  std::string brick =
      write(dir / "brick.json", layout_to_json(fixtures::brick()));
  CliResult b = run_cli("classify " + brick);
  CHECK(b.out.find("\"aru_class\": \"WeaklyARUOnly\"") != std::string::npos);
  CHECK(b.out.find("two_sided_segments") != std::string::npos);
}

TEST_CASE("render writes a deterministic SVG") {
  auto dir = scratch_dir();
  std::string pw =
      write(dir / "pinwheel.json", layout_to_json(fixtures::pinwheel(false)));
  std::string svg1 = (dir / "out1.svg").string();
  std::string svg2 = (dir / "out2.svg").string();
  CHECK(run_cli("render " + pw + " -o " + svg1 + " --highlight").exit_code ==
        0);
  CHECK(run_cli("render " + pw + " -o " + svg2 + " --highlight").exit_code ==
        0);
  std::ifstream f1(svg1), f2(svg2);
  std::string c1((std::istreambuf_iterator<char>(f1)),
                 std::istreambuf_iterator<char>());
  std::string c2((std::istreambuf_iterator<char>(f2)),
                 std::istreambuf_iterator<char>());
  CHECK(c1 == c2);
  CHECK(c1.find("<svg") != std::string::npos);
  CHECK(c1.find("<line") != std::string::npos);  // highlighted arms
}
