#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "ftpoly/cli.hpp"
#include "ftpoly/errors.hpp"
#include "ftpoly/export.hpp"
#include "ftpoly/facefill.hpp"
#include "ftpoly/fixtures.hpp"

using namespace ftpoly;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "ftpoly");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> v;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) v.push_back(l);
  return v;
}

fs::path scratch() {
  auto p = fs::temp_directory_path() / ("ftpoly_test_" + std::to_string(::getpid()));
  fs::create_directories(p);
  return p;
}

}  // namespace

TEST_CASE("decimal formatting") {
  CHECK(format_decimal(0.5, 12) == "0.5");
  CHECK(format_decimal(-0.0, 12) == "0");
  CHECK(format_decimal(1.0 / 3, 3) == "0.333");
  CHECK_THROWS(format_decimal(1, 0));
  CHECK_THROWS_AS(parse_export_format("stl"), UsageError);
}

TEST_CASE("cube OFF") {
  auto text = export_mesh(fixtures::cube(), ExportFormat::kOff);
  auto ls = lines(text);
  REQUIRE(!ls.empty());
  CHECK(ls[0] == "OFF");
  std::size_t i = 1;
  while (ls[i].starts_with("#")) ++i;
  CHECK(ls[i] == "8 6 12");
  std::size_t quads = 0;
  for (; i < ls.size(); ++i) quads += ls[i].starts_with("4 ") ? 1 : 0;
  CHECK(quads == 6);
}

TEST_CASE("cube OBJ uses one-based indices") {
  auto text = export_mesh(fixtures::cube(), ExportFormat::kObj);
  std::size_t v = 0, f = 0;
  for (const auto& l : lines(text)) {
    v += l.starts_with("v ") ? 1 : 0;
    if (l.starts_with("f ")) {
      ++f;
      CHECK(l.find(" 0") == std::string::npos);
    }
  }
  CHECK(v == 8);
  CHECK(f == 6);
}

TEST_CASE("JSON export round-trips exactly and deterministically") {
  for (const auto& P : {fixtures::cube(), fixtures::hexagonal_prism(), fixtures::cube_missing_face()}) {
    SceneMetadata meta{{"object", "fixture"}};
    auto text = export_mesh(P, ExportFormat::kJson, 12, meta);
    CHECK(text == export_mesh(P, ExportFormat::kJson, 12, meta));
    auto back = import_json(text);
    CHECK(back.polyhedron == P);
    CHECK(back.metadata == meta);
    auto doc = nlohmann::json::parse(text);
    CHECK(doc["format"] == "ftpoly-scene");
    CHECK(doc["vertices"].size() == P.vertices().size());
  }
  CHECK_THROWS_AS(import_json("{\"format\": \"other\"}"), ParseError);
  CHECK_THROWS_AS(import_json("not json"), ParseError);
}

TEST_CASE("S1 export marks every face truncated") {
  Window w(Rational(4), Rational(1));
  auto P = build_s1({}, w);
  auto off = export_mesh(P, ExportFormat::kOff);
  std::size_t marks = 0;
  for (const auto& l : lines(off)) marks += l.starts_with("# truncated") ? 1 : 0;
  CHECK(marks == P.faces().size());
  auto back = import_json(export_mesh(P, ExportFormat::kJson));
  CHECK(back.polyhedron == P);
  auto obj = export_mesh(P, ExportFormat::kObj);
  std::size_t polylines = 0;
  for (const auto& l : lines(obj)) polylines += l.starts_with("l ") ? 1 : 0;
  CHECK(polylines == P.faces().size());
}

TEST_CASE("cli: usage errors exit 2") {
  CHECK(run({"no-such-command"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"--corner", "c45", "star"}).code == 2);
  CHECK(run({"export", "--fixture", "nonsense"}).code == 2);
}

TEST_CASE("cli: star report") {
  auto r = run({"star", "--format", "json"});
  REQUIRE(r.code == 0);
  auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["size"] == 4);
}

TEST_CASE("cli: verify exits 1 with witnesses on a broken fixture") {
  auto r = run({"verify", "--fixture", "cube-missing-face"});
  CHECK(r.code == 1);
  CHECK(r.err.find("axiom failure:") != std::string::npos);
  CHECK(run({"verify", "--fixture", "cube"}).code == 0);
}

TEST_CASE("cli: config file supplies defaults and the command line overrides") {
  auto dir = scratch();
  auto cfg = dir / "cfg.json";
  std::ofstream(cfg) << R"({"corner": "c60", "format": "json"})";
  auto r = run({"--config", cfg.string(), "star"});
  REQUIRE(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["size"] == 3);
  auto r2 = run({"--config", cfg.string(), "--corner", "c90", "star"});
  REQUIRE(r2.code == 0);
  CHECK(nlohmann::json::parse(r2.out)["size"] == 4);
  std::ofstream(dir / "bad.json") << "{";
  CHECK(run({"--config", (dir / "bad.json").string(), "star"}).code == 2);
  fs::remove_all(dir);
}

TEST_CASE("cli: relative output goes under FTPOLY_OUTPUT_DIR") {
  auto dir = scratch();
  ::setenv("FTPOLY_OUTPUT_DIR", dir.c_str(), 1);
  auto r = run({"export", "--fixture", "cube", "--format", "off", "--output", "cube.off"});
  ::unsetenv("FTPOLY_OUTPUT_DIR");
  CHECK(r.code == 0);
  REQUIRE(fs::exists(dir / "cube.off"));
  std::ifstream in(dir / "cube.off");
  std::string first;
  std::getline(in, first);
  CHECK(first == "OFF");
  fs::remove_all(dir);
}
