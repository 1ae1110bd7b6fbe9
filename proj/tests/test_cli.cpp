#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

namespace {

using json = nlohmann::json;

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(KHOM_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult res;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) res.output.append(buf.data(), n);
  int status = pclose(pipe);
  res.exit_code = WEXITSTATUS(status);
  return res;
}

std::filesystem::path scratch_dir() {
  auto dir = std::filesystem::temp_directory_path() / "khom_cli_tests";
  std::filesystem::create_directories(dir);
  return dir;
}

std::string write_scratch(const std::string& name, const std::string& content) {
  auto path = scratch_dir() / name;
  std::ofstream out(path);
  out << content;
  return path.string();
}

std::string make_graph(const std::string& spec, const std::string& name) {
  auto path = (scratch_dir() / name).string();
  RunResult res = run("make " + spec + " --out " + path);
  REQUIRE(res.exit_code == 0);
  return path;
}

}  // namespace

TEST_CASE("make emits loadable graph documents") {
  RunResult res = run("make torus2");
  REQUIRE(res.exit_code == 0);
  json g = json::parse(res.output);
  CHECK(g["k"] == 2);
  CHECK(g["vertices"].size() == 1);
  CHECK(g["edges"].size() == 2);
  CHECK(g["squares"].size() == 1);
}

TEST_CASE("homology of the torus through the CLI") {
  std::string path = make_graph("torus2", "torus2.json");
  RunResult res = run("homology " + path + " --n 1");
  REQUIRE(res.exit_code == 0);
  json report = json::parse(res.output);
  CHECK(report["group"] == json::parse(R"({"rank":2,"torsion":[]})"));
  CHECK(report["n"] == 1);
  CHECK(report["coeff"] == "Z");
}

TEST_CASE("verify passes on the torus") {
  std::string path = make_graph("torus2", "torus2.json");
  RunResult res = run("verify " + path + " --bound 2,2");
  CHECK(res.exit_code == 0);
  json report = json::parse(res.output);
  CHECK(report["allPass"] == true);
  CHECK(report["checks"].size() == 6);
}

TEST_CASE("validation failures exit with code 1 and a witness") {
  std::string path = write_scratch("broken.json", R"({
    "k": 2, "vertices": ["v"],
    "edges": [{"id":"e","color":1,"range":"v","source":"v"},
              {"id":"f","color":2,"range":"v","source":"v"}],
    "squares": []})");
  RunResult res = run("validate " + path);
  CHECK(res.exit_code == 1);
  json report = json::parse(res.output);
  CHECK(report["passed"] == false);
  CHECK(report["issues"][0]["check"] == "V1");
  CHECK(report["issues"][0]["witness"] == "[e,f]");
}

TEST_CASE("other commands refuse invalid graphs with exit 1") {
  std::string path = write_scratch("broken2.json", R"({
    "k": 2, "vertices": ["v"],
    "edges": [{"id":"e","color":1,"range":"v","source":"v"},
              {"id":"f","color":2,"range":"v","source":"v"}],
    "squares": []})");
  CHECK(run("homology " + path).exit_code == 1);
  CHECK(run("verify " + path).exit_code == 1);
}

TEST_CASE("schema errors exit with code 3") {
  std::string path = write_scratch("bad.json", "{ not json");
  CHECK(run("validate " + path).exit_code == 3);
  CHECK(run("homology /no/such/file.json").exit_code == 3);
  std::string torus = make_graph("torus2", "torus2.json");
  CHECK(run("translate " + torus + " --direction sideways").exit_code == 3);
  CHECK(run("translate " + torus + " --direction cat2cub --evaluator nope").exit_code == 3);
}

TEST_CASE("cat-homology agrees with homology on the unit square poset") {
  std::string path = make_graph("omega --k 2 --m 1,1", "omega11.json");
  RunResult cat = run("cat-homology " + path + " --probe-bound 2,2 --n 1");
  RunResult cub = run("homology " + path + " --n 1");
  REQUIRE(cat.exit_code == 0);
  REQUIRE(cub.exit_code == 0);
  CHECK(json::parse(cat.output)["group"] == json::parse(cub.output)["group"]);
}

TEST_CASE("cat-homology refuses infinite categories with exit 2") {
  std::string path = make_graph("fig8", "fig8.json");
  RunResult res = run("cat-homology " + path + " --probe-bound 4");
  CHECK(res.exit_code == 2);
}

TEST_CASE("uct command") {
  std::string path = make_graph("torus2", "torus2.json");
  RunResult res = run("uct " + path + " --m 2");
  REQUIRE(res.exit_code == 0);
  json report = json::parse(res.output);
  CHECK(report["allPass"] == true);
  CHECK(report["results"].size() == 3);
}

TEST_CASE("translation round trip through files") {
  std::string path = make_graph("torus2", "torus2.json");
  std::string table = write_scratch("table.json", R"({
    "degree": 1, "coeff": {"type": "Z"},
    "values": [{"cube": ["e"], "value": 3}, {"cube": ["f"], "value": 5}]})");
  std::string tuples = write_scratch("tuples.json", R"({
    "tuples": [[{"edges": ["e", "f"]}], [{"vertex": "v"}]]})");
  RunResult res =
      run("translate " + path + " --direction cub2cat --cocycle " + table + " --tuples " + tuples);
  REQUIRE(res.exit_code == 0);
  json report = json::parse(res.output);
  CHECK(report["isCocycle"] == true);
  CHECK(report["values"][0]["value"] == 8);
  CHECK(report["values"][1]["value"] == 0);

  RunResult rev = run("translate " + path + " --direction cat2cub --evaluator bilinear:1,2");
  REQUIRE(rev.exit_code == 0);
  json table_out = json::parse(rev.output)["table"];
  CHECK(table_out["degree"] == 2);
  CHECK(table_out["values"][0]["value"] == 1);
}

TEST_CASE("naturality through a functor document") {
  std::string fig8_path = make_graph("fig8", "fig8.json");
  std::string loop_path = make_graph("single-loop", "loop.json");
  std::string functor = write_scratch("collapse.json", R"({
    "domain": "fig8.json", "codomain": "loop.json",
    "vertexMap": {"v": "v"}, "edgeMap": {"a": "e", "b": "e"}})");
  RunResult res = run("verify " + fig8_path + " --bound 2 --naturality " + functor);
  REQUIRE(res.exit_code == 0);
  json report = json::parse(res.output);
  CHECK(report["allPass"] == true);
  CHECK(report["naturality"]["allPass"] == true);
}

TEST_CASE("identical invocations produce byte-identical reports") {
  std::string path = make_graph("omega --k 2 --m 2,2", "omega22.json");
  RunResult a = run("homology " + path + " --coeff Z/4");
  RunResult b = run("homology " + path + " --coeff Z/4");
  CHECK(a.exit_code == 0);
  CHECK(a.output == b.output);
  RunResult v1 = run("verify " + path + " --bound 2,2 --seed 9");
  RunResult v2 = run("verify " + path + " --bound 2,2 --seed 9");
  CHECK(v1.output == v2.output);
}

TEST_CASE("reports round-trip through their JSON schemas") {
  std::string path = make_graph("torus2", "torus2.json");
  for (const std::string& args :
       {std::string("info "), std::string("homology "), std::string("cohomology "),
        std::string("validate "), std::string("verify ")}) {
    RunResult res = run(args + path);
    REQUIRE(res.exit_code == 0);
    json report = json::parse(res.output, nullptr, false);
    REQUIRE_FALSE(report.is_discarded());
    CHECK(report.contains("command"));
    CHECK(report.contains("graph"));
  }
}
