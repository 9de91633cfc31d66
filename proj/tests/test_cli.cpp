#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sys/wait.h>

#include "flatbound/catalog.hpp"
#include "flatbound_tools/document.hpp"
#include "flatbound_tools/report.hpp"

using namespace flatbound;
using namespace flatbound::tools;

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(FLATBOUND_CLI) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  while (std::size_t n = fread(buf.data(), 1, buf.size(), p)) out.append(buf.data(), n);
  const int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string temp_file(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("flatbound_test_" + name);
  std::ofstream(path) << text;
  return path.string();
}

}  // namespace

TEST_CASE("show piped into check reproduces the fingerprint") {
  for (const auto& name : {"K2", "C3", "B2", "B4", "HW4", "C5"}) {
    CAPTURE(name);
    const Run shown = run(std::string("show ") + name);
    REQUIRE(shown.code == 0);
    const std::string path = temp_file(std::string(name) + ".json", shown.out);
    const Run checked = run("--json check " + path);
    REQUIRE(checked.code == 0);
    const Json report = Json::parse(checked.out);
    CHECK(report["fingerprint"] == fingerprint_json(fingerprint(build_group(name))));
    CHECK(report["valid"] == true);
    // Documents parse back to the same group in-process as well.
    CHECK(fingerprint(group_from_json(Json::parse(shown.out))) == fingerprint(build_group(name)));
  }
}

TEST_CASE("bands round trip through documents") {
  const Run shown = run("show TK");
  REQUIRE(shown.code == 0);
  const std::string path = temp_file("TK.json", shown.out);
  const Run doubled = run("--json double " + path);
  REQUIRE(doubled.code == 0);
  CHECK(Json::parse(doubled.out)["identified_as"] == Json::array({"C2"}));
  const Run glued = run("--json glue TT TTr");
  REQUIRE(glued.code == 0);
  CHECK(Json::parse(glued.out)["identified_as"] == Json::array({"B2"}));
}

TEST_CASE("json reports are byte stable") {
  for (const auto& args : {"--json check C22", "--json boundary B2", "--json pairs --dim 2", "catalog --json"}) {
    CAPTURE(args);
    const Run a = run(args), b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK_FALSE(a.out.empty());
  }
}

TEST_CASE("boundary reports") {
  const Json c6 = Json::parse(run("--json boundary C6").out);
  CHECK(c6["decision"] == "not-boundary");
  CHECK(c6["witness"].is_null());
  CHECK_FALSE(c6["candidates"].empty());
  const Json hw7 = Json::parse(run("--json boundary HW7").out);
  CHECK(hw7["decision"] == "boundary");
  CHECK(hw7["witness"]["translation"] == Json::array({"0", "0", "1/2", "0"}));
}

TEST_CASE("exit codes") {
  CHECK(run("").code == 1);
  CHECK(run("frobnicate").code == 1);
  CHECK(run("check NoSuchEntry").code == 1);
  CHECK(run("show C4 --param style=cubic").code == 1);
  CHECK(run("show B1 --param style=hexagonal").code == 1);
  CHECK(run("pairs --dim 7").code == 1);
  CHECK(run("--help").code == 0);
  CHECK(run("cover C2").code == 2);

  const std::string not_pd = temp_file("notpd.json", R"({"dimension": 2, "gram": [["1","2"],["2","1"]], "generators": []})");
  CHECK(run("check " + not_pd).code == 2);
  const std::string torsion = temp_file(
      "torsion.json",
      R"({"dimension": 2, "gram": [["1","0"],["0","1"]], "generators": [{"linear": [[-1,0],[0,-1]], "translation": ["0","0"]}]})");
  CHECK(run("check " + torsion).code == 2);
  CHECK(run("boundary " + torsion).code == 2);
  const std::string cocycle = temp_file(
      "cocycle.json",
      R"({"dimension": 2, "gram": [["1","0"],["0","1"]], "generators": [{"linear": [[1,0],[0,-1]], "translation": ["1/3","0"]}]})");
  CHECK(run("check " + cocycle).code == 2);
  CHECK(run("check " + temp_file("garbage.json", "{\"dimension\": 2,")).code == 2);
}

TEST_CASE("document errors are located") {
  const auto where = [](const std::string& text) {
    try {
      group_from_json(Json::parse(text));
    } catch (const DocumentError& e) {
      return e.where();
    }
    return std::string("(accepted)");
  };
  CHECK(where(R"({"gram": [["1"]], "generators": []})") == "dimension");
  CHECK(where(R"({"dimension": 1, "gram": [["1","0"]], "generators": []})").find("gram") == 0);
  CHECK(where(R"({"dimension": 1, "gram": [["1"]], "generators": [{"linear": [[1]], "translation": ["x"]}]})") ==
        "generators[0].translation[0]");
  CHECK(where(R"({"dimension": 1, "gram": [["1"]], "generators": [{"linear": [[1]], "translation": ["0"]}], "relators": [[0]]})")
            .find("relators") == 0);
  CHECK(where(R"({"dimension": 1, "gram": [["1"]], "generators": []})") == "(accepted)");
  try {
    parse_document("{\n  \"dimension\": 2,\n  oops\n}", "f.json");
    FAIL("expected a parse error");
  } catch (const DocumentError& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
  CHECK(parse_rational(Json("-3/6"), "x") == Rational(-1, 2));
  CHECK(parse_rational(Json(4), "x") == 4);
  CHECK_THROWS_AS(parse_rational(Json("1/0"), "x"), DocumentError);
  CHECK_THROWS_AS(parse_rational(Json(0.5), "x"), DocumentError);
}
