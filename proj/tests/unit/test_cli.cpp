#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "opforge/catalog/presets.hpp"
#include "opforge/cli/app.hpp"

using namespace opforge;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string last_line(const std::string& s) {
  auto t = s;
  while (!t.empty() && t.back() == '\n') t.pop_back();
  return t.substr(t.rfind('\n') + 1);
}

}  // namespace

TEST_CASE("dims in text, csv and json") {
  auto r = run({"dims", "--preset", "fm"});
  CHECK(r.code == 0);
  CHECK(last_line(r.out) == "1,2,9,64,625");
  r = run({"dims", "--preset", "poisson", "--max-arity", "4", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(r.out == "arity,dimension\n1,1\n2,2\n3,6\n4,24\n");
  r = run({"dims", "--preset", "prelie", "--max-arity", "4", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["fingerprint"] == preset("prelie").fingerprint_hex());
  CHECK(j["max_arity"] == 4);
  CHECK(j["dims"].size() == 4);
  CHECK(j["dims"][3]["dimension"] == 64);
  CHECK(j.contains("order"));
}

TEST_CASE("input files and output files") {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "opforge-cli-test";
  fs::create_directories(dir);
  const fs::path in = dir / "lie.json";
  std::ofstream(in) << R"({"name":"mylie","generators":[{"name":"b","symmetry":"antisymmetric"}],
                          "relations":["[[a1, a2], a3] + [[a2, a3], a1] + [[a3, a1], a2]"]})";
  const fs::path out = dir / "dims.csv";
  auto r = run({"dims", "--input", in.string(), "--format", "csv", "--output", out.string()});
  CHECK(r.code == 0);
  std::ifstream f(out);
  std::stringstream ss;
  ss << f.rdbuf();
  CHECK(ss.str() == "arity,dimension\n1,1\n2,1\n3,2\n4,6\n5,24\n");
  std::ofstream(dir / "bad.json") << "{not json";
  CHECK(run({"dims", "--input", (dir / "bad.json").string()}).code == 2);
  fs::remove_all(dir);
}

TEST_CASE("normal forms") {
  auto r = run({"normal-form", "--preset", "com", "(a1 o a2) o a3"});
  CHECK(r.code == 0);
  CHECK(last_line(r.out) == "o(1,o(2,3))");
  r = run({"normal-form", "--preset", "fm", "--max-arity", "4", relations::kHertlingManin});
  CHECK(r.code == 0);
  CHECK(last_line(r.out) == "0");
  r = run({"normal-form", "--preset", "fm", "--max-arity", "4", "--certificate", "--strategy", "innermost",
           "(a1 o a2) o (a3 o a4)"});
  CHECK(r.code == 0);
  r = run({"normal-form", "--preset", "fm", "--max-arity", "4", "--format", "json", "[a1 o a2, a3] o a4"});
  CHECK(r.code == 0);
  CHECK_NOTHROW((void)nlohmann::json::parse(r.out));
  CHECK(run({"normal-form", "--preset", "fm", "a1 o o"}).code == 2);
}

TEST_CASE("complete dumps a system") {
  auto r = run({"complete", "--preset", "fm", "--max-arity", "4"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["truncation_arity"] == 4);
  CHECK(j["rules"].size() > 0);
  CHECK(r.out == run({"complete", "--preset", "fm", "--max-arity", "4", "--threads", "4"}).out);
}

TEST_CASE("verify") {
  auto r = run({"verify", "r1-in-pl", "--format", "json"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.dump().find("\"pass\"") != std::string::npos);
  CHECK(run({"verify", "series-chain", "--series-order", "10"}).code == 0);
  CHECK(run({"verify", "nope"}).code == 2);
}

TEST_CASE("series commands") {
  auto r = run({"series", "tree-egf", "--order", "6", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(r.out.find("tree,6,54/5,7776") != std::string::npos);
  r = run({"series", "euler-chain", "--order", "8"});
  CHECK(r.code == 0);
  r = run({"series", "invert", "--input", "t/(1-t)", "--order", "5", "--format", "text"});
  CHECK(r.code == 0);
  CHECK(r.out.find("t - t^2 + t^3 - t^4 + t^5") != std::string::npos);
  CHECK(run({"series", "invert", "--input", "1 + t"}).code != 0);
}

TEST_CASE("usage and resource errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"dims", "--preset", "nope"}).code == 2);
  CHECK(run({"dims"}).code == 2);
  CHECK(run({"dims", "--preset", "fm", "--max-arity", "12"}).code == 2);
  CHECK(run({"dims", "--preset", "prelie", "--order", "xy-augmented"}).code == 2);
  CHECK(run({"normal-form", "--preset", "com", "--max-arity", "4", "--step-limit", "1", "((a1 o a2) o a3) o a4"}).code == 3);
}
