#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "stirlab/cli.hpp"

using nlohmann::json;
using namespace stirlab;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "stirlab");
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST_CASE("poly text output") {
  CHECK(invoke({"poly", "C", "--n", "4"}).out == "[0,1,7,29,31,29,7,1]\n");
  CHECK(invoke({"poly", "A", "--n", "3", "--k", "2", "--route", "ap"}).out == "[1,10,4]\n");
  CHECK(invoke({"poly", "A", "--n", "1", "--k", "5"}).out == "[1]\n");
  CHECK(invoke({"poly", "B", "--n", "3", "--k", "2", "--route", "ap"}).out == "[0,4,10,1]\n");
  CHECK(invoke({"poly", "P", "--n", "4"}).out == "[1,22,58,24]\n");
  CHECK(invoke({"poly", "stirling1", "--n", "3"}).out == "[0,2,3,1]\n");
}

TEST_CASE("several routes are cross-checked") {
  const auto r = invoke({"poly", "A", "--n", "4", "--k", "3", "--route", "recurrence,exc-cyc,invseq,ap"});
  CHECK(r.code == 0);
  CHECK(r.out == "[1,81,171,27]\n");
  CHECK(invoke({"poly", "C", "--n", "5", "--route", "def,run"}).code == 0);
}

TEST_CASE("big coefficients serialize as decimal strings") {
  const auto r = invoke({"poly", "A", "--n", "20", "--k", "2", "--format", "json", "--no-timestamp"});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["schema"] == 1);
  CHECK(j["kind"] == "poly");
  CHECK(j["params"]["n"] == 20);
  BigInt total = 0;
  for (const auto& c : j["payload"]) {
    REQUIRE(c.is_string());
    total += BigInt(c.get<std::string>());
  }
  CHECK(total == BigInt("319830986772877770815625"));
}

TEST_CASE("triangles") {
  const auto csv = invoke({"poly", "A", "--n-max", "3", "--k", "2", "--format", "csv"});
  CHECK(csv.out == "n,j0,j1,j2\n1,1,,\n2,1,2,\n3,1,10,4\n");
  const auto text = invoke({"poly", "C", "--n-max", "2"});
  CHECK(lines(text.out).size() >= 2);
  const auto js = invoke({"poly", "B", "--n-max", "3", "--k", "2", "--format", "json", "--no-timestamp"});
  CHECK(json::parse(js.out)["kind"] == "triangle");
}

TEST_CASE("enum output") {
  CHECK(invoke({"enum", "qnk", "--n", "2", "--k", "2"}).out == "1122\n1221\n2211\n");
  CHECK(invoke({"enum", "dual", "--n", "2"}).out == "1122 -> 2143\n1221 -> 2431\n2211 -> 4321\n");
  CHECK(invoke({"enum", "invseq", "--n", "1", "--k", "7"}).out == "0\n");
  CHECK(lines(invoke({"enum", "perm", "--n", "4"}).out).size() == 24);

  const auto wide = lines(invoke({"enum", "perm", "--n", "10"}).out);
  CHECK(wide.front() == "1,2,3,4,5,6,7,8,9,10");

  const auto nd = lines(invoke({"enum", "dual", "--n", "2", "--format", "json", "--no-timestamp"}).out);
  REQUIRE(nd.size() == 3);
  const json first = json::parse(nd[0]);
  CHECK(first["payload"]["sigma"] == json::array({1, 1, 2, 2}));
  CHECK(first["payload"]["pi"] == json::array({2, 1, 4, 3}));
}

TEST_CASE("verify suites exit 0") {
  CHECK(invoke({"verify", "thm1", "--n-max", "6", "--k", "2"}).code == 0);
  CHECK(invoke({"verify", "egf-C", "--order", "8"}).code == 0);
  const auto all = invoke({"verify", "all", "--profile", "quick"});
  CHECK(all.code == 0);
  CHECK(all.out.find("all checks passed") != std::string::npos);
  CHECK(all.out.find("FAIL") == std::string::npos);
}

TEST_CASE("mismatches exit 1 with a counterexample") {
  std::vector<IntPolynomial> c;
  for (unsigned n = 0; n <= 5; ++n) c.push_back(C_from_def(n));
  c[3] = c[3] + IntPolynomial{1};
  std::ostringstream out;
  CHECK(cli::write_report_text({check_egf_C(c)}, out) == cli::kMismatch);
  CHECK(out.str().find("FAIL egf-C") != std::string::npos);
  CHECK(out.str().find("counterexample at z^3") != std::string::npos);

  std::ostringstream ok;
  CHECK(cli::write_report_text({check_egf_C(5)}, ok) == cli::kSuccess);
}

TEST_CASE("usage errors exit 2") {
  CHECK(invoke({}).code == 2);
  CHECK(invoke({"frobnicate"}).code == 2);
  CHECK(invoke({"poly", "A", "--n", "3"}).code == 2);
  CHECK(invoke({"poly", "Z", "--n", "3"}).code == 2);
  CHECK(invoke({"poly", "A", "--n", "3", "--k", "1", "--route", "ap"}).code == 2);
  CHECK(invoke({"poly", "A", "--n", "3", "--k", "2", "--route", "bogus"}).code == 2);
  CHECK(invoke({"enum", "qnk", "--n", "2"}).code == 2);
  CHECK(invoke({"enum", "nope", "--n", "2"}).code == 2);
  CHECK(invoke({"verify", "thm9"}).code == 2);
  CHECK(invoke({"verify", "all", "--format", "csv"}).code == 2);
  CHECK(invoke({"poly", "A", "--n", "3", "--k", "2", "--format", "xml"}).code == 2);
  CHECK_FALSE(invoke({"poly", "A", "--n", "3"}).err.empty());
}

TEST_CASE("output is deterministic without timestamps") {
  const std::vector<std::string> args{"verify", "thm3", "--n-max", "5", "--format", "json", "--no-timestamp"};
  const auto a = invoke(args), b = invoke(args);
  CHECK(a.out == b.out);
  const auto one = invoke({"poly", "A", "--n", "6", "--k", "3", "--route", "ap", "--jobs", "1", "--format", "json", "--no-timestamp"});
  const auto four = invoke({"poly", "A", "--n", "6", "--k", "3", "--route", "ap", "--jobs", "4", "--format", "json", "--no-timestamp"});
  CHECK(json::parse(one.out)["payload"] == json::parse(four.out)["payload"]);

  const auto stamped = json::parse(invoke({"poly", "A", "--n", "2", "--k", "2", "--format", "json"}).out);
  CHECK(stamped.contains("timestamp"));
}

TEST_CASE("json round-trips") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"poly", "C", "--n", "5", "--format", "json", "--no-timestamp"},
           {"poly", "A", "--n-max", "4", "--k", "3", "--format", "json", "--no-timestamp"},
           {"verify", "egf-A", "--k", "2", "--order", "6", "--format", "json", "--no-timestamp"}}) {
    const auto r = invoke(args);
    REQUIRE(r.code == 0);
    const std::string line = lines(r.out).front();
    CHECK(json::parse(line).dump() == line);
  }
}

TEST_CASE("STIRLAB_MAX_OBJECTS caps enumeration") {
  ::setenv("STIRLAB_MAX_OBJECTS", "10", 1);
  CHECK(invoke({"enum", "qnk", "--n", "3", "--k", "2"}).code == 2);
  CHECK(invoke({"enum", "qnk", "--n", "2", "--k", "2"}).code == 0);
  ::setenv("STIRLAB_MAX_OBJECTS", "lots", 1);
  CHECK(invoke({"enum", "perm", "--n", "2"}).code == 2);
  ::unsetenv("STIRLAB_MAX_OBJECTS");
  CHECK(invoke({"enum", "qnk", "--n", "3", "--k", "2"}).code == 0);
}

TEST_CASE("--out writes to a file") {
  const auto path = std::filesystem::temp_directory_path() / "stirlab_cli_out.txt";
  const auto r = invoke({"poly", "C", "--n", "3", "--out", path.string()});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(content == "[0,1,3,7,3,1]\n");
  std::filesystem::remove(path);
}
