#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "arrchow/cli.hpp"

using namespace arrchow;

namespace {

struct Result {
  int status;
  std::string out, err;
};

Result call(std::vector<std::string> args) {
  args.insert(args.begin(), "arrchow");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int status = main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
  return {status, out.str(), err.str()};
}

std::string json_roundtrip(const std::string& text) {
  return nlohmann::ordered_json::parse(text).dump() + "\n";
}

}  // namespace

TEST_CASE("cli: chow and gamma examples") {
  Result r = call({"chow", "--family", "dns", "--n", "5", "--s", "2", "--method", "chains", "--format", "json"});
  CHECK(r.status == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["coeffs"] == nlohmann::json::array({"1", "478", "2298", "478", "1"}));
  CHECK(j["method"] == "chains");

  r = call({"gamma", "--family", "dns", "--n", "4", "--s", "3"});
  CHECK(r.status == 0);
  CHECK(r.out == "gamma: (1, 64, 64)\n");

  r = call({"gamma", "--family", "b", "--n", "3", "--show-h", "--show-f"});
  CHECK(r.out == "gamma: (1, 20)\nh: t^3 + 23*t^2 + 23*t + 1\nf: t^3 + 26*t^2 + 72*t + 48\n");

  r = call({"gamma", "--family", "d", "--n", "4", "--method", "closed", "--format", "json"});
  CHECK(nlohmann::json::parse(r.out)["gamma"] == nlohmann::json::array({1, 40, 16}));

  r = call({"gamma", "--family", "dns", "--n", "3", "--s", "1", "--method", "separation"});
  CHECK(r.out == "gamma: (1, 12)\n");

  r = call({"chow", "--family", "a", "--n", "4"});
  CHECK(r.out == "H: t^3 + 41*t^2 + 41*t + 1\n");
  r = call({"chow", "--family", "a", "--n", "4", "--method", "chains"});
  CHECK(r.out == "H: t^3 + 41*t^2 + 41*t + 1\n");
  r = call({"chow", "--family", "b", "--n", "4", "--method", "recursive"});
  CHECK(r.out == "H: t^3 + 99*t^2 + 99*t + 1\n");

  r = call({"fvector", "--family", "d", "--n", "3"});
  CHECK(r.out == "f: (1, 14, 36, 24)\nh: t^3 + 11*t^2 + 11*t + 1\n");
}

TEST_CASE("cli: dumps") {
  Result r = call({"chow", "--family", "b", "--n", "2", "--method", "chains", "--dump-chains", "-"});
  CHECK(r.out == "(0,2),(1,1) ; des=0\nH: t + 1\n");
  r = call({"gamma", "--family", "b", "--n", "1", "--dump-tope-graph", "-"});
  CHECK(r.status == 0);
  CHECK(r.out.find("gamma: (1)") != std::string::npos);
}

TEST_CASE("cli: arrangement files") {
  const std::string path = "cli_test_arrangement.txt";
  {
    std::ofstream f(path);
    f << "# B2 written by hand\ndim 2\n1 -1\n1 1\n1 0\n0 1\n";
  }
  Result r = call({"chow", "--family", "file", "--file", path});
  CHECK(r.status == 0);
  CHECK(r.out == "H: t + 1\n");
  r = call({"gamma", "--family", "file", "--file", path});
  CHECK(r.out == "gamma: (1, 4)\n");
  {
    std::ofstream f(path);
    f << "dim 2\n1 2 3\n";
  }
  r = call({"fvector", "--family", "file", "--file", path});
  CHECK(r.status == 2);
  CHECK(r.err.find("error") != std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("cli: usage errors exit 2") {
  CHECK(call({"chow", "--family", "dns", "--n", "3"}).status == 2);
  CHECK(call({"chow", "--family", "b", "--n", "3", "--s", "1"}).status == 2);
  CHECK(call({"chow", "--family", "file"}).status == 2);
  CHECK(call({"gamma", "--family", "b", "--n", "3", "--method", "chains"}).status == 2);
  CHECK(call({"chow", "--family", "b", "--n", "3", "--method", "topegraph"}).status == 2);
  CHECK(call({"chow", "--family", "b", "--n", "3", "--format", "xml"}).status == 2);
  CHECK(call({"chow", "--family", "b", "--n", "3", "--jobs", "0"}).status == 2);
  CHECK(call({"chow", "--family", "q", "--n", "3"}).status == 2);
  CHECK(call({"verify", "--suite", "nope"}).status == 2);
  CHECK(call({"tables", "--table", "nope"}).status == 2);
  CHECK(call({"frobnicate"}).status == 2);
  CHECK(call({}).status == 2);
  CHECK(call({"chow", "--family", "file", "--file", "/no/such/file"}).status == 2);
  const Result help = call({"--help"});
  CHECK(help.status == 0);
  CHECK(help.out.find("chow") != std::string::npos);
}

TEST_CASE("cli: closed forms reject unsupported families") {
  CHECK(call({"chow", "--family", "d", "--n", "3", "--method", "closed"}).status == 2);
  CHECK(call({"gamma", "--family", "a", "--n", "3", "--method", "closed"}).status == 2);
  CHECK(call({"chow", "--family", "dns", "--n", "3", "--s", "3", "--method", "closed"}).out == "H: t^2 + 14*t + 1\n");
}

TEST_CASE("cli: JSON output round-trips exactly") {
  const std::vector<std::vector<std::string>> commands{
      {"gamma", "--family", "dns", "--n", "4", "--s", "2", "--show-h", "--show-f", "--format", "json"},
      {"chow", "--family", "dns", "--n", "4", "--s", "2", "--format", "json"},
      {"fvector", "--family", "b", "--n", "3", "--format", "json"},
      {"tables", "--n-max", "4", "--format", "json"},
      {"verify", "--suite", "chains", "--n-max", "3", "--format", "json"},
  };
  for (const auto& c : commands) {
    const Result r = call(c);
    CHECK(r.status == 0);
    CHECK(json_roundtrip(r.out) == r.out);
  }
  const auto report = nlohmann::json::parse(call(commands.back()).out);
  REQUIRE(report.is_array());
  for (const auto& item : report) {
    CHECK(item.contains("check"));
    CHECK(item["status"] == "pass");
    CHECK(item["details"].is_array());
  }
}

TEST_CASE("cli: tables and verify") {
  const Result a = call({"tables", "--n-max", "5"});
  CHECK(a.status == 0);
  CHECK(a.out.find("MISMATCH") == std::string::npos);
  CHECK(a.out.find("tables: 33 rows, 0 mismatches") != std::string::npos);
  for (const char* jobs : {"2", "4"}) {
    const Result b = call({"tables", "--n-max", "5", "--jobs", jobs});
    CHECK(b.out == a.out);
  }
  const Result v = call({"verify", "--suite", "all", "--n-max", "4"});
  CHECK(v.status == 0);
  CHECK(v.out.find("FAIL") == std::string::npos);
}
