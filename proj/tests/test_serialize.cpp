#include "mldlab/serialize.hpp"
#include "support.hpp"

#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <regex>
#include <sstream>

using namespace testing;

namespace {

bool has_float(const Json& j) {
  if (j.is_number_float()) return true;
  if (j.is_structured())
    for (const auto& v : j) if (has_float(v)) return true;
  return false;
}

struct Run {
  int status;
  std::string out;
};

Run cli(const std::string& args) {
  const std::string cmd = std::string(MLDLAB_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
  int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

} // namespace

TEST_CASE("system documents round trip") {
  IdealSystem s = sys({{"(x^2 - 1/3*y, y^5)", "5/7"}, {"(x)", "2"}});
  CHECK(system_from_json(to_json(s)) == s);
  Json doc = Json::parse(R"j({"factors": [{"generators": "(x, y^2)", "exponent": "1/2"}]})j");
  CHECK(system_from_json(doc) == sys({{"(x, y^2)", "1/2"}}));
  const Json empty = Json::parse(R"({"factors": [{"generators": [], "exponent": "1"}]})");
  CHECK_THROWS_AS(system_from_json(empty), Error);
}

TEST_CASE("resolution replay reproduces the discrepancy table") {
  for (auto s : {sys({{"(x^2, y^3)", "5/6"}}), sys({{"(y - x^3)", "1"}, {"(x)", "1/8"}, {"(y)", "1/8"}})}) {
    ResolutionGraph g = log_resolution(s);
    Json doc = Json::parse(to_json(g).dump());
    ResolutionGraph again = replay(doc);
    CHECK(discrepancy_table(again) == discrepancy_table(g));
    CHECK(to_json(again) == to_json(g));
  }
}

TEST_CASE("no floats anywhere") {
  IdealSystem s = sys({{"(x)", "1"}, {"(y)", "1/4"}, {"(x, y)", "1/4"}});
  ResolutionGraph g = log_resolution(s);
  CHECK_FALSE(has_float(to_json(g)));
  CHECK_FALSE(has_float(to_json(mld_on_graph(g), g)));
  CHECK_FALSE(has_float(to_json(compute_constants(s))));
  CHECK_FALSE(has_float(to_json(verify_semicontinuity(s, 5, 0))));
  Json cert = to_json(compute_constants(s));
  CHECK(cert["c"] == "1/2");
  CHECK(cert["version"] == kSchemaVersion);
}

TEST_CASE("cli") {
  Run mld = cli("mld --ideal \"(x,y)\" --exp 1");
  CHECK(mld.status == 0);
  CHECK(mld.out.find("mld = 1/1") != std::string::npos);
  CHECK(mld.out.find("classification = klt") != std::string::npos);

  Run cls = cli("classify --ideal \"(x)\" --exp 1");
  CHECK(cls.status == 0);
  CHECK(cls.out.find("plt-with-centre") != std::string::npos);
  CHECK(cls.out.find("centre: x = 0") != std::string::npos);

  Run ver = cli("verify --ideal \"(x)\" --exp 1 --ideal \"(x,y)\" --exp 1/2 --samples 50 --seed 7");
  CHECK(ver.status == 0);
  CHECK(ver.out.find("50/50 samples at mld 1/2") != std::string::npos);

  CHECK(cli("mld --ideal \"(x,\" --exp 1").status == 65);
  CHECK(cli("mld --ideal \"(x^2 + y^2, x^3)\" --exp 1").status == 65);
  CHECK(cli("mld --bogus").status == 64);
  CHECK(cli("mld --ideal \"(x)\"").status == 64);
  CHECK(cli("certificate --ideal \"(x^2, y^3)\" --exp 5/6").status == 65);

  Run json = cli("verify --ideal \"(x)\" --exp 1 --samples 5 --seed 7 --format json");
  Json doc = Json::parse(json.out);
  CHECK(doc["pass"] == true);
  CHECK(doc["schema"] == "mldlab.verification");
  CHECK(json.out == cli("verify --ideal \"(x)\" --exp 1 --samples 5 --seed 7 --format json").out);
  const std::regex decimal(R"(\d\.\d)");
  CHECK_FALSE(std::regex_search(json.out, decimal));

  const std::string path = "cli_resolve_test.json";
  Run res = cli("resolve --ideal \"(x^2, y^3)\" --exp 5/6 --format json");
  { std::ofstream(path) << res.out; }
  Run rep = cli("resolve --replay " + path + " --format json");
  CHECK(Json::parse(rep.out)["discrepancies"] == Json::parse(res.out)["discrepancies"]);
  std::remove(path.c_str());

  Run fileRun = [&] {
    const std::string sysPath = "cli_system_test.json";
    { std::ofstream(sysPath) << to_json(sys({{"(x^2, y^3)", "5/6"}})).dump(); }
    Run r = cli("mld --file " + sysPath);
    std::remove(sysPath.c_str());
    return r;
  }();
  CHECK(fileRun.out.find("mld = 0/1") != std::string::npos);
}
