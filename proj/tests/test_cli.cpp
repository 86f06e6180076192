#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

using json = nlohmann::json;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " + std::string(CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("dynkin-forge-test-" + name);
  std::ofstream(path) << content;
  return path.string();
}

}  // namespace

TEST_CASE("grade") {
  const auto r = run("grade E8 2");
  REQUIRE(r.code == 0);
  const auto j = json::parse(r.out);
  CHECK(j["order"] == 3);
  CHECK(j["dims"]["0"] == 64);
  CHECK(j["dims"]["-1"] == 56);
  CHECK(j["dims"]["-2"] == 28);
  CHECK(j["dims"]["-3"] == 8);
}

TEST_CASE("nu") {
  const auto r = run("nu F4 3");
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out) == json::parse(R"({"levi":"A1xA2","nu":[1,2]})"));
  CHECK(json::parse(run("nu G2 1").out)["nu"] == json::parse("[3]"));
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run("grade E8 99").code == 2);
  CHECK(run("grade E9 1").code == 2);
  CHECK(run("grade E8").code == 2);
  CHECK(run("frobnicate").code == 2);
  CHECK(run("").code == 2);
  CHECK(run("grade E8 1", "DYNKIN_FORGE_SEED=abc").code == 2);
}

TEST_CASE("domain errors exit with 1 and a JSON error") {
  const auto r = run("augment A4 --weight 0,1,1,0 --nu 1");
  CHECK(r.code == 1);
  CHECK(json::parse(r.out)["error"]["kind"] == "CycleError");
  const auto g = run("generic B3 1");
  CHECK(g.code == 1);
  CHECK(json::parse(g.out)["error"]["kind"] == "Unsupported");
  const auto bad = run("augment A4 --weight 0,1,0,0 --nu 2");
  CHECK(bad.code == 1);
  CHECK(json::parse(bad.out)["valid"] == false);
}

TEST_CASE("levi, augment and enumerate") {
  const auto l = json::parse(run("levi E6 2").out);
  CHECK(l["levi"] == "A5");
  CHECK(l["space"] == "Lambda^3 C^6");
  const auto a = json::parse(run("augment A1xA4 --weight \"1;0,1,0,0\" --nu 1,1").out);
  CHECK(a["ambient"] == "E6");
  CHECK(a["node"] == 3);
  const auto e = json::parse(run("enumerate A1").out);
  CHECK(e["count"] == 6);
}

TEST_CASE("generic and orbit-dim") {
  const auto g = run("generic D5 1");
  REQUIRE(g.code == 0);
  const auto j = json::parse(g.out);
  CHECK(j["orbit_dim"] == j["dim_g1"]);
  const auto o = json::parse(run("orbit-dim E8 1 --level -1").out);
  CHECK(o["orbit_dim"] == 64);
  CHECK(o["generic"] == true);
  const auto v = temp_file("vector.json", R"j({"(0,-1,0,0,0,0,0,0)": 1})j");
  const auto single = json::parse(run("orbit-dim E8 2 --vector " + v).out);
  CHECK(single["orbit_dim"] < 56);
}

TEST_CASE("glorbits") {
  const auto path = temp_file("pair.json",
                              R"({"m":2,"M1":[[0,1,0,0],[-1,0,0,0],[0,0,0,1],[0,0,-1,0]],)"
                              R"("M2":[[0,1,0,0],[-1,0,0,0],[0,0,0,-1],[0,0,1,0]]})");
  const auto phi = json::parse(run("glorbits phi --m 2 --pair " + path).out);
  CHECK(phi["phi"]["coeffs"] == json::parse(R"(["2","0","-2"])"));
  const auto pts = json::parse(run("glorbits points --pair " + path).out);
  CHECK(pts["points"].size() == 2);
  const auto w = json::parse(run("glorbits witness --m 4").out);
  CHECK(w["orbit_dim"] == 72);
  CHECK(w["stratum"] == "U2");
  const auto c = json::parse(run("glorbits construct --points 1:0,0:1").out);
  CHECK(c["phi"]["coeffs"] == json::parse(R"(["0","-2","0"])"));
  CHECK(run("glorbits classify --pair " + path).code == 1);
}

TEST_CASE("output is deterministic and the seed is honoured") {
  CHECK(run("orbit-dim E7 4 --level -1").out == run("orbit-dim E7 4 --level -1 --seed 0").out);
  CHECK(run("orbit-dim E7 4 --level -1", "DYNKIN_FORGE_SEED=0").out == run("orbit-dim E7 4 --level -1").out);
  CHECK(run("tables").out == run("tables").out);
}

TEST_CASE("tables") {
  const auto r = run("tables");
  REQUIRE(r.code == 0);
  const auto j = json::parse(r.out);
  CHECK(j.contains("graded_pieces"));
  const auto text = run("tables --pretty");
  CHECK(text.out.find("Lambda^3 C^8") != std::string::npos);
}
