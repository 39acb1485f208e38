#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace {

// ctest runs with the build directory as working directory, next to the
// braidrep binary.
int run(const std::string& args) {
  int rc = std::system(("./braidrep " + args).c_str());
  return WEXITSTATUS(rc);
}

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("exit-code contract") {
  CHECK(run("check --suite axioms --d 1 --N 2 --order 3 >/dev/null") == 0);
  CHECK(run("check --suite presentation --n 2 --corrupt-r >/dev/null") == 1);
  CHECK(run("check --suite nonsense >/dev/null 2>&1") == 2);
  CHECK(run("definitely-not-a-subcommand >/dev/null 2>&1") == 2);
  CHECK(run("dump --object nonsense >/dev/null 2>&1") == 2);
}

TEST_CASE("check report schema") {
  CHECK(run("check --suite abrr --order 3 --out cli_abrr.json") == 0);
  nlohmann::json j = nlohmann::json::parse(slurp("cli_abrr.json"));
  CHECK(j["suite"] == "abrr");
  CHECK(j["passed"] == true);
  CHECK(j["checks"].is_array());
  CHECK(j["checks"].size() >= 3);
  for (const auto& c : j["checks"]) {
    CHECK(c.contains("name"));
    CHECK(c["passed"] == true);
  }
  std::remove("cli_abrr.json");
}

TEST_CASE("dump K: diagonal exp(+-hbar/2) entries at d=1") {
  CHECK(run("dump --object K --d 1 --N 2 --order 2 --out cli_k.json") == 0);
  nlohmann::json j = nlohmann::json::parse(slurp("cli_k.json"));
  auto& c = j["matrix"]["coefficients"];
  // hbar^0 identity
  for (int i = 0; i < 4; ++i)
    for (int k = 0; k < 4; ++k) CHECK(c[0][i][k] == (i == k ? "1" : "0"));
  // hbar^1 diagonal {1/2, -1/2, -1/2, 1/2}: weight product nu*mu over two
  // weight-(+-1) vectors, divided by 2
  CHECK(c[1][0][0] == "1/2");
  CHECK(c[1][1][1] == "-1/2");
  CHECK(c[1][2][2] == "-1/2");
  CHECK(c[1][3][3] == "1/2");
  // hbar^2 diagonal all 1/8
  for (int i = 0; i < 4; ++i) CHECK(c[2][i][i] == "1/8");
  std::remove("cli_k.json");
}

TEST_CASE("dump R order 0 is the identity, psi block 0 is the identity") {
  CHECK(run("dump --object R --d 1 --N 2 --order 0 --out cli_r.json") == 0);
  nlohmann::json r = nlohmann::json::parse(slurp("cli_r.json"));
  for (int i = 0; i < 4; ++i)
    for (int k = 0; k < 4; ++k) CHECK(r["matrix"]["coefficients"][0][i][k] == (i == k ? "1" : "0"));
  std::remove("cli_r.json");

  CHECK(run("psi --d 1 --N 2 --order 2 --out cli_psi.json") == 0);
  nlohmann::json p = nlohmann::json::parse(slurp("cli_psi.json"));
  auto& b0 = p["blocks"][0]["coefficients"];
  for (int k = 0; k < 3; ++k)
    for (int i = 0; i < 4; ++i)
      for (int jj = 0; jj < 4; ++jj)
        CHECK(b0[k][i][jj] == (k == 0 && i == jj ? "1" : "0"));
  std::remove("cli_psi.json");
}

TEST_CASE("determinism: identical config gives byte-identical exact output") {
  CHECK(run("dump --object psi --d 1 --N 3 --order 3 --out cli_d1.json") == 0);
  CHECK(run("dump --object psi --d 1 --N 3 --order 3 --out cli_d2.json") == 0);
  CHECK(slurp("cli_d1.json") == slurp("cli_d2.json"));
  CHECK(!slurp("cli_d1.json").empty());
  std::remove("cli_d1.json");
  std::remove("cli_d2.json");
}

TEST_CASE("kz compare emits word deltas with tol echoed") {
  CHECK(run("kz compare --n 2 --d 1 --N 2 --lambda 2 --order 2 --tol 1e-5 "
            "--out cli_cmp.json") == 0);
  nlohmann::json j = nlohmann::json::parse(slurp("cli_cmp.json"));
  CHECK(j["passed"] == true);
  CHECK(j["words"].is_array());
  CHECK(!j["words"].empty());
  for (const auto& w : j["words"]) {
    CHECK(w.contains("word"));
    CHECK(w["tol"] == 1e-5);
    CHECK(w["delta_per_order"].is_array());
  }
  std::remove("cli_cmp.json");
}
