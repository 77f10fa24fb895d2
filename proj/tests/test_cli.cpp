// End-to-end tests of the kqcas binary: output schemas, cache behavior and
// exit codes.  The binary path comes from the build system.

#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <string>

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(KQCAS_BIN_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  std::array<char, 4096> buf;
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("kqcas-test-" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("family emits canonical JSON") {
  RunResult r = run("--no-cache family --tag pg --n 1");
  REQUIRE(r.exit_code == 0);
  json j = json::parse(r.out);
  CHECK(j["family"] == "pg");
  CHECK(j["n"] == 1);
  CHECK(j["terms"].size() == 1);
  CHECK(j["terms"][0]["partition"] == json::array({1}));
  CHECK(j["terms"][0]["coeff"] == "1");
  // parse -> reserialize -> identical bytes
  CHECK(j.dump(2) + "\n" == r.out);
}

TEST_CASE("family with vars emits the finite form") {
  RunResult r = run("--no-cache family --tag gp --n 2 --vars 1");
  REQUIRE(r.exit_code == 0);
  json j = json::parse(r.out);
  CHECK(j["vars"] == 1);
  // x^2 - b x in canonical order: degree-1 term first
  CHECK(j["terms"][0]["monomial"] == json::array({1}));
  CHECK(j["terms"][0]["coeff"] == "-b");
  CHECK(j["terms"][1]["monomial"] == json::array({2}));
  CHECK(j["terms"][1]["coeff"] == "1");
}

TEST_CASE("GQ constant and finite forms") {
  RunResult r = run("--no-cache family --tag GQ --n -2");
  REQUIRE(r.exit_code == 0);
  json j = json::parse(r.out);
  CHECK(j["terms"][0]["coeff"] == "b^2");
  RunResult r2 = run("--no-cache family --tag GQ --n 3 --vars 1 --format text");
  REQUIRE(r2.exit_code == 0);
  CHECK(r2.out == "x1^3 : 2\nx1^4 : b\n");
}

TEST_CASE("cache hits are byte-identical and tolerate reuse") {
  TempDir tmp;
  std::string base = "--cache-dir " + tmp.path.string() +
                     " --degree 5 family --tag qG --n 2";
  RunResult cold = run(base);
  REQUIRE(cold.exit_code == 0);
  bool have_file = false;
  for (const auto& e : fs::directory_iterator(tmp.path)) have_file |= e.is_regular_file();
  CHECK(have_file);
  RunResult warm = run(base);
  REQUIRE(warm.exit_code == 0);
  CHECK(warm.out == cold.out);
  // bypassing the cache still gives the same bytes
  RunResult direct = run("--no-cache --degree 5 family --tag qG --n 2");
  CHECK(direct.out == cold.out);
}

TEST_CASE("expand pins the unit coordinate and reports failures") {
  RunResult r = run("--no-cache --degree 5 expand --target q1G --basis qG_odd");
  REQUIRE(r.exit_code == 0);
  json j = json::parse(r.out);
  CHECK(j["basis"] == "qG_odd");
  CHECK(j["coords"].size() == 1);
  CHECK(j["coords"][0]["partition"] == json::array({1}));
  CHECK(j["coords"][0]["coeff"] == "1");

  RunResult bad = run("--no-cache --degree 5 expand --target p2 --basis pG_odd");
  CHECK(bad.exit_code == 1);

  RunResult product =
      run("--no-cache --degree 5 expand --target qG1*qG1 --basis qG_strict");
  REQUIRE(product.exit_code == 0);
  json pj = json::parse(product.out);
  bool all_integral = true;
  for (const auto& t : pj["coords"]) {
    std::string c = t["coeff"];
    all_integral = all_integral && c.find('/') == std::string::npos;
  }
  CHECK(all_integral);
}

TEST_CASE("pair returns the duality delta") {
  RunResult r = run("--no-cache pair --left GQ3 --right gp3");
  REQUIRE(r.exit_code == 0);
  json j = json::parse(r.out);
  CHECK(j["value"] == "1");
  CHECK(j["degree_used"] == 3);
  RunResult z = run("--no-cache pair --left GQ5 --right gp3");
  CHECK(json::parse(z.out)["value"] == "0");
}

TEST_CASE("gp-even emits the elimination table") {
  RunResult r = run("--no-cache gp-even --max 4");
  REQUIRE(r.exit_code == 0);
  json j = json::parse(r.out);
  REQUIRE(j["table"].size() == 2);
  CHECK(j["table"][0]["index"] == 2);
  // gp_2 = gp_1^2 - b gp_1
  auto terms = j["table"][0]["formula"]["terms"];
  REQUIRE(terms.size() == 2);
  CHECK(terms[0]["indices"] == json::array({1}));
  CHECK(terms[0]["coeff"] == "-b");
  CHECK(terms[1]["indices"] == json::array({1, 1}));
  CHECK(terms[1]["coeff"] == "1");
}

TEST_CASE("usage errors exit with status 2") {
  CHECK(run("--no-cache family --tag bogus --n 1").exit_code == 2);
  CHECK(run("--no-cache family --tag gp --n 0").exit_code == 2);
  CHECK(run("--no-cache expand --target wat --basis qG_odd").exit_code == 2);
  CHECK(run("--no-cache verify --suite unknown").exit_code == 2);
  CHECK(run("definitely-not-a-subcommand").exit_code == 2);
}

TEST_CASE("verify suite runs and reports") {
  RunResult r = run("--no-cache verify --suite gpz --format json");
  REQUIRE(r.exit_code == 0);
  json j = json::parse(r.out);
  CHECK(j["suite"] == "gpz");
  for (const auto& c : j["results"]) CHECK(c["pass"] == true);
}

}  // TEST_SUITE
