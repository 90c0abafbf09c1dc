#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <string>

#include "vvjack/jack.hpp"
#include "vvjack/json_io.hpp"

using namespace vvjack;

namespace {

std::string run_cli(const std::string& args, int* exit_code = nullptr) {
  const char* path = std::getenv("VVJACK_CLI_PATH");
  REQUIRE(path != nullptr);
  const std::string cmd = std::string(path) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  const int status = pclose(pipe);
  if (exit_code) *exit_code = WEXITSTATUS(status);
  return out;
}

std::string strip_timings(const std::string& text) {
  Json j = Json::parse(text);
  j.erase("timings");
  return j.dump(2);
}

}  // namespace

TEST_CASE("vpoly json round trip") {
  const ShapeData sd(Partition::parse("2,1"));
  JackContext ctx(sd);
  const VPoly& z = ctx.zeta({2, 0, 1}, 1);
  const Json j = vpoly_json(sd, z);
  CHECK(vpoly_parse(sd, j) == z);

  // module vector round trip
  ModuleVector v = ModuleVector::basis(0);
  v.add(1, ScalarQk::kappa() / (ScalarQk(1) + ScalarQk::kappa()));
  CHECK(module_vector_parse(sd, module_vector_json(sd, v)) == v);

  // degree-sorted deterministic key order
  REQUIRE(j.is_array());
  int last_degree = -1;
  for (const auto& term : j) {
    const Composition a = term.at("alpha").get<Composition>();
    CHECK(degree_of(a) >= last_degree);
    last_degree = degree_of(a);
  }
}

TEST_CASE("rsyt command") {
  int code = 0;
  const std::string out = run_cli("rsyt 2,1 --json", &code);
  CHECK(code == 0);
  const Json j = Json::parse(out);
  CHECK(j.at("command") == "rsyt");
  CHECK(j.at("count") == 2);
  CHECK(j.at("tableaux")[0].at("id") == "3,1,2");
  CHECK(j.at("tableaux")[0].at("contents") == Json({1, -1, 0}));
  CHECK(j.at("tableaux")[1].at("id") == "3,2,1");
}

TEST_CASE("jack command emits a reparseable polynomial") {
  int code = 0;
  const std::string out =
      run_cli("jack --tau 2,1 --alpha 1,0,0 --tableau 3,2,1 --json", &code);
  CHECK(code == 0);
  const Json j = Json::parse(out);
  const ShapeData sd(Partition::parse("2,1"));
  const VPoly parsed = vpoly_parse(sd, j.at("poly"));
  JackContext ctx(sd);
  CHECK(parsed == ctx.zeta({1, 0, 0}, sd.index_of_word("3,2,1")));
  CHECK(j.at("norm").get<std::string>() ==
        zeta_norm(sd, {1, 0, 0}, 1).str());
  CHECK(j.at("spectral")[0].get<std::string>() ==
        spectral_value(sd, {1, 0, 0}, 1, 1).str());
}

TEST_CASE("symmetric command golden output for 5,3,2") {
  int code = 0;
  const std::string out = run_cli("symmetric --tau 5,3,2 --json", &code);
  CHECK(code == 0);
  const Json j = Json::parse(out);
  CHECK(j.at("lambda") == Json({2, 2, 1, 1, 1, 0, 0, 0, 0, 0}));
  CHECK(j.at("tableau") == "10,9,8,7,6,5,4,3,2,1");
  // polynomial construction is skipped at this size by default
  CHECK(j.at("poly").is_null());
  // norm equals the factored display expanded
  const ScalarQk expect = ScalarQk(bigq_parse(
                              j.at("norm_prefactor").get<std::string>())) *
                          pochhammer(ScalarQk::linear(bigq(1), bigq(-7)), 2) *
                          pochhammer(ScalarQk::linear(bigq(1), bigq(-6)), 2) *
                          ScalarQk::linear(bigq(1), bigq(-4)).pow(2) *
                          ScalarQk::linear(bigq(1), bigq(-3));
  CHECK(ScalarQk::parse(j.at("norm").get<std::string>()) == expect);
}

TEST_CASE("verify command determinism") {
  int c1 = 0, c2 = 0;
  const std::string a = run_cli("verify --tau 2,1 --nmax 2 --json", &c1);
  const std::string b = run_cli("verify --tau 2,1 --nmax 2 --json", &c2);
  CHECK(c1 == 0);
  CHECK(c2 == 0);
  CHECK(strip_timings(a) == strip_timings(b));
  const Json j = Json::parse(a);
  CHECK(j.at("pass") == true);
  for (const auto& chk : j.at("checks")) CHECK(chk.at("status") == "pass");
}

TEST_CASE("singular-scan command") {
  int code = 0;
  const std::string out =
      run_cli("singular-scan --tau 2 --dmax 1 --candidates -1/2,0,1/2 --json",
              &code);
  CHECK(code == 0);
  const Json j = Json::parse(out);
  bool found = false;
  for (const auto& cell : j.at("cells")) {
    if (cell.at("kappa0") == "-1/2" && cell.at("degree") == 1)
      found = cell.at("corank").get<int>() >= 1;
    if (cell.at("kappa0") == "0") CHECK(cell.at("corank") == 0);
  }
  CHECK(found);
}

TEST_CASE("usage errors exit nonzero") {
  int code = 0;
  run_cli("jack --tau 2,1 --alpha 1,0", &code);  // wrong alpha length
  CHECK(code != 0);
  run_cli("nonsense", &code);
  CHECK(code != 0);
}
