#include "doctest.h"

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include "json.hpp"

using json = nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " GCHAR_BINARY " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t n = std::fread(buf.data(), 1, buf.size(), p)) out.append(buf.data(), n);
  const int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

json run_json(const std::string& args, int expect_code = 0) {
  const Run r = run(args + " --json");
  CHECK(r.code == expect_code);
  return json::parse(r.out);
}

json without_timing(json j) {
  j.erase("timing");
  return j;
}

}  // namespace

TEST_CASE("ring mul") {
  const json j = run_json(R"x(ring mul --orders 4 --mode mod-empty --lhs "{0,1}" --rhs "{1,2}")x");
  CHECK(j["result"]["product"] == json::parse(R"x({"{1,2,3}":1})x"));
  CHECK(j["ok"] == true);
  const json k = run_json(R"x(ring mul --orders 4 --mode mod-empty --lhs "{1,3}" --rhs "{0,2}")x");
  CHECK(k["result"]["product"] == json::parse(R"x({"{1,3}":1})x"));
  const json m = run_json(R"x(ring mul --orders 4 --mode mod-empty-g --lhs "{0,1}" --rhs "{0,1,2}")x");
  CHECK(m["result"]["product"].empty());
}

TEST_CASE("verify ja") {
  const json j = run_json("verify ja --orders 4");
  CHECK(j["ok"] == true);
  CHECK(j["result"]["algebra_dim"] == 14);
  CHECK(j["result"]["radical_dim"] == 8);
  CHECK(j["result"]["quotient_dim"] == 6);
}

TEST_CASE("q8") {
  const json j = run_json(R"x(q8 mul --lhs "({a},[1:i])" --rhs "({b},[1:i])")x");
  CHECK(j["result"]["text"] == "({a,b,c},[1:-i])");
  const json e = run_json(R"x(q8 exponent --lhs "({b,c},[1:1])")x");
  CHECK(e["result"]["exponent"] == 3);
  // the listed idempotents are not all orthogonal, so the suite exits 1
  const json v = run_json("q8 verify", 1);
  CHECK(v["ok"] == false);
  CHECK(v["findings"].contains("discrepancy_ab_star_times_point"));
}

TEST_CASE("chain2 and classfn") {
  const json j = run_json(R"x(chain2 mul --orders 4 --sub 2 --lhs "full:{0,1}" --rhs "full:{0,1}")x");
  CHECK(j["result"]["text"] == "full:{0,1,2} + lower:{0} + lower:{2}");
  const json v = run_json("chain2 verify --orders 2,2 --sub \"(1,1)\"");
  CHECK(v["ok"] == true);
  CHECK(v["result"]["t_quotient"]["quotient_dim"] == 10);
  const json c = run_json("chain2 cset --n 2 --nm 4");
  CHECK(c["result"]["pairs"] == json::parse("[[1,1],[2,1],[2,2],[3,2],[4,2]]"));
  const json in = run_json(R"x(classfn inner --orders 4 --chain "(2)" --lhs "A:{0,1}" --rhs "A:{0,1}")x");
  CHECK(in["result"]["text"] == "[[4, 4, 1], [., 2, 2], [., ., 2]]");
  const json re = run_json(R"x(classfn realize --orders 4 --lhs "{0,1} + {2,3} - {0,3} - {1,2}")x");
  CHECK(re["result"]["is_zero"] == true);
  const json ar = run_json(R"x(classfn artin --orders 4 --chain "(2)")x");
  CHECK(!ar["result"]["certificate"]["terms"].empty());
}

TEST_CASE("exit codes and errors") {
  CHECK(run("ring mul --orders 4 --lhs \"{0,9}\" --rhs \"{1}\"").code == 2);
  CHECK(run("ring mul --orders 4 --lhs \"{0}\"").code == 2);
  CHECK(run("ring mul --orders 4 --lhs \"{0}\" --rhs \"{1}\" --bogus").code == 2);
  CHECK(run("nothing").code == 2);
  CHECK(run("chain2 verify --orders 4 --sub 1").code == 2);
  CHECK(run("q8 mul --lhs \"({d},*)\" --rhs \"({},*)\"").code == 2);
  CHECK(run("verify all --max 9").code == 2);
  CHECK(run("--help").code == 0);
  CHECK(run("ring mul --orders 4 --lhs \"1/3*{0}\" --rhs \"{1}\"", "GCHAR_MAX_DENOM=2").code == 2);
  CHECK(run("ring mul --orders 4 --lhs \"1/3*{0}\" --rhs \"{1}\"", "GCHAR_MAX_DENOM=3").code == 0);
}

TEST_CASE("determinism and round trip") {
  const std::string args = R"x(q8 mul --lhs "2*({a},[1:i]) - ({},*)" --rhs "({b},[1:2]) + 1/2*({1},{})")x";
  const json a = run_json(args), b = run_json(args);
  CHECK(without_timing(a).dump() == without_timing(b).dump());
  const json back = run_json("q8 mul --lhs \"" + a["result"]["text"].get<std::string>() + "\" --rhs \"({1},{})\"");
  CHECK(back["result"]["product"] == a["result"]["product"]);
  const json v1 = run_json("verify pci --orders 2,2"), v2 = run_json("verify pci --orders 2,2");
  CHECK(without_timing(v1).dump() == without_timing(v2).dump());
}

TEST_CASE("verify all on small groups") {
  const json j = run_json("verify all --max 2", 1);
  CHECK(j["result"]["suites"]["ja Z2"] == true);
  CHECK(j["result"]["suites"]["q8"] == false);
  CHECK(!j["result"]["suites"].contains("ja Z3"));
}
