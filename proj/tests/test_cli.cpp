#include <doctest.h>
#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "lht/io.hpp"

namespace {

struct Run {
  int code;
  std::string out;
};

Run lhl(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " + LHL_BIN + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe);
  std::string out;
  char buf[4096];
  for (std::size_t n; (n = fread(buf, 1, sizeof buf, pipe)) > 0;) out.append(buf, n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace

TEST_CASE("count prints the number and the methods") {
  const Run r = lhl("count --lambda 2,2 --t 3");
  CHECK(r.code == 0);
  CHECK(r.out.rfind("81\n", 0) == 0);
  CHECK(r.out.find("formula") != std::string::npos);
  const Run j = lhl("count --lambda 2,2 --t 3 --method all --json");
  CHECK(lht::Json::parse(j.out)["count"] == "81");
}

TEST_CASE("exit codes") {
  CHECK(lhl("count --lambda 2,2 --t 3").code == 0);
  CHECK(lhl("count --lambda 2,3 --t 3").code == 1);
  CHECK(lhl("count --lambda 2,2").code == 2);
  CHECK(lhl("count --lambda 2,2 --t 3 --frobnicate").code == 2);
  CHECK(lhl("nonsense").code == 2);
  CHECK(lhl("").code == 2);
  CHECK(lhl("curve --profile nope").code == 1);
}

TEST_CASE("curve csv lies on the circle") {
  const Run r = lhl("curve --profile square --tau 1 --format csv --resolution 200");
  REQUIRE(r.code == 0);
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  CHECK(line == "branch_id,x,X,Y");
  int rows = 0;
  while (std::getline(in, line)) {
    double x, X, Y;
    const auto c = line.find(',');
    REQUIRE(std::sscanf(line.c_str() + c + 1, "%lf,%lf,%lf", &x, &X, &Y) == 3);
    CHECK(std::abs((X - 1) * (X - 1) + (2 * Y - 1) * (2 * Y - 1) - 1) < 1e-9);
    ++rows;
  }
  CHECK(rows > 200);
}

TEST_CASE("sampling is seeded, revalidated and byte-deterministic") {
  const Run a = lhl("sample --lambda 3,2,1 --t 3 --count 5 --seed 9");
  const Run b = lhl("sample --lambda 3,2,1 --t 3 --count 5 --seed 9 --workers 3");
  const Run c = lhl("sample --lambda 3,2,1 --t 3 --count 5", "LHL_SEED=9");
  const Run d = lhl("sample --lambda 3,2,1 --t 3 --count 5 --seed 10");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out == c.out);
  CHECK(a.out != d.out);
  std::istringstream in(a.out);
  std::string line;
  int k = 0;
  while (std::getline(in, line)) {
    CHECK_NOTHROW(lht::tableau_from_json(lht::Json::parse(line)));
    ++k;
  }
  CHECK(k == 5);
}

TEST_CASE("a json config mirrors the flags") {
  const std::string path = "lhl_test_config.json";
  std::ofstream(path) << R"({"seed": 9, "sample": {"lambda": [3, 2, 1], "t": 3, "count": 5}})";
  const Run a = lhl("--config " + path + " sample");
  const Run b = lhl("sample --lambda 3,2,1 --t 3 --count 5 --seed 9");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  std::ofstream(path) << "{not json";
  CHECK(lhl("--config " + path + " sample").code == 2);
  std::remove(path.c_str());
}

TEST_CASE("render from a sample document") {
  const std::string path = "lhl_test_sample.jsonl";
  std::ofstream(path) << lhl("sample --lambda 2,2 --t 3 --count 2 --seed 1").out;
  const Run svg = lhl("render --input " + path + " --scene height --index 1");
  CHECK(svg.code == 0);
  CHECK(svg.out.find("<svg") != std::string::npos);
  CHECK(lhl("render --input " + path + " --overlay square").code == 2);
  CHECK(lhl("render --input " + path + " --rescale --overlay square").code == 0);
  std::remove(path.c_str());
}

TEST_CASE("dimer and burgers subcommands") {
  const Run d = lhl("dimer --lambda 2,2 --t 3 --check det,faces --json");
  CHECK(d.code == 0);
  const auto doc = lht::Json::parse(d.out);
  CHECK(doc["det"]["abs_det"] == "81");
  CHECK(doc["faces"]["violations"].empty());
  const Run b = lhl("burgers --example staircase --grid 8");
  CHECK(b.code == 0);
  CHECK(b.out.rfind("x,y,discriminant,liquid,re_u,im_u,residual\n", 0) == 0);
}
