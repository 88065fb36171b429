#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>
#include <cmath>
#include <unistd.h>
#include <sys/wait.h>

#include <json.hpp>

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out, err;
};

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

fs::path scratch() {
  auto d = fs::temp_directory_path() / ("hm_cli_test_" + std::to_string(::getpid()));
  fs::create_directories(d);
  return d;
}

Run run(const std::string& args) {
  auto dir = scratch();
  auto o = dir / "stdout", e = dir / "stderr";
  std::string cmd = std::string("\"") + HM_CLI_PATH + "\" " + args + " >\"" + o.string() + "\" 2>\"" + e.string() + "\"";
  int st = std::system(cmd.c_str());
  Run r;
  r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  r.out = slurp(o);
  r.err = slurp(e);
  return r;
}

std::string data(const char* f) { return std::string("\"") + HM_DATA_DIR + "/" + f + "\""; }

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> v;
  std::stringstream ss(s);
  for (std::string l; std::getline(ss, l);) v.push_back(l);
  return v;
}

}  // namespace

TEST_CASE("metric csv") {
  auto r = run("metric --domain halfplane --kind alpha --x 0,1 --y 0,3");
  REQUIRE(r.code == 0);
  auto l = lines(r.out);
  REQUIRE(l.size() == 2);
  CHECK(l[0] == "metric,x1,y1,x2,y2,value,error_estimate");
  CHECK(l[1].rfind("apollonian,0,1,0,3,1.09861228866810", 0) == 0);
  CHECK(r.out.find('\r') == std::string::npos);
}

TEST_CASE("metric json") {
  auto r = run("metric --domain " + data("disk.json") + " --kind k --x 0,0 --y 0.5,0 --format json");
  REQUIRE(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j["value"].get<double>() == doctest::Approx(std::log(2.0)).epsilon(1e-3));
}

TEST_CASE("repeat runs are byte identical") {
  std::string a = "relate --domain square --a alpha --b j --pairs 20 --scales 3";
  auto r1 = run(a), r2 = run(a);
  REQUIRE(r1.code == 0);
  CHECK(r1.out == r2.out);
  CHECK(!r1.out.empty());
}

TEST_CASE("bad input exits 2 with a JSON diagnostic") {
  for (const std::string& args : std::vector<std::string>{"metric --domain disk --kind j --x 0,0 --y 0.1,0 --samples 8",
                           "metric --domain disk --kind j --x 0,0 --y 0.1,0 --tol 0.5",
                           "metric --domain " + data("bad_domain.json") + " --kind j --x 0,0 --y 0.1,0",
                           std::string("radius --name sp --mu 2 --alpha 0"),
                           std::string("bound --name D --A 1 --B -1")}) {
    auto r = run(args);
    CHECK(r.code == 2);
    auto j = json::parse(r.err);
    CHECK(j.contains("status"));
    CHECK(j.contains("code"));
    CHECK(j.contains("message"));
  }
}

TEST_CASE("numerical failure exits 3") {
  auto r = run("bound --name lambda_R_gamma --gamma 0 --fpp0 1");
  CHECK(r.code == 3);
  CHECK(json::parse(r.err)["status"] == "NoRoot");
}

TEST_CASE("bound D at gamma 0") {
  auto r = run("bound --name D --A 1 --B -1 --gamma 0 --format json");
  REQUIRE(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j["value"].get<double>() == doctest::Approx(2).epsilon(1e-6));
  CHECK_FALSE(j["notes"].empty());
}

TEST_CASE("density table") {
  auto r = run("density --domain " + data("disk.json") + " --kind delta --at 0.5,0 --at 0,0.25");
  REQUIRE(r.code == 0);
  auto l = lines(r.out);
  REQUIRE(l.size() == 3);
  CHECK(l[0] == "kind,x,y,value");
  CHECK(l[1] == "delta,0.5,0,0.5");
}

TEST_CASE("plot writes svg and csv") {
  auto svg = scratch() / "qh.svg";
  auto r = run("plot --domain " + data("disk.json") + " --density quasihyperbolic --pixels 12 --scale-delta --out \"" +
               svg.string() + "\"");
  REQUIRE(r.code == 0);
  auto s = slurp(svg);
  CHECK(s.rfind("<svg", 0) == 0);
  CHECK(s.find("</svg>") != std::string::npos);
  auto csv = svg;
  csv.replace_extension(".csv");
  auto l = lines(slurp(csv));
  REQUIRE(l.size() > 10);
  CHECK(l[0] == "x,y,value");
  for (size_t i = 1; i < l.size(); ++i) {
    double v = std::stod(l[i].substr(l[i].rfind(',') + 1));
    CHECK(v == doctest::Approx(1).epsilon(1e-12));
  }
}

TEST_CASE("norm and series input") {
  auto r = run("norm --function koebe --format json");
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out)["norm"].get<double>() == doctest::Approx(6).epsilon(1e-9));
  auto p = run("radius --name u --alpha 0 --lambda 1 --format json");
  REQUIRE(p.code == 0);
  CHECK(json::parse(p.out)["r0"].get<double>() == doctest::Approx(1 / std::sqrt(2.0)).epsilon(1e-12));
}

TEST_CASE("unknown subcommand") {
  auto r = run("teleport");
  CHECK(r.code != 0);
}
