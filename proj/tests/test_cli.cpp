#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

#include "doctest.h"
#include "subordlab/briot_bouquet.hpp"
#include "subordlab/cli.hpp"
#include "subordlab/errors.hpp"
#include "test_support.hpp"

using namespace subordlab;
using subordlab::testing::max_coeff_diff;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = dispatch(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path scratch(const char* name) { return std::filesystem::temp_directory_path() / name; }

}  // namespace

TEST_CASE("series and complex argument parsing") {
  const auto a = parse_series_arg("[1, 0.5, [0, 2]]", 8);
  CHECK(a.order() == 8);
  CHECK(a[1] == cplx(0.5, 0));
  CHECK(a[2] == cplx(0, 2));
  CHECK(a[3] == cplx(0, 0));

  const auto b = parse_series_arg(R"({"re": [1, 2], "im": [0, 1]})", 16);
  CHECK(b[1] == cplx(2, 1));

  const auto e = parse_series_arg("dominant:exp:0.5", 16);
  CHECK(std::abs(e[3] - std::pow(0.5, 3) / 6.0) < 1e-14);
  const auto d = parse_series_arg("dominant:exp", 16);
  CHECK(std::abs(d[1] - 0.9) < 1e-14);

  const auto path = scratch("subordlab_cli_series.json");
  std::ofstream(path) << "[2, 1]";
  CHECK(parse_series_arg("@" + path.string(), 4)[0] == cplx(2, 0));
  std::filesystem::remove(path);

  CHECK(parse_complex_arg("1.5") == cplx(1.5, 0));
  CHECK(parse_complex_arg("1,-2") == cplx(1, -2));
  CHECK_THROWS_AS(parse_complex_arg("one"), Error);
  CHECK_THROWS_AS(parse_series_arg("dominant:nope", 8), Error);
  try {
    parse_series_arg("@/nonexistent/p.json", 8);
    FAIL("expected an error");
  } catch (const Error& err) {
    CHECK(err.kind() == ErrorKind::IoFailure);
  }
}

TEST_CASE("curve dump for the first open door") {
  const auto r = run({"curve", "--dominant", "opendoor-a", "--n", "1", "--alpha", "0", "--beta", "1", "--r", "0.999",
                      "--samples", "1024"});
  REQUIRE(r.code == 0);
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  CHECK(line == "theta,re,im");
  double best = 1e9, modulus = 0.0, peak = 0.0;
  int rows = 0;
  while (std::getline(in, line)) {
    double th, re, im;
    REQUIRE(std::sscanf(line.c_str(), "%lf,%lf,%lf", &th, &re, &im) == 3);
    ++rows;
    peak = std::max(peak, std::hypot(re, im));
    const double gap = std::abs(th - std::numbers::pi / 2);
    if (gap < best) {
      best = gap;
      modulus = std::hypot(re, im);
    }
  }
  CHECK(rows >= 1024);
  CHECK(best < 1e-2);
  CHECK(modulus == doctest::Approx(std::sqrt(5.0)).epsilon(1e-2));
  CHECK(peak == doctest::Approx(3.0).epsilon(1e-2));
}

TEST_CASE("subordination check exit codes") {
  CHECK(run({"subord", "check", "--p", "dominant:exp:0.8", "--dominant", "exp"}).code == kExitOk);
  const auto bad = run({"subord", "check", "--p", "[2, 0.5]", "--dominant", "exp"});
  CHECK(bad.code == kExitFailure);
  CHECK(bad.out.find("holds=false") != std::string::npos);
  CHECK(run({"subord", "check", "--p", "@/nonexistent/p.json", "--dominant", "exp"}).code == kExitIo);
  CHECK(run({"subord", "check", "--p", "[1]", "--dominant", "nope"}).code == kExitUsage);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"bogus"}).code == kExitUsage);
  CHECK(run({"verify", "--case", "nope"}).code == kExitUsage);
  CHECK(run({"verify", "--case", "cor-ez", "--order", "4"}).code == kExitUsage);
  CHECK(run({"verify", "--case", "cor-ez", "--tolerance", "0.5"}).code == kExitUsage);
  CHECK(run({"verify", "--case", "cor-ez", "--radii", "0.5,1.2"}).code == kExitUsage);
  CHECK(run({"curve", "--dominant", "exp", "--format", "xml"}).code == kExitUsage);
  CHECK(run({"--help"}).code == kExitOk);
}

TEST_CASE("output file that cannot be written") {
  CHECK(run({"verify", "--case", "cor-ez", "--trials", "2", "--out", "/nonexistent/dir/r.json"}).code == kExitIo);
}

TEST_CASE("seed from the environment overrides the flag") {
  const auto path = scratch("subordlab_cli_seed.json");
  ::setenv("SUBORDLAB_SEED", "123", 1);
  const auto r = run({"verify", "--case", "cor-ez", "--trials", "3", "--seed", "9", "--out", path.string()});
  ::unsetenv("SUBORDLAB_SEED");
  REQUIRE(r.code == 0);
  std::ifstream in(path);
  CHECK(nlohmann::json::parse(in).at("seed").get<std::uint64_t>() == 123);
  std::filesystem::remove(path);

  ::setenv("SUBORDLAB_SEED", "abc", 1);
  CHECK(run({"verify", "--case", "cor-ez", "--trials", "1"}).code == kExitUsage);
  ::unsetenv("SUBORDLAB_SEED");
}

TEST_CASE("solve then apply reproduces the right side") {
  const std::string Q = "[1, 0.3, -0.1]";
  const auto solved = run({"bb", "solve", "--Q", Q, "--psi", "dominant:exp:0.5", "--alpha", "1", "--beta", "0.5",
                           "--order", "32"});
  REQUIRE(solved.code == 0);
  const auto applied =
      run({"bb", "apply", "--p", solved.out, "--Q", Q, "--alpha", "1", "--beta", "0.5", "--order", "32"});
  REQUIRE(applied.code == 0);
  const auto psi = nlohmann::json::parse(applied.out).get<TaylorSeries>();
  CHECK(max_coeff_diff(psi, parse_series_arg("dominant:exp:0.5", 32), 30) < 1e-9);

  const auto closed = run({"bb", "solve", "--Q", Q, "--closed-form", "--alpha", "1", "--beta", "0.5", "--order", "32"});
  const auto plain = run({"bb", "solve", "--Q", Q, "--alpha", "1", "--beta", "0.5", "--order", "32"});
  REQUIRE(closed.code == 0);
  CHECK(max_coeff_diff(nlohmann::json::parse(closed.out).get<TaylorSeries>(),
                       nlohmann::json::parse(plain.out).get<TaylorSeries>()) < 1e-9);
}

TEST_CASE("bernardi operator fixes z") {
  const auto r = run({"iop", "apply", "--which", "bernardi", "--f", "[0, 1]", "--g", "[0, 1]", "--order", "16"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("exponent").get<double>() == doctest::Approx(1.0));
  CHECK(j.at("re").at(0).get<double>() == doctest::Approx(1.0));
  CHECK(std::abs(j.at("re").at(1).get<double>()) < 1e-12);
}

TEST_CASE("hypothesis check") {
  const auto r = run({"bb", "check", "--id", "eq09", "--dominant", "exp", "--alpha", "1", "--beta", "1"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("k = 5") != std::string::npos);
}

TEST_CASE("verify and falsify from the command line") {
  const auto v = run({"verify", "--case", "cor-ez", "--trials", "100", "--seed", "7"});
  CHECK(v.code == kExitOk);
  CHECK(v.out.find("total failures=0") != std::string::npos);
  const auto f = run({"falsify", "--case", "cor-ez", "--converse", "--budget", "200", "--seed", "7"});
  CHECK(f.code == kExitFailure);
  const auto list = run({"cases"});
  CHECK(list.out.find("thm-odl") != std::string::npos);
}
