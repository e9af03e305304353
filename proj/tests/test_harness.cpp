#include <cmath>
#include <filesystem>
#include <fstream>
#include <set>

#include "doctest.h"
#include "subordlab/errors.hpp"
#include "subordlab/harness.hpp"

using namespace subordlab;

namespace {

nlohmann::json without_time(const TrialReport& r) {
  auto j = report_to_json(r);
  j.erase("wall_time");
  return j;
}

std::filesystem::path scratch(const char* name) { return std::filesystem::temp_directory_path() / name; }

}  // namespace

TEST_CASE("sampler replays its tape and then continues") {
  Sampler a(3, 1);
  std::vector<double> first;
  for (int k = 0; k < 10; ++k) first.push_back(a.uniform());
  Sampler b(a.tape(), 3, 1);
  for (int k = 0; k < 10; ++k) CHECK(b.uniform() == first[static_cast<std::size_t>(k)]);
  Sampler b2(a.tape(), 3, 1);
  for (int k = 0; k < 10; ++k) b2.uniform();
  CHECK(b.uniform() == b2.uniform());

  std::vector<double> tape(first.begin(), first.begin() + 4);
  tape[2] = 0.25;
  Sampler c(tape, 3, 1);
  c.uniform();
  c.uniform();
  CHECK(c.uniform() == 0.25);
  CHECK(c.tape().size() == 4);
}

TEST_CASE("sampler ranges") {
  Sampler s(1, 0);
  for (int k = 0; k < 1000; ++k) {
    const double u = s.uniform(-2.0, 3.0);
    CHECK(u >= -2.0);
    CHECK(u < 3.0);
    const int i = s.integer(0, 3);
    CHECK(i >= 0);
    CHECK(i <= 3);
    CHECK(std::abs(s.in_disk(0.8)) <= 0.8);
    CHECK(std::abs(std::abs(s.on_circle()) - 1.0) < 1e-14);
  }
  CHECK(Sampler(1, 0).uniform() != Sampler(1, 1).uniform());
}

TEST_CASE("registry ids are unique and cover the theorem list") {
  std::set<std::string> ids;
  int theorems = 0, spots = 0;
  for (const auto& c : registry()) {
    CHECK(ids.insert(c.id).second);
    (c.spot ? spots : theorems)++;
    CHECK(c.generate);
  }
  CHECK(theorems >= 28);
  CHECK(spots >= 5);
  CHECK(registry_ids().size() == registry().size());
  for (const char* id : {"thm-2.1", "cor-ez", "thm-odl", "lem-1", "lem-2", "cor-last", "thm-two-fn"})
    CHECK(ids.count(id) == 1);
}

TEST_CASE("case lookup") {
  CHECK(find_case("cor-ez").id == "cor-ez");
  CHECK_THROWS_AS(find_case("no-such-case"), Error);
  const auto conv = find_case("converse-of:cor-ez");
  CHECK(conv.converse);
  CHECK(converse_of("cor-ez").has_value());
  CHECK_FALSE(converse_of("thm-odl").has_value());
  CHECK_THROWS_AS(find_case("converse-of:thm-odl"), Error);
}

TEST_CASE("margin classification") {
  CHECK(classify_margin(1e-3, 1e-4).holds == Holds::True);
  CHECK(classify_margin(-1e-3, 1e-4).holds == Holds::False);
  CHECK(classify_margin(5e-5, 1e-4).holds == Holds::Inconclusive);
  CHECK(classify_margin(-5e-5, 1e-4).holds == Holds::Inconclusive);

  const Check t{Holds::True, 0.5, ""}, i{Holds::Inconclusive, 1e-5, ""}, f{Holds::False, -0.1, ""};
  CHECK(all_of({t, t}).holds == Holds::True);
  CHECK(all_of({t, i}).holds == Holds::Inconclusive);
  CHECK(all_of({i, f, t}).holds == Holds::False);
  CHECK(all_of({t, i, f}).margin == doctest::Approx(-0.1));
}

TEST_CASE("grid minimum") {
  HarnessConfig cfg;
  cfg.samples = 256;
  const Check c = grid_min([](cplx z) { return 1.0 - std::abs(z); }, cfg);
  CHECK(c.margin == doctest::Approx(0.01));
  CHECK(c.holds == Holds::True);
  const Check nan = grid_min([](cplx) { return std::nan(""); }, cfg);
  CHECK(nan.holds == Holds::False);
}

TEST_CASE("sampled Schwarz functions stay in the disk") {
  Sampler s(5, 0);
  for (int k = 0; k < 50; ++k) {
    const int n = 1 + k % 3;
    const auto w = sample_schwarz(s, 0.2, 0.9, 48, n, k % 2 == 0);
    CHECK(w.boundary_max(512) <= 0.9 + 1e-9);
    for (int j = 0; j < n; ++j) CHECK(std::abs(w.series()[j]) < 1e-14);
    if (k % 2 == 0) {
      for (int j = 0; j <= 48; ++j) CHECK(std::abs(w.series()[j].imag()) < 1e-12);
    }
  }
}

TEST_CASE("verification is deterministic in the seed") {
  const auto a = run_case("cor-ez", 10, 42);
  const auto b = run_case("cor-ez", 10, 42);
  CHECK(without_time(a) == without_time(b));
  CHECK(a.passes + a.inconclusive + a.failures == a.trials);
  CHECK(a.accepted <= a.attempts);
  const auto c = run_case("cor-ez", 10, 43);
  CHECK(report_to_json(c)["witness"] != report_to_json(a)["witness"]);
}

TEST_CASE("open-door ODE theorem holds on 100 trials") {
  const auto r = run_case("thm-odl", 100, 1);
  CHECK(r.failures == 0);
  CHECK(r.worst_margin > 0.0);
  CHECK(r.inconclusive < 10);
}

TEST_CASE("spot cases pass") {
  for (const auto& c : registry()) {
    if (!c.spot) continue;
    CAPTURE(c.id);
    const auto r = run_case(c, 5, 0);
    CHECK(r.trials == 1);
    CHECK(r.passes == 1);
  }
}

TEST_CASE("planted defect is caught") {
  const auto bad = planted_defect(find_case("cor-ez"));
  CHECK(bad.id != "cor-ez");
  CHECK(run_case(bad, 10, 7).failures > 0);
  CHECK(falsify(bad, 50, 7).failures > 0);
}

TEST_CASE("falsifier finds the broken converse") {
  const auto r = falsify(find_case("converse-of:cor-ez"), 300, 7);
  CHECK(r.mode == "falsify");
  CHECK(r.failures > 0);
  CHECK(r.worst_margin < 0.0);
  CHECK(r.witness.contains("tape"));
}

TEST_CASE("reports round-trip through disk") {
  const auto r = run_case("cor-sqrt", 5, 3);
  const auto path = scratch("subordlab_test_report.json");
  persist_report(r, path);
  const auto back = load_report(path);
  CHECK(report_to_json(back) == report_to_json(r));
  std::filesystem::remove(path);

  CHECK_THROWS_AS(load_report(scratch("subordlab_missing_dir/none.json")), Error);
  const auto junk = scratch("subordlab_junk.json");
  std::ofstream(junk) << "{not json";
  try {
    load_report(junk);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::IoFailure);
  }
  std::filesystem::remove(junk);
}

TEST_CASE("argument validation") {
  HarnessConfig cfg;
  cfg.retries = 0;
  CHECK_THROWS_AS(run_case("cor-ez", 1, 0, cfg), Error);
  cfg.retries = 65;
  CHECK_THROWS_AS(run_case("cor-ez", 1, 0, cfg), Error);
  CHECK_THROWS_AS(run_case("cor-ez", -1, 0), Error);
  CHECK_THROWS_AS(falsify(find_case("cor-ez"), 0, 0), Error);
}
