#pragma once

// Executable theorem cases: a seeded generator builds an instance, a hypothesis gate
// admits it, and the conclusion is judged numerically. Also a small counterexample search.

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "subordlab/subordination.hpp"

namespace subordlab {

/// Outcome of one numerical predicate; margin is positive when it holds.
struct Check {
  Holds holds = Holds::Inconclusive;
  double margin = 0.0;
  std::string detail;
};

/// Uniform draws recorded on a tape. A sampler built from a tape replays it and then
/// continues with fresh draws, which lets the falsifier perturb an instance coordinatewise.
class Sampler {
 public:
  Sampler(std::uint64_t seed, std::uint64_t stream);
  Sampler(std::vector<double> tape, std::uint64_t seed, std::uint64_t stream);

  double uniform();  // [0, 1)
  double uniform(double lo, double hi);
  int integer(int lo, int hi);  // inclusive
  cplx in_disk(double radius);
  cplx on_circle();

  const std::vector<double>& tape() const noexcept { return tape_; }

 private:
  std::mt19937_64 rng_;
  std::vector<double> tape_;
  std::size_t cursor_ = 0;
};

struct HarnessConfig {
  int order = 64;  // N
  int samples = 1024;  // M
  double tolerance = 1e-4;
  std::vector<double> radii{0.5, 0.8, 0.95, 0.99};
  int retries = 50;

  SubordinationConfig subordination() const;
};

struct Instance {
  nlohmann::json description;
  std::function<Check()> hypothesis;
  std::function<Check()> conclusion;
};

struct TheoremCase {
  std::string id;
  std::string notes;
  bool converse = false;
  bool spot = false;  // single fixed trial
  std::function<Instance(Sampler&, const HarnessConfig&)> generate;
};

struct TrialReport {
  std::string case_id;
  std::string mode = "verify";  // or "falsify"
  std::uint64_t seed = 0;
  int trials = 0;
  int passes = 0;
  int inconclusive = 0;
  int failures = 0;
  int skipped = 0;  // trials whose generator never met the hypothesis (counted as inconclusive)
  long attempts = 0;
  long accepted = 0;
  bool generator_starved = false;  // accepted < 1% of attempts
  double worst_margin = 0.0;
  nlohmann::json witness;  // instance with the worst margin
  double wall_time = 0.0;  // seconds
  HarnessConfig config;
  std::string notes;
};

const std::vector<TheoremCase>& registry();
std::vector<std::string> registry_ids();
/// Registry lookup; also resolves "converse-of:<id>". Throws UnknownCase.
TheoremCase find_case(std::string_view id);
/// The converse claim (conclusion => hypothesis) of a registry case, if one is defined.
std::optional<TheoremCase> converse_of(std::string_view id);
/// Copy of a case whose conclusion margin has its sign flipped.
TheoremCase planted_defect(const TheoremCase& c);

TrialReport run_case(const TheoremCase& c, int trials, std::uint64_t seed, const HarnessConfig& cfg = {});
TrialReport run_case(std::string_view id, int trials, std::uint64_t seed, const HarnessConfig& cfg = {});

/// Random search over `budget` instances, then coordinatewise refinement of the worst tape.
TrialReport falsify(const TheoremCase& c, int budget, std::uint64_t seed, const HarnessConfig& cfg = {});

nlohmann::json report_to_json(const TrialReport& r);
TrialReport report_from_json(const nlohmann::json& j);
void persist_report(const TrialReport& r, const std::filesystem::path& path);
TrialReport load_report(const std::filesystem::path& path);

// Building blocks shared by the case definitions.
Check from_verdict(const SubordinationVerdict& v);
Check classify_margin(double margin, double tolerance, std::string detail = {});
/// Worst of several checks: any false, else any inconclusive, else true; margin is the minimum.
Check all_of(std::initializer_list<Check> checks);
/// min over the harness grid (radii x M angles) of value(z).
Check grid_min(const std::function<double(cplx)>& value, const HarnessConfig& cfg, std::string detail = {});
/// tail_estimate(f, max radius) below the tolerance: the truncated series is trustworthy on the grid.
Check resolved(const TaylorSeries& f, const HarnessConfig& cfg, std::string_view name);
/// scale * z^n * Blaschke(up to 3 - (n - 1) zeros), drawn from the sampler.
SchwarzSeries sample_schwarz(Sampler& s, double s_lo, double s_hi, int order, int n = 1, bool real = false);

}  // namespace subordlab
