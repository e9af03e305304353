#include "subordlab/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <limits>
#include <numbers>

#include "subordlab/errors.hpp"

namespace subordlab {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr std::uint64_t kStreamsPerTrial = 64;

nlohmann::json finite_or_null(double x) { return std::isfinite(x) ? nlohmann::json(x) : nlohmann::json(nullptr); }

double number_or_inf(const nlohmann::json& j) { return j.is_null() ? kInf : j.get<double>(); }

struct Evaluation {
  bool admitted = false;
  Check hypothesis;
  Check conclusion;
  nlohmann::json description;
  std::vector<double> tape;
};

Evaluation evaluate(const TheoremCase& c, Sampler& s, const HarnessConfig& cfg) {
  Evaluation e;
  Instance inst;
  try {
    inst = c.generate(s, cfg);
    e.hypothesis = inst.hypothesis();
  } catch (const Error& err) {
    e.hypothesis = {Holds::False, -kInf, err.what()};
  }
  e.tape = s.tape();
  e.description = inst.description;
  if (e.hypothesis.holds != Holds::True) return e;
  e.admitted = true;
  try {
    e.conclusion = inst.conclusion();
  } catch (const Error& err) {
    e.conclusion = {Holds::False, -kInf, err.what()};
  }
  return e;
}

nlohmann::json witness_of(const Evaluation& e, std::uint64_t stream) {
  return {{"stream", stream},
          {"tape", e.tape},
          {"instance", e.description},
          {"hypothesis", {{"margin", finite_or_null(e.hypothesis.margin)}, {"detail", e.hypothesis.detail}}},
          {"conclusion",
           {{"holds", std::string(to_string(e.conclusion.holds))},
            {"margin", finite_or_null(e.conclusion.margin)},
            {"detail", e.conclusion.detail}}}};
}

void tally(TrialReport& r, const Evaluation& e, std::uint64_t stream) {
  ++r.trials;
  switch (e.conclusion.holds) {
    case Holds::True: ++r.passes; break;
    case Holds::False: ++r.failures; break;
    case Holds::Inconclusive: ++r.inconclusive; break;
  }
  if (r.witness.is_null() || e.conclusion.margin < r.worst_margin) {
    r.worst_margin = e.conclusion.margin;
    r.witness = witness_of(e, stream);
  }
}

TrialReport start_report(const TheoremCase& c, std::uint64_t seed, const HarnessConfig& cfg, std::string mode) {
  TrialReport r;
  r.case_id = c.id;
  r.mode = std::move(mode);
  r.seed = seed;
  r.config = cfg;
  r.notes = c.notes;
  r.worst_margin = kInf;
  return r;
}

void finish_report(TrialReport& r, std::chrono::steady_clock::time_point t0) {
  r.generator_starved = r.attempts > 0 && 100 * r.accepted < r.attempts;
  r.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

// ---------------------------------------------------------------- Sampler

namespace {
std::seed_seq make_seq(std::uint64_t seed, std::uint64_t stream) {
  return std::seed_seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                       static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
}
}  // namespace

Sampler::Sampler(std::uint64_t seed, std::uint64_t stream) {
  auto seq = make_seq(seed, stream);
  rng_.seed(seq);
}

Sampler::Sampler(std::vector<double> tape, std::uint64_t seed, std::uint64_t stream) : Sampler(seed, stream) {
  tape_ = std::move(tape);
}

double Sampler::uniform() {
  if (cursor_ < tape_.size()) return tape_[cursor_++];
  const double u = static_cast<double>(rng_() >> 11) * 0x1.0p-53;
  tape_.push_back(u);
  ++cursor_;
  return u;
}

double Sampler::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

int Sampler::integer(int lo, int hi) {
  const int k = lo + static_cast<int>(std::floor(uniform() * (hi - lo + 1)));
  return std::clamp(k, lo, hi);
}

cplx Sampler::in_disk(double radius) {
  const double r = radius * std::sqrt(uniform());
  return std::polar(r, 2.0 * std::numbers::pi * uniform());
}

cplx Sampler::on_circle() { return std::polar(1.0, 2.0 * std::numbers::pi * uniform()); }

// ---------------------------------------------------------------- helpers

SubordinationConfig HarnessConfig::subordination() const {
  SubordinationConfig s;
  s.radii = radii;
  s.samples = samples;
  s.tolerance = tolerance;
  return s;
}

Check from_verdict(const SubordinationVerdict& v) {
  return {v.holds, v.margin,
          "margin " + std::to_string(v.margin) + " at z = " + std::to_string(v.witness.real()) + "+" +
              std::to_string(v.witness.imag()) + "i"};
}

Check classify_margin(double margin, double tolerance, std::string detail) {
  const Holds h = margin > tolerance ? Holds::True : margin < -tolerance ? Holds::False : Holds::Inconclusive;
  return {h, margin, std::move(detail)};
}

Check all_of(std::initializer_list<Check> checks) {
  Check out{Holds::True, kInf, {}};
  bool any_false = false, any_inconclusive = false;
  for (const Check& c : checks) {
    any_false = any_false || c.holds == Holds::False;
    any_inconclusive = any_inconclusive || c.holds == Holds::Inconclusive;
    if (c.holds != Holds::True && out.detail.empty()) out.detail = c.detail;
    out.margin = std::min(out.margin, c.margin);
  }
  out.holds = any_false ? Holds::False : any_inconclusive ? Holds::Inconclusive : Holds::True;
  return out;
}

Check grid_min(const std::function<double(cplx)>& value, const HarnessConfig& cfg, std::string detail) {
  double best = kInf;
  cplx arg{};
  for (const double r : cfg.radii) {
    for (int k = 0; k < cfg.samples; ++k) {
      const cplx z = std::polar(r, 2.0 * std::numbers::pi * k / cfg.samples);
      double v = value(z);
      if (std::isnan(v)) v = -kInf;
      if (v < best) {
        best = v;
        arg = z;
      }
    }
  }
  if (!detail.empty()) detail += " ";
  detail += "min at z = " + std::to_string(arg.real()) + "+" + std::to_string(arg.imag()) + "i";
  return classify_margin(best, cfg.tolerance, std::move(detail));
}

Check resolved(const TaylorSeries& f, const HarnessConfig& cfg, std::string_view name) {
  const double r = *std::max_element(cfg.radii.begin(), cfg.radii.end());
  const double t = tail_estimate(f, r);
  const bool ok = t < cfg.tolerance;
  return {ok ? Holds::True : Holds::False, cfg.tolerance - t,
          std::string(name) + " tail " + std::to_string(t) + (ok ? "" : " exceeds tolerance")};
}

SchwarzSeries sample_schwarz(Sampler& s, double s_lo, double s_hi, int order, int n, bool real) {
  if (n < 1 || n > 3) throw Error(ErrorKind::InvalidArgument, "sample_schwarz needs 1 <= n <= 3");
  const double scale = s.uniform(s_lo, s_hi);
  std::vector<cplx> zeros(static_cast<std::size_t>(n - 1), 0.0);
  const int m = s.integer(0, 3 - (n - 1));
  for (int k = 0; k < m; ++k) {
    zeros.push_back(real ? cplx(0.8 * (2.0 * s.uniform() - 1.0), 0.0) : s.in_disk(0.8));
  }
  const cplx rotation = real ? cplx(s.uniform() < 0.5 ? 1.0 : -1.0) : s.on_circle();
  return SchwarzSeries::blaschke(scale, zeros, order, rotation);
}

// ---------------------------------------------------------------- running

TheoremCase find_case(std::string_view id) {
  constexpr std::string_view prefix = "converse-of:";
  if (id.substr(0, prefix.size()) == prefix) {
    if (auto c = converse_of(id.substr(prefix.size()))) return *c;
    throw Error(ErrorKind::UnknownCase, "no converse defined for '" + std::string(id.substr(prefix.size())) + "'");
  }
  for (const auto& c : registry()) {
    if (c.id == id) return c;
  }
  throw Error(ErrorKind::UnknownCase, "unknown case '" + std::string(id) + "'");
}

std::vector<std::string> registry_ids() {
  std::vector<std::string> out;
  for (const auto& c : registry()) out.push_back(c.id);
  return out;
}

TheoremCase planted_defect(const TheoremCase& c) {
  TheoremCase d = c;
  d.id = "planted-defect:" + c.id;
  d.notes = "conclusion margin sign flipped";
  d.generate = [g = c.generate](Sampler& s, const HarnessConfig& cfg) {
    Instance inst = g(s, cfg);
    inst.conclusion = [concl = inst.conclusion, tol = cfg.tolerance]() {
      const Check k = concl();
      return classify_margin(-k.margin, tol, "flipped: " + k.detail);
    };
    return inst;
  };
  return d;
}

TrialReport run_case(const TheoremCase& c, int trials, std::uint64_t seed, const HarnessConfig& cfg) {
  if (trials < 0) throw Error(ErrorKind::InvalidArgument, "trials must be non-negative");
  if (cfg.retries < 1 || static_cast<std::uint64_t>(cfg.retries) > kStreamsPerTrial) {
    throw Error(ErrorKind::InvalidArgument, "retries must lie in [1, 64]");
  }
  const auto t0 = std::chrono::steady_clock::now();
  TrialReport r = start_report(c, seed, cfg, "verify");
  const int n = c.spot ? std::min(trials, 1) : trials;
  for (int t = 0; t < n; ++t) {
    bool admitted = false;
    for (int a = 0; a < cfg.retries && !admitted; ++a) {
      const std::uint64_t stream = static_cast<std::uint64_t>(t) * kStreamsPerTrial + static_cast<std::uint64_t>(a);
      Sampler s(seed, stream);
      const Evaluation e = evaluate(c, s, cfg);
      ++r.attempts;
      if (!e.admitted) continue;
      ++r.accepted;
      admitted = true;
      tally(r, e, stream);
    }
    if (!admitted) {
      ++r.trials;
      ++r.inconclusive;
      ++r.skipped;
    }
  }
  finish_report(r, t0);
  return r;
}

TrialReport run_case(std::string_view id, int trials, std::uint64_t seed, const HarnessConfig& cfg) {
  return run_case(find_case(id), trials, seed, cfg);
}

TrialReport falsify(const TheoremCase& c, int budget, std::uint64_t seed, const HarnessConfig& cfg) {
  if (budget < 1) throw Error(ErrorKind::InvalidArgument, "budget must be positive");
  const auto t0 = std::chrono::steady_clock::now();
  TrialReport r = start_report(c, seed, cfg, "falsify");
  const int random_budget = c.spot ? 1 : std::max(1, budget - budget / 4);

  std::vector<double> best_tape;
  std::uint64_t best_stream = 0;
  double best = kInf;
  int used = 0;
  for (; used < random_budget; ++used) {
    Sampler s(seed, static_cast<std::uint64_t>(used));
    const Evaluation e = evaluate(c, s, cfg);
    ++r.attempts;
    if (!e.admitted) continue;
    ++r.accepted;
    tally(r, e, static_cast<std::uint64_t>(used));
    if (e.conclusion.margin < best) {
      best = e.conclusion.margin;
      best_tape = e.tape;
      best_stream = static_cast<std::uint64_t>(used);
    }
  }

  // Coordinatewise descent on the recorded uniforms of the worst instance.
  double step = 0.1;
  while (!best_tape.empty() && !c.spot && used < budget && step > 1e-4 && std::isfinite(best)) {
    bool improved = false;
    for (std::size_t j = 0; j < best_tape.size() && used < budget; ++j) {
      for (const double dir : {1.0, -1.0}) {
        if (used >= budget) break;
        std::vector<double> tape = best_tape;
        tape[j] = std::clamp(tape[j] + dir * step, 0.0, 1.0 - 0x1.0p-53);
        Sampler s(std::move(tape), seed, best_stream);
        const Evaluation e = evaluate(c, s, cfg);
        ++used;
        ++r.attempts;
        if (!e.admitted) continue;
        ++r.accepted;
        tally(r, e, best_stream);
        if (e.conclusion.margin < best) {
          best = e.conclusion.margin;
          best_tape = e.tape;
          improved = true;
          break;
        }
      }
    }
    if (!improved) step /= 2.0;
  }
  finish_report(r, t0);
  return r;
}

// ---------------------------------------------------------------- persistence

nlohmann::json report_to_json(const TrialReport& r) {
  return {{"case", r.case_id},
          {"mode", r.mode},
          {"seed", r.seed},
          {"trials", r.trials},
          {"passes", r.passes},
          {"inconclusive", r.inconclusive},
          {"failures", r.failures},
          {"skipped", r.skipped},
          {"attempts", r.attempts},
          {"accepted", r.accepted},
          {"generator_starved", r.generator_starved},
          {"worst_margin", finite_or_null(r.worst_margin)},
          {"witness", r.witness},
          {"wall_time", r.wall_time},
          {"config",
           {{"N", r.config.order},
            {"M", r.config.samples},
            {"tolerance", r.config.tolerance},
            {"r_p", r.config.radii},
            {"retries", r.config.retries}}},
          {"notes", r.notes}};
}

TrialReport report_from_json(const nlohmann::json& j) {
  TrialReport r;
  r.case_id = j.at("case").get<std::string>();
  r.mode = j.at("mode").get<std::string>();
  r.seed = j.at("seed").get<std::uint64_t>();
  r.trials = j.at("trials").get<int>();
  r.passes = j.at("passes").get<int>();
  r.inconclusive = j.at("inconclusive").get<int>();
  r.failures = j.at("failures").get<int>();
  r.skipped = j.at("skipped").get<int>();
  r.attempts = j.at("attempts").get<long>();
  r.accepted = j.at("accepted").get<long>();
  r.generator_starved = j.at("generator_starved").get<bool>();
  r.worst_margin = number_or_inf(j.at("worst_margin"));
  r.witness = j.at("witness");
  r.wall_time = j.at("wall_time").get<double>();
  const auto& c = j.at("config");
  r.config.order = c.at("N").get<int>();
  r.config.samples = c.at("M").get<int>();
  r.config.tolerance = c.at("tolerance").get<double>();
  r.config.radii = c.at("r_p").get<std::vector<double>>();
  r.config.retries = c.at("retries").get<int>();
  r.notes = j.at("notes").get<std::string>();
  return r;
}

void persist_report(const TrialReport& r, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::IoFailure, "cannot write " + path.string());
  out << report_to_json(r).dump(2) << '\n';
  if (!out) throw Error(ErrorKind::IoFailure, "write failed for " + path.string());
}

TrialReport load_report(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::IoFailure, "cannot read " + path.string());
  try {
    return report_from_json(nlohmann::json::parse(in));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::IoFailure, std::string("malformed report: ") + e.what());
  }
}

}  // namespace subordlab
