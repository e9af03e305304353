// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>

#include "subordlab/briot_bouquet.hpp"
#include "subordlab/cli.hpp"
#include "subordlab/harness.hpp"
#include "subordlab/integral_ops.hpp"
#include "subordlab/subordination.hpp"
#include "test_support.hpp"

using namespace subordlab;
using subordlab::testing::max_coeff_diff;
using subordlab::testing::SeriesGen;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

int failed = 0;

void report(int id, const char* title, bool ok, const std::string& detail) {
  std::printf("%s %d %s: %s\n", ok ? "PASS" : "FAIL", id, title, detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failed;
}

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", x);
  return buf;
}

std::string secs(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f s", x);
  return buf;
}

TaylorSeries caratheodory(std::uint64_t seed, double s, int n) {
  return make_subordinate(DominantSpec::half_plane(), schwarz_sample(seed, static_cast<int>(seed % 4), s, n));
}

// ------------------------------------------------------------ 1

void series_kernel() {
  constexpr int N = 32, trials = 200;
  const auto t0 = Clock::now();
  SeriesGen gen(2024);
  struct Law {
    const char* name;
    double tol;
    std::function<double()> residual;
  };
  const std::vector<Law> laws = {
      {"commutativity", 1e-12, [&] {
         const auto f = gen.series(N, 1.0), g = gen.series(N, 1.0);
         return max_coeff_diff(f * g, g * f);
       }},
      {"associativity", 1e-12, [&] {
         const auto f = gen.series(N, 0.5), g = gen.series(N, 0.5), h = gen.series(N, 0.5);
         return max_coeff_diff((f * g) * h, f * (g * h));
       }},
      {"distributivity", 1e-12, [&] {
         const auto f = gen.series(N, 1.0), g = gen.series(N, 1.0), h = gen.series(N, 1.0);
         return max_coeff_diff(f * (g + h), f * g + f * h);
       }},
      {"additive inverse", 1e-12, [&] {
         const auto f = gen.series(N, 1.0), g = gen.series(N, 1.0);
         return max_coeff_diff((f + g) - g, f);
       }},
      {"division", 1e-10, [&] {
         const auto f = gen.series(N, 1.0), g = gen.unit_series(N, 0.3);
         return max_coeff_diff(divide(f * g, g), f);
       }},
      {"log of exp", 1e-10, [&] {
         auto f = gen.series(N, 0.5);
         f = add_constant(f, -f[0]);
         return max_coeff_diff(logarithm(exponential(f)), f);
       }},
      {"exp of log", 1e-10, [&] {
         const auto u = gen.unit_series(N, 0.3);
         return max_coeff_diff(exponential(logarithm(u)), u);
       }},
      {"reciprocal powers", 1e-10, [&] {
         const auto u = gen.unit_series(N, 0.3);
         const double s = gen.uniform(-2.5, 2.5);
         return max_coeff_diff(power_real(u, s) * power_real(u, -s), TaylorSeries::constant(1.0, N));
       }},
      {"integrate/differentiate", 1e-12, [&] {
         auto f = gen.series(N, 1.0);
         f = add_constant(f, -f[0]);
         return max_coeff_diff(z_derivative(integrate_log(f)), f);
       }},
      {"composition", 1e-12, [&] {
         // Horner composition against the sum of powers of omega.
         const auto f = gen.series(N, 1.0);
         const auto w = SchwarzSeries::blaschke(gen.uniform(0.2, 0.95), std::vector<cplx>{gen.in_disk(0.8)}, N,
                                                std::polar(1.0, gen.uniform(0.0, 6.283)));
         TaylorSeries sum = TaylorSeries::constant(f[0], N), power = TaylorSeries::constant(1.0, N);
         for (int k = 1; k <= N; ++k) {
           power = power * w.series();
           sum = sum + scale(power, f[k]);
         }
         return max_coeff_diff(compose(f, w), sum);
       }},
      {"json round trip", 0.0, [&] {
         const auto f = gen.series(N, 1.0);
         return max_coeff_diff(nlohmann::json(f).get<TaylorSeries>(), f);
       }},
  };
  bool ok = true;
  std::string worst;
  for (const auto& law : laws) {
    double w = 0.0;
    for (int t = 0; t < trials; ++t) w = std::max(w, law.residual());
    if (w > law.tol) {
      ok = false;
      worst += std::string(" ") + law.name + "=" + sci(w);
    }
  }
  const double dt = seconds_since(t0);
  ok = ok && dt < 10.0;
  report(1, "series kernel", ok,
         std::to_string(laws.size()) + " laws x " + std::to_string(trials) + " trials at N=32, " + secs(dt) +
             " (limit 10 s)" + (worst.empty() ? "" : "; over tolerance:" + worst));
}

// ------------------------------------------------------------ 2

void ode_consistency() {
  constexpr int N = 64;
  const auto t0 = Clock::now();
  SeriesGen gen(11);
  const std::vector<DominantSpec> targets = {DominantSpec::exp(), DominantSpec::janowski(0.5, -0.5),
                                             DominantSpec::sqrt_shift(), DominantSpec::half_plane()};
  double plug = 0.0;
  for (int t = 0; t < 200; ++t) {
    const BBParams params(gen.uniform(0.0, 2.0), gen.uniform(0.2, 2.0));
    const TaylorSeries Q = caratheodory(5000 + t, gen.uniform(0.2, 0.7), N);
    const TaylorSeries Psi =
        make_subordinate(targets[t % targets.size()], schwarz_sample(9000 + t, t % 4, gen.uniform(0.2, 0.7), N));
    const TaylorSeries p = bb_solve_from_target(Psi, Q, params);
    plug = std::max(plug, max_coeff_diff(bb_operator(p, Q, params), Psi, N - 2));
  }
  double closed = 0.0;
  for (int t = 0; t < 100; ++t) {
    const BBParams params(gen.uniform(0.0, 2.0), gen.uniform(0.2, 2.0));
    const TaylorSeries Q = caratheodory(7000 + t, gen.uniform(0.2, 0.8), N);
    closed = std::max(closed, max_coeff_diff(odl_closed_form(Q, params),
                                             bb_solve_from_target(TaylorSeries::constant(1.0, N), Q, params)));
  }
  const double dt = seconds_since(t0);
  report(2, "ODE consistency", plug < 1e-9 && closed < 1e-9 && dt < 30.0,
         "plug-back residual " + sci(plug) + " over 200 instances, closed form vs recursion " + sci(closed) +
             " over 100, " + secs(dt) + " (limit 30 s)");
}

// ------------------------------------------------------------ 3

void subordination_oracle() {
  const std::vector<DominantSpec> all = {
      DominantSpec::half_plane(),         DominantSpec::sector(0.6),          DominantSpec::exp(),
      DominantSpec::sqrt_shift(),         DominantSpec::janowski(0.5, -0.5), DominantSpec::janowski(1.0, -1.0),
      DominantSpec::sigmoid(),            DominantSpec::exp_linear(),         DominantSpec::crescent(),
      DominantSpec::slit_a(0.4),          DominantSpec::open_door_a(1, 0, 1), DominantSpec::open_door_a(2, 1.0, 2.0),
      DominantSpec::open_door_b(1, 0, 1), DominantSpec::open_door_b(2, 2.0, 3.0),
  };
  SeriesGen gen(99);
  int not_true = 0;
  for (int i = 0; i < 500; ++i) {
    const auto& h = all[static_cast<std::size_t>(i) % all.size()];
    const auto omega = schwarz_sample(1000 + i, i % 4, gen.uniform(0.2, 0.85), 128);
    if (is_subordinate(make_subordinate(h, omega), h).holds != Holds::True) ++not_true;
  }
  std::vector<DominantSpec> exact;
  for (const auto& h : all) {
    if (h.has_exact_membership()) exact.push_back(h);
  }
  SubordinationConfig wind;
  wind.path = MembershipPath::Winding;
  int hard = 0, soft = 0;
  for (int i = 0; i < 500; ++i) {
    const auto& h = exact[static_cast<std::size_t>(i) % exact.size()];
    const double c = i % 2 == 0 ? gen.uniform(0.3, 0.99) : gen.uniform(1.02, 1.5);
    const auto p = [&](cplx z) { return evaluate_dominant(h, c * z); };
    const auto a = is_subordinate(p, h);
    const auto b = is_subordinate(p, h, wind);
    if (a.holds == b.holds) continue;
    const bool small = std::abs(a.margin) < 1e-4 || std::abs(b.margin) < 1e-4;
    ++(small ? soft : hard);
  }
  report(3, "subordination oracle", not_true == 0 && hard == 0,
         "constructed pairs not verified true: " + std::to_string(not_true) + "/500; path disagreements " +
             std::to_string(hard) + " outside and " + std::to_string(soft) + " inside |margin| < 1e-4");
}

// ------------------------------------------------------------ 4

void theorem_suite() {
  const auto t0 = Clock::now();
  const auto path = std::filesystem::temp_directory_path() / "subordlab_acceptance_verify.json";
  std::ostringstream out, err;
  const int code = dispatch({"verify", "--case", "all", "--trials", "100", "--seed", "7", "--order", "64", "--samples",
                             "1024", "--out", path.string()},
                            out, err);
  const double dt = seconds_since(t0);
  std::ifstream in(path);
  const nlohmann::json reports = nlohmann::json::parse(in);
  int cases = 0, theorem_cases = 0, failures = 0;
  double worst_rate = 0.0;
  std::string worst_case, starved;
  for (const auto& j : reports) {
    const TrialReport r = report_from_json(j);
    ++cases;
    if (r.case_id.rfind("spot-", 0) != 0) ++theorem_cases;
    failures += r.failures;
    const double rate = r.trials > 0 ? static_cast<double>(r.inconclusive) / r.trials : 1.0;
    if (rate >= worst_rate) {
      worst_rate = rate;
      worst_case = r.case_id;
    }
    if (r.generator_starved) starved += " " + r.case_id;
  }
  std::filesystem::remove(path);
  const bool ok = code == 0 && failures == 0 && theorem_cases >= 28 && worst_rate < 0.10 && dt < 300.0;
  char rate[32];
  std::snprintf(rate, sizeof rate, "%.0f%%", 100.0 * worst_rate);
  report(4, "theorem suite", ok,
         std::to_string(theorem_cases) + " theorem cases + " + std::to_string(cases - theorem_cases) +
             " spot cases, failures " + std::to_string(failures) + ", worst inconclusive rate " + rate + " (" +
             worst_case + "), " + secs(dt) + " (limit 300 s), exit " + std::to_string(code) +
             (starved.empty() ? "" : ", starved:" + starved));
}

// ------------------------------------------------------------ 5

void spot_identities() {
  bool ok = true;
  std::string detail;
  for (const char* id : {"spot-k-equals-5", "spot-lemma1-radius", "spot-bernardi-fixed-point", "spot-tuneski",
                         "spot-phi-constants"}) {
    const TrialReport r = run_case(id, 1, 0);
    const bool pass = r.passes == 1 && r.failures == 0;
    ok = ok && pass;
    detail += std::string(id) + (pass ? " ok; " : " FAILED; ");
  }
  // f = z/(1 - a z): f f''/f'^2 = 2 a z.
  const int N = 64;
  const double a = 0.9;
  std::vector<cplx> fc(N + 1, 0.0);
  for (int k = 1; k <= N; ++k) fc[k] = std::pow(a, k - 1);
  const TaylorSeries f(std::move(fc));
  const TaylorSeries ratio = add_constant(scale(theta_expression(f, BBParams(0.0, 1.0)), -1.0), 1.0);
  std::vector<cplx> want(static_cast<std::size_t>(ratio.order()) + 1, 0.0);
  want[1] = 2.0 * a;
  const double err = max_coeff_diff(ratio, TaylorSeries(std::move(want)));
  double sup = 0.0;
  for (const cplx w : boundary_profile(ratio, 1.0, 4096)) sup = std::max(sup, std::abs(w));
  ok = ok && err < 1e-10 && std::abs(sup - 1.8) < 1e-9;
  detail += "f f''/f'^2 - 1.8z coefficient error " + sci(err) + ", sup " + std::to_string(sup);
  report(5, "spot identities", ok, detail);
}

// ------------------------------------------------------------ 6

void falsifier() {
  const auto t0 = Clock::now();
  const TrialReport conv = falsify(find_case("converse-of:cor-ez"), 10000, 7);
  const TrialReport planted = falsify(planted_defect(find_case("cor-ez")), 200, 7);
  const TrialReport direct = falsify(find_case("cor-ez"), 10000, 7);
  const bool ok = conv.failures > 0 && planted.failures > 0 && direct.failures == 0;
  report(6, "falsifier self-test", ok,
         "converse-of:cor-ez failures " + std::to_string(conv.failures) + " (worst " + sci(conv.worst_margin) +
             "), planted defect failures " + std::to_string(planted.failures) + ", cor-ez failures " +
             std::to_string(direct.failures) + " of " + std::to_string(direct.trials) + ", " +
             secs(seconds_since(t0)));
}

}  // namespace

int main() {
  series_kernel();
  ode_consistency();
  subordination_oracle();
  theorem_suite();
  spot_identities();
  falsifier();
  std::printf("%s: %d of 6 criteria failed\n", failed == 0 ? "ACCEPTED" : "REJECTED", failed);
  return failed == 0 ? 0 : 1;
}
