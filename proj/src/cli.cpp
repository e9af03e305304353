#include "subordlab/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "subordlab/briot_bouquet.hpp"
#include "subordlab/errors.hpp"
#include "subordlab/integral_ops.hpp"

namespace subordlab {

namespace {

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::IoFailure, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

TaylorSeries series_from_json(const nlohmann::json& j) {
  if (j.is_object()) return j.get<TaylorSeries>();
  if (!j.is_array() || j.empty()) throw Error(ErrorKind::InvalidArgument, "series must be an object or a non-empty array");
  std::vector<cplx> c;
  for (const auto& e : j) {
    if (e.is_number()) {
      c.emplace_back(e.get<double>(), 0.0);
    } else if (e.is_array() && e.size() == 2) {
      c.emplace_back(e[0].get<double>(), e[1].get<double>());
    } else {
      throw Error(ErrorKind::InvalidArgument, "series entries must be numbers or [re, im] pairs");
    }
  }
  return TaylorSeries(std::move(c));
}

struct Options {
  CliConfig cfg;
  std::string dominant = "half-plane";
  DominantParams dparams;
  std::string p, Q = "[1]", psi = "[1]", f = "[0, 1]", g = "[0, 1]", phi = "[1]", varphi = "[1]";
  std::string alpha = "0", beta = "1", lambda = "1", eta = "1", sigma = "0";
  std::string path = "auto";
  std::string id;
  double M = 1.0;
  double D = 0.0, E = 0.0;
  std::string which = "bernardi";
  std::string case_id;
  int trials = 100;
  int budget = 1000;
  bool converse = false;
  bool closed_form = false;
  double r = 0.999;
  std::string format = "csv";
};

void add_common(CLI::App* app, Options& o) {
  app->add_option("--order", o.cfg.order, "truncation order N (8..512)");
  app->add_option("--samples", o.cfg.samples, "boundary samples M (64..16384)");
  app->add_option("--radii", o.cfg.radii, "test radii, comma separated")->delimiter(',');
  app->add_option("--tolerance", o.cfg.tolerance, "inconclusive band (1e-8..1e-2)");
  app->add_option("--seed", o.cfg.seed, "seed; SUBORDLAB_SEED overrides");
  app->add_option("--out", o.cfg.out, "output file");
  app->add_flag("--verbose,-v", o.cfg.verbosity, "more output");
}

void add_dominant(CLI::App* app, Options& o) {
  std::string names;
  for (const auto n : dominant_names()) names += (names.empty() ? "" : ", ") + std::string(n);
  app->add_option("--dominant", o.dominant, "dominant h: " + names);
  app->add_option("--gamma", o.dparams.gamma, "sector order");
  app->add_option("--A", o.dparams.A, "Janowski A");
  app->add_option("--B", o.dparams.B, "Janowski B");
  app->add_option("--a", o.dparams.a, "slit parameter");
  app->add_option("--n", o.dparams.n, "open-door n");
}

void add_params(CLI::App* app, Options& o) {
  app->add_option("--alpha", o.alpha, "alpha, \"x\" or \"x,y\"");
  app->add_option("--beta", o.beta, "beta, \"x\" or \"x,y\"");
}

double real_arg(const std::string& text, const char* name) {
  const cplx c = parse_complex_arg(text);
  if (c.imag() != 0.0) throw Error(ErrorKind::InvalidArgument, std::string(name) + " must be real here");
  return c.real();
}

DominantSpec dominant_of(Options& o) {
  DominantParams p = o.dparams;
  p.alpha = real_arg(o.alpha, "--alpha");
  p.beta = real_arg(o.beta, "--beta");
  return DominantSpec::from_name(o.dominant, p);
}

BBParams bb_params(const Options& o) {
  return BBParams(parse_complex_arg(o.alpha), parse_complex_arg(o.beta), o.dparams.n);
}

/// Writes to --out when given, else to stdout.
void emit(const Options& o, std::ostream& out, const std::string& text) {
  if (o.cfg.out.empty()) {
    out << text;
  } else {
    write_text_file(o.cfg.out, text);
  }
}

void emit_side(const Options& o, const nlohmann::json& j) {
  if (!o.cfg.out.empty()) write_text_file(o.cfg.out, j.dump(2) + "\n");
}

MembershipPath path_of(const std::string& s) {
  if (s == "auto") return MembershipPath::Auto;
  if (s == "predicate") return MembershipPath::Predicate;
  if (s == "winding") return MembershipPath::Winding;
  throw Error(ErrorKind::InvalidArgument, "--path must be auto, predicate or winding");
}

int cmd_subord_check(Options& o, std::ostream& out) {
  if (o.p.empty()) throw Error(ErrorKind::InvalidArgument, "--p is required");
  const TaylorSeries p = parse_series_arg(o.p, o.cfg.order);
  SubordinationConfig sc = o.cfg.subordination();
  sc.path = path_of(o.path);
  const SubordinationVerdict v = is_subordinate(p, dominant_of(o), sc);
  out << "holds=" << to_string(v.holds) << " margin=" << fmt(v.margin) << " witness=" << fmt(v.witness.real())
      << (v.witness.imag() < 0 ? "" : "+") << fmt(v.witness.imag()) << "i\n";
  emit_side(o, verdict_to_json(v));
  return v.holds == Holds::True ? kExitOk : kExitFailure;
}

int cmd_bb_apply(Options& o, std::ostream& out) {
  if (o.p.empty()) throw Error(ErrorKind::InvalidArgument, "--p is required");
  const int N = o.cfg.order;
  const TaylorSeries psi = bb_operator(parse_series_arg(o.p, N), parse_series_arg(o.Q, N), bb_params(o));
  emit(o, out, nlohmann::json(psi).dump(2) + "\n");
  return kExitOk;
}

int cmd_bb_solve(Options& o, std::ostream& out) {
  const int N = o.cfg.order;
  const TaylorSeries Q = parse_series_arg(o.Q, N);
  const TaylorSeries p =
      o.closed_form ? odl_closed_form(Q, bb_params(o)) : bb_solve_from_target(parse_series_arg(o.psi, N), Q, bb_params(o));
  emit(o, out, nlohmann::json(p).dump(2) + "\n");
  return kExitOk;
}

int cmd_bb_check(Options& o, std::ostream& out) {
  if (o.id.empty()) throw Error(ErrorKind::InvalidArgument, "--id is required");
  const int N = o.cfg.order;
  HypothesisResult r;
  if (o.id == "thm21") {
    r = check_thm21(dominant_of(o), parse_series_arg(o.Q, N), bb_params(o));
  } else {
    InequalityInputs in;
    in.h = dominant_of(o);
    in.Q = parse_series_arg(o.Q, N);
    in.params = bb_params(o);
    in.M = o.M;
    in.A = o.dparams.A;
    in.B = o.dparams.B;
    in.D = o.D;
    in.E = o.E;
    r = check_inequalities(o.id, in);
  }
  out << "holds=" << (r.holds ? "true" : "false") << " margin=" << fmt(r.margin);
  if (!r.detail.empty()) out << " detail=\"" << r.detail << "\"";
  out << "\n";
  emit_side(o, hypothesis_to_json(r));
  return r.holds ? kExitOk : kExitFailure;
}

int cmd_iop_apply(Options& o, std::ostream& out) {
  const int N = o.cfg.order;
  OperatorParams op;
  op.alpha = real_arg(o.alpha, "--alpha");
  op.beta = real_arg(o.beta, "--beta");
  op.lambda = parse_complex_arg(o.lambda);
  op.delta = 1.0 - op.lambda;
  op.eta = parse_complex_arg(o.eta);
  op.gamma = 1.0 - op.eta;
  op.sigma = parse_complex_arg(o.sigma);
  op.validate();
  const ValuedSeries f = ValuedSeries::from_taylor(parse_series_arg(o.f, N + 1));
  const ValuedSeries g = ValuedSeries::from_taylor(parse_series_arg(o.g, N + 1));
  const TaylorSeries phi = parse_series_arg(o.phi, N), varphi = parse_series_arg(o.varphi, N);
  ValuedSeries F(1.0, TaylorSeries::constant(1.0, N));
  if (o.which == "bernardi") {
    F = bernardi_general(f, g, op);
  } else if (o.which == "bernardi-power") {
    F = bernardi_power(f, op);
  } else if (o.which == "existence") {
    F = existence_operator(g, varphi, phi, op);
  } else if (o.which == "two-function") {
    F = two_function_operator(f, g, phi, op);
  } else {
    throw Error(ErrorKind::InvalidArgument, "--which must be bernardi, bernardi-power, existence or two-function");
  }
  emit(o, out, valued_to_json(F).dump(2) + "\n");
  return kExitOk;
}

std::string summary_line(const TrialReport& r, int verbosity) {
  std::string s = r.case_id + " trials=" + std::to_string(r.trials) + " passes=" + std::to_string(r.passes) +
                  " inconclusive=" + std::to_string(r.inconclusive) + " failures=" + std::to_string(r.failures) +
                  " worst_margin=" + fmt(r.worst_margin);
  if (r.generator_starved) s += " generator_starved";
  if (verbosity > 0) s += " attempts=" + std::to_string(r.attempts) + " wall_time=" + fmt(r.wall_time);
  return s + "\n";
}

int cmd_verify(Options& o, std::ostream& out) {
  if (o.case_id.empty()) throw Error(ErrorKind::InvalidArgument, "--case is required");
  if (o.trials < 1) throw Error(ErrorKind::InvalidArgument, "--trials must be positive");
  std::vector<TheoremCase> cases;
  if (o.case_id == "all") {
    if (o.converse) throw Error(ErrorKind::InvalidArgument, "--converse needs a single case");
    cases = registry();
  } else {
    cases.push_back(find_case(o.converse ? "converse-of:" + o.case_id : o.case_id));
  }
  const HarnessConfig hc = o.cfg.harness();
  nlohmann::json all = nlohmann::json::array();
  int failures = 0;
  for (const auto& c : cases) {
    const TrialReport r = run_case(c, o.trials, o.cfg.seed, hc);
    failures += r.failures;
    out << summary_line(r, o.cfg.verbosity) << std::flush;
    all.push_back(report_to_json(r));
  }
  out << "total failures=" << failures << "\n";
  emit_side(o, all.size() == 1 ? all[0] : all);
  return failures == 0 ? kExitOk : kExitFailure;
}

int cmd_falsify(Options& o, std::ostream& out) {
  if (o.case_id.empty()) throw Error(ErrorKind::InvalidArgument, "--case is required");
  if (o.budget < 1) throw Error(ErrorKind::InvalidArgument, "--budget must be positive");
  const TheoremCase c = find_case(o.converse ? "converse-of:" + o.case_id : o.case_id);
  const TrialReport r = falsify(c, o.budget, o.cfg.seed, o.cfg.harness());
  out << summary_line(r, o.cfg.verbosity);
  emit_side(o, report_to_json(r));
  return r.failures == 0 ? kExitOk : kExitFailure;
}

int cmd_curve(Options& o, std::ostream& out) {
  if (!(o.r > 0.0 && o.r < 1.0)) throw Error(ErrorKind::InvalidArgument, "--r must lie in (0, 1)");
  const BoundaryCurve c = boundary_curve(dominant_of(o), o.r, o.cfg.samples);
  if (o.format == "csv") {
    std::ostringstream ss;
    emit_curve_csv(c, ss);
    emit(o, out, ss.str());
  } else if (o.format == "json") {
    emit(o, out, nlohmann::json(c).dump(2) + "\n");
  } else {
    throw Error(ErrorKind::InvalidArgument, "--format must be csv or json");
  }
  return kExitOk;
}

int cmd_cases(std::ostream& out) {
  for (const auto& c : registry()) out << c.id << (c.spot ? " (spot)" : "") << "  " << c.notes << "\n";
  return kExitOk;
}

int exit_code_for(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::IoFailure: return kExitIo;
    case ErrorKind::InvalidArgument:
    case ErrorKind::UnknownCase: return kExitUsage;
    default: return kExitFailure;
  }
}

}  // namespace

void CliConfig::validate() const {
  if (order < 8 || order > 512) throw Error(ErrorKind::InvalidArgument, "--order must lie in [8, 512]");
  if (samples < 64 || samples > 16384) throw Error(ErrorKind::InvalidArgument, "--samples must lie in [64, 16384]");
  if (!(tolerance >= 1e-8 && tolerance <= 1e-2)) throw Error(ErrorKind::InvalidArgument, "--tolerance must lie in [1e-8, 1e-2]");
  if (radii.empty()) throw Error(ErrorKind::InvalidArgument, "--radii must not be empty");
  for (const double r : radii) {
    if (!(r > 0.0 && r < 1.0)) throw Error(ErrorKind::InvalidArgument, "--radii must lie in (0, 1)");
  }
}

SubordinationConfig CliConfig::subordination() const {
  SubordinationConfig s;
  s.radii = radii;
  s.samples = samples;
  s.tolerance = tolerance;
  return s;
}

HarnessConfig CliConfig::harness() const {
  HarnessConfig h;
  h.order = order;
  h.samples = samples;
  h.tolerance = tolerance;
  h.radii = radii;
  return h;
}

TaylorSeries parse_series_arg(const std::string& spec, int order) {
  if (spec.empty()) throw Error(ErrorKind::InvalidArgument, "empty series argument");
  constexpr std::string_view dom = "dominant:";
  if (spec.rfind(dom, 0) == 0) {
    const std::string rest = spec.substr(dom.size());
    const auto colon = rest.find(':');
    const std::string name = rest.substr(0, colon);
    double s = 0.9;
    if (colon != std::string::npos) {
      try {
        s = std::stod(rest.substr(colon + 1));
      } catch (const std::exception&) {
        throw Error(ErrorKind::InvalidArgument, "bad scale in '" + spec + "'");
      }
    }
    const DominantSpec h = DominantSpec::from_name(name, DominantParams{});
    return make_subordinate(h, SchwarzSeries::scaled_identity(s, order));
  }
  const std::string text = spec[0] == '@' ? read_text_file(spec.substr(1)) : spec;
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(spec[0] == '@' ? ErrorKind::IoFailure : ErrorKind::InvalidArgument,
                std::string("malformed series JSON: ") + e.what());
  }
  try {
    return series_from_json(j).with_order(order);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::InvalidArgument, std::string("malformed series JSON: ") + e.what());
  }
}

cplx parse_complex_arg(const std::string& text) {
  try {
    std::size_t used = 0;
    const auto comma = text.find(',');
    const double re = std::stod(text.substr(0, comma), &used);
    if (used != (comma == std::string::npos ? text.size() : comma)) throw std::invalid_argument(text);
    if (comma == std::string::npos) return {re, 0.0};
    const std::string tail = text.substr(comma + 1);
    const double im = std::stod(tail, &used);
    if (used != tail.size()) throw std::invalid_argument(text);
    return {re, im};
  } catch (const std::logic_error&) {
    throw Error(ErrorKind::InvalidArgument, "expected \"x\" or \"x,y\", got '" + text + "'");
  }
}

void emit_curve_csv(const BoundaryCurve& curve, std::ostream& os) {
  os << "theta,re,im\n";
  char buf[96];
  for (std::size_t k = 0; k < curve.points.size(); ++k) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g\n", curve.theta[k], curve.points[k].real(),
                  curve.points[k].imag());
    os << buf;
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw Error(ErrorKind::IoFailure, "cannot write " + path);
  f << text;
  if (!f) throw Error(ErrorKind::IoFailure, "write failed for " + path);
}

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Briot-Bouquet differential subordination toolkit", "subordlab-cli"};
  app.require_subcommand(1);

  auto* subord = app.add_subcommand("subord", "subordination checks")->require_subcommand(1);
  auto* subord_check = subord->add_subcommand("check", "is p subordinate to h");
  subord_check->add_option("--p", o.p, "series p")->required();
  subord_check->add_option("--path", o.path, "auto, predicate or winding");
  add_dominant(subord_check, o);
  add_params(subord_check, o);

  auto* bb = app.add_subcommand("bb", "the operator p Q + z p'/(beta p + alpha)")->require_subcommand(1);
  auto* bb_apply = bb->add_subcommand("apply", "evaluate the operator on p");
  bb_apply->add_option("--p", o.p, "series p")->required();
  auto* bb_solve = bb->add_subcommand("solve", "solve for p given the right side");
  bb_solve->add_option("--psi", o.psi, "right side (default 1)");
  bb_solve->add_flag("--closed-form", o.closed_form, "closed form for right side 1");
  auto* bb_check = bb->add_subcommand("check", "hypothesis inequalities");
  bb_check->add_option("--id", o.id, "thm21, eq09, eq6M, eq02, ez, eq17, phi-i .. phi-v")->required();
  bb_check->add_option("--M", o.M, "bound on |Q|");
  bb_check->add_option("--D", o.D, "Janowski D");
  bb_check->add_option("--E", o.E, "Janowski E");
  for (auto* c : {bb_apply, bb_solve, bb_check}) {
    c->add_option("--Q", o.Q, "series Q (default 1)");
    add_params(c, o);
  }
  add_dominant(bb_check, o);
  for (auto* c : {bb_apply, bb_solve}) c->add_option("--n", o.dparams.n, "n");

  auto* iop = app.add_subcommand("iop", "integral operators")->require_subcommand(1);
  auto* iop_apply = iop->add_subcommand("apply", "apply an operator");
  iop_apply->add_option("--which", o.which, "bernardi, bernardi-power, existence, two-function");
  iop_apply->add_option("--f", o.f, "series f = z + ...");
  iop_apply->add_option("--g", o.g, "series g = z + ...");
  iop_apply->add_option("--phi", o.phi, "series phi");
  iop_apply->add_option("--varphi", o.varphi, "series varphi");
  iop_apply->add_option("--lambda", o.lambda, "lambda (delta = 1 - lambda)");
  iop_apply->add_option("--eta", o.eta, "eta (gamma = 1 - eta)");
  iop_apply->add_option("--sigma", o.sigma, "sigma");
  add_params(iop_apply, o);

  auto* verify = app.add_subcommand("verify", "run theorem cases");
  verify->add_option("--case", o.case_id, "case id or all")->required();
  verify->add_option("--trials", o.trials, "trials per case");
  verify->add_flag("--converse", o.converse, "run the converse claim");

  auto* fals = app.add_subcommand("falsify", "counterexample search");
  fals->add_option("--case", o.case_id, "case id")->required();
  fals->add_option("--budget", o.budget, "instances to evaluate");
  fals->add_flag("--converse", o.converse, "search the converse claim");

  auto* curve = app.add_subcommand("curve", "dump h(r e^{i theta})");
  curve->add_option("--r", o.r, "radius");
  curve->add_option("--format", o.format, "csv or json");
  add_dominant(curve, o);
  add_params(curve, o);

  auto* cases = app.add_subcommand("cases", "list registry cases");

  for (auto* c : {subord_check, bb_apply, bb_solve, bb_check, iop_apply, verify, fals, curve}) add_common(c, o);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    if (code == 0) return kExitOk;
    err << app.help();
    return kExitUsage;
  }

  try {
    if (const char* env = std::getenv("SUBORDLAB_SEED"); env != nullptr && *env != '\0') {
      try {
        std::size_t used = 0;
        o.cfg.seed = std::stoull(env, &used);
        if (used != std::string(env).size()) throw std::invalid_argument(env);
      } catch (const std::logic_error&) {
        throw Error(ErrorKind::InvalidArgument, std::string("SUBORDLAB_SEED is not an unsigned integer: ") + env);
      }
    }
    o.cfg.validate();
    if (subord_check->parsed()) return cmd_subord_check(o, out);
    if (bb_apply->parsed()) return cmd_bb_apply(o, out);
    if (bb_solve->parsed()) return cmd_bb_solve(o, out);
    if (bb_check->parsed()) return cmd_bb_check(o, out);
    if (iop_apply->parsed()) return cmd_iop_apply(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
    if (fals->parsed()) return cmd_falsify(o, out);
    if (curve->parsed()) return cmd_curve(o, out);
    if (cases->parsed()) return cmd_cases(out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    if (exit_code_for(e) == kExitUsage) err << "run with --help for usage\n";
    return exit_code_for(e);
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  err << app.help();
  return kExitUsage;
}

int dispatch(int argc, const char* const* argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return dispatch(args, std::cout, std::cerr);
}

}  // namespace subordlab
