#include "subordlab/briot_bouquet.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>

#include "subordlab/errors.hpp"
#include "subordlab/integral_ops.hpp"

namespace subordlab {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::vector<cplx> grid_points(const std::vector<double>& radii, int angles) {
  std::vector<cplx> out;
  out.reserve(radii.size() * static_cast<std::size_t>(angles));
  for (const double r : radii) {
    for (int k = 0; k < angles; ++k) out.push_back(std::polar(r, 2.0 * std::numbers::pi * k / angles));
  }
  return out;
}

std::vector<cplx> circle_points(double r, int angles) { return grid_points({r}, angles); }

void require_real_nonnegative(const BBParams& p) {
  if (!p.real_nonnegative()) throw Error(ErrorKind::InvalidArgument, "need real alpha >= 0 and beta > 0");
}

HypothesisResult verdict(double margin, cplx z, cplx zeta, std::string detail) {
  return {margin > 0.0, margin, z, zeta, std::move(detail)};
}

// min over zeta of Re 1/(beta h(zeta) + alpha)
std::pair<double, cplx> min_reciprocal(const DominantSpec& h, const BBParams& p, const std::vector<cplx>& pts) {
  double best = kInf;
  cplx arg{};
  for (const cplx z : pts) {
    const double v = (1.0 / (p.beta * evaluate_dominant(h, z) + p.alpha)).real();
    if (v < best) {
      best = v;
      arg = z;
    }
  }
  return {best, arg};
}

template <typename F>
std::pair<double, cplx> max_over(const TaylorSeries& Q, const std::vector<cplx>& pts, F&& value) {
  double best = -kInf;
  cplx arg{};
  for (const cplx z : pts) {
    const double v = value(evaluate(Q, z) - 1.0);
    if (v > best) {
      best = v;
      arg = z;
    }
  }
  return {best, arg};
}

const DominantSpec& need_h(const InequalityInputs& in) {
  if (!in.h) throw Error(ErrorKind::InvalidArgument, "this inequality needs a dominant h");
  return *in.h;
}

const TaylorSeries& need_Q(const InequalityInputs& in) {
  if (!in.Q) throw Error(ErrorKind::InvalidArgument, "this inequality needs Q");
  return *in.Q;
}

// (A-B)(1-A)(1+E) - (1+|A|)(beta+alpha+|beta A+alpha B|)((1+D)(1-B) + c (1+E)(1-A))
double janowski_gap(const InequalityInputs& in, double c) {
  const BBParams& p = in.params;
  if (p.alpha.imag() != 0.0 || p.beta.imag() != 0.0 || !((p.alpha + p.beta).real() > 0.0)) {
    throw Error(ErrorKind::InvalidArgument, "need real alpha, beta with alpha + beta > 0");
  }
  if (!(-1.0 <= in.B && in.B < in.A && in.A < 1.0)) throw Error(ErrorKind::InvalidArgument, "need -1 <= B < A < 1");
  if (!(-1.0 < in.E && in.E < in.D && in.D <= 1.0)) throw Error(ErrorKind::InvalidArgument, "need -1 < E < D <= 1");
  const double a = p.alpha.real(), b = p.beta.real();
  const double lhs = (in.A - in.B) * (1.0 - in.A) * (1.0 + in.E);
  const double rhs = (1.0 + std::abs(in.A)) * (b + a + std::abs(b * in.A + a * in.B)) *
                     ((1.0 + in.D) * (1.0 - in.B) + c * (1.0 + in.E) * (1.0 - in.A));
  return lhs - rhs;
}

constexpr std::array<std::string_view, 10> kInequalities{"eq09", "eq6M", "eq02", "ez", "eq17",
                                                         "phi-i", "phi-ii", "phi-iii", "phi-iv", "phi-v"};

}  // namespace

BBParams::BBParams(cplx alpha_, cplx beta_, int n_) : alpha(alpha_), beta(beta_), n(n_) {
  if (!(std::abs(beta) > 1e-12)) throw Error(ErrorKind::InvalidArgument, "beta must be non-zero");
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "n must be positive");
}

bool BBParams::real_nonnegative() const noexcept {
  return alpha.imag() == 0.0 && beta.imag() == 0.0 && alpha.real() >= 0.0 && beta.real() > 0.0;
}

TaylorSeries bb_operator(const TaylorSeries& p, const TaylorSeries& Q, const BBParams& params) {
  const TaylorSeries den = add_constant(scale(p, params.beta), params.alpha);
  if (!(std::abs(den[0]) > 1e-10)) throw Error(ErrorKind::DenominatorVanishes, "beta p(0) + alpha is zero");
  return multiply(p, Q) + divide(z_derivative(p), den);
}

TaylorSeries bb_solve_from_target(const TaylorSeries& Psi, const TaylorSeries& Q, const BBParams& params) {
  const int N = std::min(Psi.order(), Q.order());
  if (!(std::abs(Q[0]) > kConstantTermFloor)) throw Error(ErrorKind::NearZeroConstantTerm, "Q(0) vanishes");
  const cplx a = params.alpha, b = params.beta;
  std::vector<cplx> p(static_cast<std::size_t>(N) + 1), sq(static_cast<std::size_t>(N) + 1);
  p[0] = Psi[0] / Q[0];
  sq[0] = p[0] * p[0];
  if (!(std::abs(b * p[0] + a) > 1e-10)) throw Error(ErrorKind::DenominatorVanishes, "beta p(0) + alpha is zero");
  const cplx shift = Q[0] * (2.0 * b * p[0] + a) - b * Psi[0];
  for (int k = 1; k <= N; ++k) {
    // Residual of p Q (b p + a) + z p' - Psi (b p + a) at order k with p_k = 0.
    cplx sq_k{};
    for (int j = 1; j < k; ++j) sq_k += p[j] * p[k - j];
    cplx s = b * sq_k * Q[0] - a * Psi[k];
    for (int i = 0; i < k; ++i) s += (b * sq[i] + a * p[i]) * Q[k - i] - b * Psi[k - i] * p[i];
    const cplx denom = static_cast<double>(k) + shift;
    if (!(std::abs(denom) > 1e-12)) {
      throw Error(ErrorKind::ResonantOrder, "recursion denominator vanishes at order " + std::to_string(k));
    }
    p[k] = -s / denom;
    sq[k] = sq_k + 2.0 * p[0] * p[k];
  }
  return TaylorSeries(std::move(p));
}

TaylorSeries odl_closed_form(const TaylorSeries& Q, const BBParams& params) {
  require_real_nonnegative(params);
  if (std::abs(Q[0] - 1.0) > kRemovableFloor) throw Error(ErrorKind::InvalidArgument, "Q(0) must be 1");
  const double a = params.alpha.real(), b = params.beta.real();
  const ValuedSeries g = g_from_Q(Q);
  const ValuedSeries zb(b, TaylorSeries::constant(1.0, g.order()));
  const ValuedSeries integrand = multiply(multiply(power_real(g, a - 1.0), ValuedSeries(0.0, derivative_of_normalized(g))), zb);
  const ValuedSeries ratio = divide(multiply(power_real(g, a), zb), integrate_valued(integrand));
  if (std::abs(ratio.exponent()) > 1e-12) throw Error(ErrorKind::InvalidArgument, "z-exponents do not cancel");
  TaylorSeries p = add_constant(scale(ratio.unit(), 1.0 / b), -a / b);
  if (std::abs(p[0] - 1.0) > 1e-9) throw Error(ErrorKind::InvalidArgument, "p(0) differs from 1");
  return p;
}

HypothesisResult check_thm21(const DominantSpec& h, const TaylorSeries& Q, const BBParams& params,
                             const HypothesisGrid& grid) {
  const auto zs = grid_points(grid.z_radii, grid.z_angles);
  const auto zetas = circle_points(grid.zeta_radius, grid.zeta_angles);
  auto [m1, z1] = min_reciprocal(h, params, zs);

  std::vector<cplx> q1(zs.size());
  for (std::size_t i = 0; i < zs.size(); ++i) q1[i] = evaluate(Q, zs[i]) - 1.0;
  double m2 = kInf;
  cplx z2{}, zeta2{};
  for (const cplx zeta : zetas) {
    const cplx hz = evaluate_dominant(h, zeta);
    const cplx ratio = hz / (zeta * dominant_derivative(h, zeta));
    const double base = (1.0 / (params.beta * hz + params.alpha)).real();
    for (std::size_t i = 0; i < zs.size(); ++i) {
      const double v = (q1[i] * ratio).real() + base;
      if (v < m2) {
        m2 = v;
        z2 = zs[i];
        zeta2 = zeta;
      }
    }
  }
  if (m1 <= m2) return verdict(m1, z1, 0.0, "condition (i)");
  return verdict(m2, z2, zeta2, "condition (ii)");
}

std::vector<std::string_view> inequality_ids() { return {kInequalities.begin(), kInequalities.end()}; }

HypothesisResult check_inequalities(std::string_view id, const InequalityInputs& in, const HypothesisGrid& grid) {
  const BBParams& p = in.params;
  if (id == "eq09") {
    const DominantSpec& h = need_h(in);
    const double k = 4.0 * evaluate_dominant(h, 0.0).real() + 1.0;
    const auto [lhs, zeta] = min_reciprocal(h, p, circle_points(grid.zeta_radius, grid.zeta_angles));
    const auto [rhs, z] = max_over(need_Q(in), grid_points(grid.z_radii, grid.z_angles),
                                   [k](cplx q) { return k * std::abs(q) - q.real(); });
    return verdict(lhs - rhs, z, zeta, "k = " + std::to_string(k));
  }
  if (id == "eq6M") {
    const auto [lhs, zeta] = min_reciprocal(need_h(in), p, circle_points(grid.zeta_radius, grid.zeta_angles));
    return verdict(lhs - 6.0 * (in.M + 1.0), 0.0, zeta, "6(M+1) = " + std::to_string(6.0 * (in.M + 1.0)));
  }
  if (id == "eq02") {
    require_real_nonnegative(p);
    const double c = 1.0 / (2.0 * (std::numbers::sqrt2 * p.beta.real() + p.alpha.real()));
    const auto [worst, z] = max_over(need_Q(in), grid_points(grid.z_radii, grid.z_angles),
                                     [](cplx q) { return std::abs(q) - q.real(); });
    return verdict(c - worst, z, 0.0, "");
  }
  if (id == "ez") {
    require_real_nonnegative(p);
    const double c = 1.0 / (p.beta.real() * std::numbers::e + p.alpha.real());
    const auto [worst, z] = max_over(need_Q(in), grid_points(grid.z_radii, grid.z_angles),
                                     [](cplx q) { return std::abs(q); });
    return verdict(c - worst, z, 0.0, "");
  }
  if (id == "eq17") return verdict(janowski_gap(in, in.M), 0.0, 0.0, "");
  constexpr double e = std::numbers::e;
  if (id == "phi-i") return verdict(janowski_gap(in, e), 0.0, 0.0, "");
  if (id == "phi-ii") return verdict(janowski_gap(in, std::numbers::sqrt2), 0.0, 0.0, "");
  if (id == "phi-iii") {
    // Printed with both sides multiplied by (1+e).
    janowski_gap(in, 0.0);
    const double a = p.alpha.real(), b = p.beta.real();
    const double lhs = (in.A - in.B) * (1.0 - in.A) * (1.0 + in.E) * (1.0 + e);
    const double rhs = (1.0 + std::abs(in.A)) * (b + a + std::abs(b * in.A + a * in.B)) *
                       ((1.0 + in.D) * (1.0 - in.B) * (1.0 + e) + 2.0 * e * (1.0 + in.E) * (1.0 - in.A));
    return verdict(lhs - rhs, 0.0, 0.0, "");
  }
  if (id == "phi-iv") return verdict(janowski_gap(in, 1.0 + e), 0.0, 0.0, "");
  if (id == "phi-v") return verdict(janowski_gap(in, 1.0 + std::numbers::sqrt2), 0.0, 0.0, "");
  throw Error(ErrorKind::UnknownCase, "unknown inequality '" + std::string(id) + "'");
}

double boundary_radius_lemma1(double theta, const BBParams& params) {
  require_real_nonnegative(params);
  const double a = params.alpha.real(), b = params.beta.real(), n = params.n;
  const double c = std::cos(theta), s = std::sin(theta);
  const double d = (b + a * (1.0 + c)) * (b + a * (1.0 + c)) + (a * s) * (a * s);
  return std::sqrt(2.0 * (1.0 + c) + (n * n + 2.0 * n * (2.0 * a + b) * (1.0 + c)) / d);
}

double boundary_radius_lemma2(double theta, const BBParams& params) {
  require_real_nonnegative(params);
  const double half_sin = std::sin(theta / 2.0), half_cos = std::cos(theta / 2.0);
  if (std::abs(half_sin) < 1e-12) throw Error(ErrorKind::DegenerateAngle, "theta = 0 has no finite radius");
  const double a = params.alpha.real(), b = params.beta.real(), n = params.n;
  const double g = half_cos / half_sin;  // cot(theta/2)
  const double s = std::sin(theta);
  // sin^2(theta) (beta/gamma)^2 = 4 beta^2 sin^4(theta/2), finite at theta = pi
  const double den = 4.0 * b * b * std::pow(half_sin, 4) + a * a * s * s;
  return std::sqrt(g * g + (n * n + 4.0 * n * a * g * g / (1.0 + g * g)) / den);
}

TaylorSeries theta_expression(const TaylorSeries& f, const BBParams& params) {
  const ValuedSeries F = ValuedSeries::from_taylor(f);
  if (std::abs(F.exponent() - 1.0) > 1e-12) throw Error(ErrorKind::ValuationMismatch, "f must have valuation 1");
  const TaylorSeries q = log_derivative(F);
  const TaylorSeries d1 = derivative_of_normalized(F);
  const TaylorSeries second = divide(z_derivative(d1), d1);
  const TaylorSeries bracket = add_constant(second - q, 1.0);
  return divide(TaylorSeries::constant(1.0, q.order()), q) -
         divide(bracket, add_constant(scale(q, params.beta), params.alpha));
}

TaylorSeries fz_expression(const TaylorSeries& f, const BBParams& params) {
  const ValuedSeries F = ValuedSeries::from_taylor(f);
  if (std::abs(F.exponent() - 1.0) > 1e-12) throw Error(ErrorKind::ValuationMismatch, "f must have valuation 1");
  const TaylorSeries& u = F.unit();
  const TaylorSeries q = log_derivative(F);
  const TaylorSeries den = add_constant(divide(TaylorSeries::constant(params.beta, u.order()), u), params.alpha);
  return u + divide(add_constant(q, -1.0), den);
}

nlohmann::json hypothesis_to_json(const HypothesisResult& r) {
  return {{"holds", r.holds},
          {"margin", std::isfinite(r.margin) ? nlohmann::json(r.margin) : nlohmann::json(nullptr)},
          {"z", {{"re", r.z.real()}, {"im", r.z.imag()}}},
          {"zeta", {{"re", r.zeta.real()}, {"im", r.zeta.imag()}}},
          {"detail", r.detail}};
}

}  // namespace subordlab
