#include "subordlab/integral_ops.hpp"

#include <cmath>

#include "subordlab/dominants.hpp"
#include "subordlab/errors.hpp"
#include "subordlab/subordination.hpp"

namespace subordlab {

namespace {

constexpr double kParamTol = 1e-12;

// Accepts z * u with u(0) = 1 and returns u.
const TaylorSeries& normalized_unit(const ValuedSeries& f, const char* name) {
  if (std::abs(f.exponent() - 1.0) > 1e-12) {
    throw Error(ErrorKind::ValuationMismatch, std::string(name) + " must have valuation 1");
  }
  if (std::abs(f.unit()[0] - 1.0) > 1e-10) {
    throw Error(ErrorKind::InvalidArgument, std::string(name) + " must be of the form z + ...");
  }
  return f.unit();
}

void require_unit_one(const TaylorSeries& f, const char* name) {
  if (std::abs(f[0] - 1.0) > 1e-10) throw Error(ErrorKind::InvalidArgument, std::string(name) + "(0) must be 1");
}

// Coefficients of z^{-s} * int_0^z t^{s-1} U(t) dt, i.e. U_k / (s + k).
TaylorSeries integrate_weighted(const TaylorSeries& U, cplx s) { return integrate_shifted(U, s - 1.0); }

TaylorSeries unit_of_result(const TaylorSeries& w, cplx power_exp) {
  const TaylorSeries u = power(w, power_exp);
  if (std::abs(u[0] - 1.0) > 1e-9) throw Error(ErrorKind::InvalidArgument, "operator unit does not start at 1");
  return u;
}

}  // namespace

void OperatorParams::validate() const {
  if (!(std::abs(beta) > kParamTol)) throw Error(ErrorKind::InvalidArgument, "beta must be non-zero");
  if (!(alpha + beta > 0.0)) throw Error(ErrorKind::InvalidArgument, "alpha + beta must be positive");
  if (std::abs(lambda + delta - 1.0) > kParamTol) throw Error(ErrorKind::InvalidArgument, "lambda + delta must be 1");
  if (std::abs(eta + gamma - 1.0) > kParamTol) throw Error(ErrorKind::InvalidArgument, "eta + gamma must be 1");
  if (!(std::abs(eta) > kParamTol)) throw Error(ErrorKind::InvalidArgument, "eta must be non-zero");
}

ValuedSeries g_from_Q(const TaylorSeries& Q) {
  if (std::abs(Q[0] - 1.0) > kRemovableFloor) throw Error(ErrorKind::SingularAtOrigin, "Q(0) must be 1");
  return ValuedSeries(1.0, exponential(integrate_log(add_constant(Q, -1.0))));
}

ValuedSeries bernardi_general(const ValuedSeries& f, const ValuedSeries& g, cplx alpha, cplx beta, bool check_gate) {
  const TaylorSeries& uf = normalized_unit(f, "f");
  const TaylorSeries& ug = normalized_unit(g, "g");
  if (std::abs(beta) <= kParamTol) throw Error(ErrorKind::InvalidArgument, "beta must be non-zero");
  if (check_gate) {
    if (alpha.imag() != 0.0 || beta.imag() != 0.0 || !((alpha + beta).real() > 0.0)) {
      throw Error(ErrorKind::InvalidArgument, "alpha + beta must be positive (real)");
    }
    const double a = alpha.real(), b = beta.real();
    // Real exponents: let ValuedSeries carry z^rho and check it lands on beta.
    const ValuedSeries dg(0.0, derivative_of_normalized(g));
    const ValuedSeries integrand = multiply(multiply(dg, power_real(g, a - 1.0)), power_real(f, b));
    const ValuedSeries inner = scale(multiply(power_real(g, -a), integrate_valued(integrand)), a + b);
    if (std::abs(inner.exponent() - b) > 1e-12) throw Error(ErrorKind::InvalidArgument, "exponent bookkeeping failed");
    return ValuedSeries(1.0, unit_of_result(inner.unit(), 1.0 / b));
  }
  if (std::abs(alpha + beta) <= kParamTol) throw Error(ErrorKind::LogarithmicTerm, "alpha + beta vanishes");
  const TaylorSeries U = multiply(multiply(derivative_of_normalized(g), power(ug, alpha - 1.0)), power(uf, beta));
  const TaylorSeries W = scale(multiply(power(ug, -alpha), integrate_weighted(U, alpha + beta)), alpha + beta);
  return ValuedSeries(1.0, unit_of_result(W, 1.0 / beta));
}

ValuedSeries bernardi_power(const ValuedSeries& f, const OperatorParams& p) {
  const int n = f.order();
  return bernardi_general(ValuedSeries(1.0, TaylorSeries::constant(1.0, n)), f, p.alpha, p.beta);
}

TaylorSeries existence_Q(const ValuedSeries& g, const TaylorSeries& varphi, const OperatorParams& p) {
  normalized_unit(g, "g");
  require_unit_one(varphi, "varphi");
  const TaylorSeries zphi = divide(z_derivative(varphi), varphi);
  return add_constant(linear_combine(p.lambda, log_derivative(g), 1.0, zphi), p.delta);
}

namespace {

// U = u_g^{lambda alpha} varphi^alpha Q and J = z^{-(alpha+beta)} int_0^z t^{alpha+beta-1} U dt.
struct ExistenceParts {
  TaylorSeries head;  // u_g^{lambda alpha} varphi^alpha
  TaylorSeries J;
};

ExistenceParts existence_parts(const ValuedSeries& g, const TaylorSeries& varphi, const OperatorParams& p) {
  p.validate();
  if (p.alpha < 0.0 || p.beta <= 0.0) throw Error(ErrorKind::InvalidArgument, "need alpha >= 0 and beta > 0");
  const TaylorSeries& ug = normalized_unit(g, "g");
  require_unit_one(varphi, "varphi");
  const TaylorSeries Q = existence_Q(g, varphi, p);
  const TaylorSeries head = multiply(power(ug, p.lambda * p.alpha), power_real(varphi, p.alpha));
  return {head, integrate_weighted(multiply(head, Q), p.alpha + p.beta)};
}

}  // namespace

ValuedSeries existence_operator(const ValuedSeries& g, const TaylorSeries& varphi, const TaylorSeries& phi,
                                const OperatorParams& p) {
  const auto parts = existence_parts(g, varphi, p);
  require_unit_one(phi, "phi");
  const TaylorSeries Q = existence_Q(g, varphi, p);
  if (is_subordinate(Q, DominantSpec::half_plane()).holds != Holds::True) {
    throw Error(ErrorKind::HypothesisFailed, "Q is not subordinate to (1+z)/(1-z)");
  }
  // z-exponent: (alpha+beta) - lambda alpha - delta alpha - beta gamma = eta beta
  const TaylorSeries den = multiply(power_real(phi, p.beta), parts.head);
  const TaylorSeries W = scale(divide(parts.J, den), p.alpha + p.beta);
  return ValuedSeries(1.0, unit_of_result(W, 1.0 / (p.eta * p.beta)));
}

TaylorSeries existence_p(const ValuedSeries& g, const TaylorSeries& varphi, const OperatorParams& p) {
  const auto parts = existence_parts(g, varphi, p);
  return add_constant(scale(divide(parts.head, parts.J), 1.0 / p.beta), -p.alpha / p.beta);
}

TaylorSeries existence_conclusion(const ValuedSeries& F, const ValuedSeries& g, const TaylorSeries& varphi,
                                  const TaylorSeries& phi, const OperatorParams& p) {
  const TaylorSeries num =
      add_constant(linear_combine(p.eta, log_derivative(F), 1.0, divide(z_derivative(phi), phi)), p.gamma);
  return divide(num, existence_Q(g, varphi, p));
}

namespace {

struct TwoFunctionParts {
  TaylorSeries head;  // u_f^beta u_g^sigma
  TaylorSeries J;
};

TwoFunctionParts two_function_parts(const ValuedSeries& f, const ValuedSeries& g, const OperatorParams& p) {
  if (!(std::abs(p.beta) > kParamTol) || !(p.alpha + p.beta > 0.0)) {
    throw Error(ErrorKind::InvalidArgument, "need beta != 0 and alpha + beta > 0");
  }
  const TaylorSeries& uf = normalized_unit(f, "f");
  const TaylorSeries& ug = normalized_unit(g, "g");
  // f^beta g^sigma t^{alpha-sigma-1} = t^{alpha+beta-1} u_f^beta u_g^sigma
  const TaylorSeries head = multiply(power_real(uf, p.beta), power(ug, p.sigma));
  return {head, integrate_weighted(head, p.alpha + p.beta)};
}

}  // namespace

ValuedSeries two_function_operator(const ValuedSeries& f, const ValuedSeries& g, const TaylorSeries& phi,
                                   const OperatorParams& p) {
  const auto parts = two_function_parts(f, g, p);
  require_unit_one(phi, "phi");
  const TaylorSeries W = scale(divide(parts.J, phi), p.alpha + p.beta);
  return ValuedSeries(1.0, unit_of_result(W, 1.0 / p.beta));
}

TaylorSeries two_function_p(const ValuedSeries& f, const ValuedSeries& g, const OperatorParams& p) {
  const auto parts = two_function_parts(f, g, p);
  return add_constant(scale(divide(parts.head, parts.J), 1.0 / p.beta), -p.alpha / p.beta);
}

}  // namespace subordlab
