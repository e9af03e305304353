#pragma once

// Integral operators of Bernardi type, computed termwise on valued series.
//
// Inputs of the form z * u(z) with u(0) = 1 are passed as ValuedSeries of exponent 1.
// Complex powers of z never leave these functions: each operator tracks the z-exponent
// by hand and only raises units to complex powers.

#include "subordlab/power_series.hpp"

namespace subordlab {

struct OperatorParams {
  double alpha = 0.0;
  double beta = 1.0;
  cplx lambda = 1.0;
  cplx eta = 1.0;
  cplx gamma = 0.0;
  cplx delta = 0.0;
  cplx sigma = 0.0;

  /// Checks beta != 0, alpha + beta > 0, lambda + delta = eta + gamma = 1, eta != 0.
  void validate() const;
};

/// g = z exp(int_0^z (Q(t) - 1)/t dt); needs Q(0) = 1.
ValuedSeries g_from_Q(const TaylorSeries& Q);

/// ((alpha+beta) g^{-alpha} int_0^z g' g^{alpha-1} f^beta dt)^{1/beta}.
/// With check_gate = false, complex alpha and beta are accepted (alpha + beta must not vanish).
ValuedSeries bernardi_general(const ValuedSeries& f, const ValuedSeries& g, cplx alpha, cplx beta,
                              bool check_gate = true);
inline ValuedSeries bernardi_general(const ValuedSeries& f, const ValuedSeries& g, const OperatorParams& p) {
  return bernardi_general(f, g, p.alpha, p.beta);
}

/// ((alpha+beta) f^{-alpha} int_0^z f^{alpha-1} f' t^beta dt)^{1/beta}.
ValuedSeries bernardi_power(const ValuedSeries& f, const OperatorParams& p);

/// Q = lambda z g'/g + z varphi'/varphi + delta.
TaylorSeries existence_Q(const ValuedSeries& g, const TaylorSeries& varphi, const OperatorParams& p);

/// F of the integral existence theorem. Throws HypothesisFailed unless Q is subordinate
/// to (1+z)/(1-z) (numerically, holds = true).
ValuedSeries existence_operator(const ValuedSeries& g, const TaylorSeries& varphi, const TaylorSeries& phi,
                                const OperatorParams& p);

/// The auxiliary p of the existence theorem; solves p Q + z p'/(beta p + alpha) = 1.
TaylorSeries existence_p(const ValuedSeries& g, const TaylorSeries& varphi, const OperatorParams& p);

/// (eta zF'/F + z phi'/phi + gamma) / Q
TaylorSeries existence_conclusion(const ValuedSeries& F, const ValuedSeries& g, const TaylorSeries& varphi,
                                  const TaylorSeries& phi, const OperatorParams& p);

/// ((beta+alpha)/(z^alpha phi) int_0^z f^beta g^sigma t^{alpha-sigma-1} dt)^{1/beta}.
ValuedSeries two_function_operator(const ValuedSeries& f, const ValuedSeries& g, const TaylorSeries& phi,
                                   const OperatorParams& p);

/// (1/beta) f^beta g^sigma z^{alpha-sigma} (int ...)^{-1} - alpha/beta.
TaylorSeries two_function_p(const ValuedSeries& f, const ValuedSeries& g, const OperatorParams& p);

}  // namespace subordlab
