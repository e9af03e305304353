#pragma once

// The operator p Q + z p'/(beta p + alpha), its differential equation, and the
// hypothesis inequalities attached to it.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "subordlab/dominants.hpp"
#include "subordlab/power_series.hpp"

namespace subordlab {

struct BBParams {
  cplx alpha = 0.0;
  cplx beta = 1.0;
  int n = 1;

  BBParams() = default;
  BBParams(cplx alpha_, cplx beta_, int n_ = 1);

  /// alpha, beta real with alpha >= 0 and beta > 0.
  bool real_nonnegative() const noexcept;
};

TaylorSeries bb_operator(const TaylorSeries& p, const TaylorSeries& Q, const BBParams& params);

/// Solves p Q (beta p + alpha) + z p' = Psi (beta p + alpha) order by order, p(0) = Psi(0)/Q(0).
TaylorSeries bb_solve_from_target(const TaylorSeries& Psi, const TaylorSeries& Q, const BBParams& params);

/// g^alpha z^beta / beta * (int_0^z g^{alpha-1} g' t^beta dt)^{-1} - alpha/beta with g from Q.
TaylorSeries odl_closed_form(const TaylorSeries& Q, const BBParams& params);

/// Grids for the checks: z over several radii, zeta on |zeta| = zeta_radius.
struct HypothesisGrid {
  std::vector<double> z_radii{0.5, 0.9, 0.99, 0.999};
  int z_angles = 256;
  double zeta_radius = 0.999;
  int zeta_angles = 512;
};

struct HypothesisResult {
  bool holds = false;
  double margin = 0.0;
  cplx z{};
  cplx zeta{};
  std::string detail;
};

/// Conditions (i) and (ii) of the convex-dominant theorem, with zeta over the whole circle.
HypothesisResult check_thm21(const DominantSpec& h, const TaylorSeries& Q, const BBParams& params,
                             const HypothesisGrid& grid = {});

/// Named inequalities: "eq09", "eq6M", "eq02", "ez", "eq17", "phi-i" ... "phi-v".
struct InequalityInputs {
  std::optional<DominantSpec> h;
  std::optional<TaylorSeries> Q;
  BBParams params;
  double M = 1.0;
  double A = 0.0, B = 0.0, D = 0.0, E = 0.0;
};

std::vector<std::string_view> inequality_ids();
HypothesisResult check_inequalities(std::string_view case_id, const InequalityInputs& in,
                                    const HypothesisGrid& grid = {});

/// |h(e^{i theta})| for the open-door dominants, from their closed-form moduli.
double boundary_radius_lemma1(double theta, const BBParams& params);
double boundary_radius_lemma2(double theta, const BBParams& params);

/// f/(z f') - (z f''/f' + 1 - z f'/f)(beta z f'/f + alpha)^{-1} for f = z + ...
TaylorSeries theta_expression(const TaylorSeries& f, const BBParams& params);
/// f/z + (z f'/f - 1)(beta z/f + alpha)^{-1} for f = z + ...
TaylorSeries fz_expression(const TaylorSeries& f, const BBParams& params);

nlohmann::json hypothesis_to_json(const HypothesisResult& r);

}  // namespace subordlab
