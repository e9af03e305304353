#pragma once

// Truncated complex Taylor series, z^rho-valued series and Schwarz functions.
//
// Every analytic germ in the library is a TaylorSeries c_0 + c_1 z + ... + c_N z^N.
// Binary operations truncate to the smaller order of their inputs, so a result is
// exact up to its own order whenever the inputs are.

#include <complex>
#include <initializer_list>
#include <span>
#include <vector>

#include "json.hpp"

namespace subordlab {

using cplx = std::complex<double>;

inline constexpr int kDefaultOrder = 64;

/// Thresholds shared by the series kernel.
inline constexpr double kConstantTermFloor = 1e-12;
inline constexpr double kRemovableFloor = 1e-10;
inline constexpr double kLogTermFloor = 1e-9;

class TaylorSeries {
 public:
  TaylorSeries() : coeffs_(1, cplx{}) {}
  explicit TaylorSeries(std::vector<cplx> coeffs);
  TaylorSeries(std::initializer_list<cplx> coeffs);

  static TaylorSeries constant(cplx c, int order = kDefaultOrder);
  static TaylorSeries identity(int order = kDefaultOrder);  // the series z
  static TaylorSeries monomial(cplx c, int power, int order = kDefaultOrder);

  int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  std::span<const cplx> coeffs() const noexcept { return coeffs_; }

  /// Coefficient of z^k; zero beyond the order.
  cplx operator[](int k) const noexcept {
    return (k >= 0 && k <= order()) ? coeffs_[static_cast<std::size_t>(k)] : cplx{};
  }

  /// Truncate, or pad with zeros, to the given order.
  TaylorSeries with_order(int order) const;

  cplx operator()(cplx z) const;

 private:
  std::vector<cplx> coeffs_;
};

TaylorSeries linear_combine(cplx a, const TaylorSeries& f, cplx b, const TaylorSeries& g);
TaylorSeries multiply(const TaylorSeries& f, const TaylorSeries& g);
TaylorSeries divide(const TaylorSeries& f, const TaylorSeries& g);
TaylorSeries scale(const TaylorSeries& f, cplx a);
TaylorSeries add_constant(const TaylorSeries& f, cplx c);

TaylorSeries exponential(const TaylorSeries& f);
TaylorSeries logarithm(const TaylorSeries& f);
TaylorSeries power_real(const TaylorSeries& f, double s);
/// f^s for complex s on the principal branch of log f(0).
TaylorSeries power(const TaylorSeries& f, cplx s);

/// The map f -> z f'(z); keeps the order.
TaylorSeries z_derivative(const TaylorSeries& f);
/// Ordinary derivative f'; the order drops by one (minimum 0).
TaylorSeries derivative(const TaylorSeries& f);
/// Integral from 0 to z of f(t)/t dt; requires a negligible constant term.
TaylorSeries integrate_log(const TaylorSeries& f);
/// Integral from 0 to z of f(t) dt; the order grows by one.
TaylorSeries integrate(const TaylorSeries& f);

/// Coefficients of h(inner(z)); inner must vanish at the origin.
TaylorSeries compose(const TaylorSeries& h, const TaylorSeries& inner);

cplx evaluate(const TaylorSeries& f, cplx z);
/// f(r e^{2 pi i k / M}) for k = 0..M-1.
std::vector<cplx> boundary_profile(const TaylorSeries& f, double r, int samples);
/// |c_N| r^N / (1 - r); a heuristic bound on the discarded tail at radius r.
double tail_estimate(const TaylorSeries& f, double r);
inline constexpr double kTailFlag = 1e-6;

/// Index of the first coefficient whose modulus exceeds `floor`, or order()+1.
int valuation(const TaylorSeries& f, double floor = kRemovableFloor);

inline TaylorSeries operator+(const TaylorSeries& f, const TaylorSeries& g) {
  return linear_combine(1.0, f, 1.0, g);
}
inline TaylorSeries operator-(const TaylorSeries& f, const TaylorSeries& g) {
  return linear_combine(1.0, f, -1.0, g);
}
inline TaylorSeries operator*(const TaylorSeries& f, const TaylorSeries& g) { return multiply(f, g); }
inline TaylorSeries operator/(const TaylorSeries& f, const TaylorSeries& g) { return divide(f, g); }
inline TaylorSeries operator*(cplx a, const TaylorSeries& f) { return scale(f, a); }
inline TaylorSeries operator+(const TaylorSeries& f, cplx c) { return add_constant(f, c); }
inline TaylorSeries operator-(const TaylorSeries& f, cplx c) { return add_constant(f, -c); }

/// z^rho * unit(z), unit(0) != 0. Carries fractional powers through the integral operators.
class ValuedSeries {
 public:
  ValuedSeries(double exponent, TaylorSeries unit);

  /// Splits off the valuation of f: f = z^v * unit, order drops by v.
  static ValuedSeries from_taylor(const TaylorSeries& f);

  double exponent() const noexcept { return exponent_; }
  const TaylorSeries& unit() const noexcept { return unit_; }
  int order() const noexcept { return unit_.order(); }

  /// Back to an ordinary series; the exponent must be a non-negative integer.
  TaylorSeries to_taylor() const;
  cplx operator()(cplx z) const;

 private:
  double exponent_;
  TaylorSeries unit_;
};

ValuedSeries multiply(const ValuedSeries& f, const ValuedSeries& g);
ValuedSeries divide(const ValuedSeries& f, const ValuedSeries& g);
ValuedSeries power_real(const ValuedSeries& f, double s);
ValuedSeries scale(const ValuedSeries& f, cplx a);
/// Integral from 0 to z, termwise; LogarithmicTerm if some rho + k + 1 vanishes.
ValuedSeries integrate_valued(const ValuedSeries& v);
/// z f'(z) / f(z) = rho + z u'/u.
TaylorSeries log_derivative(const ValuedSeries& f);
/// f'(z) for a series of exponent 1 (f = z u): u + z u'.
TaylorSeries derivative_of_normalized(const ValuedSeries& f);

/// Unit-level helper: coefficients u_k / (rho + k + 1) for complex rho.
TaylorSeries integrate_shifted(const TaylorSeries& unit, cplx rho);

/// Analytic self-map of the disk with omega(0) = 0 and sup |omega| <= 1 - margin.
class SchwarzSeries {
 public:
  /// scale * rotation * z * prod_k (z - a_k)/(1 - conj(a_k) z); |a_k| <= 0.8, at most
  /// three factors, 0 <= scale <= 0.95, |rotation| = 1. The margin is 1 - scale.
  static SchwarzSeries blaschke(double scale, std::span<const cplx> zeros,
                                int order = kDefaultOrder, cplx rotation = 1.0);
  static SchwarzSeries scaled_identity(double scale, int order = kDefaultOrder);
  /// Accepts an arbitrary series after sampling |series(e^{it})| on `samples` points.
  static SchwarzSeries certify(TaylorSeries series, double margin, int samples = 4096);

  const TaylorSeries& series() const noexcept { return series_; }
  double margin() const noexcept { return margin_; }
  int order() const noexcept { return series_.order(); }

  /// max over `samples` boundary points of |series(e^{it})|.
  double boundary_max(int samples = 4096) const;

 private:
  SchwarzSeries(TaylorSeries series, double margin) : series_(std::move(series)), margin_(margin) {}

  TaylorSeries series_;
  double margin_;
};

TaylorSeries compose(const TaylorSeries& h, const SchwarzSeries& omega);

void to_json(nlohmann::json& j, const TaylorSeries& f);
void from_json(const nlohmann::json& j, TaylorSeries& f);
nlohmann::json valued_to_json(const ValuedSeries& v);
ValuedSeries valued_from_json(const nlohmann::json& j);

}  // namespace subordlab
