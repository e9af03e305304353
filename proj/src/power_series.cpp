#include "subordlab/power_series.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "subordlab/errors.hpp"

namespace subordlab {

namespace {

void require_finite(std::span<const cplx> c) {
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (!std::isfinite(c[k].real()) || !std::isfinite(c[k].imag())) {
      throw Error(ErrorKind::NonFiniteCoefficient, "coefficient " + std::to_string(k));
    }
  }
}

void require_unit(const TaylorSeries& f, const char* op) {
  if (std::abs(f[0]) <= kConstantTermFloor) {
    throw Error(ErrorKind::NearZeroConstantTerm, op);
  }
}

int min_order(const TaylorSeries& f, const TaylorSeries& g) { return std::min(f.order(), g.order()); }

}  // namespace

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::NonFiniteCoefficient: return "NonFiniteCoefficient";
    case ErrorKind::NearZeroConstantTerm: return "NearZeroConstantTerm";
    case ErrorKind::SingularAtOrigin: return "SingularAtOrigin";
    case ErrorKind::LogarithmicTerm: return "LogarithmicTerm";
    case ErrorKind::NoExactPredicate: return "NoExactPredicate";
    case ErrorKind::ValuationMismatch: return "ValuationMismatch";
    case ErrorKind::PointOnCurve: return "PointOnCurve";
    case ErrorKind::DenominatorVanishes: return "DenominatorVanishes";
    case ErrorKind::ResonantOrder: return "ResonantOrder";
    case ErrorKind::DegenerateAngle: return "DegenerateAngle";
    case ErrorKind::HypothesisFailed: return "HypothesisFailed";
    case ErrorKind::UnknownCase: return "UnknownCase";
    case ErrorKind::IoFailure: return "IoFailure";
  }
  return "Unknown";
}

// ---------------------------------------------------------------- TaylorSeries

TaylorSeries::TaylorSeries(std::vector<cplx> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw Error(ErrorKind::InvalidArgument, "series needs at least one coefficient");
  require_finite(coeffs_);
}

TaylorSeries::TaylorSeries(std::initializer_list<cplx> coeffs)
    : TaylorSeries(std::vector<cplx>(coeffs)) {}

TaylorSeries TaylorSeries::constant(cplx c, int order) {
  std::vector<cplx> v(static_cast<std::size_t>(std::max(order, 0)) + 1, cplx{});
  v[0] = c;
  return TaylorSeries(std::move(v));
}

TaylorSeries TaylorSeries::identity(int order) { return monomial(1.0, 1, order); }

TaylorSeries TaylorSeries::monomial(cplx c, int power, int order) {
  std::vector<cplx> v(static_cast<std::size_t>(std::max(order, 0)) + 1, cplx{});
  if (power >= 0 && power <= order) v[static_cast<std::size_t>(power)] = c;
  return TaylorSeries(std::move(v));
}

TaylorSeries TaylorSeries::with_order(int order) const {
  std::vector<cplx> v(static_cast<std::size_t>(std::max(order, 0)) + 1, cplx{});
  const auto n = std::min(v.size(), coeffs_.size());
  std::copy_n(coeffs_.begin(), n, v.begin());
  return TaylorSeries(std::move(v));
}

cplx TaylorSeries::operator()(cplx z) const { return evaluate(*this, z); }

// ---------------------------------------------------------------- arithmetic

TaylorSeries linear_combine(cplx a, const TaylorSeries& f, cplx b, const TaylorSeries& g) {
  const int n = min_order(f, g);
  std::vector<cplx> out(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) out[k] = a * f[k] + b * g[k];
  return TaylorSeries(std::move(out));
}

TaylorSeries multiply(const TaylorSeries& f, const TaylorSeries& g) {
  const int n = min_order(f, g);
  std::vector<cplx> out(static_cast<std::size_t>(n) + 1, cplx{});
  const auto fc = f.coeffs();
  const auto gc = g.coeffs();
  for (int i = 0; i <= n; ++i) {
    if (fc[i] == cplx{}) continue;
    for (int j = 0; i + j <= n; ++j) out[i + j] += fc[i] * gc[j];
  }
  return TaylorSeries(std::move(out));
}

TaylorSeries divide(const TaylorSeries& f, const TaylorSeries& g) {
  require_unit(g, "divide");
  const int n = min_order(f, g);
  std::vector<cplx> q(static_cast<std::size_t>(n) + 1);
  const cplx g0 = g[0];
  for (int k = 0; k <= n; ++k) {
    cplx acc = f[k];
    for (int j = 1; j <= k; ++j) acc -= g[j] * q[k - j];
    q[k] = acc / g0;
  }
  return TaylorSeries(std::move(q));
}

TaylorSeries scale(const TaylorSeries& f, cplx a) {
  std::vector<cplx> v(f.coeffs().begin(), f.coeffs().end());
  for (auto& c : v) c *= a;
  return TaylorSeries(std::move(v));
}

TaylorSeries add_constant(const TaylorSeries& f, cplx c) {
  std::vector<cplx> v(f.coeffs().begin(), f.coeffs().end());
  v[0] += c;
  return TaylorSeries(std::move(v));
}

// ---------------------------------------------------------------- transcendental

// g = e^f satisfies g' = f' g, i.e. k g_k = sum_{j=1..k} j f_j g_{k-j}.
TaylorSeries exponential(const TaylorSeries& f) {
  const int n = f.order();
  std::vector<cplx> g(static_cast<std::size_t>(n) + 1);
  g[0] = std::exp(f[0]);
  for (int k = 1; k <= n; ++k) {
    cplx acc{};
    for (int j = 1; j <= k; ++j) acc += static_cast<double>(j) * f[j] * g[k - j];
    g[k] = acc / static_cast<double>(k);
  }
  return TaylorSeries(std::move(g));
}

// L = log f satisfies f L' = f'.
TaylorSeries logarithm(const TaylorSeries& f) {
  require_unit(f, "logarithm");
  const int n = f.order();
  std::vector<cplx> l(static_cast<std::size_t>(n) + 1);
  l[0] = std::log(f[0]);
  for (int k = 1; k <= n; ++k) {
    cplx acc = static_cast<double>(k) * f[k];
    for (int j = 1; j < k; ++j) acc -= static_cast<double>(j) * l[j] * f[k - j];
    l[k] = acc / (static_cast<double>(k) * f[0]);
  }
  return TaylorSeries(std::move(l));
}

// g = f^s satisfies f g' = s f' g:  k f_0 g_k = sum_{j=1..k} (s j - (k - j)) f_j g_{k-j}.
TaylorSeries power(const TaylorSeries& f, cplx s) {
  require_unit(f, "power");
  const int n = f.order();
  std::vector<cplx> g(static_cast<std::size_t>(n) + 1);
  g[0] = std::exp(s * std::log(f[0]));
  for (int k = 1; k <= n; ++k) {
    cplx acc{};
    for (int j = 1; j <= k; ++j) {
      acc += (s * static_cast<double>(j) - static_cast<double>(k - j)) * f[j] * g[k - j];
    }
    g[k] = acc / (static_cast<double>(k) * f[0]);
  }
  return TaylorSeries(std::move(g));
}

TaylorSeries power_real(const TaylorSeries& f, double s) { return power(f, cplx{s, 0.0}); }

// ---------------------------------------------------------------- calculus

TaylorSeries z_derivative(const TaylorSeries& f) {
  std::vector<cplx> v(f.coeffs().begin(), f.coeffs().end());
  for (std::size_t k = 0; k < v.size(); ++k) v[k] *= static_cast<double>(k);
  return TaylorSeries(std::move(v));
}

TaylorSeries derivative(const TaylorSeries& f) {
  const int n = std::max(f.order() - 1, 0);
  std::vector<cplx> v(static_cast<std::size_t>(n) + 1, cplx{});
  for (int k = 1; k <= f.order(); ++k) v[k - 1] = static_cast<double>(k) * f[k];
  return TaylorSeries(std::move(v));
}

TaylorSeries integrate_log(const TaylorSeries& f) {
  if (std::abs(f[0]) >= kRemovableFloor) {
    throw Error(ErrorKind::SingularAtOrigin, "integrand f(t)/t has a pole at 0");
  }
  std::vector<cplx> v(f.coeffs().size(), cplx{});
  for (int k = 1; k <= f.order(); ++k) v[k] = f[k] / static_cast<double>(k);
  return TaylorSeries(std::move(v));
}

TaylorSeries integrate(const TaylorSeries& f) {
  std::vector<cplx> v(f.coeffs().size() + 1, cplx{});
  for (int k = 0; k <= f.order(); ++k) v[k + 1] = f[k] / static_cast<double>(k + 1);
  return TaylorSeries(std::move(v));
}

TaylorSeries compose(const TaylorSeries& h, const TaylorSeries& inner) {
  if (std::abs(inner[0]) > kRemovableFloor) {
    throw Error(ErrorKind::InvalidArgument, "compose: inner series must vanish at 0");
  }
  const int n = min_order(h, inner);
  const TaylorSeries w = inner.with_order(n);
  // Horner in the series ring; terms h_k w^k with k > n do not reach order n.
  TaylorSeries acc = TaylorSeries::constant(h[n], n);
  for (int k = n - 1; k >= 0; --k) acc = add_constant(multiply(acc, w), h[k]);
  return acc;
}

TaylorSeries compose(const TaylorSeries& h, const SchwarzSeries& omega) {
  return compose(h, omega.series());
}

cplx evaluate(const TaylorSeries& f, cplx z) {
  const auto c = f.coeffs();
  cplx acc{};
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
  return acc;
}

std::vector<cplx> boundary_profile(const TaylorSeries& f, double r, int samples) {
  if (samples < 8) throw Error(ErrorKind::InvalidArgument, "boundary_profile needs at least 8 samples");
  std::vector<cplx> out(static_cast<std::size_t>(samples));
  for (int k = 0; k < samples; ++k) {
    const double t = 2.0 * std::numbers::pi * k / samples;
    out[k] = evaluate(f, std::polar(r, t));
  }
  return out;
}

double tail_estimate(const TaylorSeries& f, double r) {
  if (r >= 1.0) return std::numeric_limits<double>::infinity();
  return std::abs(f[f.order()]) * std::pow(r, f.order()) / (1.0 - r);
}

int valuation(const TaylorSeries& f, double floor) {
  for (int k = 0; k <= f.order(); ++k) {
    if (std::abs(f[k]) > floor) return k;
  }
  return f.order() + 1;
}

// ---------------------------------------------------------------- ValuedSeries

ValuedSeries::ValuedSeries(double exponent, TaylorSeries unit)
    : exponent_(exponent), unit_(std::move(unit)) {
  if (!std::isfinite(exponent_)) throw Error(ErrorKind::InvalidArgument, "non-finite exponent");
  double cmax = 0.0;
  for (const auto& c : unit_.coeffs()) cmax = std::max(cmax, std::abs(c));
  if (!(std::abs(unit_[0]) > 1e-12 * cmax) || std::abs(unit_[0]) <= kConstantTermFloor) {
    throw Error(ErrorKind::NearZeroConstantTerm, "valued series unit must not vanish at 0");
  }
}

ValuedSeries ValuedSeries::from_taylor(const TaylorSeries& f) {
  const int v = valuation(f, kConstantTermFloor);
  if (v > f.order()) throw Error(ErrorKind::NearZeroConstantTerm, "series is identically zero");
  std::vector<cplx> u(f.coeffs().begin() + v, f.coeffs().end());
  return ValuedSeries(static_cast<double>(v), TaylorSeries(std::move(u)));
}

TaylorSeries ValuedSeries::to_taylor() const {
  const double r = std::round(exponent_);
  if (std::abs(exponent_ - r) > 1e-9 || r < 0) {
    throw Error(ErrorKind::InvalidArgument, "exponent is not a non-negative integer");
  }
  const int shift = static_cast<int>(r);
  std::vector<cplx> v(static_cast<std::size_t>(shift), cplx{});
  v.insert(v.end(), unit_.coeffs().begin(), unit_.coeffs().end());
  return TaylorSeries(std::move(v));
}

cplx ValuedSeries::operator()(cplx z) const {
  return std::pow(z, exponent_) * evaluate(unit_, z);
}

ValuedSeries multiply(const ValuedSeries& f, const ValuedSeries& g) {
  return ValuedSeries(f.exponent() + g.exponent(), multiply(f.unit(), g.unit()));
}

ValuedSeries divide(const ValuedSeries& f, const ValuedSeries& g) {
  return ValuedSeries(f.exponent() - g.exponent(), divide(f.unit(), g.unit()));
}

ValuedSeries power_real(const ValuedSeries& f, double s) {
  return ValuedSeries(f.exponent() * s, power_real(f.unit(), s));
}

ValuedSeries scale(const ValuedSeries& f, cplx a) { return ValuedSeries(f.exponent(), scale(f.unit(), a)); }

TaylorSeries integrate_shifted(const TaylorSeries& unit, cplx rho) {
  std::vector<cplx> v(unit.coeffs().size());
  for (int k = 0; k <= unit.order(); ++k) {
    const cplx d = rho + static_cast<double>(k + 1);
    if (std::abs(d) <= kLogTermFloor) {
      throw Error(ErrorKind::LogarithmicTerm, "t^-1 term at index " + std::to_string(k));
    }
    v[k] = unit[k] / d;
  }
  return TaylorSeries(std::move(v));
}

ValuedSeries integrate_valued(const ValuedSeries& v) {
  for (int k = 0; k <= v.unit().order(); ++k) {
    if (v.exponent() + k + 1 <= kLogTermFloor) {
      throw Error(ErrorKind::LogarithmicTerm, "exponent + k + 1 <= 0 at index " + std::to_string(k));
    }
  }
  return ValuedSeries(v.exponent() + 1.0, integrate_shifted(v.unit(), v.exponent()));
}

TaylorSeries log_derivative(const ValuedSeries& f) {
  return add_constant(divide(z_derivative(f.unit()), f.unit()), f.exponent());
}

TaylorSeries derivative_of_normalized(const ValuedSeries& f) {
  if (std::abs(f.exponent() - 1.0) > 1e-12) {
    throw Error(ErrorKind::ValuationMismatch, "expected a series of the form z * unit");
  }
  return f.unit() + z_derivative(f.unit());
}

// ---------------------------------------------------------------- SchwarzSeries

SchwarzSeries SchwarzSeries::blaschke(double scale, std::span<const cplx> zeros, int order,
                                      cplx rotation) {
  if (!(scale >= 0.0 && scale <= 0.95)) throw Error(ErrorKind::InvalidArgument, "scale must lie in [0, 0.95]");
  if (zeros.size() > 3) throw Error(ErrorKind::InvalidArgument, "at most three Blaschke factors");
  if (std::abs(std::abs(rotation) - 1.0) > 1e-12) throw Error(ErrorKind::InvalidArgument, "rotation must be unimodular");
  TaylorSeries w = TaylorSeries::monomial(scale * rotation, 1, order);
  for (const cplx a : zeros) {
    if (std::abs(a) > 0.8 + 1e-15) throw Error(ErrorKind::InvalidArgument, "Blaschke zero outside |a| <= 0.8");
    const TaylorSeries factor = divide(TaylorSeries{-a, 1.0}.with_order(order),
                                       TaylorSeries{1.0, -std::conj(a)}.with_order(order));
    w = multiply(w, factor);
  }
  return SchwarzSeries(std::move(w), 1.0 - scale);
}

SchwarzSeries SchwarzSeries::scaled_identity(double scale, int order) {
  return blaschke(scale, {}, order);
}

SchwarzSeries SchwarzSeries::certify(TaylorSeries series, double margin, int samples) {
  if (std::abs(series[0]) > 0.0) throw Error(ErrorKind::InvalidArgument, "Schwarz function must vanish at 0");
  if (!(margin > 0.0 && margin <= 1.0)) throw Error(ErrorKind::InvalidArgument, "margin must lie in (0, 1]");
  SchwarzSeries s(std::move(series), margin);
  if (s.boundary_max(samples) > 1.0 - margin + 1e-10) {
    throw Error(ErrorKind::InvalidArgument, "boundary modulus exceeds 1 - margin");
  }
  return s;
}

double SchwarzSeries::boundary_max(int samples) const {
  double m = 0.0;
  for (const cplx w : boundary_profile(series_, 1.0, samples)) m = std::max(m, std::abs(w));
  return m;
}

// ---------------------------------------------------------------- JSON

void to_json(nlohmann::json& j, const TaylorSeries& f) {
  std::vector<double> re, im;
  re.reserve(f.coeffs().size());
  im.reserve(f.coeffs().size());
  for (const auto& c : f.coeffs()) {
    re.push_back(c.real());
    im.push_back(c.imag());
  }
  j = nlohmann::json{{"order", f.order()}, {"re", re}, {"im", im}};
}

void from_json(const nlohmann::json& j, TaylorSeries& f) {
  const auto re = j.at("re").get<std::vector<double>>();
  std::vector<double> im = j.contains("im") ? j.at("im").get<std::vector<double>>()
                                            : std::vector<double>(re.size(), 0.0);
  if (im.size() != re.size()) throw Error(ErrorKind::InvalidArgument, "re/im length mismatch");
  std::vector<cplx> c(re.size());
  for (std::size_t k = 0; k < re.size(); ++k) c[k] = {re[k], im[k]};
  TaylorSeries s(std::move(c));
  if (j.contains("order")) s = s.with_order(j.at("order").get<int>());
  f = std::move(s);
}

nlohmann::json valued_to_json(const ValuedSeries& v) {
  nlohmann::json j = v.unit();
  j["exponent"] = v.exponent();
  return j;
}

ValuedSeries valued_from_json(const nlohmann::json& j) {
  return ValuedSeries(j.value("exponent", 0.0), j.get<TaylorSeries>());
}

}  // namespace subordlab
