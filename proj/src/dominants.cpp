#include "subordlab/dominants.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>

#include "subordlab/errors.hpp"

namespace subordlab {

namespace {

constexpr std::array<std::pair<DominantTag, std::string_view>, 12> kNames{{
    {DominantTag::HalfPlane, "half-plane"},
    {DominantTag::Sector, "sector"},
    {DominantTag::Exp, "exp"},
    {DominantTag::SqrtShift, "sqrt-shift"},
    {DominantTag::Janowski, "janowski"},
    {DominantTag::Sigmoid, "sigmoid"},
    {DominantTag::ExpLinear, "exp-linear"},
    {DominantTag::Crescent, "crescent"},
    {DominantTag::SlitA, "slit-a"},
    {DominantTag::OpenDoorA, "opendoor-a"},
    {DominantTag::OpenDoorB, "opendoor-b"},
    {DominantTag::Custom, "custom"},
}};

void require(bool ok, const char* what) {
  if (!ok) throw Error(ErrorKind::InvalidArgument, what);
}

void require_open_door(int n, double alpha, double beta) {
  require(n >= 1, "open-door dominants need n >= 1");
  require(alpha >= 0.0, "open-door dominants need alpha >= 0");
  require(beta > 0.0, "open-door dominants need beta > 0");
}

TaylorSeries poly(std::initializer_list<cplx> c, int order) { return TaylorSeries(c).with_order(order); }

// Minimum of value(z) over the grid; points where value returns nullopt are skipped.
template <typename F>
GeometryResult scan_grid(const GeometryGrid& grid, F&& value) {
  GeometryResult res;
  res.margin = std::numeric_limits<double>::infinity();
  for (const double r : grid.radii) {
    for (int k = 0; k < grid.angles; ++k) {
      const cplx z = std::polar(r, 2.0 * std::numbers::pi * k / grid.angles);
      const std::optional<double> v = value(z);
      if (v && *v < res.margin) {
        res.margin = *v;
        res.witness = z;
      }
    }
  }
  res.holds = res.margin > 0.0;
  return res;
}

// Re of a quotient; a vanishing denominator counts as an arbitrarily bad point.
std::optional<double> finite_or_floor(cplx q) {
  const double v = q.real();
  return std::isfinite(v) ? v : -std::numeric_limits<double>::infinity();
}

void require_normalized(const TaylorSeries& f) {
  if (std::abs(f[0]) > kRemovableFloor || std::abs(f[1]) <= kRemovableFloor) {
    throw Error(ErrorKind::ValuationMismatch, "expected a series of the form a_1 z + a_2 z^2 + ..., a_1 != 0");
  }
}

}  // namespace

// ---------------------------------------------------------------- construction

DominantSpec DominantSpec::half_plane() { return {DominantTag::HalfPlane, {}}; }

DominantSpec DominantSpec::sector(double gamma) {
  require(gamma > 0.0 && gamma <= 1.0, "sector needs 0 < gamma <= 1");
  DominantParams p;
  p.gamma = gamma;
  return {DominantTag::Sector, p};
}

DominantSpec DominantSpec::exp() { return {DominantTag::Exp, {}}; }
DominantSpec DominantSpec::sqrt_shift() { return {DominantTag::SqrtShift, {}}; }

DominantSpec DominantSpec::janowski(double A, double B) {
  require(-1.0 <= B && B < A && A <= 1.0, "janowski needs -1 <= B < A <= 1");
  DominantParams p;
  p.A = A;
  p.B = B;
  return {DominantTag::Janowski, p};
}

DominantSpec DominantSpec::sigmoid() { return {DominantTag::Sigmoid, {}}; }
DominantSpec DominantSpec::exp_linear() { return {DominantTag::ExpLinear, {}}; }
DominantSpec DominantSpec::crescent() { return {DominantTag::Crescent, {}}; }

DominantSpec DominantSpec::slit_a(double a) {
  require(a >= 0.0 && a <= 1.0, "slit-a needs 0 <= a <= 1");
  DominantParams p;
  p.a = a;
  return {DominantTag::SlitA, p};
}

DominantSpec DominantSpec::open_door_a(int n, double alpha, double beta) {
  require_open_door(n, alpha, beta);
  DominantParams p;
  p.n = n;
  p.alpha = alpha;
  p.beta = beta;
  return {DominantTag::OpenDoorA, p};
}

DominantSpec DominantSpec::open_door_b(int n, double alpha, double beta) {
  require_open_door(n, alpha, beta);
  DominantParams p;
  p.n = n;
  p.alpha = alpha;
  p.beta = beta;
  return {DominantTag::OpenDoorB, p};
}

DominantSpec DominantSpec::custom(TaylorSeries series) {
  DominantSpec h(DominantTag::Custom, {});
  h.custom_ = std::move(series);
  return h;
}

DominantSpec DominantSpec::from_name(std::string_view name, const DominantParams& p,
                                     const std::optional<TaylorSeries>& series) {
  const auto it = std::find_if(kNames.begin(), kNames.end(), [&](const auto& e) { return e.second == name; });
  if (it == kNames.end()) throw Error(ErrorKind::InvalidArgument, "unknown dominant '" + std::string(name) + "'");
  switch (it->first) {
    case DominantTag::HalfPlane: return half_plane();
    case DominantTag::Sector: return sector(p.gamma);
    case DominantTag::Exp: return exp();
    case DominantTag::SqrtShift: return sqrt_shift();
    case DominantTag::Janowski: return janowski(p.A, p.B);
    case DominantTag::Sigmoid: return sigmoid();
    case DominantTag::ExpLinear: return exp_linear();
    case DominantTag::Crescent: return crescent();
    case DominantTag::SlitA: return slit_a(p.a);
    case DominantTag::OpenDoorA: return open_door_a(p.n, p.alpha, p.beta);
    case DominantTag::OpenDoorB: return open_door_b(p.n, p.alpha, p.beta);
    case DominantTag::Custom:
      if (!series) throw Error(ErrorKind::InvalidArgument, "custom dominant needs a series");
      return custom(*series);
  }
  throw Error(ErrorKind::InvalidArgument, "unreachable dominant tag");
}

const TaylorSeries& DominantSpec::custom_series() const {
  if (!custom_) throw Error(ErrorKind::InvalidArgument, "not a custom dominant");
  return *custom_;
}

std::string_view DominantSpec::name() const noexcept {
  for (const auto& [tag, name] : kNames) {
    if (tag == tag_) return name;
  }
  return "unknown";
}

bool DominantSpec::has_exact_membership() const noexcept {
  switch (tag_) {
    case DominantTag::HalfPlane:
    case DominantTag::Sector:
    case DominantTag::Exp:
    case DominantTag::SqrtShift:
    case DominantTag::Janowski:
    case DominantTag::SlitA:
      return true;
    default:
      return false;
  }
}

cplx DominantSpec::origin_value() const { return evaluate_dominant(*this, 0.0); }

std::vector<std::string_view> dominant_names() {
  std::vector<std::string_view> out;
  for (const auto& e : kNames) out.push_back(e.second);
  return out;
}

// ---------------------------------------------------------------- evaluation

cplx evaluate_dominant(const DominantSpec& h, cplx z) {
  const auto& p = h.params();
  switch (h.tag()) {
    case DominantTag::HalfPlane: return (1.0 + z) / (1.0 - z);
    case DominantTag::Sector: return std::exp(p.gamma * std::log((1.0 + z) / (1.0 - z)));
    case DominantTag::Exp: return std::exp(z);
    case DominantTag::SqrtShift: return std::sqrt(1.0 + z);
    case DominantTag::Janowski: return (1.0 + p.A * z) / (1.0 + p.B * z);
    case DominantTag::Sigmoid: return 2.0 / (1.0 + std::exp(-z));
    case DominantTag::ExpLinear: return 1.0 + z * std::exp(z);
    case DominantTag::Crescent: return z + std::sqrt(1.0 + z * z);
    case DominantTag::SlitA: return (1.0 + p.a * z) / (1.0 - z);
    case DominantTag::OpenDoorA:
      return 1.0 + z + static_cast<double>(p.n) * z / (p.beta + p.alpha * (1.0 + z));
    case DominantTag::OpenDoorB:
      return (1.0 + z) / (1.0 - z) +
             2.0 * p.n * z / ((1.0 - z) * ((p.alpha + p.beta) + (p.alpha - p.beta) * z));
    case DominantTag::Custom: return evaluate(h.custom_series(), z);
  }
  return {};
}

cplx dominant_derivative(const DominantSpec& h, cplx z) {
  const auto& p = h.params();
  switch (h.tag()) {
    case DominantTag::HalfPlane: return 2.0 / ((1.0 - z) * (1.0 - z));
    case DominantTag::Sector:
      return p.gamma * evaluate_dominant(h, z) * 2.0 / ((1.0 + z) * (1.0 - z));
    case DominantTag::Exp: return std::exp(z);
    case DominantTag::SqrtShift: return 0.5 / std::sqrt(1.0 + z);
    case DominantTag::Janowski: return (p.A - p.B) / ((1.0 + p.B * z) * (1.0 + p.B * z));
    case DominantTag::Sigmoid: {
      const cplx e = std::exp(-z);
      return 2.0 * e / ((1.0 + e) * (1.0 + e));
    }
    case DominantTag::ExpLinear: return (1.0 + z) * std::exp(z);
    case DominantTag::Crescent: return 1.0 + z / std::sqrt(1.0 + z * z);
    case DominantTag::SlitA: return (1.0 + p.a) / ((1.0 - z) * (1.0 - z));
    case DominantTag::OpenDoorA: {
      const cplx d = p.beta + p.alpha * (1.0 + z);
      return 1.0 + p.n * (p.beta + p.alpha) / (d * d);
    }
    case DominantTag::OpenDoorB: {
      const double c = p.alpha + p.beta;
      const double d = p.alpha - p.beta;
      const cplx omz = 1.0 - z;
      const cplx lin = c + d * z;
      return 2.0 / (omz * omz) + 2.0 * p.n * (c + d * z * z) / (omz * omz * lin * lin);
    }
    case DominantTag::Custom: return evaluate(derivative(h.custom_series()), z);
  }
  return {};
}

TaylorSeries series_of(const DominantSpec& h, int order) {
  const auto& p = h.params();
  const TaylorSeries z = TaylorSeries::identity(order);
  const auto half_plane = [&] { return divide(poly({1.0, 1.0}, order), poly({1.0, -1.0}, order)); };
  switch (h.tag()) {
    case DominantTag::HalfPlane: return half_plane();
    case DominantTag::Sector: return power_real(half_plane(), p.gamma);
    case DominantTag::Exp: return exponential(z);
    case DominantTag::SqrtShift: return power_real(poly({1.0, 1.0}, order), 0.5);
    case DominantTag::Janowski: return divide(poly({1.0, p.A}, order), poly({1.0, p.B}, order));
    case DominantTag::Sigmoid:
      return divide(TaylorSeries::constant(2.0, order), add_constant(exponential(scale(z, -1.0)), 1.0));
    case DominantTag::ExpLinear: return add_constant(multiply(z, exponential(z)), 1.0);
    case DominantTag::Crescent: return z + power_real(poly({1.0, 0.0, 1.0}, order), 0.5);
    case DominantTag::SlitA: return divide(poly({1.0, p.a}, order), poly({1.0, -1.0}, order));
    case DominantTag::OpenDoorA:
      return add_constant(z, 1.0) +
             divide(poly({0.0, static_cast<double>(p.n)}, order), poly({p.beta + p.alpha, p.alpha}, order));
    case DominantTag::OpenDoorB: {
      const TaylorSeries den = multiply(poly({1.0, -1.0}, order), poly({p.alpha + p.beta, p.alpha - p.beta}, order));
      return half_plane() + divide(poly({0.0, 2.0 * p.n}, order), den);
    }
    case DominantTag::Custom: return h.custom_series().with_order(order);
  }
  return {};
}

// ---------------------------------------------------------------- membership

double membership_slack(const DominantSpec& h, cplx w) {
  const auto& p = h.params();
  switch (h.tag()) {
    case DominantTag::HalfPlane: return w.real();
    case DominantTag::Sector:
      if (w == cplx{}) return -p.gamma * std::numbers::pi / 2.0;
      return p.gamma * std::numbers::pi / 2.0 - std::abs(std::arg(w));
    case DominantTag::Exp:
      if (w == cplx{}) return -1.0;
      return 1.0 - std::abs(std::log(w));
    case DominantTag::SqrtShift: return std::min(1.0 - std::abs(w * w - 1.0), w.real());
    case DominantTag::Janowski: {
      const cplx den = p.A - p.B * w;
      if (std::abs(den) < 1e-300) return -1.0;
      return 1.0 - std::abs((w - 1.0) / den);
    }
    case DominantTag::SlitA: {
      // Preimage under the Moebius map w = (1+az)/(1-z): z = (w-1)/(w+a).
      const cplx den = w + p.a;
      if (std::abs(den) < 1e-300) return -1.0;
      return 1.0 - std::abs((w - 1.0) / den);
    }
    default:
      throw Error(ErrorKind::NoExactPredicate, std::string(h.name()));
  }
}

bool contains(const DominantSpec& h, cplx w) { return membership_slack(h, w) > 0.0; }

// ---------------------------------------------------------------- curves

BoundaryCurve boundary_curve(const DominantSpec& h, double r, int samples) {
  if (!(r > 0.0 && r < 1.0)) throw Error(ErrorKind::InvalidArgument, "boundary_curve needs 0 < r < 1");
  if (samples < 64) throw Error(ErrorKind::InvalidArgument, "boundary_curve needs at least 64 samples");
  BoundaryCurve c;
  c.radius = r;
  c.theta.resize(static_cast<std::size_t>(samples));
  c.points.resize(static_cast<std::size_t>(samples));
  for (int k = 0; k < samples; ++k) {
    c.theta[k] = 2.0 * std::numbers::pi * k / samples;
    c.points[k] = evaluate_dominant(h, std::polar(r, c.theta[k]));
  }
  const std::size_t cap = static_cast<std::size_t>(samples) * 16;
  // Chords are also split when they turn by more than 0.2 rad about h(0), which keeps
  // far loops of unbounded images (poles near r = 1) from being cut short.
  const cplx centre = evaluate_dominant(h, 0.0);
  for (bool refined = true; refined && c.points.size() < cap;) {
    refined = false;
    double xmin = c.points[0].real(), xmax = xmin, ymin = c.points[0].imag(), ymax = ymin;
    for (const cplx w : c.points) {
      xmin = std::min(xmin, w.real());
      xmax = std::max(xmax, w.real());
      ymin = std::min(ymin, w.imag());
      ymax = std::max(ymax, w.imag());
    }
    const double limit = 0.2 * std::hypot(xmax - xmin, ymax - ymin);
    std::vector<double> theta;
    std::vector<cplx> pts;
    theta.reserve(c.theta.size() * 2);
    pts.reserve(c.theta.size() * 2);
    const std::size_t m = c.points.size();
    for (std::size_t k = 0; k < m; ++k) {
      theta.push_back(c.theta[k]);
      pts.push_back(c.points[k]);
      const std::size_t next = (k + 1) % m;
      const bool long_chord = std::abs(c.points[next] - c.points[k]) >= limit && limit > 0.0;
      const bool wide_turn = std::abs(std::arg((c.points[next] - centre) / (c.points[k] - centre))) > 0.2;
      if (long_chord || wide_turn) {
        const double t_next = next == 0 ? 2.0 * std::numbers::pi : c.theta[next];
        const double mid = 0.5 * (c.theta[k] + t_next);
        theta.push_back(mid);
        pts.push_back(evaluate_dominant(h, std::polar(r, mid)));
        refined = true;
      }
    }
    c.theta = std::move(theta);
    c.points = std::move(pts);
  }
  return c;
}

// ---------------------------------------------------------------- geometry

GeometryResult geometry_check(const TaylorSeries& f, GeometryKind kind, const GeometryGrid& grid) {
  switch (kind) {
    case GeometryKind::Caratheodory:
      return scan_grid(grid, [&](cplx z) { return std::optional<double>(evaluate(f, z).real()); });
    case GeometryKind::TypicallyReal:
      return scan_grid(grid, [&](cplx z) -> std::optional<double> {
        if (std::abs(z.imag()) < 1e-12) return std::nullopt;
        return std::copysign(1.0, z.imag()) * evaluate(f, z).imag() / std::abs(z.imag());
      });
    case GeometryKind::Starlike: {
      require_normalized(f);
      const TaylorSeries d1 = derivative(f);
      return scan_grid(grid, [&](cplx z) { return finite_or_floor(z * evaluate(d1, z) / evaluate(f, z)); });
    }
    case GeometryKind::Convex: {
      require_normalized(add_constant(f, -f[0]));
      const TaylorSeries d1 = derivative(f);
      const TaylorSeries d2 = derivative(d1);
      return scan_grid(grid, [&](cplx z) { return finite_or_floor(1.0 + z * evaluate(d2, z) / evaluate(d1, z)); });
    }
    case GeometryKind::CloseToConvex:
      throw Error(ErrorKind::InvalidArgument, "close-to-convexity needs a reference function; use close_to_convex_wrt");
  }
  return {};
}

GeometryResult geometry_check(const ValuedSeries& f, GeometryKind kind, const GeometryGrid& grid) {
  if (kind != GeometryKind::Starlike && kind != GeometryKind::Convex) return geometry_check(f.to_taylor(), kind, grid);
  if (std::abs(f.exponent() - 1.0) > 1e-12) throw Error(ErrorKind::ValuationMismatch, "expected z times a unit");
  const TaylorSeries& u = f.unit();
  const TaylorSeries du = derivative(u);
  if (kind == GeometryKind::Starlike) {
    return scan_grid(grid, [&](cplx z) { return finite_or_floor(1.0 + z * evaluate(du, z) / evaluate(u, z)); });
  }
  // f' = u + z u', f'' = 2u' + z u''
  const TaylorSeries d2u = derivative(du);
  return scan_grid(grid, [&](cplx z) {
    const cplx d1 = evaluate(u, z) + z * evaluate(du, z);
    const cplx d2 = 2.0 * evaluate(du, z) + z * evaluate(d2u, z);
    return finite_or_floor(1.0 + z * d2 / d1);
  });
}

GeometryResult close_to_convex_wrt(const TaylorSeries& f, const TaylorSeries& g, const GeometryGrid& grid) {
  require_normalized(f);
  require_normalized(g);
  const TaylorSeries d1 = derivative(f);
  return scan_grid(grid, [&](cplx z) { return finite_or_floor(z * evaluate(d1, z) / evaluate(g, z)); });
}

// ---------------------------------------------------------------- JSON

void to_json(nlohmann::json& j, const DominantSpec& h) {
  const auto& p = h.params();
  nlohmann::json params = nlohmann::json::object();
  switch (h.tag()) {
    case DominantTag::Sector: params["gamma"] = p.gamma; break;
    case DominantTag::Janowski:
      params["A"] = p.A;
      params["B"] = p.B;
      break;
    case DominantTag::SlitA: params["a"] = p.a; break;
    case DominantTag::OpenDoorA:
    case DominantTag::OpenDoorB:
      params["n"] = p.n;
      params["alpha"] = p.alpha;
      params["beta"] = p.beta;
      break;
    case DominantTag::Custom: params["series"] = h.custom_series(); break;
    default: break;
  }
  j = nlohmann::json{{"tag", std::string(h.name())}, {"params", params}};
}

DominantSpec dominant_from_json(const nlohmann::json& j) {
  const auto params = j.value("params", nlohmann::json::object());
  DominantParams p;
  p.gamma = params.value("gamma", p.gamma);
  p.A = params.value("A", p.A);
  p.B = params.value("B", p.B);
  p.a = params.value("a", p.a);
  p.n = params.value("n", p.n);
  p.alpha = params.value("alpha", p.alpha);
  p.beta = params.value("beta", p.beta);
  std::optional<TaylorSeries> series;
  if (params.contains("series")) series = params.at("series").get<TaylorSeries>();
  return DominantSpec::from_name(j.at("tag").get<std::string>(), p, series);
}

void to_json(nlohmann::json& j, const BoundaryCurve& c) {
  std::vector<double> re, im;
  for (const cplx w : c.points) {
    re.push_back(w.real());
    im.push_back(w.imag());
  }
  j = nlohmann::json{{"radius", c.radius}, {"theta", c.theta}, {"re", re}, {"im", im}, {"closed", c.closed}};
}

}  // namespace subordlab
