#pragma once

// Catalogue of dominant functions h and the class predicates (starlike, convex, ...)
// used to set up and judge subordination experiments.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "subordlab/power_series.hpp"

namespace subordlab {

enum class DominantTag {
  HalfPlane,   // (1+z)/(1-z)
  Sector,      // ((1+z)/(1-z))^gamma
  Exp,         // e^z
  SqrtShift,   // sqrt(1+z)
  Janowski,    // (1+Az)/(1+Bz)
  Sigmoid,     // 2/(1+e^{-z})
  ExpLinear,   // 1 + z e^z
  Crescent,    // z + sqrt(1+z^2)
  SlitA,       // (1+az)/(1-z)
  OpenDoorA,   // 1 + z + nz/(beta + alpha(1+z))
  OpenDoorB,   // (1+z)/(1-z) + 2nz/((1-z)((alpha+beta) + (alpha-beta)z))
  Custom,      // any series
};

/// Parameters of a dominant; only the fields relevant to the tag are meaningful.
struct DominantParams {
  double gamma = 1.0;
  double A = 0.0;
  double B = 0.0;
  double a = 0.0;
  int n = 1;
  double alpha = 0.0;
  double beta = 1.0;
};

class DominantSpec {
 public:
  static DominantSpec half_plane();
  static DominantSpec sector(double gamma);
  static DominantSpec exp();
  static DominantSpec sqrt_shift();
  static DominantSpec janowski(double A, double B);
  static DominantSpec sigmoid();
  static DominantSpec exp_linear();
  static DominantSpec crescent();
  static DominantSpec slit_a(double a);
  static DominantSpec open_door_a(int n, double alpha, double beta);
  static DominantSpec open_door_b(int n, double alpha, double beta);
  static DominantSpec custom(TaylorSeries series);

  /// Builds from a CLI/JSON tag name ("half-plane", "opendoor-a", ...).
  static DominantSpec from_name(std::string_view name, const DominantParams& params,
                                const std::optional<TaylorSeries>& series = std::nullopt);

  DominantTag tag() const noexcept { return tag_; }
  const DominantParams& params() const noexcept { return params_; }
  const TaylorSeries& custom_series() const;
  std::string_view name() const noexcept;
  bool has_exact_membership() const noexcept;
  /// Value at the origin (1 for every closed-form entry).
  cplx origin_value() const;

 private:
  DominantSpec(DominantTag tag, DominantParams params) : tag_(tag), params_(params) {}

  DominantTag tag_;
  DominantParams params_;
  std::optional<TaylorSeries> custom_;
};

std::vector<std::string_view> dominant_names();

cplx evaluate_dominant(const DominantSpec& h, cplx z);
cplx dominant_derivative(const DominantSpec& h, cplx z);
/// Taylor coefficients of h up to `order`, built from the series kernel.
TaylorSeries series_of(const DominantSpec& h, int order = kDefaultOrder);

/// Signed slack of the exact image predicate; positive iff w lies in h(D).
/// Throws NoExactPredicate for variants without a closed-form image test.
double membership_slack(const DominantSpec& h, cplx w);
bool contains(const DominantSpec& h, cplx w);

struct BoundaryCurve {
  double radius = 0.0;
  std::vector<double> theta;
  std::vector<cplx> points;
  bool closed = true;
};

/// h(r e^{i theta}) on `samples` equispaced angles, bisected where neighbouring points lie
/// farther apart than 0.2 times the curve's bounding-box diagonal or turn by more than 0.2 rad about h(0).
BoundaryCurve boundary_curve(const DominantSpec& h, double r, int samples);

enum class GeometryKind { Caratheodory, Starlike, Convex, TypicallyReal, CloseToConvex };

struct GeometryGrid {
  std::vector<double> radii{0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 0.95};
  int angles = 720;
};

struct GeometryResult {
  bool holds = false;
  double margin = 0.0;
  cplx witness{};
};

/// Grid checks of the class definitions:
///   Caratheodory  min Re f
///   Starlike      min Re(z f'/f), f of the form z + ...
///   Convex        min Re(1 + z f''/f'), applied to f - f(0)
///   TypicallyReal min sign(Im z) Im f(z) / |Im z| over non-real points
GeometryResult geometry_check(const TaylorSeries& f, GeometryKind kind, const GeometryGrid& grid = {});
GeometryResult geometry_check(const ValuedSeries& f, GeometryKind kind, const GeometryGrid& grid = {});
/// min Re(z f'/g) for f, g of the form z + ...
GeometryResult close_to_convex_wrt(const TaylorSeries& f, const TaylorSeries& g, const GeometryGrid& grid = {});

void to_json(nlohmann::json& j, const DominantSpec& h);
DominantSpec dominant_from_json(const nlohmann::json& j);
void to_json(nlohmann::json& j, const BoundaryCurve& c);

}  // namespace subordlab
