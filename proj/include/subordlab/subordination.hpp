#pragma once

// Numerical test of p < h (subordination) and construction of subordinate functions.

#include <cstdint>
#include <functional>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "subordlab/dominants.hpp"
#include "subordlab/power_series.hpp"

namespace subordlab {

enum class Holds { True, False, Inconclusive };

std::string_view to_string(Holds h) noexcept;

enum class MembershipPath { Auto, Predicate, Winding };

struct SubordinationConfig {
  std::vector<double> radii{0.5, 0.8, 0.95, 0.99};  // r_p
  double r_h = 0.999;
  int samples = 1024;        // M, points per p-circle
  int curve_samples = 4096;  // initial samples of the h-curve before refinement
  double tolerance = 1e-4;
  /// Auto uses the exact predicate when the dominant has one.
  MembershipPath path = MembershipPath::Auto;
};

struct RadiusVerdict {
  double radius = 0.0;
  Holds holds = Holds::Inconclusive;
  double margin = 0.0;
  cplx witness{};
  bool predicate_path = false;
  double tail = 0.0;
};

struct SubordinationVerdict {
  Holds holds = Holds::Inconclusive;
  double margin = 0.0;
  cplx witness{};
  SubordinationConfig config_used;
  int order = 0;  // N of p; 0 for callables
  std::vector<RadiusVerdict> per_radius;
  bool tail_flagged = false;  // some tail_estimate(p, r_p) exceeded kTailFlag
};

/// Series of h o omega.
TaylorSeries make_subordinate(const DominantSpec& h, const SchwarzSeries& omega);

/// Sum of argument increments of the closed polygon about w, rounded.
/// Throws PointOnCurve when w is within 1e-8 of a vertex.
int winding_number(const BoundaryCurve& curve, cplx w);

/// Polygon of a closed curve with block bounding boxes for fast winding and distance queries.
class CurveLocator {
 public:
  explicit CurveLocator(const BoundaryCurve& curve);

  struct Location {
    int winding = 0;
    double distance = 0.0;
  };
  Location locate(cplx w) const;

 private:
  struct Block {
    std::size_t begin, end;  // edges [begin, end)
    double xmin, xmax, ymin, ymax;
  };
  std::vector<cplx> pts_;
  std::vector<Block> blocks_;
};

SubordinationVerdict is_subordinate(const TaylorSeries& p, const DominantSpec& h, const SubordinationConfig& cfg = {});
/// Same test for p given pointwise (no tail estimate).
SubordinationVerdict is_subordinate(const std::function<cplx(cplx)>& p, const DominantSpec& h,
                                    const SubordinationConfig& cfg = {});

/// s_max * z * prod (z - a_k)/(1 - conj(a_k) z) with a_k drawn from the disk |a| <= 0.8.
SchwarzSeries schwarz_sample(std::uint64_t seed, int m, double s_max, int order = kDefaultOrder);

nlohmann::json verdict_to_json(const SubordinationVerdict& v);

}  // namespace subordlab
