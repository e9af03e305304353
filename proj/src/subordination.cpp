#include "subordlab/subordination.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "subordlab/errors.hpp"

namespace subordlab {

namespace {

constexpr double kOriginTolerance = 1e-8;
constexpr std::size_t kBlockSize = 32;
constexpr double kInf = std::numeric_limits<double>::infinity();

double uniform01(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

double segment_distance(cplx a, cplx b, cplx w) {
  const cplx d = b - a;
  const double len2 = std::norm(d);
  double t = len2 > 0.0 ? ((w - a) * std::conj(d)).real() / len2 : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  return std::abs(w - (a + t * d));
}

// >0 when w is left of the directed line a->b
double is_left(cplx a, cplx b, cplx w) {
  return (b.real() - a.real()) * (w.imag() - a.imag()) - (w.real() - a.real()) * (b.imag() - a.imag());
}

Holds classify(double margin, double tol) {
  if (margin > tol) return Holds::True;
  if (margin < -tol) return Holds::False;
  return Holds::Inconclusive;
}

SubordinationVerdict run(const std::function<cplx(cplx)>& p, const DominantSpec& h, const SubordinationConfig& cfg,
                         const TaylorSeries* series) {
  if (cfg.radii.empty() || cfg.samples < 8) throw Error(ErrorKind::InvalidArgument, "need radii and M >= 8");
  SubordinationVerdict v;
  v.config_used = cfg;
  v.order = series ? series->order() : 0;

  const cplx p0 = p(0.0);
  const cplx h0 = evaluate_dominant(h, 0.0);
  if (!(std::abs(p0 - h0) <= kOriginTolerance)) {
    v.holds = Holds::False;
    v.margin = std::isfinite(std::abs(p0 - h0)) ? -std::abs(p0 - h0) : -kInf;
    v.witness = 0.0;
    return v;
  }

  bool predicate = h.has_exact_membership();
  if (cfg.path == MembershipPath::Predicate && !predicate) {
    throw Error(ErrorKind::NoExactPredicate, std::string(h.name()));
  }
  if (cfg.path == MembershipPath::Winding) predicate = false;
  std::optional<CurveLocator> locator;
  if (!predicate) locator.emplace(boundary_curve(h, cfg.r_h, cfg.curve_samples));

  v.margin = kInf;
  bool any_false = false, any_inconclusive = false;
  for (const double r : cfg.radii) {
    RadiusVerdict rv;
    rv.radius = r;
    rv.predicate_path = predicate;
    rv.margin = kInf;
    rv.tail = series ? tail_estimate(*series, r) : 0.0;
    v.tail_flagged = v.tail_flagged || rv.tail > kTailFlag;
    for (int k = 0; k < cfg.samples; ++k) {
      const cplx z = std::polar(r, 2.0 * std::numbers::pi * k / cfg.samples);
      const cplx w = p(z);
      double m;
      if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) {
        m = -kInf;
      } else if (predicate) {
        m = membership_slack(h, w);
      } else {
        const auto loc = locator->locate(w);
        m = loc.winding == 1 ? loc.distance : -loc.distance;
      }
      if (m < rv.margin) {
        rv.margin = m;
        rv.witness = z;
      }
    }
    rv.holds = classify(rv.margin, cfg.tolerance);
    any_false = any_false || rv.holds == Holds::False;
    any_inconclusive = any_inconclusive || rv.holds == Holds::Inconclusive;
    if (rv.margin < v.margin) {
      v.margin = rv.margin;
      v.witness = rv.witness;
    }
    v.per_radius.push_back(rv);
  }
  v.holds = any_false ? Holds::False : any_inconclusive ? Holds::Inconclusive : Holds::True;
  return v;
}

nlohmann::json finite_or_null(double x) { return std::isfinite(x) ? nlohmann::json(x) : nlohmann::json(nullptr); }

}  // namespace

std::string_view to_string(Holds h) noexcept {
  switch (h) {
    case Holds::True: return "true";
    case Holds::False: return "false";
    case Holds::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

TaylorSeries make_subordinate(const DominantSpec& h, const SchwarzSeries& omega) {
  return compose(series_of(h, omega.order()), omega);
}

int winding_number(const BoundaryCurve& curve, cplx w) {
  const auto& pts = curve.points;
  if (pts.size() < 3) throw Error(ErrorKind::InvalidArgument, "curve needs at least three points");
  for (const cplx q : pts) {
    if (std::abs(q - w) <= 1e-8) throw Error(ErrorKind::PointOnCurve, "point lies on the curve");
  }
  double total = 0.0;
  for (std::size_t k = 0; k < pts.size(); ++k) {
    const cplx a = pts[k] - w;
    const cplx b = pts[(k + 1) % pts.size()] - w;
    total += std::arg(b / a);
  }
  return static_cast<int>(std::lround(total / (2.0 * std::numbers::pi)));
}

CurveLocator::CurveLocator(const BoundaryCurve& curve) : pts_(curve.points) {
  if (pts_.size() < 3) throw Error(ErrorKind::InvalidArgument, "curve needs at least three points");
  pts_.push_back(pts_.front());
  const std::size_t edges = pts_.size() - 1;
  for (std::size_t b = 0; b < edges; b += kBlockSize) {
    Block blk{b, std::min(b + kBlockSize, edges), kInf, -kInf, kInf, -kInf};
    for (std::size_t k = blk.begin; k <= blk.end; ++k) {
      blk.xmin = std::min(blk.xmin, pts_[k].real());
      blk.xmax = std::max(blk.xmax, pts_[k].real());
      blk.ymin = std::min(blk.ymin, pts_[k].imag());
      blk.ymax = std::max(blk.ymax, pts_[k].imag());
    }
    blocks_.push_back(blk);
  }
}

CurveLocator::Location CurveLocator::locate(cplx w) const {
  const double x = w.real(), y = w.imag();
  Location loc;
  // Signed crossings of the rightward ray from w.
  for (const Block& blk : blocks_) {
    if (y < blk.ymin || y > blk.ymax || x > blk.xmax) continue;
    for (std::size_t k = blk.begin; k < blk.end; ++k) {
      const cplx a = pts_[k], b = pts_[k + 1];
      if (a.imag() <= y) {
        if (b.imag() > y && is_left(a, b, w) > 0.0) ++loc.winding;
      } else if (b.imag() <= y && is_left(a, b, w) < 0.0) {
        --loc.winding;
      }
    }
  }
  // Nearest edge, visiting boxes in order of their distance (min-heap).
  thread_local std::vector<std::pair<double, std::size_t>> heap;
  heap.clear();
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    const Block& blk = blocks_[i];
    const double dx = std::max({blk.xmin - x, 0.0, x - blk.xmax});
    const double dy = std::max({blk.ymin - y, 0.0, y - blk.ymax});
    heap.emplace_back(dx * dx + dy * dy, i);
  }
  const auto later = [](const auto& a, const auto& b) { return a.first > b.first; };
  std::make_heap(heap.begin(), heap.end(), later);
  double best = kInf;
  while (!heap.empty() && heap.front().first < best * best) {
    const std::size_t i = heap.front().second;
    std::pop_heap(heap.begin(), heap.end(), later);
    heap.pop_back();
    for (std::size_t k = blocks_[i].begin; k < blocks_[i].end; ++k) {
      best = std::min(best, segment_distance(pts_[k], pts_[k + 1], w));
    }
  }
  loc.distance = best;
  return loc;
}

SubordinationVerdict is_subordinate(const TaylorSeries& p, const DominantSpec& h, const SubordinationConfig& cfg) {
  return run([&](cplx z) { return evaluate(p, z); }, h, cfg, &p);
}

SubordinationVerdict is_subordinate(const std::function<cplx(cplx)>& p, const DominantSpec& h,
                                    const SubordinationConfig& cfg) {
  return run(p, h, cfg, nullptr);
}

SchwarzSeries schwarz_sample(std::uint64_t seed, int m, double s_max, int order) {
  if (m < 0 || m > 3) throw Error(ErrorKind::InvalidArgument, "schwarz_sample needs 0 <= m <= 3");
  if (!(s_max > 0.0 && s_max <= 0.95)) throw Error(ErrorKind::InvalidArgument, "schwarz_sample needs 0 < s_max <= 0.95");
  std::mt19937_64 rng(seed);
  std::vector<cplx> zeros;
  for (int k = 0; k < m; ++k) {
    const double rad = 0.8 * std::sqrt(uniform01(rng));
    zeros.push_back(std::polar(rad, 2.0 * std::numbers::pi * uniform01(rng)));
  }
  return SchwarzSeries::blaschke(s_max, zeros, order);
}

nlohmann::json verdict_to_json(const SubordinationVerdict& v) {
  nlohmann::json radii = nlohmann::json::array();
  for (const auto& rv : v.per_radius) {
    radii.push_back({{"r_p", rv.radius},
                     {"holds", to_string(rv.holds)},
                     {"margin", finite_or_null(rv.margin)},
                     {"witness", {{"re", rv.witness.real()}, {"im", rv.witness.imag()}}},
                     {"path", rv.predicate_path ? "predicate" : "winding"},
                     {"tail", rv.tail}});
  }
  return {{"holds", to_string(v.holds)},
          {"margin", finite_or_null(v.margin)},
          {"witness", {{"re", v.witness.real()}, {"im", v.witness.imag()}}},
          {"config_used",
           {{"r_p", v.config_used.radii},
            {"r_h", v.config_used.r_h},
            {"M", v.config_used.samples},
            {"N", v.order},
            {"tolerance", v.config_used.tolerance}}},
          {"per_radius", radii},
          {"tail_flagged", v.tail_flagged}};
}

}  // namespace subordlab
