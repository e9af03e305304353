#include <cmath>
#include <numbers>

#include "doctest.h"
#include "subordlab/errors.hpp"
#include "subordlab/subordination.hpp"
#include "test_support.hpp"

using namespace subordlab;
using subordlab::testing::max_coeff_diff;
using subordlab::testing::SeriesGen;

namespace {

BoundaryCurve circle(cplx centre, double radius, int n) {
  BoundaryCurve c;
  c.radius = radius;
  for (int k = 0; k < n; ++k) {
    c.theta.push_back(2.0 * std::numbers::pi * k / n);
    c.points.push_back(centre + std::polar(radius, c.theta.back()));
  }
  return c;
}

std::vector<DominantSpec> catalogue() {
  return {
      DominantSpec::half_plane(),        DominantSpec::sector(0.6),          DominantSpec::exp(),
      DominantSpec::sqrt_shift(),        DominantSpec::janowski(0.5, -0.5), DominantSpec::janowski(1.0, -1.0),
      DominantSpec::sigmoid(),           DominantSpec::exp_linear(),         DominantSpec::crescent(),
      DominantSpec::slit_a(0.4),         DominantSpec::open_door_a(1, 0, 1), DominantSpec::open_door_a(2, 1.0, 2.0),
      DominantSpec::open_door_b(1, 0, 1), DominantSpec::open_door_b(2, 2.0, 3.0),
  };
}

std::vector<DominantSpec> exact_catalogue() {
  std::vector<DominantSpec> out;
  for (const auto& h : catalogue()) {
    if (h.has_exact_membership()) out.push_back(h);
  }
  return out;
}

}  // namespace

TEST_CASE("make_subordinate") {
  const auto e = make_subordinate(DominantSpec::exp(), SchwarzSeries::scaled_identity(0.5, 8));
  double fact = 1.0;
  for (int k = 0; k <= 8; ++k) {
    if (k > 0) fact *= k;
    CHECK(std::abs(e[k] - std::pow(0.5, k) / fact) < 1e-15);
  }
  const auto hp = make_subordinate(DominantSpec::half_plane(), SchwarzSeries::scaled_identity(0.5, 10));
  CHECK(std::abs(hp[0] - 1.0) < 1e-15);
  for (int k = 1; k <= 10; ++k) CHECK(std::abs(hp[k] - std::pow(0.5, k - 1)) < 1e-14);
  const auto c = make_subordinate(DominantSpec::sqrt_shift(), SchwarzSeries::scaled_identity(0.0, 10));
  CHECK(max_coeff_diff(c, TaylorSeries::constant(1.0, 10)) < 1e-15);
}

TEST_CASE("winding_number") {
  const auto unit = circle(0.0, 1.0, 256);
  CHECK(winding_number(unit, 0.0) == 1);
  CHECK(winding_number(unit, 2.0) == 0);
  CHECK(winding_number(boundary_curve(DominantSpec::half_plane(), 0.9, 256), 1.0) == 1);
  auto twice = unit;
  twice.points.insert(twice.points.end(), unit.points.begin(), unit.points.end());
  CHECK(winding_number(twice, cplx(0.1, 0.2)) == 2);
  auto reversed = unit;
  std::reverse(reversed.points.begin(), reversed.points.end());
  CHECK(winding_number(reversed, 0.0) == -1);
  try {
    winding_number(unit, unit.points[5]);
    FAIL("expected PointOnCurve");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::PointOnCurve);
  }
}

TEST_CASE("CurveLocator agrees with argument increments and brute-force distance") {
  SeriesGen gen(21);
  for (const auto& h : catalogue()) {
    const auto curve = boundary_curve(h, 0.999, 1024);
    const CurveLocator loc(curve);
    for (int i = 0; i < 40; ++i) {
      const cplx w = evaluate_dominant(h, gen.in_disk(1.1));
      const auto l = loc.locate(w);
      if (l.distance < 1e-6) continue;
      CHECK(l.winding == winding_number(curve, w));
      double brute = 1e300;
      for (std::size_t k = 0; k < curve.points.size(); ++k) {
        const cplx a = curve.points[k], b = curve.points[(k + 1) % curve.points.size()];
        const cplx d = b - a;
        const double t = std::clamp(((w - a) * std::conj(d)).real() / std::norm(d), 0.0, 1.0);
        brute = std::min(brute, std::abs(w - a - t * d));
      }
      CHECK(l.distance == doctest::Approx(brute).epsilon(1e-12));
    }
  }
}

TEST_CASE("is_subordinate examples") {
  const auto p = make_subordinate(DominantSpec::exp(), SchwarzSeries::scaled_identity(0.5));
  const auto v = is_subordinate(p, DominantSpec::exp());
  CHECK(v.holds == Holds::True);
  // min of 1 - |z/2| at r = 0.99
  CHECK(v.margin == doctest::Approx(1.0 - 0.495).epsilon(1e-12));
  CHECK(v.per_radius.size() == 4);

  const auto off = is_subordinate(TaylorSeries{2.0, 1.0}, DominantSpec::exp());
  CHECK(off.holds == Holds::False);
  CHECK(off.margin == doctest::Approx(-1.0));
  CHECK(off.per_radius.empty());

  const auto lin = is_subordinate(TaylorSeries{1.0, 2.5}, DominantSpec::half_plane());
  CHECK(lin.holds == Holds::False);
  CHECK(lin.margin < 0.0);
  CHECK(lin.witness.real() < -0.9);
  CHECK(std::abs(lin.witness.imag()) < 1e-12);
  // Re(1+2.5z) > 0 on |z| = 0.2 but not at 0.5
  SubordinationConfig small;
  small.radii = {0.2, 0.3};
  CHECK(is_subordinate(TaylorSeries{1.0, 2.5}, DominantSpec::half_plane(), small).holds == Holds::True);

  // On the boundary within tolerance: 1 + z/(0.99) just touches Re w = 0 at r_p = 0.99.
  const auto edge = is_subordinate(TaylorSeries{1.0, 1.0 / 0.99}, DominantSpec::half_plane());
  CHECK(edge.holds == Holds::Inconclusive);
  CHECK(std::abs(edge.margin) < 1e-4);

  const auto j = verdict_to_json(v);
  CHECK(j["holds"] == "true");
  CHECK(j["config_used"]["M"] == 1024);
  CHECK(j["config_used"]["N"] == kDefaultOrder);
  CHECK(j["config_used"]["r_h"] == 0.999);
}

TEST_CASE("winding path on variants without a predicate") {
  const auto h = DominantSpec::open_door_a(1, 0.0, 1.0);
  const auto p = make_subordinate(h, SchwarzSeries::scaled_identity(0.7));
  const auto v = is_subordinate(p, h);
  CHECK(v.holds == Holds::True);
  CHECK_FALSE(v.per_radius.front().predicate_path);
  const auto bad = is_subordinate([&](cplx z) { return evaluate_dominant(h, 1.2 * z); }, h);
  CHECK(bad.holds == Holds::False);
  SubordinationConfig force;
  force.path = MembershipPath::Predicate;
  CHECK_THROWS_AS(is_subordinate(p, h, force), Error);
}

TEST_CASE("schwarz_sample") {
  const auto w = schwarz_sample(0, 0, 0.5);
  CHECK(max_coeff_diff(w.series(), TaylorSeries::monomial(0.5, 1)) < 1e-15);
  CHECK(w.margin() == 0.5);
  const auto a = schwarz_sample(42, 3, 0.9);
  const auto b = schwarz_sample(42, 3, 0.9);
  CHECK(max_coeff_diff(a.series(), b.series()) == 0.0);
  CHECK(max_coeff_diff(a.series(), schwarz_sample(43, 3, 0.9).series()) > 0.0);
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto s = schwarz_sample(seed, static_cast<int>(seed % 4), 0.95, 128);
    CHECK(std::abs(s.series()[0]) == 0.0);
    CHECK(s.boundary_max(4096) <= 1.0 - s.margin() + 1e-10);
  }
  CHECK_THROWS_AS(schwarz_sample(0, 4, 0.5), Error);
  CHECK_THROWS_AS(schwarz_sample(0, 1, 0.99), Error);
}

TEST_CASE("soundness on constructions") {
  const auto hs = catalogue();
  SeriesGen gen(99);
  int failures = 0;
  for (int i = 0; i < 500; ++i) {
    const auto& h = hs[static_cast<std::size_t>(i) % hs.size()];
    const double s = gen.uniform(0.2, 0.85);
    const auto omega = schwarz_sample(1000 + i, i % 4, s, 128);
    const auto v = is_subordinate(make_subordinate(h, omega), h);
    if (v.holds != Holds::True) {
      ++failures;
      MESSAGE(h.name() << " s=" << s << " margin=" << v.margin);
    }
  }
  CHECK(failures == 0);
}

TEST_CASE("predicate and winding paths agree") {
  const auto hs = exact_catalogue();
  SeriesGen gen(7);
  SubordinationConfig wind;
  wind.path = MembershipPath::Winding;
  int disagreements = 0, falses = 0;
  for (int i = 0; i < 500; ++i) {
    const auto& h = hs[static_cast<std::size_t>(i) % hs.size()];
    const double c = i % 2 == 0 ? gen.uniform(0.3, 1.0) : gen.uniform(1.03, 1.5);
    const auto p = [&](cplx z) { return evaluate_dominant(h, c * z); };
    const auto a = is_subordinate(p, h);
    const auto b = is_subordinate(p, h, wind);
    CHECK(a.per_radius.front().predicate_path);
    CHECK_FALSE(b.per_radius.front().predicate_path);
    falses += a.holds == Holds::False;
    if (a.holds != b.holds && a.holds != Holds::Inconclusive && b.holds != Holds::Inconclusive) {
      ++disagreements;
      MESSAGE(h.name() << " c=" << c << " " << to_string(a.holds) << " vs " << to_string(b.holds));
    }
  }
  CHECK(disagreements == 0);
  CHECK(falses > 200);
}

TEST_CASE("margins shrink as the test radius grows") {
  SeriesGen gen(3);
  for (int i = 0; i < 100; ++i) {
    const auto hs = exact_catalogue();
    const auto& h = hs[static_cast<std::size_t>(i) % hs.size()];
    const auto omega = schwarz_sample(500 + i, i % 4, gen.uniform(0.2, 0.85), 128);
    const auto v = is_subordinate(make_subordinate(h, omega), h);
    REQUIRE(v.holds == Holds::True);
    for (std::size_t k = 1; k < v.per_radius.size(); ++k) {
      CHECK(v.per_radius[k].margin <= v.per_radius[k - 1].margin + 1e-9);
      CHECK(v.per_radius[k - 1].holds == Holds::True);
    }
  }
}

TEST_CASE("negative control: h((1+eps) z) is not subordinate") {
  for (const auto& h : {DominantSpec::exp(), DominantSpec::half_plane()}) {
    const auto v = is_subordinate([&](cplx z) { return evaluate_dominant(h, 1.2 * z); }, h);
    CHECK(v.holds == Holds::False);
    CHECK(v.margin < -1e-4);
    SubordinationConfig wind;
    wind.path = MembershipPath::Winding;
    CHECK(is_subordinate([&](cplx z) { return evaluate_dominant(h, 1.2 * z); }, h, wind).holds == Holds::False);
  }
}
