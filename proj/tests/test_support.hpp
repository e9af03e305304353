#pragma once

#include <cstdint>
#include <random>

#include "subordlab/power_series.hpp"

namespace subordlab::testing {

inline double max_coeff_diff(const TaylorSeries& a, const TaylorSeries& b) {
  const int n = std::min(a.order(), b.order());
  double m = 0.0;
  for (int k = 0; k <= n; ++k) m = std::max(m, std::abs(a[k] - b[k]));
  return m;
}

inline double max_coeff_diff(const TaylorSeries& a, const TaylorSeries& b, int through) {
  double m = 0.0;
  for (int k = 0; k <= through; ++k) m = std::max(m, std::abs(a[k] - b[k]));
  return m;
}

class SeriesGen {
 public:
  explicit SeriesGen(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

  cplx in_disk(double radius) {
    const double r = radius * std::sqrt(uniform(0.0, 1.0));
    return std::polar(r, uniform(0.0, 2.0 * 3.141592653589793));
  }

  /// Coefficients bounded in modulus by `bound`, optionally with c_0 = c0.
  TaylorSeries series(int order, double bound) {
    std::vector<cplx> c(static_cast<std::size_t>(order) + 1);
    for (auto& x : c) x = in_disk(bound);
    return TaylorSeries(std::move(c));
  }

  TaylorSeries unit_series(int order, double bound) {
    auto s = series(order, bound);
    return add_constant(s, 1.0 - s[0]);
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace subordlab::testing
