#pragma once

#include <vector>

#include "recpoly/zeros.hpp"

namespace recpoly {

/// Limit density v of the zeros of Q_n(-x) on (0, 6 sqrt 3). Both endpoints are
/// integrable singularities and are rejected.
double density_v(double x);

/// The two-term form v_{3/2,-1/2} on (0, sqrt(27/4)); v(x) = v_{3/2,-1/2}(x/4)/4.
double density_v32(double y);

/// z = ((1 - sqrt(1 - x^2/108)) / (1 + sqrt(1 - x^2/108)))^{1/6} on [0, 6 sqrt 3],
/// evaluated as z^6 = (x^2/108) / (1 + sqrt(1 - x^2/108))^2 to avoid cancellation at 0.
double z_of_x(double x);
/// Inverse of z_of_x: x = 12 sqrt 3 z^3 / (1 + z^6).
double x_of_z(double z);
/// v(x) dx expressed in z: (3/pi)(1 + z^4)/(1 + z^6), smooth on [0, 1].
double z_density(double z);

/// F(x) = (2 atan z + atan(2z - sqrt 3) + atan(2z + sqrt 3)) / pi.
double cdf_F(double x);

/// F(b) - F(a) for 0 <= a <= b <= 6 sqrt 3.
double interval_mass(double a, double b);
/// The same mass by the midpoint rule on the z-density.
double interval_mass_quadrature(double a, double b, int panels = 200000);

/// int_0^{6 sqrt 3} x^m v(x) dx, integrated in z by adaptive Gauss-Kronrod.
double moment_by_quadrature(unsigned m);

struct DistSample {
  double x;
  double z;
  double v;
  double F;
};
DistSample dist_sample(double x);

/// Two-sided Kolmogorov-Smirnov distance between the zeros' empirical CDF and F.
double ks_statistic(const ZeroSet& zs);

/// Equal-width bins on [0, 6 sqrt 3]. Bin i is (edges[i], edges[i+1]]; the
/// first bin also holds 0.
struct Histogram {
  int bins = 0;
  std::vector<double> edges;
  std::vector<long> counts;
  std::vector<double> normalized;  // counts / (n * width)

  double width() const { return edges[1] - edges[0]; }
  double center(int i) const { return 0.5 * (edges[static_cast<std::size_t>(i)] + edges[static_cast<std::size_t>(i) + 1]); }
};

Histogram histogram(const ZeroSet& zs, int bins);

/// Per-bin interval_mass / width, the height the histogram converges to.
std::vector<double> limit_bin_heights(const Histogram& h);
/// max_i |normalized_i - limit height_i|.
double histogram_max_deviation(const Histogram& h);

}  // namespace recpoly
