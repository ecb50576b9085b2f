#include "recpoly/dist.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "recpoly/cubicroots.hpp"

namespace recpoly {

namespace {

using std::numbers::pi;
using std::numbers::sqrt3;

// sqrt(1 - x^2/108), factored to keep accuracy near x = 6 sqrt 3.
double root_term(double x) {
  const double t = (kZeroBound - x) * (kZeroBound + x) / 108.0;
  return std::sqrt(std::max(t, 0.0));
}

void require_closed_support(double x) {
  if (!(x >= 0.0 && x <= kZeroBound)) throw std::domain_error("x must lie in [0, 6 sqrt 3]");
}

}  // namespace

double density_v(double x) {
  if (!(x > 0.0 && x < kZeroBound)) throw std::domain_error("v is defined on the open interval (0, 6 sqrt 3)");
  const double s = root_term(x);
  const double num = std::pow(x, 4.0 / 3.0) + 9.0 * std::cbrt(16.0) * std::pow(1.0 + s, 4.0 / 3.0);
  const double den = std::pow(2.0, 8.0 / 3.0) * std::pow(3.0, 2.5) * pi * std::pow(x, 2.0 / 3.0) * s *
                     std::pow(1.0 + s, 2.0 / 3.0);
  return num / den;
}

double density_v32(double y) {
  const double edge = std::sqrt(27.0 / 4.0);
  if (!(y > 0.0 && y < edge)) throw std::domain_error("v_{3/2,-1/2} is defined on (0, sqrt(27/4))");
  const double z = 4.0 * y * y / 27.0;
  const double one_minus_z = 4.0 * (edge - y) * (edge + y) / 27.0;
  const double sq = std::sqrt(one_minus_z);
  const double common = 3.0 * pi * std::sqrt(3.0 * one_minus_z);
  return std::pow(1.0 + sq, 2.0 / 3.0) / common * std::cbrt(1.0 / z) +
         std::pow(1.0 + sq, -2.0 / 3.0) / common * std::cbrt(z);
}

double z_of_x(double x) {
  require_closed_support(x);
  const double s = root_term(x);
  const double z6 = (x * x / 108.0) / ((1.0 + s) * (1.0 + s));
  return std::pow(z6, 1.0 / 6.0);
}

double x_of_z(double z) {
  if (!(z >= 0.0 && z <= 1.0)) throw std::domain_error("z must lie in [0, 1]");
  const double z3 = z * z * z;
  return 12.0 * sqrt3 * z3 / (1.0 + z3 * z3);
}

double z_density(double z) {
  const double z2 = z * z;
  return 3.0 / pi * (1.0 + z2 * z2) / (1.0 + z2 * z2 * z2);
}

double cdf_F(double x) {
  const double z = z_of_x(x);
  return (2.0 * std::atan(z) + std::atan(2.0 * z - sqrt3) + std::atan(2.0 * z + sqrt3)) / pi;
}

double interval_mass(double a, double b) {
  require_closed_support(a);
  require_closed_support(b);
  if (a > b) throw std::invalid_argument("interval_mass needs a <= b");
  return cdf_F(b) - cdf_F(a);
}

double interval_mass_quadrature(double a, double b, int panels) {
  require_closed_support(a);
  require_closed_support(b);
  if (a > b) throw std::invalid_argument("interval_mass needs a <= b");
  if (panels < 1) throw std::invalid_argument("need at least one panel");
  const double za = z_of_x(a);
  const double zb = z_of_x(b);
  const double h = (zb - za) / panels;
  double sum = 0.0;
  for (int i = 0; i < panels; ++i) sum += z_density(za + (i + 0.5) * h);
  return sum * h;
}

double moment_by_quadrature(unsigned m) {
  auto integrand = [m](double z) { return std::pow(x_of_z(z), static_cast<int>(m)) * z_density(z); };
  double error = 0.0;
  return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(integrand, 0.0, 1.0, 15, 1e-15, &error);
}

DistSample dist_sample(double x) { return {x, z_of_x(x), density_v(x), cdf_F(x)}; }

double ks_statistic(const ZeroSet& zs) {
  if (zs.zeros.empty()) throw std::invalid_argument("KS statistic of an empty zero set");
  std::vector<double> sorted = zs.zeros;
  std::sort(sorted.begin(), sorted.end());
  const double n = static_cast<double>(sorted.size());
  double d = 0.0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const double f = cdf_F(std::clamp(sorted[i], 0.0, kZeroBound));
    d = std::max({d, (static_cast<double>(i) + 1.0) / n - f, f - static_cast<double>(i) / n});
  }
  return d;
}

Histogram histogram(const ZeroSet& zs, int bins) {
  if (bins < 1) throw std::invalid_argument("histogram needs at least one bin");
  Histogram h;
  h.bins = bins;
  h.edges.resize(static_cast<std::size_t>(bins) + 1);
  for (int i = 0; i <= bins; ++i) h.edges[static_cast<std::size_t>(i)] = kZeroBound * i / bins;
  h.counts.assign(static_cast<std::size_t>(bins), 0);
  for (double x : zs.zeros) {
    const auto it = std::lower_bound(h.edges.begin() + 1, h.edges.end(), x);
    const auto idx = std::min<std::ptrdiff_t>(it - (h.edges.begin() + 1), bins - 1);
    ++h.counts[static_cast<std::size_t>(idx)];
  }
  const double n = static_cast<double>(zs.zeros.size());
  h.normalized.resize(h.counts.size());
  for (std::size_t i = 0; i < h.counts.size(); ++i) {
    const double w = h.edges[i + 1] - h.edges[i];
    h.normalized[i] = n > 0 ? static_cast<double>(h.counts[i]) / (n * w) : 0.0;
  }
  return h;
}

std::vector<double> limit_bin_heights(const Histogram& h) {
  std::vector<double> out(static_cast<std::size_t>(h.bins));
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = interval_mass(h.edges[i], h.edges[i + 1]) / (h.edges[i + 1] - h.edges[i]);
  }
  return out;
}

double histogram_max_deviation(const Histogram& h) {
  const auto limit = limit_bin_heights(h);
  double d = 0.0;
  for (std::size_t i = 0; i < limit.size(); ++i) d = std::max(d, std::abs(h.normalized[i] - limit[i]));
  return d;
}

}  // namespace recpoly
