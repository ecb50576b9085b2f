#include "doctest.h"

#include <recpoly/cubicroots.hpp>
#include <recpoly/dist.hpp>
#include <recpoly/moments.hpp>
#include <recpoly/zeros.hpp>

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

using namespace recpoly;

namespace {

// v straight from its defining expression, no factoring.
double v_textbook(double x) {
  const double s = std::sqrt(1.0 - x * x / 108.0);
  const double num = std::pow(x, 4.0 / 3.0) + 9.0 * std::pow(2.0, 4.0 / 3.0) * std::pow(1.0 + s, 4.0 / 3.0);
  const double den = std::pow(2.0, 8.0 / 3.0) * std::pow(3.0, 2.5) * std::numbers::pi * std::pow(x, 2.0 / 3.0) * s *
                     std::pow(1.0 + s, 2.0 / 3.0);
  return num / den;
}

}  // namespace

TEST_SUITE("dist") {

TEST_CASE("density against its defining expression") {
  for (double x = 0.01; x < 10.39; x += 0.0731) CHECK(density_v(x) == doctest::Approx(v_textbook(x)).epsilon(1e-12));
}

TEST_CASE("density matches the scaled two-term form") {
  CHECK(density_v(6.0) == doctest::Approx(density_v32(1.5) / 4.0).epsilon(1e-12));
  CHECK(density_v(2.0) == doctest::Approx(density_v32(0.5) / 4.0).epsilon(1e-12));
  for (int i = 1; i < 2000; ++i) {
    const double x = kZeroBound * i / 2000.0;
    CHECK(density_v(x) == doctest::Approx(density_v32(x / 4.0) / 4.0).epsilon(1e-12));
    CHECK(density_v(x) > 0.0);
  }
}

TEST_CASE("two-term form: interior regularity and edge blow-up") {
  const double mid = std::sqrt(27.0 / 8.0);
  CHECK(std::isfinite(density_v32(mid)));
  const double edge = std::sqrt(27.0 / 4.0);
  double prev = 0.0;
  for (double eps : {1e-2, 1e-4, 1e-6, 1e-8}) {
    const double v = density_v32(edge - eps);
    CHECK(v > prev);
    prev = v;
  }
  CHECK_THROWS_AS(density_v32(edge), std::domain_error);
  CHECK_THROWS_AS(density_v32(0.0), std::domain_error);
}

TEST_CASE("density endpoints") {
  CHECK_THROWS_AS(density_v(0.0), std::domain_error);
  CHECK_THROWS_AS(density_v(kZeroBound), std::domain_error);
  const double c3 = density_v(1e-3) * std::pow(1e-3, 2.0 / 3.0);
  const double c6 = density_v(1e-6) * std::pow(1e-6, 2.0 / 3.0);
  CHECK(c6 > 0.0);
  CHECK(c3 == doctest::Approx(c6).epsilon(1e-2));
}

TEST_CASE("z substitution") {
  CHECK(z_of_x(0.0) == 0.0);
  CHECK(z_of_x(kZeroBound) == doctest::Approx(1.0).epsilon(1e-15));
  for (double x = 0.001; x < 10.39; x += 0.1) {
    const double s = std::sqrt(1.0 - x * x / 108.0);
    CHECK(z_of_x(x) == doctest::Approx(std::pow((1 - s) / (1 + s), 1.0 / 6.0)).epsilon(1e-9));
    CHECK(x_of_z(z_of_x(x)) == doctest::Approx(x).epsilon(1e-13));
  }
  // accurate near 0 where the textbook form cancels
  CHECK(z_of_x(1e-9) == doctest::Approx(std::pow(1e-18 / 432.0, 1.0 / 6.0)).epsilon(1e-12));
}

TEST_CASE("CDF values") {
  CHECK(cdf_F(0.0) == 0.0);
  CHECK(cdf_F(kZeroBound) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK_THROWS_AS(cdf_F(-0.1), std::domain_error);
  CHECK_THROWS_AS(cdf_F(10.5), std::domain_error);
}

TEST_CASE("CDF derivative is v") {
  for (double x : {1.0, 5.0, 9.0}) {
    const double h = 1e-6;
    CHECK((cdf_F(x + h) - cdf_F(x - h)) / (2 * h) == doctest::Approx(density_v(x)).epsilon(1e-6));
  }
}

TEST_CASE("z-derivative identity 3(1+z^4)/(1+z^6)") {
  auto G = [](double z) { return 2 * std::atan(z) + std::atan(2 * z - std::sqrt(3.0)) + std::atan(2 * z + std::sqrt(3.0)); };
  for (double z = 0.01; z < 1.0; z += 0.03) {
    const double h = 1e-5;
    const double fd = (G(z + h) - G(z - h)) / (2 * h);
    CHECK(fd == doctest::Approx(3 * (1 + std::pow(z, 4)) / (1 + std::pow(z, 6))).epsilon(1e-8));
    CHECK(z_density(z) == doctest::Approx(fd / std::numbers::pi).epsilon(1e-8));
  }
}

TEST_CASE("CDF is monotone on a fine grid") {
  double prev = 0.0;
  for (int i = 0; i <= 100000; ++i) {
    const double f = cdf_F(kZeroBound * i / 100000.0);
    CHECK_MESSAGE((f >= prev && f <= 1.0), "at i = " << i);
    prev = f;
  }
}

TEST_CASE("interval masses") {
  CHECK(interval_mass(0.0, kZeroBound) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(interval_mass(3.0, 3.0) == 0.0);
  CHECK(interval_mass(0.0, 4.0) == doctest::Approx(cdf_F(4.0)));
  CHECK(std::abs(interval_mass_quadrature(0.0, 4.0) - interval_mass(0.0, 4.0)) < 1e-10);
  CHECK(std::abs(interval_mass_quadrature(2.5, 10.0) - interval_mass(2.5, 10.0)) < 1e-10);
  CHECK(std::abs(interval_mass_quadrature(0.0, kZeroBound) - 1.0) < 1e-10);
  CHECK_THROWS_AS(interval_mass(2.0, 1.0), std::invalid_argument);
}

TEST_CASE("moment closure") {
  CHECK(moment_by_quadrature(0) == doctest::Approx(1.0).epsilon(1e-12));
  for (unsigned m = 1; m <= 8; ++m) CHECK(moment_by_quadrature(m) == doctest::Approx(L_closed(m).get_d()).epsilon(1e-8));
}

TEST_CASE("samples") {
  const auto s = dist_sample(4.0);
  CHECK(s.x == 4.0);
  CHECK(s.z == doctest::Approx(z_of_x(4.0)));
  CHECK(s.v == doctest::Approx(density_v(4.0)));
  CHECK(s.F == doctest::Approx(cdf_F(4.0)));
}

TEST_CASE("KS statistic") {
  CHECK(ks_statistic(ZeroSet{1, {0.0}, ZeroMethod::Angle, {0.0}}) == 1.0);
  // brute force over the empirical step function
  const auto z = zeros_angle(60);
  double want = 0.0;
  const double n = 60.0;
  for (std::size_t i = 0; i < z.zeros.size(); ++i) {
    const double F = cdf_F(z.zeros[i]);
    want = std::max({want, std::abs((i + 1) / n - F), std::abs(i / n - F)});
  }
  CHECK(ks_statistic(z) == doctest::Approx(want).epsilon(1e-15));
  CHECK_THROWS_AS(ks_statistic(ZeroSet{}), std::invalid_argument);
}

TEST_CASE("histogram") {
  const ZeroSet two{2, {0.0, 4.0}, ZeroMethod::SturmExact, {}};
  const auto h2 = histogram(two, 2);
  CHECK(h2.counts == std::vector<long>{2, 0});
  CHECK(h2.edges.size() == 3);
  CHECK(h2.edges.back() == kZeroBound);

  // a zero on an interior boundary goes to the left bin
  const double edge = kZeroBound / 4.0;
  const auto hb = histogram(ZeroSet{2, {0.0, edge}, ZeroMethod::SturmExact, {}}, 4);
  CHECK(hb.counts[0] == 2);

  const auto z = zeros_angle(1000);
  const auto h = histogram(z, 100);
  CHECK(std::accumulate(h.counts.begin(), h.counts.end(), 0L) == 1000);
  double area = 0.0;
  for (double v : h.normalized) area += v * h.width();
  CHECK(area == doctest::Approx(1.0));
  CHECK(histogram_max_deviation(h) < 0.05);
  const auto lim = limit_bin_heights(h);
  CHECK(lim.size() == 100);
  CHECK(h.center(0) == doctest::Approx(h.width() / 2));

  const auto h1 = histogram(zeros_angle(1), 1);
  CHECK(h1.counts[0] == 1);
  CHECK(h1.normalized[0] * h1.width() == doctest::Approx(1.0));
  CHECK_THROWS_AS(histogram(z, 0), std::invalid_argument);
}

}
