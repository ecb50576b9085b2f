#include "recpoly/cubicroots.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace recpoly {

namespace {

// -l^2 + 14 l - 1 = (l - kLambdaMin)(kLambdaMax - l).
double radicand(BranchPoint p) { return p.offset * (kLambdaMax - p.lambda3); }

void require_branch(BranchPoint p) {
  if (!(p.offset > 0.0) || !(radicand(p) > 0.0) || p.lambda3 > 1.0 - kUpperGuard) {
    throw std::domain_error("lambda3 must lie strictly inside (7 - 4 sqrt 3, 1)");
  }
}

}  // namespace

double discriminant(double x) { return x * x * x * x - 108.0 * x * x; }

double x_of_lambda(double lambda) {
  if (lambda == 0.0 || lambda == -1.0) {
    throw std::domain_error("x(lambda) has poles at lambda = 0 and lambda = -1");
  }
  const double d = lambda - 1.0;
  return d * d * d / (lambda * lambda + lambda);
}

double dx_dlambda(double lambda) {
  if (lambda == 0.0 || lambda == -1.0) {
    throw std::domain_error("x(lambda) has poles at lambda = 0 and lambda = -1");
  }
  const double d = lambda - 1.0;
  const double q = lambda * lambda + lambda;
  return d * d * (lambda * lambda + 4.0 * lambda + 1.0) / (q * q);
}

double lambda3_of_x(double x) {
  if (!(x > -kZeroBound) || !(x <= 0.0)) {
    throw std::domain_error("lambda3_of_x needs -6 sqrt 3 < x <= 0");
  }
  if (x == 0.0) return 1.0;

  // x(lambda) is increasing on the branch, so keep a sign bracket and take
  // Newton steps only when they stay inside it.
  double lo = kLambdaMin;
  double hi = 1.0;
  double l = 0.5 * (lo + hi);
  for (int iter = 0; iter < 200; ++iter) {
    const double f = x_of_lambda(l) - x;
    if (f == 0.0) return l;
    if (f < 0.0) lo = l;
    else hi = l;

    const double slope = dx_dlambda(l);
    double next = l - f / slope;
    if (!(next > lo && next < hi) || !std::isfinite(next)) next = 0.5 * (lo + hi);
    if (std::abs(next - l) <= 1e-16 * l || hi - lo <= 4.0 * std::numeric_limits<double>::epsilon()) {
      return next;
    }
    l = next;
  }
  return l;
}

ComplexPair complex_pair(double lambda3) { return complex_pair(BranchPoint::from_lambda(lambda3)); }

ComplexPair complex_pair(BranchPoint p) {
  require_branch(p);
  const double l = p.lambda3;
  const double q = l * l + l;
  const double mu = -0.5 * (l * l - 6.0 * l + 1.0) / q;
  const double nu = 0.5 * std::sqrt(radicand(p)) * (1.0 - l) / q;
  return {mu, nu};
}

CCoefficients c_coefficients(double lambda3) { return c_coefficients(BranchPoint::from_lambda(lambda3)); }

CCoefficients c_coefficients(BranchPoint p) {
  require_branch(p);
  const double l = p.lambda3;
  const double den = l * l + 4.0 * l + 1.0;
  const double re = (1.0 - l * l) / (2.0 * den);
  const double im = (1.0 - l) * (l * l + 10.0 * l + 1.0) / (2.0 * den * std::sqrt(radicand(p)));
  const double c3 = (l * l - 1.0) / den;
  return {{re, im}, c3};
}

PolarAngles polar_angles(double lambda3) { return polar_angles(BranchPoint::from_lambda(lambda3)); }

PolarAngles polar_angles(BranchPoint p) {
  const auto [mu, nu] = complex_pair(p);
  const auto c = c_coefficients(p);
  return {std::atan2(nu, mu), std::atan2(c.c1.imag(), c.c1.real())};
}

double eval_Q_scaled(int n, double lambda3) { return eval_Q_scaled(n, BranchPoint::from_lambda(lambda3)); }

double eval_Q_scaled(int n, BranchPoint p) {
  if (n < 1) throw std::domain_error("eval_Q_scaled needs n >= 1");
  const auto [theta, omega] = polar_angles(p);
  const auto c = c_coefficients(p);
  // lambda3^{3n/2} underflows to 0 for large n; the cosine alone decides the sign then.
  const double tail = c.c3 / (2.0 * std::abs(c.c1)) * std::exp(1.5 * n * std::log(p.lambda3));
  return std::cos(omega + n * theta) + tail;
}

double eval_Q_closed_form(int n, double lambda3) {
  if (n < 1) throw std::domain_error("closed form holds for n >= 1");
  const auto [theta, omega] = polar_angles(lambda3);
  const auto c = c_coefficients(lambda3);
  const double r = 1.0 / std::sqrt(lambda3);
  return 2.0 * std::pow(r, n) * std::abs(c.c1) * std::cos(omega + n * theta) +
         c.c3 * std::pow(lambda3, n);
}

FundamentalRoots fundamental_roots(double x, bool with_b_coeffs) {
  FundamentalRoots fr;
  fr.x = x;
  fr.lambda3 = lambda3_of_x(x);
  const auto [mu, nu] = complex_pair(fr.lambda3);
  const auto c = c_coefficients(fr.lambda3);
  const auto angles = polar_angles(fr.lambda3);
  fr.mu = mu;
  fr.nu = nu;
  fr.r = 1.0 / std::sqrt(fr.lambda3);
  fr.theta = angles.theta;
  fr.omega = angles.omega;
  fr.s_abs = std::abs(c.c1);
  fr.c3 = c.c3;
  fr.disc = discriminant(x);
  if (with_b_coeffs) {
    auto b = [](std::complex<double> l) {
      const auto q = l * l + l;
      return q * q / ((l - 1.0) * (l - 1.0) * (l * l + 4.0 * l + 1.0));
    };
    fr.b_coeffs = std::array<std::complex<double>, 3>{
        b({mu, nu}), b({mu, -nu}), b({fr.lambda3, 0.0})};
  }
  return fr;
}

}  // namespace recpoly
