#pragma once

#include <array>
#include <complex>
#include <numbers>
#include <optional>

namespace recpoly {

/// Lower end 7 - 4*sqrt(3) of the branch of the positive real root.
inline constexpr double kLambdaMin = (2.0 - std::numbers::sqrt3) * (2.0 - std::numbers::sqrt3);
/// Upper end 7 + 4*sqrt(3) of the interval where -l^2 + 14 l - 1 > 0.
inline constexpr double kLambdaMax = (2.0 + std::numbers::sqrt3) * (2.0 + std::numbers::sqrt3);
/// 6*sqrt(3): the zeros of Q_n(-x) lie in [0, kZeroBound).
inline constexpr double kZeroBound = 6.0 * std::numbers::sqrt3;
/// Parameter values with lambda3 > 1 - kUpperGuard are rejected: the complex
/// pair collapses onto the triple root 1 there and x = 0 is handled exactly.
inline constexpr double kUpperGuard = 1e-8;

/// Closed-form data of the characteristic cubic
///   lambda^3 - (x+3) lambda^2 - (x-3) lambda - 1 = 0
/// at a point -6*sqrt(3) < x < 0, where the roots are
/// lambda1,2 = mu +- i*nu = r e^{+-i theta} and the real lambda3, and
/// Q_n(x) = c1 lambda1^n + conj(c1) lambda2^n + c3 lambda3^n for n >= 1.
struct FundamentalRoots {
  double x = 0.0;
  double lambda3 = 1.0;
  double mu = 1.0;
  double nu = 0.0;
  double r = 1.0;        // |lambda1| = 1 / sqrt(lambda3)
  double theta = 0.0;    // arg lambda1, in (0, pi)
  double omega = 0.0;    // arg c1, in (0, pi/2)
  double s_abs = 0.0;    // |c1|
  double c3 = 0.0;
  double disc = 0.0;     // x^4 - 108 x^2
  std::optional<std::array<std::complex<double>, 3>> b_coeffs;
};

/// A point of the lambda3 branch together with its offset from kLambdaMin.
/// Near the lower end the offset carries far more precision than lambda3
/// itself, and the radicand -l^2 + 14 l - 1 = offset * (kLambdaMax - l) is
/// evaluated from it without cancellation.
struct BranchPoint {
  double lambda3;
  double offset;

  static BranchPoint from_lambda(double l) { return {l, l - kLambdaMin}; }
  static BranchPoint from_offset(double d) { return {kLambdaMin + d, d}; }
};

struct ComplexPair {
  double mu;
  double nu;
};

struct CCoefficients {
  std::complex<double> c1;
  double c3;
};

struct PolarAngles {
  double theta;
  double omega;
};

double discriminant(double x);

/// (lambda - 1)^3 / (lambda^2 + lambda). Throws std::domain_error at the poles 0 and -1.
double x_of_lambda(double lambda);

/// d x / d lambda = (lambda-1)^2 (lambda^2+4 lambda+1) / (lambda^2+lambda)^2.
double dx_dlambda(double lambda);

/// The real root in (7 - 4 sqrt 3, 1] for x in (-6 sqrt 3, 0].
double lambda3_of_x(double x);

ComplexPair complex_pair(double lambda3);
ComplexPair complex_pair(BranchPoint p);
CCoefficients c_coefficients(double lambda3);
CCoefficients c_coefficients(BranchPoint p);
PolarAngles polar_angles(double lambda3);
PolarAngles polar_angles(BranchPoint p);

/// Q_n(x(lambda3)) / (2 r^n |c1|) = cos(omega + n theta) + c3/(2|c1|) lambda3^{3n/2}.
double eval_Q_scaled(int n, double lambda3);
double eval_Q_scaled(int n, BranchPoint p);

/// Q_n(x(lambda3)) from the closed form. Overflows for large n; meant for checks.
double eval_Q_closed_form(int n, double lambda3);

FundamentalRoots fundamental_roots(double x, bool with_b_coeffs = false);

}  // namespace recpoly
