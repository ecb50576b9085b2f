#pragma once

#include <vector>

namespace recpoly {

enum class ZeroMethod { Angle, SturmExact };

/// The n zeros of Q_n(-x), ascending in [0, 6 sqrt 3). The first is exactly 0.
/// residuals is filled by the angle method only: |scaled Q_n| at each
/// computed root (0 for the injected zero at the origin).
struct ZeroSet {
  int n = 0;
  std::vector<double> zeros;
  ZeroMethod method = ZeroMethod::Angle;
  std::vector<double> residuals;
};

/// lambda3 values with omega + n theta = k pi for k = 1..n, in order of k
/// (hence strictly decreasing).
std::vector<double> angle_brackets(int n, unsigned threads = 1);

/// The same roots as offsets lambda3 - (7 - 4 sqrt 3), which resolve them far
/// more finely near the lower end of the branch.
std::vector<double> angle_bracket_offsets(int n, unsigned threads = 1);

/// Zeros via bisection of the scaled closed form between consecutive brackets.
/// Throws std::runtime_error if a bracket fails to show a sign change.
ZeroSet zeros_angle(int n, unsigned threads = 1);

inline constexpr int kMaxExactDegree = 60;

/// Zeros by Sturm isolation over the exact integer polynomial Q_n(-x),
/// refined to width 1e-12. Requires 1 <= n <= kMaxExactDegree.
ZeroSet zeros_exact(int n);

/// min over the zeros of |zero - t|, for t in [0, 6 sqrt 3].
double min_distance_to(const ZeroSet& zs, double t);

/// The zeros of Q_n(x) itself (negated, ascending).
std::vector<double> q_roots(const ZeroSet& zs);

}  // namespace recpoly
