#pragma once

// Reference computations that deliberately avoid the library's own routes.

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <vector>

namespace oracle {

// Chebyshev U_m(t) from U_m = 2t U_{m-1} - U_{m-2}, U_0 = 1, U_1 = 2t.
inline mpq_class chebyshev_u(int m, mpq_class t) {
  t.canonicalize();
  if (m < 0) return 0;
  mpq_class prev = 1, cur = 2 * t;
  if (m == 0) return prev;
  for (int k = 2; k <= m; ++k) {
    mpq_class next = 2 * t * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

// Generalized Laguerre L^{(1)}_m(t):
// (k+1) L_{k+1} = (2k + 2 - t) L_k - (k+1) L_{k-1}, L_0 = 1, L_1 = 2 - t.
inline mpq_class laguerre1(int m, mpq_class t) {
  t.canonicalize();
  mpq_class prev = 1, cur = 2 - t;
  if (m == 0) return prev;
  for (int k = 1; k < m; ++k) {
    mpq_class next = ((2 * k + 2 - t) * cur - (k + 1) * prev) / (k + 1);
    prev = cur;
    cur = next;
  }
  return cur;
}

// p(0..n) via Euler's pentagonal number recurrence.
inline std::vector<mpz_class> partitions(int n) {
  std::vector<mpz_class> p(static_cast<std::size_t>(n) + 1, 0);
  p[0] = 1;
  for (int m = 1; m <= n; ++m) {
    mpz_class acc = 0;
    for (int k = 1;; ++k) {
      const int g1 = k * (3 * k - 1) / 2;
      const int g2 = k * (3 * k + 1) / 2;
      if (g1 > m) break;
      const int sign = (k % 2 == 1) ? 1 : -1;
      acc += sign * p[static_cast<std::size_t>(m - g1)];
      if (g2 <= m) acc += sign * p[static_cast<std::size_t>(m - g2)];
    }
    p[static_cast<std::size_t>(m)] = acc;
  }
  return p;
}

// Coefficient of q^n in prod (1 - q^k): (-1)^k at generalized pentagonal numbers.
inline int pentagonal_coefficient(int n) {
  for (int k = 0; k * (3 * k - 1) / 2 <= n; ++k) {
    if (k * (3 * k - 1) / 2 == n || k * (3 * k + 1) / 2 == n) return (k % 2 == 0) ? 1 : -1;
  }
  return 0;
}

using Series = std::vector<mpq_class>;  // truncated at a fixed length

inline Series mul(const Series& a, const Series& b) {
  Series c(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; i + j < c.size(); ++j) c[i + j] += a[i] * b[j];
  }
  return c;
}

// Series division a / b with b[0] != 0, by long division.
inline Series div(const Series& a, const Series& b) {
  Series q(a.size(), 0);
  Series r = a;
  for (std::size_t i = 0; i < q.size(); ++i) {
    q[i] = r[i] / b[0];
    for (std::size_t j = 0; i + j < r.size(); ++j) r[i + j] -= q[i] * b[j];
  }
  return q;
}

// L_1..L_M through series reversion: solve t = x (1+t)^3/(1-t) for t(x) by
// fixed-point iteration, then read off x t'(x)/t(x) = sum_m L_m x^m.
inline std::vector<mpq_class> moments_by_reversion(unsigned M) {
  const std::size_t len = M + 1;
  // u = t/x satisfies u = (1 + x u)^3 / (1 - x u).
  Series u(len, 0);
  u[0] = 1;
  for (unsigned it = 0; it <= M; ++it) {
    Series xu(len, 0);
    for (std::size_t i = 0; i + 1 < len; ++i) xu[i + 1] = u[i];
    Series one_plus = xu, one_minus(len, 0);
    one_plus[0] += 1;
    for (std::size_t i = 0; i < len; ++i) one_minus[i] = -xu[i];
    one_minus[0] += 1;
    u = div(mul(mul(one_plus, one_plus), one_plus), one_minus);
  }
  // x t'/t = 1 + x u'/u.
  Series xdu(len, 0);
  for (std::size_t i = 1; i < len; ++i) xdu[i] = mpq_class(static_cast<unsigned long>(i)) * u[i];
  const Series ratio = div(xdu, u);
  return {ratio.begin() + 1, ratio.end()};
}

// The real root of a cubic a3 l^3 + a2 l^2 + a1 l + a0 with negative
// discriminant, by Cardano's formula on the depressed cubic.
inline double cardano_single_real_root(double a3, double a2, double a1, double a0) {
  const double b = a2 / a3, c = a1 / a3, d = a0 / a3;
  const double p = c - b * b / 3.0;
  const double q = 2.0 * b * b * b / 27.0 - b * c / 3.0 + d;
  const double delta = q * q / 4.0 + p * p * p / 27.0;  // > 0 for a single real root
  const double s = std::sqrt(delta);
  const double t = std::cbrt(-q / 2.0 + s) + std::cbrt(-q / 2.0 - s);
  return t - b / 3.0;
}

// Exact value of a polynomial given by integer coefficients (index = power).
inline mpq_class horner(const std::vector<mpz_class>& c, const mpq_class& x) {
  mpq_class acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

}  // namespace oracle
