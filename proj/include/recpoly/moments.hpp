#pragma once

#include <optional>
#include <vector>

#include <gmpxx.h>

#include "recpoly/zeros.hpp"

namespace recpoly {

/// 4^m * binom(3m/2 - 1/2, m) by the falling-factorial product in exact
/// rationals. L_0 = 1. Throws std::logic_error if the result is not integral.
mpz_class L_closed(unsigned m);

/// sum_{k=0}^{m} binom(3m, k) binom(2m-1-k, m-1), m >= 1.
mpz_class L_sum(unsigned m);

/// [t^m] Phi(t)^m for m = 1..max_m with Phi(t) = (1+t)^3 / (1-t), computed
/// with truncated power series over the rationals. Entry m-1 holds L_m.
std::vector<mpq_class> L_series(unsigned max_m);

/// (1/n) sum_k x_k^m for m = 1..max_m, compensated summation.
std::vector<double> empirical_moments(const ZeroSet& zs, unsigned max_m);

struct MomentRecord {
  unsigned m = 0;
  mpz_class closed;
  mpz_class sum;
  mpq_class series;
  std::optional<double> empirical;
  std::optional<int> empirical_n;

  bool closed_equals_sum() const { return closed == sum; }
  bool closed_equals_series() const { return series == mpq_class(closed); }
};

/// Records for m = 1..max_m; empirical column filled when zeros are given.
std::vector<MomentRecord> moment_table(unsigned max_m, const ZeroSet* zeros = nullptr);

}  // namespace recpoly
