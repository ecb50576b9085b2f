#pragma once

#include <cstddef>
#include <vector>

#include <gmpxx.h>

#include "recpoly/exact_poly.hpp"

namespace recpoly {

/// Integer polynomial, coefficient of x^k at index k, trailing zeros stripped.
using IntPolynomial = std::vector<mpz_class>;

/// Scales p by the positive lcm of its denominators.
IntPolynomial clear_denominators(const ExactPolynomial& p);

/// Sign of p(num/den) for den > 0, evaluated exactly.
int sign_at(const IntPolynomial& p, const mpz_class& num, const mpz_class& den);
int sign_at(const IntPolynomial& p, const mpq_class& x);

/// Sturm chain p, p', -rem(p, p'), ... built from sign-preserving pseudo-remainders
/// with positive content removed at every step.
class SturmSequence {
 public:
  explicit SturmSequence(IntPolynomial p);
  explicit SturmSequence(const ExactPolynomial& p) : SturmSequence(clear_denominators(p)) {}

  const std::vector<IntPolynomial>& chain() const { return chain_; }

  int sign_changes(const mpq_class& x) const;
  int sign_changes_at_pos_infinity() const;
  int sign_changes_at_neg_infinity() const;

  /// Distinct real roots in the half-open interval (a, b], a < b.
  int count_roots(const mpq_class& a, const mpq_class& b) const;
  int count_real_roots() const;

  /// gcd(p, p') is constant.
  bool squarefree() const;

 private:
  std::vector<IntPolynomial> chain_;
};

}  // namespace recpoly
