#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace recpoly {

/// Dense univariate polynomial with exact rational coefficients.
///
/// coeffs()[k] is the coefficient of x^k. Trailing zeros are stripped, so the
/// zero polynomial has no stored coefficients and degree() == 0.
class ExactPolynomial {
 public:
  ExactPolynomial() = default;
  ExactPolynomial(std::initializer_list<mpq_class> cs);
  explicit ExactPolynomial(std::vector<mpq_class> cs);

  static ExactPolynomial constant(const mpq_class& c);
  static ExactPolynomial monomial(const mpq_class& c, std::size_t k);

  const std::vector<mpq_class>& coeffs() const { return coeffs_; }
  std::size_t degree() const { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }
  bool is_zero() const { return coeffs_.empty(); }

  /// Coefficient of x^k; zero beyond the degree.
  mpq_class coefficient(std::size_t k) const;
  mpq_class leading() const;

  /// True when every coefficient has denominator 1.
  bool is_integral() const;

  mpq_class evaluate(const mpq_class& x) const;
  double evaluate(double x) const;

  /// p(-x).
  ExactPolynomial reflect() const;
  /// x^k * p(x).
  ExactPolynomial shifted(std::size_t k) const;
  ExactPolynomial derivative() const;

  ExactPolynomial& operator+=(const ExactPolynomial& rhs);
  ExactPolynomial& operator-=(const ExactPolynomial& rhs);
  ExactPolynomial& operator*=(const mpq_class& c);

  /// this += c * rhs, without materializing the product.
  void add_scaled(const ExactPolynomial& rhs, const mpq_class& c);

  friend ExactPolynomial operator+(ExactPolynomial a, const ExactPolynomial& b) { return a += b; }
  friend ExactPolynomial operator-(ExactPolynomial a, const ExactPolynomial& b) { return a -= b; }
  friend ExactPolynomial operator*(ExactPolynomial a, const mpq_class& c) { return a *= c; }
  friend ExactPolynomial operator*(const ExactPolynomial& a, const ExactPolynomial& b);

  friend bool operator==(const ExactPolynomial& a, const ExactPolynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

  std::string to_string() const;

 private:
  void normalize();

  std::vector<mpq_class> coeffs_;
};

}  // namespace recpoly
