#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include <gmpxx.h>

#include "recpoly/arith.hpp"
#include "recpoly/exact_poly.hpp"

namespace recpoly {

/// Selects the family P_n^{g,h}(x) = (x / h(n)) * sum_{k=1}^{n} g(k) P_{n-k}(x), P_0 = 1.
/// Only h in {One, Id} is supported.
struct FamilySpec {
  ArithmeticFunction g = ArithmeticFunction::square();
  ArithmeticFunction h = ArithmeticFunction::one();

  FamilySpec() = default;
  FamilySpec(ArithmeticFunction g_, ArithmeticFunction h_);
};

/// Memoized prefix P_0, ..., P_n of one family. Each P_n depends on all of
/// its predecessors, so the cache only ever grows.
class VolterraFamily {
 public:
  explicit VolterraFamily(FamilySpec spec);

  const FamilySpec& spec() const { return spec_; }

  /// P_n, extending the cache as needed.
  const ExactPolynomial& get(std::size_t n);
  std::span<const ExactPolynomial> prefix(std::size_t n);

 private:
  void extend_to(std::size_t n);

  FamilySpec spec_;
  std::vector<mpz_class> g_values_;  // g_values_[k] = g(k), index 0 unused
  std::vector<ExactPolynomial> polys_;
};

ExactPolynomial volterra_poly(const FamilySpec& spec, std::size_t n);

/// Q_1 .. Q_n from the four-term recursion
/// Q_n = (x+3) Q_{n-1} + (x-3) Q_{n-2} + Q_{n-3}, seeded by Q_1, Q_2, Q_3.
/// Element 0 is Q_0 = 1.
std::vector<ExactPolynomial> four_term_prefix(std::size_t n);
ExactPolynomial four_term_poly(std::size_t n);

/// A_{n,n}, A_{n,n-1}, A_{n,n-2}, A_{n,n-3} of P_n^{g,1} from their closed forms.
/// Entries whose index would be negative are empty.
using TopCoefficients = std::array<std::optional<mpz_class>, 4>;
TopCoefficients top_coefficients(const ArithmeticFunction& g, std::size_t n);

/// g(2)^3 - 2 g(2) g(3) + g(4). Nonzero means P_n^{g,1} is not an orthogonal family.
mpz_class orthogonality_obstruction(const ArithmeticFunction& g);

/// P_{n+1} - x P_n - g(2) P_n - (g(3) - g(2)^2) P_{n-1} for the family (g, 1).
/// Requires n >= 3; its x^{n-2} coefficient is the orthogonality obstruction.
ExactPolynomial three_term_remainder(const ArithmeticFunction& g, std::size_t n);

/// The polynomial with coefficients A_{n,k}^{s,1} / k!. Coincides with P_n^{cube,id}.
ExactPolynomial laguerre_transform(std::size_t n);

/// A_k^2 >= A_{k-1} A_{k+1} across the support, with no internal zeros.
/// Throws std::invalid_argument on a negative coefficient.
bool log_concavity_check(const ExactPolynomial& p);

}  // namespace recpoly
