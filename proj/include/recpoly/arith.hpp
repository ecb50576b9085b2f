#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace recpoly {

enum class ArithKind { One, Id, Square, Cube, Sigma, SigmaPower };

/// A normalized, non-vanishing arithmetic function n -> g(n) with g(1) = 1.
///
/// SigmaPower(k) is the divisor power sum n -> sum_{d | n} d^(k-1); k = 2
/// coincides with Sigma and k = 1 counts divisors.
struct ArithmeticFunction {
  ArithKind kind = ArithKind::One;
  unsigned power = 0;  // only meaningful for SigmaPower

  static constexpr ArithmeticFunction one() { return {ArithKind::One, 0}; }
  static constexpr ArithmeticFunction id() { return {ArithKind::Id, 0}; }
  static constexpr ArithmeticFunction square() { return {ArithKind::Square, 0}; }
  static constexpr ArithmeticFunction cube() { return {ArithKind::Cube, 0}; }
  static constexpr ArithmeticFunction sigma() { return {ArithKind::Sigma, 0}; }
  static ArithmeticFunction sigma_power(unsigned k);

  std::string name() const;

  friend bool operator==(const ArithmeticFunction&, const ArithmeticFunction&) = default;
};

/// Exact value f(n). Throws std::domain_error for n = 0.
mpz_class eval_arith(const ArithmeticFunction& f, std::uint64_t n);

/// Parses the command-line spelling: one, id, s, cube, sigma, sigma_<k>.
std::optional<ArithmeticFunction> parse_arith(std::string_view name);

}  // namespace recpoly
