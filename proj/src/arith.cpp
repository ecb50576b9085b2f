#include "recpoly/arith.hpp"

#include <charconv>
#include <stdexcept>

namespace recpoly {

ArithmeticFunction ArithmeticFunction::sigma_power(unsigned k) {
  if (k == 0) {
    throw std::invalid_argument("sigma_k requires k >= 1");
  }
  return {ArithKind::SigmaPower, k};
}

std::string ArithmeticFunction::name() const {
  switch (kind) {
    case ArithKind::One: return "one";
    case ArithKind::Id: return "id";
    case ArithKind::Square: return "s";
    case ArithKind::Cube: return "cube";
    case ArithKind::Sigma: return "sigma";
    case ArithKind::SigmaPower: return "sigma_" + std::to_string(power);
  }
  return "?";
}

namespace {

// Sum of d^e over the divisors of n, trial division up to sqrt(n).
mpz_class divisor_power_sum(std::uint64_t n, unsigned e) {
  mpz_class total = 0;
  mpz_class term;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    mpz_ui_pow_ui(term.get_mpz_t(), d, e);
    total += term;
    const std::uint64_t q = n / d;
    if (q != d) {
      mpz_ui_pow_ui(term.get_mpz_t(), q, e);
      total += term;
    }
  }
  return total;
}

}  // namespace

mpz_class eval_arith(const ArithmeticFunction& f, std::uint64_t n) {
  if (n == 0) {
    throw std::domain_error("arithmetic functions are defined for n >= 1");
  }
  mpz_class v;
  switch (f.kind) {
    case ArithKind::One:
      return 1;
    case ArithKind::Id:
      mpz_set_ui(v.get_mpz_t(), n);
      return v;
    case ArithKind::Square:
      mpz_ui_pow_ui(v.get_mpz_t(), n, 2);
      return v;
    case ArithKind::Cube:
      mpz_ui_pow_ui(v.get_mpz_t(), n, 3);
      return v;
    case ArithKind::Sigma:
      return divisor_power_sum(n, 1);
    case ArithKind::SigmaPower:
      if (f.power == 0) throw std::invalid_argument("sigma_k requires k >= 1");
      return divisor_power_sum(n, f.power - 1);
  }
  throw std::logic_error("unknown arithmetic function");
}

std::optional<ArithmeticFunction> parse_arith(std::string_view name) {
  if (name == "one" || name == "1") return ArithmeticFunction::one();
  if (name == "id") return ArithmeticFunction::id();
  if (name == "s" || name == "square") return ArithmeticFunction::square();
  if (name == "cube") return ArithmeticFunction::cube();
  if (name == "sigma") return ArithmeticFunction::sigma();
  constexpr std::string_view prefix = "sigma_";
  if (name.starts_with(prefix)) {
    const auto digits = name.substr(prefix.size());
    unsigned k = 0;
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), k);
    if (ec == std::errc{} && ptr == digits.data() + digits.size() && k >= 1) {
      return ArithmeticFunction::sigma_power(k);
    }
  }
  return std::nullopt;
}

}  // namespace recpoly
