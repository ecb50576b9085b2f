#include "recpoly/polyfam.hpp"

#include <stdexcept>

namespace recpoly {

FamilySpec::FamilySpec(ArithmeticFunction g_, ArithmeticFunction h_) : g(g_), h(h_) {
  if (h.kind != ArithKind::One && h.kind != ArithKind::Id) {
    throw std::invalid_argument("denominator function h must be one or id");
  }
}

VolterraFamily::VolterraFamily(FamilySpec spec) : spec_(spec) {
  g_values_.emplace_back(0);
  polys_.push_back(ExactPolynomial::constant(1));
}

const ExactPolynomial& VolterraFamily::get(std::size_t n) {
  extend_to(n);
  return polys_[n];
}

std::span<const ExactPolynomial> VolterraFamily::prefix(std::size_t n) {
  extend_to(n);
  return {polys_.data(), n + 1};
}

void VolterraFamily::extend_to(std::size_t n) {
  while (g_values_.size() <= n) g_values_.push_back(eval_arith(spec_.g, g_values_.size()));
  polys_.reserve(n + 1);
  for (std::size_t m = polys_.size(); m <= n; ++m) {
    ExactPolynomial sum;
    for (std::size_t k = 1; k <= m; ++k) sum.add_scaled(polys_[m - k], mpq_class(g_values_[k]));
    ExactPolynomial next = sum.shifted(1);
    if (spec_.h.kind == ArithKind::Id) next *= mpq_class(1, m);
    polys_.push_back(std::move(next));
  }
}

ExactPolynomial volterra_poly(const FamilySpec& spec, std::size_t n) {
  VolterraFamily family(spec);
  return family.get(n);
}

std::vector<ExactPolynomial> four_term_prefix(std::size_t n) {
  std::vector<ExactPolynomial> q{
      ExactPolynomial{1},
      ExactPolynomial{0, 1},
      ExactPolynomial{0, 4, 1},
      ExactPolynomial{0, 9, 8, 1},
  };
  q.resize(std::min<std::size_t>(q.size(), n + 1));
  for (std::size_t m = 4; m <= n; ++m) {
    ExactPolynomial next = q[m - 1].shifted(1);
    next.add_scaled(q[m - 1], 3);
    next += q[m - 2].shifted(1);
    next.add_scaled(q[m - 2], -3);
    next += q[m - 3];
    q.push_back(std::move(next));
  }
  return q;
}

ExactPolynomial four_term_poly(std::size_t n) {
  if (n == 0) throw std::invalid_argument("four-term recursion starts at n = 1");
  return four_term_prefix(n).back();
}

namespace {

// C(a, k), zero whenever a < k (including negative a).
mpz_class binom(long a, long k) {
  if (k < 0 || a < k) return 0;
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(k));
  return out;
}

}  // namespace

TopCoefficients top_coefficients(const ArithmeticFunction& g, std::size_t n) {
  const mpz_class g2 = eval_arith(g, 2);
  const mpz_class g3 = eval_arith(g, 3);
  const mpz_class g4 = eval_arith(g, 4);
  const long m = static_cast<long>(n);

  TopCoefficients out;
  out[0] = mpz_class(1);
  if (m >= 1) out[1] = mpz_class(g2 * (m - 1));
  if (m >= 2) out[2] = mpz_class(g2 * g2 * binom(m - 2, 2) + g3 * (m - 2));
  if (m >= 3) {
    out[3] = mpz_class(g2 * g2 * g2 * binom(m - 3, 3) + 2 * g2 * g3 * binom(m - 3, 2) +
                       g4 * (m - 3));
  }
  return out;
}

mpz_class orthogonality_obstruction(const ArithmeticFunction& g) {
  const mpz_class g2 = eval_arith(g, 2);
  const mpz_class g3 = eval_arith(g, 3);
  const mpz_class g4 = eval_arith(g, 4);
  return g2 * g2 * g2 - 2 * g2 * g3 + g4;
}

ExactPolynomial three_term_remainder(const ArithmeticFunction& g, std::size_t n) {
  if (n < 3) throw std::invalid_argument("three-term remainder needs n >= 3");
  VolterraFamily family({g, ArithmeticFunction::one()});
  const auto p = family.prefix(n + 1);
  const mpz_class g2 = eval_arith(g, 2);
  const mpz_class g3 = eval_arith(g, 3);

  ExactPolynomial r = p[n + 1];
  r -= p[n].shifted(1);
  r.add_scaled(p[n], mpq_class(-g2));
  r.add_scaled(p[n - 1], mpq_class(g2 * g2 - g3));
  return r;
}

ExactPolynomial laguerre_transform(std::size_t n) {
  const ExactPolynomial q = volterra_poly({ArithmeticFunction::square(), ArithmeticFunction::one()}, n);
  std::vector<mpq_class> cs(q.coeffs().size());
  mpz_class factorial = 1;
  for (std::size_t k = 0; k < cs.size(); ++k) {
    if (k > 0) factorial *= static_cast<unsigned long>(k);
    cs[k] = q.coeffs()[k] / mpq_class(factorial);
  }
  return ExactPolynomial(std::move(cs));
}

bool log_concavity_check(const ExactPolynomial& p) {
  const auto& a = p.coeffs();
  for (const auto& c : a) {
    if (sgn(c) < 0) throw std::invalid_argument("log-concavity check needs nonnegative coefficients");
  }
  std::size_t lo = 0;
  while (lo < a.size() && sgn(a[lo]) == 0) ++lo;
  if (lo + 2 >= a.size()) return true;  // at most two support points
  for (std::size_t k = lo + 1; k + 1 < a.size(); ++k) {
    if (sgn(a[k]) == 0) return false;
    if (a[k] * a[k] < a[k - 1] * a[k + 1]) return false;
  }
  return true;
}

}  // namespace recpoly
