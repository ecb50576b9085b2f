#include "recpoly/moments.hpp"

#include <cmath>
#include <stdexcept>

namespace recpoly {

namespace {

// Power series truncated after t^order.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(std::size_t order) : c_(order + 1) {}

  mpq_class& operator[](std::size_t k) { return c_[k]; }
  const mpq_class& operator[](std::size_t k) const { return c_[k]; }
  std::size_t order() const { return c_.size() - 1; }

  TruncatedSeries operator*(const TruncatedSeries& rhs) const {
    TruncatedSeries out(order());
    for (std::size_t i = 0; i <= order(); ++i) {
      if (sgn(c_[i]) == 0) continue;
      for (std::size_t j = 0; i + j <= order(); ++j) out.c_[i + j] += c_[i] * rhs.c_[j];
    }
    return out;
  }

  // 1 / this; needs a nonzero constant term.
  TruncatedSeries inverse() const {
    if (sgn(c_[0]) == 0) throw std::domain_error("series with zero constant term is not invertible");
    TruncatedSeries out(order());
    out.c_[0] = 1 / c_[0];
    for (std::size_t k = 1; k <= order(); ++k) {
      mpq_class acc = 0;
      for (std::size_t j = 1; j <= k; ++j) acc += c_[j] * out.c_[k - j];
      out.c_[k] = -acc / c_[0];
    }
    return out;
  }

 private:
  std::vector<mpq_class> c_;
};

mpz_class binom(unsigned long a, unsigned long k) {
  if (a < k) return 0;
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), a, k);
  return out;
}

}  // namespace

mpz_class L_closed(unsigned m) {
  if (m == 0) return 1;
  // 4^m * prod_{j<m} (3m - 1 - 2j)/2 / m!  =  2^m * prod (3m - 1 - 2j) / m!
  mpq_class value = 1;
  for (unsigned j = 0; j < m; ++j) value *= mpq_class(3 * static_cast<long>(m) - 1 - 2 * static_cast<long>(j), 2);
  mpz_class four_pow;
  mpz_ui_pow_ui(four_pow.get_mpz_t(), 4, m);
  mpz_class factorial;
  mpz_fac_ui(factorial.get_mpz_t(), m);
  value *= mpq_class(four_pow, factorial);
  value.canonicalize();
  if (value.get_den() != 1) throw std::logic_error("closed-form moment is not an integer");
  return value.get_num();
}

mpz_class L_sum(unsigned m) {
  if (m == 0) throw std::invalid_argument("L_sum needs m >= 1");
  mpz_class total = 0;
  for (unsigned k = 0; k <= m; ++k) {
    const long upper = 2 * static_cast<long>(m) - 1 - static_cast<long>(k);
    if (upper < 0) continue;
    total += binom(3UL * m, k) * binom(static_cast<unsigned long>(upper), m - 1);
  }
  return total;
}

std::vector<mpq_class> L_series(unsigned max_m) {
  if (max_m == 0) throw std::invalid_argument("L_series needs max_m >= 1");
  TruncatedSeries cube(max_m);  // (1 + t)^3
  const int binom3[] = {1, 3, 3, 1};
  for (std::size_t k = 0; k <= 3 && k <= max_m; ++k) cube[k] = binom3[k];
  TruncatedSeries one_minus_t(max_m);
  one_minus_t[0] = 1;
  if (max_m >= 1) one_minus_t[1] = -1;
  const TruncatedSeries phi = cube * one_minus_t.inverse();

  std::vector<mpq_class> out;
  out.reserve(max_m);
  TruncatedSeries power = phi;
  for (unsigned m = 1; m <= max_m; ++m) {
    if (m > 1) power = power * phi;
    out.push_back(power[m]);
  }
  return out;
}

std::vector<double> empirical_moments(const ZeroSet& zs, unsigned max_m) {
  if (zs.zeros.empty()) throw std::invalid_argument("empirical moments of an empty zero set");
  std::vector<double> out;
  out.reserve(max_m);
  const double n = static_cast<double>(zs.zeros.size());
  for (unsigned m = 1; m <= max_m; ++m) {
    // Neumaier summation.
    double sum = 0.0;
    double comp = 0.0;
    for (double x : zs.zeros) {
      const double term = std::pow(x, static_cast<int>(m));
      const double t = sum + term;
      if (std::abs(sum) >= std::abs(term)) comp += (sum - t) + term;
      else comp += (term - t) + sum;
      sum = t;
    }
    out.push_back((sum + comp) / n);
  }
  return out;
}

std::vector<MomentRecord> moment_table(unsigned max_m, const ZeroSet* zeros) {
  const auto series = L_series(max_m);
  std::vector<double> emp;
  if (zeros != nullptr) emp = empirical_moments(*zeros, max_m);
  std::vector<MomentRecord> out;
  out.reserve(max_m);
  for (unsigned m = 1; m <= max_m; ++m) {
    MomentRecord rec;
    rec.m = m;
    rec.closed = L_closed(m);
    rec.sum = L_sum(m);
    rec.series = series[m - 1];
    if (zeros != nullptr) {
      rec.empirical = emp[m - 1];
      rec.empirical_n = zeros->n;
    }
    out.push_back(std::move(rec));
  }
  return out;
}

}  // namespace recpoly
