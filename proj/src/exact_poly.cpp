#include "recpoly/exact_poly.hpp"

#include <algorithm>
#include <sstream>

namespace recpoly {

ExactPolynomial::ExactPolynomial(std::initializer_list<mpq_class> cs) : coeffs_(cs) {
  for (auto& c : coeffs_) c.canonicalize();
  normalize();
}

ExactPolynomial::ExactPolynomial(std::vector<mpq_class> cs) : coeffs_(std::move(cs)) {
  for (auto& c : coeffs_) c.canonicalize();
  normalize();
}

ExactPolynomial ExactPolynomial::constant(const mpq_class& c) { return ExactPolynomial({c}); }

ExactPolynomial ExactPolynomial::monomial(const mpq_class& c, std::size_t k) {
  std::vector<mpq_class> cs(k + 1);
  cs[k] = c;
  return ExactPolynomial(std::move(cs));
}

void ExactPolynomial::normalize() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

mpq_class ExactPolynomial::coefficient(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : mpq_class(0);
}

mpq_class ExactPolynomial::leading() const {
  return coeffs_.empty() ? mpq_class(0) : coeffs_.back();
}

bool ExactPolynomial::is_integral() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const mpq_class& c) { return c.get_den() == 1; });
}

// gmpxx leaves mpq_class(p, q) uncanonicalized; arithmetic needs canonical operands.
mpq_class ExactPolynomial::evaluate(const mpq_class& x_in) const {
  mpq_class x = x_in;
  x.canonicalize();
  mpq_class acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * x + *it;
  }
  return acc;
}

double ExactPolynomial::evaluate(double x) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * x + it->get_d();
  }
  return acc;
}

ExactPolynomial ExactPolynomial::reflect() const {
  ExactPolynomial out = *this;
  for (std::size_t k = 1; k < out.coeffs_.size(); k += 2) out.coeffs_[k] = -out.coeffs_[k];
  return out;
}

ExactPolynomial ExactPolynomial::shifted(std::size_t k) const {
  if (is_zero()) return {};
  ExactPolynomial out;
  out.coeffs_.assign(k, mpq_class(0));
  out.coeffs_.insert(out.coeffs_.end(), coeffs_.begin(), coeffs_.end());
  return out;
}

ExactPolynomial ExactPolynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<mpq_class> cs(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) cs[k - 1] = coeffs_[k] * static_cast<unsigned long>(k);
  return ExactPolynomial(std::move(cs));
}

ExactPolynomial& ExactPolynomial::operator+=(const ExactPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  normalize();
  return *this;
}

ExactPolynomial& ExactPolynomial::operator-=(const ExactPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  normalize();
  return *this;
}

ExactPolynomial& ExactPolynomial::operator*=(const mpq_class& c) {
  if (sgn(c) == 0) {
    coeffs_.clear();
    return *this;
  }
  mpq_class f = c;
  f.canonicalize();
  for (auto& a : coeffs_) a *= f;
  return *this;
}

void ExactPolynomial::add_scaled(const ExactPolynomial& rhs, const mpq_class& c) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  mpq_class f = c;
  f.canonicalize();
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += f * rhs.coeffs_[k];
  normalize();
}

ExactPolynomial operator*(const ExactPolynomial& a, const ExactPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpq_class> cs(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) cs[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return ExactPolynomial(std::move(cs));
}

std::string ExactPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const mpq_class& c = coeffs_[k];
    if (sgn(c) == 0) continue;
    mpq_class mag = abs(c);
    if (!first) os << (sgn(c) < 0 ? " - " : " + ");
    else if (sgn(c) < 0) os << "-";
    first = false;
    const bool unit = (mag == 1);
    if (!unit || k == 0) os << mag.get_str();
    if (k >= 1) os << (unit ? "" : "*") << "x";
    if (k >= 2) os << "^" << k;
  }
  return os.str();
}

}  // namespace recpoly
