#include "recpoly/sturm.hpp"

#include <stdexcept>

namespace recpoly {

namespace {

void strip(IntPolynomial& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

void make_primitive(IntPolynomial& p) {
  mpz_class g = 0;
  for (const auto& c : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) return;
  }
  if (g > 1) {
    for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  }
}

IntPolynomial derivative(const IntPolynomial& p) {
  IntPolynomial d;
  for (std::size_t k = 1; k < p.size(); ++k) d.push_back(p[k] * static_cast<unsigned long>(k));
  strip(d);
  return d;
}

// A positive multiple of rem(a, b).
IntPolynomial positive_pseudo_remainder(IntPolynomial r, const IntPolynomial& b) {
  const mpz_class lc_b = b.back();
  const mpz_class abs_lc = abs(lc_b);
  const int sign_lc = sgn(lc_b);
  while (!r.empty() && r.size() >= b.size()) {
    const std::size_t shift = r.size() - b.size();
    const mpz_class lc_r = r.back();
    for (auto& c : r) c *= abs_lc;
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (sign_lc > 0) r[k + shift] -= lc_r * b[k];
      else r[k + shift] += lc_r * b[k];
    }
    strip(r);
    make_primitive(r);
  }
  return r;
}

int sign_of_leading(const IntPolynomial& p) { return p.empty() ? 0 : sgn(p.back()); }

int count_changes(const std::vector<int>& signs) {
  int changes = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace

IntPolynomial clear_denominators(const ExactPolynomial& p) {
  mpz_class l = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  IntPolynomial out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) {
    mpz_class v = l / c.get_den();
    out.push_back(v * c.get_num());
  }
  return out;
}

int sign_at(const IntPolynomial& p, const mpz_class& num, const mpz_class& den) {
  if (p.empty()) return 0;
  // den^d * p(num/den) = sum c_k num^k den^(d-k), by Horner in num with den powers.
  mpz_class acc = p.back();
  mpz_class den_pow = 1;
  for (std::size_t k = p.size() - 1; k-- > 0;) {
    den_pow *= den;
    acc = acc * num + p[k] * den_pow;
  }
  return sgn(acc);
}

int sign_at(const IntPolynomial& p, const mpq_class& x) {
  return sign_at(p, x.get_num(), x.get_den());
}

SturmSequence::SturmSequence(IntPolynomial p) {
  strip(p);
  if (p.empty()) throw std::invalid_argument("Sturm sequence of the zero polynomial");
  make_primitive(p);
  chain_.push_back(std::move(p));
  IntPolynomial d = derivative(chain_.back());
  if (d.empty()) return;
  make_primitive(d);
  chain_.push_back(std::move(d));
  for (;;) {
    IntPolynomial r = positive_pseudo_remainder(chain_[chain_.size() - 2], chain_.back());
    if (r.empty()) break;
    for (auto& c : r) c = -c;
    chain_.push_back(std::move(r));
  }
}

int SturmSequence::sign_changes(const mpq_class& x) const {
  std::vector<int> signs;
  signs.reserve(chain_.size());
  for (const auto& q : chain_) signs.push_back(sign_at(q, x));
  return count_changes(signs);
}

int SturmSequence::sign_changes_at_pos_infinity() const {
  std::vector<int> signs;
  for (const auto& q : chain_) signs.push_back(sign_of_leading(q));
  return count_changes(signs);
}

int SturmSequence::sign_changes_at_neg_infinity() const {
  std::vector<int> signs;
  for (const auto& q : chain_) {
    const int s = sign_of_leading(q);
    signs.push_back(((q.size() - 1) % 2 == 0) ? s : -s);
  }
  return count_changes(signs);
}

int SturmSequence::count_roots(const mpq_class& a, const mpq_class& b) const {
  if (!(a < b)) throw std::invalid_argument("count_roots needs a < b");
  return sign_changes(a) - sign_changes(b);
}

int SturmSequence::count_real_roots() const {
  return sign_changes_at_neg_infinity() - sign_changes_at_pos_infinity();
}

bool SturmSequence::squarefree() const { return chain_.back().size() == 1; }

}  // namespace recpoly
