#include "recpoly/zeros.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <iterator>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <thread>

#include "recpoly/cubicroots.hpp"
#include "recpoly/polyfam.hpp"
#include "recpoly/sturm.hpp"

namespace recpoly {

namespace {

constexpr double kBracketEps = 1e-13;

// Runs body(k) for k in [first, last), split over up to `threads` workers.
template <typename Body>
void parallel_for(int first, int last, unsigned threads, Body body) {
  const int count = last - first;
  if (threads <= 1 || count < 64) {
    for (int k = first; k < last; ++k) body(k);
    return;
  }
  const int workers = static_cast<int>(std::min<unsigned>(threads, static_cast<unsigned>(count)));
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
  {
    std::vector<std::jthread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([=, &body, &errors] {
        try {
          for (int k = first + w; k < last; k += workers) body(k);
        } catch (...) {
          errors[static_cast<std::size_t>(w)] = std::current_exception();
        }
      });
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

// Searches run over the offset d = lambda3 - kLambdaMin, which keeps full
// relative precision where the brackets crowd against the lower end.
constexpr double kMaxOffset = 1.0 - kUpperGuard - kLambdaMin;

// Monotone bisection for the decreasing function omega + n theta - k pi; returns the offset.
double solve_bracket(int n, int k) {
  auto g = [n, k](double d) {
    const auto a = polar_angles(BranchPoint::from_offset(d));
    return a.omega + n * a.theta - k * std::numbers::pi;
  };
  double lo = kBracketEps;
  double hi = kMaxOffset;
  if (!(g(lo) > 0.0) || !(g(hi) < 0.0)) {
    throw std::runtime_error("angle equation has no root inside the lambda3 branch");
  }
  for (int iter = 0; iter < 200; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (g(mid) > 0.0) lo = mid;
    else hi = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

std::vector<double> angle_bracket_offsets(int n, unsigned threads) {
  if (n < 1) throw std::invalid_argument("angle_brackets needs n >= 1");
  std::vector<double> out(static_cast<std::size_t>(n));
  parallel_for(1, n + 1, threads, [&](int k) { out[static_cast<std::size_t>(k - 1)] = solve_bracket(n, k); });
  return out;
}

std::vector<double> angle_brackets(int n, unsigned threads) {
  auto out = angle_bracket_offsets(n, threads);
  for (auto& d : out) d = BranchPoint::from_offset(d).lambda3;
  return out;
}

ZeroSet zeros_angle(int n, unsigned threads) {
  if (n < 1) throw std::invalid_argument("zeros_angle needs n >= 1");
  const auto brackets = angle_bracket_offsets(n, threads);
  auto scaled = [n](double d) { return eval_Q_scaled(n, BranchPoint::from_offset(d)); };

  ZeroSet zs;
  zs.n = n;
  zs.method = ZeroMethod::Angle;
  zs.zeros.assign(static_cast<std::size_t>(n), 0.0);
  zs.residuals.assign(static_cast<std::size_t>(n), 0.0);

  // Between lambda_{k+1} < lambda_k the scaled value goes from ~(-1)^{k+1} to ~(-1)^k.
  parallel_for(1, n, threads, [&](int k) {
    double lo = brackets[static_cast<std::size_t>(k)];
    double hi = brackets[static_cast<std::size_t>(k - 1)];
    double f_lo = scaled(lo);
    double f_hi = scaled(hi);
    if (!(f_lo * f_hi < 0.0)) {
      throw std::runtime_error("no sign change between consecutive angle brackets");
    }
    for (int iter = 0; iter < 200; ++iter) {
      const double mid = 0.5 * (lo + hi);
      if (mid <= lo || mid >= hi) break;
      const double f_mid = scaled(mid);
      if (f_mid == 0.0) {
        lo = hi = mid;
        f_lo = f_hi = 0.0;
        break;
      }
      if ((f_mid < 0.0) == (f_lo < 0.0)) {
        lo = mid;
        f_lo = f_mid;
      } else {
        hi = mid;
        f_hi = f_mid;
      }
    }
    const bool take_lo = std::abs(f_lo) <= std::abs(f_hi);
    const double root = take_lo ? lo : hi;
    zs.zeros[static_cast<std::size_t>(k)] = -x_of_lambda(BranchPoint::from_offset(root).lambda3);
    zs.residuals[static_cast<std::size_t>(k)] = take_lo ? std::abs(f_lo) : std::abs(f_hi);
  });

  // Larger k means smaller lambda3, i.e. x further left, so the zeros of Q_n(-x)
  // already ascend with k; sort anyway to keep residuals aligned.
  std::vector<std::size_t> order(zs.zeros.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return zs.zeros[a] < zs.zeros[b]; });
  ZeroSet sorted = zs;
  for (std::size_t i = 0; i < order.size(); ++i) {
    sorted.zeros[i] = zs.zeros[order[i]];
    sorted.residuals[i] = zs.residuals[order[i]];
  }
  return sorted;
}

ZeroSet zeros_exact(int n) {
  if (n < 1 || n > kMaxExactDegree) {
    throw std::invalid_argument("zeros_exact supports 1 <= n <= 60");
  }
  const IntPolynomial p = clear_denominators(four_term_poly(static_cast<std::size_t>(n)).reflect());
  const SturmSequence sturm(p);
  const mpq_class width_goal(mpz_class(1), mpz_class("1000000000000"));

  struct Interval {
    mpq_class a, b;
  };
  std::vector<Interval> pending{{mpq_class(-16), mpq_class(16)}};
  std::vector<double> roots;

  while (!pending.empty()) {
    Interval iv = pending.back();
    pending.pop_back();
    const int count = sturm.count_roots(iv.a, iv.b);
    if (count == 0) continue;
    if (count > 1) {
      const mpq_class mid = (iv.a + iv.b) / 2;
      pending.push_back({iv.a, mid});
      pending.push_back({mid, iv.b});
      continue;
    }
    // Exactly one root in (a, b].
    bool exact = false;
    while (iv.b - iv.a > width_goal) {
      if (sign_at(p, iv.b) == 0) {
        exact = true;
        break;
      }
      const mpq_class mid = (iv.a + iv.b) / 2;
      if (sturm.count_roots(iv.a, mid) == 1) iv.b = mid;
      else iv.a = mid;
    }
    if (!exact && sign_at(p, iv.b) == 0) exact = true;
    roots.push_back(exact ? iv.b.get_d() : mpq_class((iv.a + iv.b) / 2).get_d());
  }

  std::sort(roots.begin(), roots.end());
  ZeroSet zs;
  zs.n = n;
  zs.method = ZeroMethod::SturmExact;
  zs.zeros = std::move(roots);
  return zs;
}

double min_distance_to(const ZeroSet& zs, double t) {
  if (!(t >= 0.0 && t <= kZeroBound)) throw std::domain_error("target must lie in [0, 6 sqrt 3]");
  if (zs.zeros.empty()) throw std::invalid_argument("empty zero set");
  const auto it = std::lower_bound(zs.zeros.begin(), zs.zeros.end(), t);
  double best = std::numeric_limits<double>::infinity();
  if (it != zs.zeros.end()) best = *it - t;
  if (it != zs.zeros.begin()) best = std::min(best, t - *std::prev(it));
  return best;
}

std::vector<double> q_roots(const ZeroSet& zs) {
  std::vector<double> out(zs.zeros.rbegin(), zs.zeros.rend());
  for (auto& z : out) z = (z == 0.0) ? 0.0 : -z;
  return out;
}

}  // namespace recpoly
