#include "recpoly/verify.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <exception>
#include <numbers>
#include <sstream>

#include "recpoly/dist.hpp"
#include "recpoly/moments.hpp"
#include "recpoly/polyfam.hpp"
#include "recpoly/sturm.hpp"
#include "recpoly/zeros.hpp"

namespace recpoly {

std::optional<Suite> parse_suite(std::string_view name) {
  if (name == "all") return Suite::All;
  if (name == "recursion") return Suite::Recursion;
  if (name == "roots") return Suite::Roots;
  if (name == "moments") return Suite::Moments;
  if (name == "dist") return Suite::Dist;
  return std::nullopt;
}

std::string suite_name(Suite s) {
  switch (s) {
    case Suite::All: return "all";
    case Suite::Recursion: return "recursion";
    case Suite::Roots: return "roots";
    case Suite::Moments: return "moments";
    case Suite::Dist: return "dist";
  }
  return "?";
}

bool VerifyReport::passed() const {
  return std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.passed; });
}

bool fundamental_invariants_hold(const FundamentalRoots& fr, std::string* why) {
  auto fail = [why](const char* msg) {
    if (why != nullptr) *why = msg;
    return false;
  };
  if (!(fr.nu > 0.0)) return fail("nu is not positive");
  const std::complex<double> l1(fr.mu, fr.nu);
  const double x = fr.x;
  const auto cubic = l1 * l1 * l1 - (x + 3.0) * l1 * l1 - (x - 3.0) * l1 - 1.0;
  const double scale = std::pow(std::abs(l1), 3) + std::abs(x + 3.0) * std::norm(l1) +
                       std::abs(x - 3.0) * std::abs(l1) + 1.0;
  if (!(std::abs(cubic) <= 1e-10 * scale)) return fail("mu + i nu does not solve the cubic");
  const double inv = 1.0 / fr.lambda3;
  if (!(std::abs(fr.mu * fr.mu + fr.nu * fr.nu - inv) <= 1e-12 * inv)) return fail("mu^2 + nu^2 != 1/lambda3");
  if (!(std::abs(2.0 * fr.mu + fr.lambda3 - (3.0 + x)) <= 1e-12 * std::max(1.0, std::abs(3.0 + x)))) {
    return fail("2 mu + lambda3 != 3 + x");
  }
  if (!(fr.disc < 0.0)) return fail("discriminant is not negative");
  if (!(fr.theta > 0.0 && fr.theta < std::numbers::pi)) return fail("theta outside (0, pi)");
  if (!(fr.omega > 0.0 && fr.omega < std::numbers::pi / 2)) return fail("omega outside (0, pi/2)");
  if (!(fr.s_abs > std::abs(fr.c3))) return fail("|c1| <= |c3|");
  if (!(fr.r > fr.lambda3)) return fail("r <= lambda3");
  return true;
}

namespace {

CheckResult result(Suite s, std::string name, bool ok, std::string detail = {}) {
  return {suite_name(s), std::move(name), ok, std::move(detail)};
}

std::vector<Check> recursion_checks() {
  const Suite s = Suite::Recursion;
  std::vector<Check> out;
  out.push_back({s, "four-term recursion equals the hereditary definition, n <= 200", [s] {
    const auto four = four_term_prefix(200);
    VolterraFamily fam({ArithmeticFunction::square(), ArithmeticFunction::one()});
    for (std::size_t n = 1; n <= 200; ++n) {
      if (!(four[n] == fam.get(n))) return result(s, "four-term", false, "mismatch at n=" + std::to_string(n));
    }
    return result(s, "four-term recursion equals the hereditary definition, n <= 200", true);
  }});
  out.push_back({s, "three-term remainder: x^{n-2} coefficient is 8 (s) and 0 (id), 3 <= n <= 50", [s] {
    const std::string name = "three-term remainder: x^{n-2} coefficient is 8 (s) and 0 (id), 3 <= n <= 50";
    for (std::size_t n = 3; n <= 50; ++n) {
      if (three_term_remainder(ArithmeticFunction::square(), n).coefficient(n - 2) != 8) {
        return result(s, name, false, "square family, n=" + std::to_string(n));
      }
      if (three_term_remainder(ArithmeticFunction::id(), n).coefficient(n - 2) != 0) {
        return result(s, name, false, "id family, n=" + std::to_string(n));
      }
    }
    return result(s, name, true);
  }});
  out.push_back({s, "top coefficients match the closed forms, n <= 40", [s] {
    const std::string name = "top coefficients match the closed forms, n <= 40";
    for (auto g : {ArithmeticFunction::square(), ArithmeticFunction::id(), ArithmeticFunction::sigma()}) {
      VolterraFamily fam({g, ArithmeticFunction::one()});
      for (std::size_t n = 0; n <= 40; ++n) {
        const auto top = top_coefficients(g, n);
        for (std::size_t j = 0; j < 4; ++j) {
          if (!top[j]) continue;
          if (fam.get(n).coefficient(n - j) != mpq_class(*top[j])) {
            return result(s, name, false, g.name() + " n=" + std::to_string(n));
          }
        }
      }
    }
    return result(s, name, true);
  }});
  out.push_back({s, "log-concavity of Q_n, n <= 200", [s] {
    const auto q = four_term_prefix(200);
    for (std::size_t n = 1; n <= 200; ++n) {
      if (!log_concavity_check(q[n])) return result(s, "log-concavity of Q_n, n <= 200", false, "n=" + std::to_string(n));
    }
    return result(s, "log-concavity of Q_n, n <= 200", true);
  }});
  out.push_back({s, "Laguerre transform equals P_n^{cube,id}, n <= 60", [s] {
    VolterraFamily fam({ArithmeticFunction::cube(), ArithmeticFunction::id()});
    for (std::size_t n = 0; n <= 60; ++n) {
      if (!(laguerre_transform(n) == fam.get(n))) {
        return result(s, "Laguerre transform equals P_n^{cube,id}, n <= 60", false, "n=" + std::to_string(n));
      }
    }
    return result(s, "Laguerre transform equals P_n^{cube,id}, n <= 60", true);
  }});
  return out;
}

std::vector<Check> roots_checks() {
  const Suite s = Suite::Roots;
  std::vector<Check> out;
  out.push_back({s, "closed-form invariants on 1000 grid points of (-6 sqrt 3, 0)", [s] {
    const std::string name = "closed-form invariants on 1000 grid points of (-6 sqrt 3, 0)";
    for (int i = 1; i <= 1000; ++i) {
      const double x = -kZeroBound * i / 1001.0;
      std::string why;
      if (!fundamental_invariants_hold(fundamental_roots(x), &why)) {
        std::ostringstream os;
        os.precision(17);
        os << why << " at x=" << x;
        return result(s, name, false, os.str());
      }
    }
    return result(s, name, true);
  }});
  out.push_back({s, "Sturm: n simple real roots in [0, 6 sqrt 3), angle zeros agree to 1e-9, n <= 40", [s] {
    const std::string name = "Sturm: n simple real roots in [0, 6 sqrt 3), angle zeros agree to 1e-9, n <= 40";
    const mpq_class below(-1, 2);
    const mpq_class bound_lo(mpz_class("10392304845"), mpz_class("1000000000"));  // just under 6 sqrt 3
    const auto q = four_term_prefix(40);
    for (int n = 1; n <= 40; ++n) {
      const SturmSequence st(q[static_cast<std::size_t>(n)].reflect());
      if (!st.squarefree() || st.count_real_roots() != n || st.count_roots(below, bound_lo) != n) {
        return result(s, name, false, "Sturm count at n=" + std::to_string(n));
      }
      const auto a = zeros_angle(n);
      const auto e = zeros_exact(n);
      for (std::size_t i = 0; i < a.zeros.size(); ++i) {
        if (!(std::abs(a.zeros[i] - e.zeros[i]) <= 1e-9)) {
          return result(s, name, false, "angle/Sturm disagreement at n=" + std::to_string(n));
        }
      }
    }
    return result(s, name, true);
  }});
  out.push_back({s, "angle method at n = 2000: count, range, residuals <= 1e-10", [s] {
    const std::string name = "angle method at n = 2000: count, range, residuals <= 1e-10";
    const auto zs = zeros_angle(2000);
    const double worst = *std::max_element(zs.residuals.begin(), zs.residuals.end());
    const bool ok = zs.zeros.size() == 2000 && zs.zeros.front() == 0.0 && zs.zeros.back() < kZeroBound &&
                    std::adjacent_find(zs.zeros.begin(), zs.zeros.end(), std::greater_equal<>()) == zs.zeros.end() &&
                    worst <= 1e-10;
    std::ostringstream os;
    os.precision(3);
    os << "max residual " << worst;
    return result(s, name, ok, os.str());
  }});
  return out;
}

std::vector<Check> moments_checks() {
  const Suite s = Suite::Moments;
  std::vector<Check> out;
  out.push_back({s, "closed form = double sum = power series, m <= 60", [s] {
    const std::string name = "closed form = double sum = power series, m <= 60";
    for (const auto& rec : moment_table(60)) {
      if (!rec.closed_equals_sum() || !rec.closed_equals_series()) {
        return result(s, name, false, "m=" + std::to_string(rec.m));
      }
    }
    return result(s, name, true);
  }});
  out.push_back({s, "first nine moments 1, 4, 30, 256, 2310, 21504, 204204, 1966080, 19122246", [s] {
    const long expected[] = {1, 4, 30, 256, 2310, 21504, 204204, 1966080, 19122246};
    for (unsigned m = 0; m < 9; ++m) {
      if (L_closed(m) != expected[m]) {
        return result(s, "first nine moments", false, "m=" + std::to_string(m));
      }
    }
    return result(s, "first nine moments 1, 4, 30, 256, 2310, 21504, 204204, 1966080, 19122246", true);
  }});
  return out;
}

std::vector<Check> dist_checks() {
  const Suite s = Suite::Dist;
  std::vector<Check> out;
  out.push_back({s, "F' = v by central differences on 1000 interior points (rel 1e-6)", [s] {
    const std::string name = "F' = v by central differences on 1000 interior points (rel 1e-6)";
    const double h = 1e-6;
    for (int i = 1; i <= 1000; ++i) {
      const double x = kZeroBound * i / 1001.0;
      const double fd = (cdf_F(x + h) - cdf_F(x - h)) / (2.0 * h);
      if (!(std::abs(fd - density_v(x)) <= 1e-6 * density_v(x))) {
        return result(s, name, false, "x=" + std::to_string(x));
      }
    }
    return result(s, name, true);
  }});
  out.push_back({s, "F(6 sqrt 3) - F(0) = 1 and v = v_{3/2,-1/2}(x/4)/4", [s] {
    const std::string name = "F(6 sqrt 3) - F(0) = 1 and v = v_{3/2,-1/2}(x/4)/4";
    if (!(std::abs(cdf_F(kZeroBound) - cdf_F(0.0) - 1.0) <= 1e-14)) return result(s, name, false, "normalization");
    for (int i = 1; i <= 1000; ++i) {
      const double x = kZeroBound * i / 1001.0;
      const double v = density_v(x);
      if (!(std::abs(v - density_v32(x / 4.0) / 4.0) <= 1e-12 * v)) {
        return result(s, name, false, "scaling at x=" + std::to_string(x));
      }
    }
    return result(s, name, true);
  }});
  out.push_back({s, "moments of v reproduce L_m (rel 1e-8), m <= 8", [s] {
    for (unsigned m = 0; m <= 8; ++m) {
      const double l = L_closed(m).get_d();
      if (!(std::abs(moment_by_quadrature(m) - l) <= 1e-8 * l)) {
        return result(s, "moments of v reproduce L_m", false, "m=" + std::to_string(m));
      }
    }
    return result(s, "moments of v reproduce L_m (rel 1e-8), m <= 8", true);
  }});
  out.push_back({s, "KS distance decreases over n = 100, 300, 1000", [s] {
    const double a = ks_statistic(zeros_angle(100));
    const double b = ks_statistic(zeros_angle(300));
    const double c = ks_statistic(zeros_angle(1000));
    std::ostringstream os;
    os.precision(6);
    os << a << " > " << b << " > " << c;
    return result(s, "KS distance decreases over n = 100, 300, 1000", a > b && b > c, os.str());
  }});
  return out;
}

}  // namespace

std::vector<Check> default_checks(Suite suite) {
  std::vector<Check> out;
  auto append = [&out](std::vector<Check> more) {
    for (auto& c : more) out.push_back(std::move(c));
  };
  if (suite == Suite::All || suite == Suite::Recursion) append(recursion_checks());
  if (suite == Suite::All || suite == Suite::Roots) append(roots_checks());
  if (suite == Suite::All || suite == Suite::Moments) append(moments_checks());
  if (suite == Suite::All || suite == Suite::Dist) append(dist_checks());
  return out;
}

VerifyReport run_checks(const std::vector<Check>& checks) {
  VerifyReport report;
  for (const auto& check : checks) {
    try {
      CheckResult r = check.run();
      r.suite = suite_name(check.suite);
      r.name = check.name;
      report.results.push_back(std::move(r));
    } catch (const std::exception& e) {
      report.results.push_back({suite_name(check.suite), check.name, false, std::string("exception: ") + e.what()});
    }
  }
  return report;
}

}  // namespace recpoly
