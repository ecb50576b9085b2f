#include "cli.hpp"

#include <unistd.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include "recpoly/arith.hpp"
#include "recpoly/cubicroots.hpp"
#include "recpoly/dist.hpp"
#include "recpoly/moments.hpp"
#include "recpoly/polyfam.hpp"
#include "recpoly/verify.hpp"
#include "recpoly/zeros.hpp"

namespace recpoly::cli {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Format { Csv, Json, Svg };

Format parse_format(const std::string& name, bool svg_allowed) {
  if (name == "csv") return Format::Csv;
  if (name == "json") return Format::Json;
  if (name == "svg") {
    if (!svg_allowed) throw UsageError("svg output is only available for dist and cdf");
    return Format::Svg;
  }
  throw UsageError("unknown format '" + name + "'");
}

std::string num(double v) { return fmt::format("{:.17g}", v); }

// RFC 4180: quote fields containing separators, quotes or line breaks.
std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

void csv_row(std::ostream& os, const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i > 0) os << ',';
    os << csv_field(fields[i]);
  }
  os << "\r\n";
}

void csv_footer(std::ostream& os, const std::string& key, const std::string& value) {
  os << "# " << key << '=' << value << "\r\n";
}

std::string json_text(const json& j) { return j.dump(2) + "\n"; }

// ---------------------------------------------------------------- gen

struct GenOptions {
  std::string g;
  std::string h = "one";
  long n = -1;
  std::string format = "csv";
  long max_coeffs = 2'000'000;
};

std::string cmd_gen(const GenOptions& o) {
  const auto g = parse_arith(o.g);
  if (!g) throw UsageError("unknown arithmetic function g='" + o.g + "'");
  const auto h = parse_arith(o.h);
  if (!h || (h->kind != ArithKind::One && h->kind != ArithKind::Id)) {
    throw UsageError("h must be one or id, got '" + o.h + "'");
  }
  if (o.n < 0) throw UsageError("--n must be >= 0");
  const Format format = parse_format(o.format, false);

  // The whole prefix P_0..P_n is materialized.
  const double stored = 0.5 * static_cast<double>(o.n + 1) * static_cast<double>(o.n + 2);
  if (stored > static_cast<double>(o.max_coeffs)) {
    throw UsageError(fmt::format("resource budget exceeded: n={} needs {:.0f} stored coefficients, --max-coeffs is {}",
                                 o.n, stored, o.max_coeffs));
  }

  const FamilySpec spec(*g, *h);
  VolterraFamily family(spec);
  const ExactPolynomial& p = family.get(static_cast<std::size_t>(o.n));

  std::optional<bool> four_term_ok;
  if (g->kind == ArithKind::Square && h->kind == ArithKind::One) {
    four_term_ok = four_term_prefix(static_cast<std::size_t>(o.n)).back() == p;
  }

  std::ostringstream os;
  if (format == Format::Csv) {
    csv_row(os, {"k", "numerator", "denominator"});
    for (long k = 0; k <= o.n; ++k) {
      const mpq_class c = p.coefficient(static_cast<std::size_t>(k));
      csv_row(os, {std::to_string(k), c.get_num().get_str(), c.get_den().get_str()});
    }
    if (four_term_ok) csv_footer(os, "four_term_check", *four_term_ok ? "pass" : "fail");
  } else {
    json j;
    j["g"] = g->name();
    j["h"] = h->name();
    j["n"] = o.n;
    j["coefficients"] = json::array();
    for (long k = 0; k <= o.n; ++k) {
      const mpq_class c = p.coefficient(static_cast<std::size_t>(k));
      j["coefficients"].push_back({{"k", k}, {"numerator", c.get_num().get_str()}, {"denominator", c.get_den().get_str()}});
    }
    if (four_term_ok) j["four_term_check"] = *four_term_ok ? "pass" : "fail";
    os << json_text(j);
  }
  return os.str();
}

// ---------------------------------------------------------------- zeros

struct ZerosOptions {
  long n = 0;
  std::string method = "angle";
  std::string format = "csv";
  unsigned threads = 1;
  bool q_roots = false;
};

std::vector<double> oriented(const ZeroSet& zs, bool flip) { return flip ? q_roots(zs) : zs.zeros; }

std::string cmd_zeros(const ZerosOptions& o) {
  if (o.n < 1) throw UsageError("--n must be >= 1");
  if (o.method != "angle" && o.method != "sturm" && o.method != "both") {
    throw UsageError("--method must be angle, sturm or both");
  }
  if (o.method != "angle" && o.n > kMaxExactDegree) {
    throw UsageError(fmt::format("the Sturm method supports n <= {}", kMaxExactDegree));
  }
  const Format format = parse_format(o.format, false);
  const int n = static_cast<int>(o.n);

  std::optional<ZeroSet> angle;
  std::optional<ZeroSet> exact;
  if (o.method != "sturm") angle = zeros_angle(n, o.threads);
  if (o.method != "angle") exact = zeros_exact(n);

  // With --q-roots the order is reversed, so residuals follow the flip too.
  std::vector<double> residuals;
  if (angle) {
    residuals = angle->residuals;
    if (o.q_roots) std::reverse(residuals.begin(), residuals.end());
  }
  const auto a = angle ? oriented(*angle, o.q_roots) : std::vector<double>{};
  const auto e = exact ? oriented(*exact, o.q_roots) : std::vector<double>{};
  double discrepancy = 0.0;
  if (angle && exact) {
    for (std::size_t i = 0; i < a.size(); ++i) discrepancy = std::max(discrepancy, std::abs(a[i] - e[i]));
  }

  std::ostringstream os;
  if (format == Format::Csv) {
    if (o.method == "angle") {
      csv_row(os, {"index", "zero", "residual"});
      for (std::size_t i = 0; i < a.size(); ++i) csv_row(os, {std::to_string(i + 1), num(a[i]), num(residuals[i])});
    } else if (o.method == "sturm") {
      csv_row(os, {"index", "zero"});
      for (std::size_t i = 0; i < e.size(); ++i) csv_row(os, {std::to_string(i + 1), num(e[i])});
    } else {
      csv_row(os, {"index", "angle", "sturm", "abs_diff"});
      for (std::size_t i = 0; i < a.size(); ++i) {
        csv_row(os, {std::to_string(i + 1), num(a[i]), num(e[i]), num(std::abs(a[i] - e[i]))});
      }
      csv_footer(os, "max_discrepancy", num(discrepancy));
    }
  } else {
    json j;
    j["n"] = n;
    j["method"] = o.method;
    j["polynomial"] = o.q_roots ? "Q_n(x)" : "Q_n(-x)";
    if (angle) {
      j["angle"] = a;
      j["residuals"] = residuals;
    }
    if (exact) j["sturm"] = e;
    if (angle && exact) j["max_discrepancy"] = discrepancy;
    os << json_text(j);
  }
  return os.str();
}

// ---------------------------------------------------------------- moments

struct MomentsOptions {
  long max_m = 0;
  std::optional<long> empirical_n;
  std::string format = "csv";
  unsigned threads = 1;
};

std::string cmd_moments(const MomentsOptions& o) {
  if (o.max_m < 1) throw UsageError("--max-m must be >= 1");
  if (o.empirical_n && *o.empirical_n < 1) throw UsageError("--empirical-n must be >= 1");
  const Format format = parse_format(o.format, false);

  std::optional<ZeroSet> zs;
  if (o.empirical_n) zs = zeros_angle(static_cast<int>(*o.empirical_n), o.threads);
  const auto table = moment_table(static_cast<unsigned>(o.max_m), zs ? &*zs : nullptr);

  std::ostringstream os;
  if (format == Format::Csv) {
    std::vector<std::string> header{"m", "closed", "sum", "series", "closed_eq_sum", "closed_eq_series"};
    if (zs) {
      header.emplace_back("empirical_n");
      header.emplace_back("empirical");
    }
    csv_row(os, header);
    for (const auto& r : table) {
      std::vector<std::string> row{std::to_string(r.m), r.closed.get_str(), r.sum.get_str(), r.series.get_str(),
                                   r.closed_equals_sum() ? "true" : "false",
                                   r.closed_equals_series() ? "true" : "false"};
      if (zs) {
        row.push_back(std::to_string(*r.empirical_n));
        row.push_back(num(*r.empirical));
      }
      csv_row(os, row);
    }
  } else {
    json rows = json::array();
    for (const auto& r : table) {
      json row{{"m", r.m},
               {"closed", r.closed.get_str()},
               {"sum", r.sum.get_str()},
               {"series", r.series.get_str()},
               {"closed_eq_sum", r.closed_equals_sum()},
               {"closed_eq_series", r.closed_equals_series()}};
      if (zs) {
        row["empirical_n"] = *r.empirical_n;
        row["empirical"] = *r.empirical;
      }
      rows.push_back(std::move(row));
    }
    os << json_text(json{{"moments", rows}});
  }
  return os.str();
}

// ---------------------------------------------------------------- SVG

struct Plot {
  double width = 720.0;
  double height = 440.0;
  double left = 60.0;
  double right = 20.0;
  double top = 30.0;
  double bottom = 50.0;
  double x_max = kZeroBound;
  double y_max = 1.0;

  double px(double x) const { return left + (width - left - right) * x / x_max; }
  double py(double y) const { return height - bottom - (height - top - bottom) * std::min(y, y_max) / y_max; }
};

void svg_open(std::ostream& os, const Plot& p, const std::string& title) {
  os << fmt::format(R"(<svg xmlns="http://www.w3.org/2000/svg" width="{:.0f}" height="{:.0f}" viewBox="0 0 {:.0f} {:.0f}">)",
                    p.width, p.height, p.width, p.height)
     << "\n";
  os << fmt::format(R"(<rect x="0" y="0" width="{:.0f}" height="{:.0f}" fill="white"/>)", p.width, p.height) << "\n";
  os << fmt::format(R"(<text x="{:.1f}" y="20" font-family="sans-serif" font-size="14">{}</text>)", p.left, title) << "\n";
  // axes
  os << fmt::format(R"(<line x1="{:.2f}" y1="{:.2f}" x2="{:.2f}" y2="{:.2f}" stroke="black"/>)", p.px(0), p.py(0),
                    p.px(p.x_max), p.py(0))
     << "\n";
  os << fmt::format(R"(<line x1="{:.2f}" y1="{:.2f}" x2="{:.2f}" y2="{:.2f}" stroke="black"/>)", p.px(0), p.py(0),
                    p.px(0), p.py(p.y_max))
     << "\n";
  for (int t = 0; t <= 10; t += 2) {
    os << fmt::format(R"(<text x="{:.2f}" y="{:.2f}" font-family="sans-serif" font-size="11" text-anchor="middle">{}</text>)",
                      p.px(t), p.py(0) + 16, t)
       << "\n";
  }
  for (int t = 0; t <= 4; ++t) {
    const double y = p.y_max * t / 4.0;
    os << fmt::format(R"(<text x="{:.2f}" y="{:.2f}" font-family="sans-serif" font-size="11" text-anchor="end">{:.2f}</text>)",
                      p.px(0) - 6, p.py(y) + 4, y)
       << "\n";
  }
}

void svg_polyline(std::ostream& os, const Plot& p, const std::vector<std::pair<double, double>>& pts,
                  const std::string& color) {
  os << R"(<polyline fill="none" stroke=")" << color << R"(" stroke-width="1.5" points=")";
  for (const auto& [x, y] : pts) os << fmt::format("{:.2f},{:.2f} ", p.px(x), p.py(y));
  os << "\"/>\n";
}

// ---------------------------------------------------------------- dist

struct DistOptions {
  long n = 0;
  long bins = 100;
  std::string format = "csv";
  unsigned threads = 1;
};

std::string cmd_dist(const DistOptions& o) {
  if (o.n < 1) throw UsageError("--n must be >= 1");
  if (o.bins < 1) throw UsageError("--bins must be >= 1");
  const Format format = parse_format(o.format, true);

  const ZeroSet zs = zeros_angle(static_cast<int>(o.n), o.threads);
  const Histogram h = histogram(zs, static_cast<int>(o.bins));
  const auto limit = limit_bin_heights(h);
  const double ks = ks_statistic(zs);
  const double deviation = histogram_max_deviation(h);

  std::ostringstream os;
  if (format == Format::Csv) {
    csv_row(os, {"bin", "left", "right", "center", "count", "normalized", "limit_height", "v_center", "F_center"});
    for (int i = 0; i < h.bins; ++i) {
      const auto u = static_cast<std::size_t>(i);
      const double c = h.center(i);
      csv_row(os, {std::to_string(i), num(h.edges[u]), num(h.edges[u + 1]), num(c), std::to_string(h.counts[u]),
                   num(h.normalized[u]), num(limit[u]), num(density_v(c)), num(cdf_F(c))});
    }
    csv_footer(os, "n", std::to_string(o.n));
    csv_footer(os, "ks", num(ks));
    csv_footer(os, "max_bin_deviation", num(deviation));
  } else if (format == Format::Json) {
    json bins = json::array();
    for (int i = 0; i < h.bins; ++i) {
      const auto u = static_cast<std::size_t>(i);
      const double c = h.center(i);
      bins.push_back({{"left", h.edges[u]},
                      {"right", h.edges[u + 1]},
                      {"center", c},
                      {"count", h.counts[u]},
                      {"normalized", h.normalized[u]},
                      {"limit_height", limit[u]},
                      {"v_center", density_v(c)},
                      {"F_center", cdf_F(c)}});
    }
    os << json_text(json{{"n", o.n}, {"bins", bins}, {"ks", ks}, {"max_bin_deviation", deviation}});
  } else {
    Plot p;
    double tallest = *std::max_element(h.normalized.begin(), h.normalized.end());
    tallest = std::max(tallest, *std::max_element(limit.begin(), limit.end()));
    p.y_max = std::min(std::max(0.3, 1.1 * tallest), 1.0);
    svg_open(os, p, fmt::format("Zeros of Q_{}(-x): {} bins, KS = {:.3g}", o.n, o.bins, ks));
    for (int i = 0; i < h.bins; ++i) {
      const auto u = static_cast<std::size_t>(i);
      const double x0 = p.px(h.edges[u]);
      const double x1 = p.px(h.edges[u + 1]);
      const double y = p.py(h.normalized[u]);
      os << fmt::format(R"(<rect x="{:.2f}" y="{:.2f}" width="{:.2f}" height="{:.2f}" fill="#9ecae1" stroke="#3182bd" stroke-width="0.3"/>)",
                        x0, y, x1 - x0, p.py(0) - y)
         << "\n";
    }
    std::vector<std::pair<double, double>> curve;
    for (int i = 1; i < 600; ++i) {
      const double x = kZeroBound * i / 600.0;
      curve.emplace_back(x, density_v(x));
    }
    svg_polyline(os, p, curve, "#d62728");
    os << "</svg>\n";
  }
  return os.str();
}

// ---------------------------------------------------------------- cdf

struct CdfOptions {
  long points = 201;
  std::string format = "csv";
};

std::string cmd_cdf(const CdfOptions& o) {
  if (o.points < 2) throw UsageError("--points must be >= 2");
  const Format format = parse_format(o.format, true);
  std::vector<double> xs;
  for (long i = 0; i < o.points; ++i) xs.push_back(kZeroBound * static_cast<double>(i) / static_cast<double>(o.points - 1));
  xs.back() = kZeroBound;

  auto interior = [](double x) { return x > 0.0 && x < kZeroBound; };
  std::ostringstream os;
  if (format == Format::Csv) {
    csv_row(os, {"x", "z", "v", "F"});
    for (double x : xs) csv_row(os, {num(x), num(z_of_x(x)), interior(x) ? num(density_v(x)) : "", num(cdf_F(x))});
  } else if (format == Format::Json) {
    json rows = json::array();
    for (double x : xs) {
      rows.push_back({{"x", x}, {"z", z_of_x(x)}, {"v", interior(x) ? json(density_v(x)) : json(nullptr)}, {"F", cdf_F(x)}});
    }
    os << json_text(json{{"points", rows}});
  } else {
    Plot p;
    p.y_max = 1.0;
    svg_open(os, p, "Cumulative distribution function F");
    std::vector<std::pair<double, double>> curve;
    for (double x : xs) curve.emplace_back(x, cdf_F(x));
    svg_polyline(os, p, curve, "#1f77b4");
    os << "</svg>\n";
  }
  return os.str();
}

// ---------------------------------------------------------------- verify

struct VerifyOptions {
  std::string suite = "all";
  std::string format = "text";
};

std::string cmd_verify(const VerifyOptions& o, bool color, int& exit_code) {
  const auto suite = parse_suite(o.suite);
  if (!suite) throw UsageError("--suite must be all, recursion, roots, moments or dist");
  if (o.format != "text" && o.format != "json") throw UsageError("--format must be text or json");

  const VerifyReport report = verify(*suite);
  exit_code = report.exit_code();

  std::ostringstream os;
  if (o.format == "json") {
    json checks = json::array();
    for (const auto& r : report.results) {
      checks.push_back({{"suite", r.suite}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    }
    os << json_text(json{{"suite", o.suite}, {"passed", report.passed()}, {"checks", checks}});
    return os.str();
  }
  const char* green = color ? "\033[32m" : "";
  const char* red = color ? "\033[31m" : "";
  const char* reset = color ? "\033[0m" : "";
  std::size_t failures = 0;
  for (const auto& r : report.results) {
    if (!r.passed) ++failures;
    os << (r.passed ? green : red) << (r.passed ? "PASS" : "FAIL") << reset << "  [" << r.suite << "] " << r.name;
    if (!r.detail.empty()) os << "  (" << r.detail << ")";
    os << "\n";
  }
  os << fmt::format("{} checks, {} failed\n", report.results.size(), failures);
  return os.str();
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot open output file '" + path + "'");
  file << text;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact generation, zeros, moments and limit distribution of Q_n = P_n^{s,1}"};
  app.name("recpoly");
  app.require_subcommand(1);

  std::string out_path;

  GenOptions gen;
  auto* gen_cmd = app.add_subcommand("gen", "Coefficients of P_n^{g,h}");
  gen_cmd->set_help_flag("--help", "Print this help message and exit");
  gen_cmd->add_option("--g", gen.g, "g: one, id, s, cube, sigma, sigma_<k>")->required();
  gen_cmd->add_option("--h", gen.h, "h: one or id");
  gen_cmd->add_option("--n", gen.n, "Degree index n >= 0")->required();
  gen_cmd->add_option("--format", gen.format, "csv or json");
  gen_cmd->add_option("--max-coeffs", gen.max_coeffs, "Budget on stored coefficients of the prefix P_0..P_n");
  gen_cmd->add_option("--out", out_path, "Write to PATH instead of stdout");

  ZerosOptions zeros;
  auto* zeros_cmd = app.add_subcommand("zeros", "Zeros of Q_n(-x)");
  zeros_cmd->add_option("--n", zeros.n, "n >= 1")->required();
  zeros_cmd->add_option("--method", zeros.method, "angle, sturm (n <= 60) or both");
  zeros_cmd->add_option("--format", zeros.format, "csv or json");
  zeros_cmd->add_option("--threads", zeros.threads, "Worker threads for the angle method");
  zeros_cmd->add_flag("--q-roots", zeros.q_roots, "Report the zeros of Q_n(x) instead (negated)");
  zeros_cmd->add_option("--out", out_path, "Write to PATH instead of stdout");

  MomentsOptions moments;
  auto* moments_cmd = app.add_subcommand("moments", "Limit moments L_m by three routes");
  moments_cmd->add_option("--max-m", moments.max_m, "Largest m >= 1")->required();
  moments_cmd->add_option("--empirical-n", moments.empirical_n, "Also report (1/n) sum x_k^m for the zeros of Q_n(-x)");
  moments_cmd->add_option("--format", moments.format, "csv or json");
  moments_cmd->add_option("--threads", moments.threads, "Worker threads for the zeros");
  moments_cmd->add_option("--out", out_path, "Write to PATH instead of stdout");

  DistOptions dist;
  auto* dist_cmd = app.add_subcommand("dist", "Histogram of the zeros against the limit density");
  dist_cmd->add_option("--n", dist.n, "n >= 1")->required();
  dist_cmd->add_option("--bins", dist.bins, "Number of equal bins on [0, 6 sqrt 3]");
  dist_cmd->add_option("--format", dist.format, "csv, json or svg");
  dist_cmd->add_option("--threads", dist.threads, "Worker threads for the zeros");
  dist_cmd->add_option("--out", out_path, "Write to PATH instead of stdout");

  CdfOptions cdf;
  auto* cdf_cmd = app.add_subcommand("cdf", "Tabulate z, v and F on a uniform grid of [0, 6 sqrt 3]");
  cdf_cmd->add_option("--points", cdf.points, "Grid points including both ends (>= 2)");
  cdf_cmd->add_option("--format", cdf.format, "csv, json or svg");
  cdf_cmd->add_option("--out", out_path, "Write to PATH instead of stdout");

  VerifyOptions ver;
  auto* verify_cmd = app.add_subcommand("verify", "Run invariant checks");
  verify_cmd->add_option("--suite", ver.suite, "all, recursion, roots, moments or dist");
  verify_cmd->add_option("--format", ver.format, "text or json");
  verify_cmd->add_option("--out", out_path, "Write to PATH instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    int exit_code = kExitOk;
    std::string text;
    if (*gen_cmd) text = cmd_gen(gen);
    else if (*zeros_cmd) text = cmd_zeros(zeros);
    else if (*moments_cmd) text = cmd_moments(moments);
    else if (*dist_cmd) text = cmd_dist(dist);
    else if (*cdf_cmd) text = cmd_cdf(cdf);
    else if (*verify_cmd) {
      const bool color = out_path.empty() && &out == &std::cout && ::isatty(STDOUT_FILENO) != 0 &&
                         std::getenv("NO_COLOR") == nullptr;
      text = cmd_verify(ver, color, exit_code);
    }
    emit(text, out_path, out);
    return exit_code;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitVerifyFailed;
  }
}

}  // namespace recpoly::cli
