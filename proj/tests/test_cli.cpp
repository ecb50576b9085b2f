#include "doctest.h"

#include "cli.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "recpoly");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = recpoly::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  std::string line;
  while (std::getline(is, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    out.push_back(line);
  }
  return out;
}

std::vector<std::string> data_rows(const std::string& s) {
  std::vector<std::string> out;
  for (auto& l : lines(s)) {
    if (!l.empty() && l[0] != '#') out.push_back(l);
  }
  return out;
}

bool has_line(const std::string& s, const std::string& want) {
  for (const auto& l : lines(s)) {
    if (l == want) return true;
  }
  return false;
}

std::string footer(const std::string& s, const std::string& key) {
  for (const auto& l : lines(s)) {
    if (l.rfind("# " + key + "=", 0) == 0) return l.substr(key.size() + 3);
  }
  return {};
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("gen Q_3") {
  const auto r = run({"gen", "--g", "s", "--h", "one", "--n", "3"});
  CHECK(r.code == 0);
  const auto rows = data_rows(r.out);
  REQUIRE(rows.size() == 5);
  CHECK(rows[0] == "k,numerator,denominator");
  CHECK(rows[1] == "0,0,1");
  CHECK(rows[2] == "1,9,1");
  CHECK(rows[3] == "2,8,1");
  CHECK(rows[4] == "3,1,1");
  CHECK(footer(r.out, "four_term_check") == "pass");
  CHECK(r.out.find("\r\n") != std::string::npos);
}

TEST_CASE("gen base case and rational coefficients") {
  const auto r0 = run({"gen", "--g", "s", "--h", "one", "--n", "0"});
  CHECK(r0.code == 0);
  CHECK(data_rows(r0.out) == std::vector<std::string>{"k,numerator,denominator", "0,1,1"});
  const auto r = run({"gen", "--g", "cube", "--h", "id", "--n", "2"});
  CHECK(r.code == 0);
  CHECK(has_line(r.out, "2,1,2"));
  CHECK(has_line(r.out, "1,4,1"));
  CHECK(footer(r.out, "four_term_check").empty());
}

TEST_CASE("gen JSON") {
  const auto r = run({"gen", "--g", "sigma", "--h", "id", "--n", "4", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["g"] == "sigma");
  CHECK(j["h"] == "id");
  CHECK(j["coefficients"].size() == 5);
  CHECK(j["coefficients"][4]["denominator"] == "24");
}

TEST_CASE("gen usage errors") {
  CHECK(run({"gen", "--g", "nope", "--h", "one", "--n", "3"}).code == 2);
  CHECK(run({"gen", "--g", "s", "--h", "s", "--n", "3"}).code == 2);
  CHECK(run({"gen", "--g", "s", "--h", "one", "--n", "-1"}).code == 2);
  CHECK(run({"gen", "--g", "s", "--h", "one", "--n", "3", "--format", "svg"}).code == 2);
  const auto big = run({"gen", "--g", "s", "--h", "one", "--n", "100000"});
  CHECK(big.code == 2);
  CHECK(big.err.find("budget") != std::string::npos);
  CHECK(run({"gen", "--g", "s", "--h", "one", "--n", "50", "--max-coeffs", "10"}).code == 2);
}

TEST_CASE("zeros") {
  const auto both = run({"zeros", "--n", "2", "--method", "both"});
  CHECK(both.code == 0);
  CHECK(std::stod(footer(both.out, "max_discrepancy")) <= 1e-11);
  const auto big = run({"zeros", "--n", "1000"});
  CHECK(big.code == 0);
  const auto rows = data_rows(big.out);
  REQUIRE(rows.size() == 1001);
  CHECK(rows[0] == "index,zero,residual");
  double top = 0.0;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto c1 = rows[i].find(',');
    top = std::max(top, std::stod(rows[i].substr(c1 + 1)));
  }
  CHECK(top < 10.3923);
  CHECK(run({"zeros", "--n", "0"}).code == 2);
  CHECK(run({"zeros", "--n", "61", "--method", "sturm"}).code == 2);
  CHECK(run({"zeros", "--n", "5", "--method", "newton"}).code == 2);
}

TEST_CASE("zeros of Q_n(x) and JSON") {
  const auto r = run({"zeros", "--n", "3", "--q-roots", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["polynomial"] == "Q_n(x)");
  REQUIRE(j["angle"].size() == 3);
  CHECK(j["angle"][0].get<double>() == doctest::Approx(-4.0 - std::sqrt(7.0)));
}

TEST_CASE("moments") {
  const auto r = run({"moments", "--max-m", "9"});
  CHECK(r.code == 0);
  const auto rows = data_rows(r.out);
  REQUIRE(rows.size() == 10);
  CHECK(rows[0] == "m,closed,sum,series,closed_eq_sum,closed_eq_series");
  const char* want[] = {"4", "30", "256", "2310", "21504", "204204", "1966080", "19122246"};
  for (int m = 1; m <= 8; ++m) CHECK(rows[static_cast<std::size_t>(m)].rfind(std::to_string(m) + "," + want[m - 1] + ",", 0) == 0);

  const auto e = run({"moments", "--max-m", "1", "--empirical-n", "3", "--format", "json"});
  REQUIRE(e.code == 0);
  const auto j = nlohmann::json::parse(e.out);
  CHECK(j["moments"][0]["empirical"].get<double>() == doctest::Approx(8.0 / 3.0));
  CHECK(j["moments"][0]["closed"] == "4");

  const auto all = run({"moments", "--max-m", "60", "--format", "json"});
  REQUIRE(all.code == 0);
  for (const auto& row : nlohmann::json::parse(all.out)["moments"]) {
    CHECK(row["closed_eq_sum"] == true);
    CHECK(row["closed_eq_series"] == true);
  }
  CHECK(run({"moments", "--max-m", "0"}).code == 2);
}

TEST_CASE("dist") {
  const auto one = run({"dist", "--n", "1", "--bins", "1"});
  CHECK(one.code == 0);
  const auto rows = data_rows(one.out);
  REQUIRE(rows.size() == 2);
  CHECK(rows[1].rfind("0,0,", 0) == 0);
  CHECK(footer(one.out, "n") == "1");

  const auto r300 = run({"dist", "--n", "300", "--bins", "50", "--format", "csv"});
  const auto r1000 = run({"dist", "--n", "1000", "--bins", "100"});
  REQUIRE(r300.code == 0);
  REQUIRE(r1000.code == 0);
  CHECK(std::stod(footer(r300.out, "ks")) > std::stod(footer(r1000.out, "ks")));
  CHECK(data_rows(r1000.out).size() == 101);

  const auto svg = run({"dist", "--n", "1000", "--bins", "100", "--format", "svg"});
  CHECK(svg.code == 0);
  CHECK(svg.out.rfind("<svg", 0) == 0);
  CHECK(svg.out.find("</svg>") != std::string::npos);
  CHECK(run({"dist", "--n", "10", "--bins", "0"}).code == 2);
}

TEST_CASE("cdf") {
  const auto r = run({"cdf", "--points", "11"});
  CHECK(r.code == 0);
  const auto rows = data_rows(r.out);
  REQUIRE(rows.size() == 12);
  CHECK(rows[0] == "x,z,v,F");
  CHECK(run({"cdf", "--format", "svg"}).out.find("<svg") != std::string::npos);
  CHECK(run({"cdf", "--points", "1"}).code == 2);
}

TEST_CASE("verify") {
  const auto r = run({"verify", "--suite", "moments"});
  CHECK(r.code == 0);
  CHECK(r.out.find("PASS") != std::string::npos);
  CHECK(r.out.find("\033[") == std::string::npos);
  const auto j = run({"verify", "--suite", "recursion", "--format", "json"});
  CHECK(j.code == 0);
  CHECK(nlohmann::json::parse(j.out)["passed"] == true);
  CHECK(run({"verify", "--suite", "bogus"}).code == 2);
}

TEST_CASE("output is deterministic") {
  const auto a = run({"zeros", "--n", "200", "--threads", "3"});
  const auto b = run({"zeros", "--n", "200"});
  CHECK(a.out == b.out);
  CHECK(run({"dist", "--n", "200", "--format", "json"}).out == run({"dist", "--n", "200", "--format", "json"}).out);
}

TEST_CASE("--out writes a file") {
  const auto path = (std::filesystem::temp_directory_path() / "recpoly_cli_test.csv").string();
  const auto r = run({"gen", "--g", "s", "--h", "one", "--n", "2", "--out", path});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream f(path, std::ios::binary);
  std::stringstream ss;
  ss << f.rdbuf();
  CHECK(has_line(ss.str(), "2,1,1"));
  std::remove(path.c_str());
}

TEST_CASE("unknown command and help") {
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

}
