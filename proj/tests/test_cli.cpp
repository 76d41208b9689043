#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <numbers>
#include <sstream>

#include "qgtile/cli.hpp"

using namespace qgtile;
using std::numbers::pi;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "qgtile");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::vector<std::string>> csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    std::vector<std::string> cells;
    std::stringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.push_back("");
    rows.push_back(cells);
  }
  return rows;
}

}  // namespace

TEST_CASE("usage errors exit with 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  auto r = run({"bands", "--tiling", "pentagon"});
  CHECK(r.code == 2);
  CHECK(r.err.find("pentagon") != std::string::npos);
  CHECK(run({"bands", "--tiling", "ss", "--a", "-1"}).code == 2);
  CHECK(run({"bands", "--tiling", "ss", "--q", "bogus"}).code == 2);
  CHECK(run({"bands", "--tiling", "ss", "--q", "file:/no/such/file.csv"}).code == 2);
  CHECK(run({"disprel", "--tiling", "h", "--check", "--rho", "1", "--theta", "0", "0"}).code == 2);
  CHECK(run({"disprel", "--tiling", "trh", "--theta", "0", "0"}).code == 2);
  CHECK(run({"disprel", "--tiling", "trh", "--theta", "0"}).code == 2);
  CHECK(run({"bands", "--tiling", "ss", "--format", "xml"}).code == 2);
  CHECK(run({"verify", "--suite", "nothing"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("bands") {
  auto r = run({"bands", "--tiling", "ss", "--a", "1", "--lambda-max", "100"});
  REQUIRE(r.code == 0);
  const auto rows = csv(r.out);
  REQUIRE(rows.size() == 4);
  CHECK(rows[0] == std::vector<std::string>{"band_index", "lambda_lo", "lambda_hi"});
  CHECK(std::stod(rows[1][1]) == 0.0);
  CHECK(std::stod(rows[1][2]) == doctest::Approx(std::pow(std::acos(-0.6), 2)).epsilon(1e-14));

  auto half = csv(run({"bands", "--tiling", "ss", "--a", "2", "--lambda-max", "25"}).out);
  REQUIRE(half.size() == rows.size());
  for (std::size_t i = 1; i < rows.size(); ++i)
    CHECK(std::stod(half[i][2]) == doctest::Approx(std::stod(rows[i][2]) / 4).epsilon(1e-14));

  r = run({"bands", "--tiling", "trh", "--q", "zero", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["tiling"] == "trH");
  CHECK(j["bands"][0]["lambda_lo"] == 0.0);
  CHECK(j["bands"][0]["lambda_hi"].get<double>() == doctest::Approx(std::pow(std::acos(1.0 / 3), 2)));

  r = run({"bands", "--tiling", "ss", "--q", "graphene", "--lambda-max", "100"});
  REQUIRE(r.code == 0);
  CHECK(csv(r.out).size() == 4);
}

TEST_CASE("potential from a file") {
  const auto path = std::filesystem::temp_directory_path() / "qgtile_cli_q.csv";
  {
    std::ofstream f(path);
    f << "x,q\n";
    for (int i = 0; i <= 100; ++i) {
      const double x = i / 100.0;
      f << x << ',' << -0.85 + std::pow(std::sin(pi * x), 2) / 1.34 << '\n';
    }
  }
  const auto r = run({"bands", "--tiling", "rth", "--q", "file:" + path.string(), "--lambda-max", "60"});
  REQUIRE(r.code == 0);
  const auto g = run({"bands", "--tiling", "rth", "--q", "graphene", "--lambda-max", "60"});
  const auto a = csv(r.out), b = csv(g.out);
  REQUIRE(a.size() == b.size());
  // Piecewise-linear table of the same function: edges agree to interpolation error.
  for (std::size_t i = 1; i < a.size(); ++i) CHECK(std::stod(a[i][2]) == doctest::Approx(std::stod(b[i][2])).epsilon(1e-3));

  const auto odd = std::filesystem::temp_directory_path() / "qgtile_cli_odd.csv";
  std::ofstream(odd) << "0,0\n0.5,1\n1,3\n";
  const auto e = run({"bands", "--tiling", "rth", "--q", "file:" + odd.string()});
  CHECK(e.code == 2);
  CHECK(e.err.find("even") != std::string::npos);
}

TEST_CASE("disprel") {
  auto r = run({"disprel", "--tiling", "trth", "--sprime", "1", "--theta", "0", "0"});
  REQUIRE(r.code == 0);
  auto rows = csv(r.out);
  CHECK(std::stod(rows[1][4]) == 0.0);

  r = run({"disprel", "--tiling", "h", "--sprime", "1", "--theta", "0", "0", "--format", "json"});
  CHECK(nlohmann::json::parse(r.out)["p"] == 0.0);

  r = run({"disprel", "--tiling", "trh", "--check", "--rho", "1.0472", "--theta", "0", "0"});
  CHECK(r.code == 0);
  rows = csv(r.out);
  CHECK(std::stod(rows[1][9]) <= 1e-8);

  r = run({"disprel", "--tiling", "st", "--check", "--lambda", "7.5", "--theta", "0.3", "-2", "--q", "graphene",
           "--format", "json"});
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["pass"] == true);

  r = run({"disprel", "--tiling", "trh", "--roots", "--theta", "0", "0", "--format", "json"});
  const auto roots = nlohmann::json::parse(r.out)["roots"];
  REQUIRE(roots.size() == 4);
  CHECK(roots[0].get<double>() == doctest::Approx(-2.0 / 3));
  CHECK(roots[3].get<double>() == doctest::Approx(1.0));
}

TEST_CASE("sweep") {
  auto r = run({"sweep", "--tiling", "ss", "--theta", "0", "0", "--lambda-max", "10"});
  REQUIRE(r.code == 0);
  auto rows = csv(r.out);
  REQUIRE(rows.size() == 2);
  CHECK(std::abs(std::stod(rows[1][2])) < 1e-12);

  r = run({"sweep", "--tiling", "trh", "--theta", "0", "0", "--lambda-max", "30", "--format", "json"});
  const auto lam = nlohmann::json::parse(r.out)["rows"][0]["roots"];
  auto has = [&](double v) {
    for (const auto& x : lam)
      if (std::abs(x.get<double>() - v) < 1e-9) return true;
    return false;
  };
  CHECK(has(std::pow(std::acos(1.0 / 3), 2)));
  CHECK(has(std::pow(std::acos(-2.0 / 3), 2)));

  r = run({"sweep", "--tiling", "rth", "--grid", "5", "--lambda-max", "20"});
  REQUIRE(r.code == 0);
  CHECK(csv(r.out).size() == 1 + 25);
  CHECK(run({"sweep", "--tiling", "rth", "--grid", "1"}).code == 2);
}

TEST_CASE("verify suites and report files") {
  const auto path = std::filesystem::temp_directory_path() / "qgtile_verify.json";
  std::filesystem::remove(path);
  auto r = run({"verify", "--suite", "identities", "--out", path.string()});
  CHECK(r.code == 0);
  CHECK(r.err.find("identities: pass") != std::string::npos);
  std::ifstream f(path);
  const auto j = nlohmann::json::parse(f);
  CHECK(j["pass"] == true);
  CHECK(j["suites"][0]["name"] == "identities");

  r = run({"verify", "--suite", "appendixb"});
  CHECK(r.code == 0);
  const auto a = nlohmann::json::parse(r.out);
  CHECK(std::abs(a["suites"][0]["details"]["M4_zero"]["at_plus"].get<double>()) <= 1e-10);
}

TEST_CASE("output is deterministic") {
  const std::vector<std::string> args{"sweep", "--tiling", "sth", "--grid", "4", "--q", "graphene", "--lambda-max", "30"};
  CHECK(run(args).out == run(args).out);
  const std::vector<std::string> b{"bands", "--tiling", "trth", "--q", "graphene", "--format", "json"};
  CHECK(run(b).out == run(b).out);
}
