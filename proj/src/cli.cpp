#include "qgtile/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "qgtile/characteristic_system.hpp"
#include "qgtile/dispersion.hpp"
#include "qgtile/error.hpp"
#include "qgtile/interval_solver.hpp"
#include "qgtile/oracles.hpp"
#include "qgtile/spectrum.hpp"
#include "qgtile/verify.hpp"

namespace qgtile {

namespace {

using nlohmann::json;

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

struct RunConfig {
  std::string tiling = "trh";
  double a = 1.0;
  std::string q = "zero";
  double lambda_max = 100.0;
  std::vector<double> theta{0.0, 0.0};
  double sprime = std::nan("");
  double rho = std::nan("");
  double lambda = std::nan("");
  int grid = 21;
  std::string out;
  std::string format = "csv";
  bool check = false;
  bool roots = false;
  std::string suite = "all";
};

Potential make_potential(const RunConfig& c) {
  if (c.q == "zero") return Potential::zero(c.a);
  if (c.q == "graphene") return Potential::graphene_sine(c.a, -0.85, c.a);
  if (c.q.rfind("graphene:", 0) == 0) {
    double depth = 0.0;
    try {
      depth = std::stod(c.q.substr(9));
    } catch (const std::exception&) {
      throw InputError("bad graphene depth in '" + c.q + "'");
    }
    return Potential::graphene_sine(c.a, depth, c.a);
  }
  if (c.q.rfind("file:", 0) == 0) return Potential::from_csv(c.q.substr(5), c.a);
  throw InputError("unknown potential '" + c.q + "' (expected zero, graphene, graphene:DEPTH or file:PATH)");
}

// Writes the rendered text to --out or to the output stream.
void emit(const RunConfig& c, const std::string& text, std::ostream& out) {
  if (c.out.empty()) {
    out << text;
    return;
  }
  std::ofstream f(c.out);
  if (!f) throw InputError("cannot write " + c.out);
  f << text;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

int cmd_bands(const RunConfig& c, std::ostream& out) {
  const TilingName t = parse_tiling(c.tiling);
  const Potential q = make_potential(c);
  std::vector<SpectralBand> bands;
  if (q.kind() == Potential::Kind::Zero) {
    // Enough periods to pass lambda_max, then clip.
    const int k_max = static_cast<int>(std::ceil(std::sqrt(std::max(c.lambda_max, 0.0)) * c.a / (2 * std::numbers::pi)));
    for (auto b : bands_zero_potential(t, c.a, k_max)) {
      if (b.lambda_lo >= c.lambda_max) continue;
      b.lambda_hi = std::min(b.lambda_hi, c.lambda_max);
      bands.push_back(b);
    }
  } else {
    bands = bands_general(t, q, c.lambda_max);
  }
  for (std::size_t i = 0; i < bands.size(); ++i) bands[i].band_index = static_cast<int>(i);

  std::ostringstream os;
  if (c.format == "json") {
    json j;
    j["tiling"] = tiling_label(t);
    j["potential"] = q.describe();
    j["lambda_max"] = c.lambda_max;
    j["bands"] = json::array();
    for (const auto& b : bands)
      j["bands"].push_back({{"band_index", b.band_index}, {"lambda_lo", b.lambda_lo}, {"lambda_hi", b.lambda_hi}});
    os << dump(j);
  } else {
    os << "band_index,lambda_lo,lambda_hi\n";
    for (const auto& b : bands) os << b.band_index << ',' << fmt(b.lambda_lo) << ',' << fmt(b.lambda_hi) << '\n';
  }
  emit(c, os.str(), out);
  return kExitOk;
}

int cmd_disprel(const RunConfig& c, std::ostream& out) {
  const TilingName t = parse_tiling(c.tiling);
  const QuasiMomentum k{c.theta.at(0), c.theta.at(1)};
  std::ostringstream os;

  if (c.check) {
    double lambda = c.lambda;
    if (!std::isnan(c.rho)) lambda = c.rho * c.rho;
    if (std::isnan(lambda)) throw InputError("--check needs --rho or --lambda");
    const Potential q = make_potential(c);
    const auto basis = solve_basis(q, lambda);
    const auto res = check_equivalence(build_tiling(t), basis, k);
    const bool ok = res.residual <= 1e-8;
    if (c.format == "json") {
      os << dump({{"tiling", tiling_label(t)},
                  {"theta", {k.theta1, k.theta2}},
                  {"lambda", lambda},
                  {"sprime", basis.Sp},
                  {"det", {res.det.real(), res.det.imag()}},
                  {"closed_form", {res.closed_form.real(), res.closed_form.imag()}},
                  {"residual", res.residual},
                  {"pass", ok}});
    } else {
      os << "tiling,theta1,theta2,lambda,sprime,det_re,det_im,closed_re,closed_im,residual\n";
      os << tiling_label(t) << ',' << fmt(k.theta1) << ',' << fmt(k.theta2) << ',' << fmt(lambda) << ','
         << fmt(basis.Sp) << ',' << fmt(res.det.real()) << ',' << fmt(res.det.imag()) << ','
         << fmt(res.closed_form.real()) << ',' << fmt(res.closed_form.imag()) << ',' << fmt(res.residual) << '\n';
    }
    emit(c, os.str(), out);
    return ok ? kExitOk : kExitVerificationFailed;
  }

  if (c.roots) {
    const auto r = dispersion_root_set(t, k);
    if (c.format == "json") {
      os << dump({{"tiling", tiling_label(t)}, {"theta", {k.theta1, k.theta2}}, {"roots", r}});
    } else {
      os << "theta1,theta2";
      for (std::size_t i = 0; i < r.size(); ++i) os << ",root_" << i + 1;
      os << '\n' << fmt(k.theta1) << ',' << fmt(k.theta2);
      for (double x : r) os << ',' << fmt(x);
      os << '\n';
    }
    emit(c, os.str(), out);
    return kExitOk;
  }

  double x = c.sprime;
  if (std::isnan(x)) {
    double lambda = c.lambda;
    if (!std::isnan(c.rho)) lambda = c.rho * c.rho;
    if (std::isnan(lambda)) throw InputError("disprel needs --sprime, --rho or --lambda");
    x = solve_basis(make_potential(c), lambda).Sp;
  }
  const double p = evaluate_dispersion(t, x, k);
  if (c.format == "json") {
    os << dump({{"tiling", tiling_label(t)}, {"theta", {k.theta1, k.theta2}}, {"sprime", x}, {"p", p}});
  } else {
    os << "tiling,theta1,theta2,sprime,p\n"
       << tiling_label(t) << ',' << fmt(k.theta1) << ',' << fmt(k.theta2) << ',' << fmt(x) << ',' << fmt(p) << '\n';
  }
  emit(c, os.str(), out);
  return kExitOk;
}

int cmd_verify(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const auto results = run_verification(c.suite);
  const json report = verification_report(results);
  emit(c, dump(report), out);
  for (const auto& r : results)
    err << r.name << ": " << (r.pass ? "pass" : "FAIL") << " (" << fmt(r.seconds) << " s)\n";
  return report["pass"].get<bool>() ? kExitOk : kExitVerificationFailed;
}

int cmd_sweep(const RunConfig& c, std::ostream& out, bool single_theta) {
  const TilingName t = parse_tiling(c.tiling);
  const Potential q = make_potential(c);
  require_even(q);
  if (!single_theta && c.grid < 2) throw InputError("--grid must be at least 2");
  const DiscriminantProfile prof(q, c.lambda_max);

  std::vector<std::pair<double, double>> thetas;
  if (single_theta) {
    thetas.push_back({c.theta.at(0), c.theta.at(1)});
  } else {
    for (int i = 0; i < c.grid; ++i)
      for (int j = 0; j < c.grid; ++j)
        thetas.push_back({grid_point(-std::numbers::pi, std::numbers::pi, c.grid, i),
                          grid_point(-std::numbers::pi, std::numbers::pi, c.grid, j)});
  }
  std::vector<std::vector<double>> rows;
  std::size_t width = 0;
  for (const auto& [t1, t2] : thetas) {
    std::vector<double> lam;
    for (double x : dispersion_root_set(t, {t1, t2}))
      for (double l : prof.preimage(x))
        if (l <= c.lambda_max) lam.push_back(l);
    std::sort(lam.begin(), lam.end());
    width = std::max(width, lam.size());
    rows.push_back(std::move(lam));
  }

  std::ostringstream os;
  if (c.format == "json") {
    json j;
    j["tiling"] = tiling_label(t);
    j["potential"] = q.describe();
    j["lambda_max"] = c.lambda_max;
    j["rows"] = json::array();
    for (std::size_t i = 0; i < rows.size(); ++i)
      j["rows"].push_back({{"theta1", thetas[i].first}, {"theta2", thetas[i].second}, {"roots", rows[i]}});
    os << dump(j);
  } else {
    os << "theta1,theta2";
    for (std::size_t k = 0; k < width; ++k) os << ",root_" << k + 1;
    os << '\n';
    for (std::size_t i = 0; i < rows.size(); ++i) {
      os << fmt(thetas[i].first) << ',' << fmt(thetas[i].second);
      for (std::size_t k = 0; k < width; ++k) {
        os << ',';
        if (k < rows[i].size()) os << fmt(rows[i][k]);
      }
      os << '\n';
    }
  }
  emit(c, os.str(), out);
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spectra of periodic quantum graphs on Archimedean tilings", "qgtile"};
  app.require_subcommand(1);
  RunConfig c;

  auto common = [&](CLI::App* s) {
    s->add_option("--tiling", c.tiling, "tiling: s h t et trs th trh ss rth sth trth");
    s->add_option("--a", c.a, "edge length")->check(CLI::PositiveNumber);
    s->add_option("--q", c.q, "potential: zero | graphene | graphene:DEPTH | file:PATH");
    s->add_option("--out", c.out, "output path (default: standard output)");
    s->add_option("--format", c.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  };

  auto* bands = app.add_subcommand("bands", "absolutely continuous bands below lambda_max");
  common(bands);
  bands->add_option("--lambda-max", c.lambda_max, "upper energy");

  auto* disprel = app.add_subcommand("disprel", "evaluate the dispersion polynomial or check the determinant");
  common(disprel);
  auto* theta_opt = disprel->add_option("--theta", c.theta, "quasi-momentum T1 T2")->expected(2);
  disprel->add_option("--sprime", c.sprime, "value of S'(a)");
  disprel->add_option("--rho", c.rho, "frequency; lambda = rho^2");
  disprel->add_option("--lambda", c.lambda, "energy");
  disprel->add_flag("--check", c.check, "compare determinant and closed form");
  disprel->add_flag("--roots", c.roots, "print the real S'-roots in [-1.5, 1.5]");
  (void)theta_opt;

  auto* verify = app.add_subcommand("verify", "run verification suites and write a JSON report");
  verify->add_option("--suite", c.suite, "all | equivalence | ranges | appendixb | identities | eigenfunctions");
  verify->add_option("--out", c.out, "report path (default: standard output)");

  auto* sweep = app.add_subcommand("sweep", "lambda roots over a quasi-momentum grid");
  common(sweep);
  sweep->add_option("--lambda-max", c.lambda_max, "upper energy");
  sweep->add_option("--grid", c.grid, "grid points per axis");
  auto* sweep_theta = sweep->add_option("--theta", c.theta, "single quasi-momentum T1 T2")->expected(2);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (bands->parsed()) return cmd_bands(c, out);
    if (disprel->parsed()) return cmd_disprel(c, out);
    if (verify->parsed()) return cmd_verify(c, out, err);
    if (sweep->parsed()) return cmd_sweep(c, out, sweep_theta->count() > 0);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UnsupportedTiling& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace qgtile
