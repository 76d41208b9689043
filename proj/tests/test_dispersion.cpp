#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <boost/rational.hpp>
#include <cmath>
#include <numbers>
#include <random>

#include "qgtile/characteristic_system.hpp"
#include "qgtile/dispersion.hpp"
#include "qgtile/polynomial.hpp"

using namespace qgtile;
using std::numbers::pi;
using Q = boost::rational<long long>;

namespace {

double p_of(TilingName n, double x, double t1, double t2) { return evaluate_dispersion(n, x, {t1, t2}); }

bool has_root(const std::vector<double>& roots, double x, double tol = 1e-9) {
  for (double r : roots)
    if (std::abs(r - x) <= tol) return true;
  return false;
}

double poly(std::initializer_list<double> desc, double x) {
  double acc = 0.0;
  for (double c : desc) acc = acc * x + c;
  return acc;
}

}  // namespace

TEST_CASE("trigonometric invariants") {
  auto w = trig_invariants({0.0, 0.0});
  CHECK(w.omega == 1.0);
  CHECK(1.0 + 8.0 * w.omega == 9.0);

  w = trig_invariants({pi, pi});
  CHECK(std::abs(w.omega) < 1e-15);

  w = trig_invariants({2 * pi / 3, -2 * pi / 3});
  CHECK(w.omega == doctest::Approx(-0.125).epsilon(1e-14));

  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> th(-pi, pi);
  for (int s = 0; s < 200; ++s) {
    const double t1 = th(rng), t2 = th(rng);
    w = trig_invariants({t1, t2});
    CHECK(std::abs(1 + 8 * w.omega - std::norm(1.0 + std::polar(1.0, t1) + std::polar(1.0, t2))) < 1e-12);
    CHECK(std::abs(std::cos(t1 + 2 * t2) + std::cos(2 * t1 + t2) + std::cos(t2 - t1) - (4 * w.omega3 - 1)) < 1e-12);
    CHECK(w.xi == doctest::Approx(std::cos((t1 + t2) / 2)));
    CHECK(w.eta == doctest::Approx(std::cos((t1 - t2) / 2)));
    CHECK(w.omegaT2 == w.omega);
  }
}

TEST_CASE("p(1, 0, 0) vanishes exactly for every tiling") {
  for (auto name : all_tilings()) {
    CAPTURE(tiling_label(name));
    const auto c = dispersion_coefficients<Q>(name, AngleTerms<Q>::origin());
    Q acc(0);
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * Q(1) + *it;
    CHECK(acc == Q(0));
    CHECK(static_cast<int>(c.size()) - 1 == dispersion_form(name).degree);
  }
}

TEST_CASE("prefactor powers") {
  struct P {
    TilingName n;
    int i, j, k, l;
  };
  const P table[] = {{TilingName::S, 2, 0, 0, 0},   {TilingName::H, 2, 0, 0, 0},    {TilingName::T, 2, 0, 0, 0},
                     {TilingName::ET, 3, 0, 0, 0},  {TilingName::trS, 2, 0, 0, 0},  {TilingName::TH, 3, 0, 1, 0},
                     {TilingName::trH, 3, 1, 0, 1}, {TilingName::SS, 6, 0, 0, 0},   {TilingName::RTH, 6, 0, 0, 0},
                     {TilingName::STH, 9, 0, 0, 0}, {TilingName::trTH, 6, 0, 0, 0}};
  for (const auto& p : table) {
    const auto f = dispersion_form(p.n);
    CHECK(f.i == p.i);
    CHECK(f.j == p.j);
    CHECK(f.k == p.k);
    CHECK(f.l == p.l);
  }
  CHECK(dispersion_form(TilingName::trH).prefactor(2.0, -2.0 / 3.0) == 0.0);
  CHECK(dispersion_form(TilingName::TH).prefactor(1.0, -0.5) == 0.0);
}

TEST_CASE("worked values") {
  CHECK(std::abs(p_of(TilingName::trH, -2.0 / 3.0, 0, 0)) < 1e-13);
  const double x = 0.37, t1 = 0.4, t2 = -1.2;
  const double w = trig_invariants({t1, t2}).omega;
  CHECK(p_of(TilingName::trH, x, t1, t2) ==
        doctest::Approx(81 * std::pow(x, 4) - 54 * std::pow(x, 3) - 45 * x * x + 18 * x - 8 * w + 8));
  CHECK(p_of(TilingName::STH, 1, 0, 0) == 0.0);
  CHECK(p_of(TilingName::RTH, 1, 0, 0) == 0.0);
  CHECK(p_of(TilingName::trTH, 1, 0, 0) == 0.0);
  // Where the two quadratics of the snub square proof meet.
  CHECK(std::abs(p_of(TilingName::SS, -0.6, 0, 0)) < 1e-12);
  CHECK(p_of(TilingName::SS, -0.6, pi, 0) == doctest::Approx(16.0).epsilon(1e-12));
  // Tangency of the lower quadratic at +-1/sqrt(5).
  for (double s : {-1.0, 1.0}) {
    const double r = s / std::sqrt(5.0);
    CHECK(std::abs(p_of(TilingName::SS, r, pi, 0)) < 1e-12);
  }
  // TH with the balanced reading 2x^2 - x - omega.
  CHECK(p_of(TilingName::TH, 0.5, t1, t2) == doctest::Approx(2 * 0.25 - 0.5 - w));
}

TEST_CASE("even under reversal of the quasi-momentum") {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> th(-pi, pi), xs(-1.5, 1.5);
  for (auto name : all_tilings())
    for (int s = 0; s < 50; ++s) {
      const double x = xs(rng), t1 = th(rng), t2 = th(rng);
      const double a = p_of(name, x, t1, t2), b = p_of(name, x, -t1, -t2);
      CHECK(std::abs(a - b) <= 1e-12 * std::max(1.0, std::abs(a)));
    }
}

TEST_CASE("trH: the unsimplified determinant bracket") {
  // With C = S' the cosine form of the bracket collapses to 3 S'(3S'+2) p.
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> th(-pi, pi), xs(-1.2, 1.2);
  for (int s = 0; s < 100; ++s) {
    const double x = xs(rng), C = x, t1 = th(rng), t2 = th(rng);
    const double bracket = -6 * (x * (3 * C + 1) + C) * std::cos(t2 - t1) -
                           2 * (3 * x * x + (6 * C + 4) * x + 2 * C) * std::cos(t1) -
                           2 * (x * (6 * C + 2) + C * (3 * C + 4)) * std::cos(t2) + 162 * C * C * std::pow(x, 4) +
                           81 * C * std::pow(x, 3) * (5 * C * C - 2) +
                           x * x * (162 * std::pow(C, 4) - 405 * C * C - 54 * C + 32) +
                           x * (18 + 98 * C - 54 * C * C - 162 * std::pow(C, 3)) + 2 * C * (16 * C + 9);
    const double rhs = 3 * x * (3 * x + 2) * p_of(TilingName::trH, x, t1, t2);
    CHECK(std::abs(bracket - rhs) <= 1e-10 * std::max(1.0, std::abs(rhs)));
  }
}

TEST_CASE("trH: general-potential expansion against the assembled determinant") {
  // A potential without reflection symmetry, so C and S' differ.
  const auto q = Potential::sampled({0.0, 0.3, 1.0}, {0.0, 2.5, -1.0});
  const auto spec = build_tiling(TilingName::trH);
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> th(-pi, pi), lam(0.5, 30.0);
  for (int s = 0; s < 30; ++s) {
    const auto b = solve_basis(q, lam(rng));
    const QuasiMomentum k{th(rng), th(rng)};
    REQUIRE(std::abs(b.C - b.Sp) > 1e-4);
    const double C = b.C, x = b.Sp, t1 = k.theta1, t2 = k.theta2;
    const double core = 162 * C * C * std::pow(x, 4) + 81 * C * std::pow(x, 3) * (5 * C * C - 2) +
                        x * x * (162 * std::pow(C, 4) - 405 * C * C - 54 * C + 32) +
                        x * (18 + 98 * C - 54 * C * C - 162 * std::pow(C, 3)) + 2 * C * (16 * C + 9);
    const double bracket = -6 * (x * (3 * C + 1) + C) * std::cos(t2 - t1) -
                           2 * (3 * x * x + (6 * C + 4) * x + 2 * C) * std::cos(t1) -
                           2 * (x * (6 * C + 2) + C * (3 * C + 4)) * std::cos(t2) + core;
    const cplx phi = k.alpha_tilde() * k.beta() * std::pow(b.S, 3) * bracket;
    const cplx det = determinant(assemble(spec, b, k));
    CHECK(std::abs(det + phi) <= 1e-9 * std::abs(det));
  }
}

TEST_CASE("RTH and STH in the omega variables") {
  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> th(-pi, pi), xs(-1.2, 1.2);
  for (int s = 0; s < 100; ++s) {
    const double x = xs(rng), t1 = th(rng), t2 = th(rng);
    const auto w = trig_invariants({t1, t2});
    const double rth = 4 * (512 * std::pow(x, 6) - 384 * std::pow(x, 4) - 128 * w.omega2 * std::pow(x, 3) +
                            64 * (1 - w.omega2) * x * x + 2 * w.omega2 - 2 * w.omega3 + w.omega1 - 1);
    CHECK(p_of(TilingName::RTH, x, t1, t2) == doctest::Approx(rth).epsilon(1e-11));
    const double sth = 15625 * std::pow(x, 6) - 9375 * std::pow(x, 4) - (4000 * w.omega2 + 1000) * std::pow(x, 3) -
                       (2400 * w.omega2 - 1275) * x * x - (240 * w.omega2 + 80 * w.omega3 - 200) * x +
                       8 * w.omega1 + 32 * w.omega2 - 32 * w.omega3 - 13;
    CHECK(p_of(TilingName::STH, x, t1, t2) == doctest::Approx(sth).epsilon(1e-11));
  }
  // Diagonal factorizations.
  for (double x : {-0.9, -0.3, 0.1, 0.6, 1.1}) {
    CHECK(p_of(TilingName::STH, x, 0, 0) == doctest::Approx(5 * (x - 1) * std::pow(5 * x + 1, 5)).epsilon(1e-12));
    const double t = 2 * pi / 3;  // cos t = -1/2
    CHECK(p_of(TilingName::STH, x, t, t) ==
          doctest::Approx(25 * (25 * x * x + 10 * x - 2) * std::pow(5 * x * x - x - 1, 2)).epsilon(1e-11));
    CHECK(p_of(TilingName::RTH, x, 0, 0) / 4 ==
          doctest::Approx(512 * std::pow(x, 6) - 384 * std::pow(x, 4) - 128 * std::pow(x, 3)).epsilon(1e-12));
  }
}

TEST_CASE("trTH through the squared variable") {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> th(-pi, pi), xs(-1.2, 1.2);
  for (int s = 0; s < 100; ++s) {
    const double sp = xs(rng), t1 = th(rng), t2 = th(rng);
    const auto w = trig_invariants({t1, t2});
    const double X = 9 * sp * sp;
    const double eq = poly({1, -18, 111, -(48 * w.omegaT2 + 268), 240 * w.omegaT2 + 207,
                            -(32 * w.omegaT3 + 240 * w.omegaT2 + 34),
                            8 * w.omegaT1 + 64 * w.omegaT2 + 16 * w.omegaT3 - 7},
                           X);
    const double p = p_of(TilingName::trTH, sp, t1, t2);
    CHECK(std::abs(p - eq) <= 1e-9 * std::max(1.0, std::abs(eq)));
  }
  for (double X : {0.5, 2.0, 3.5, 7.0}) {
    const double sp = std::sqrt(X / 9);
    CHECK(p_of(TilingName::trTH, sp, 0, 0) ==
          doctest::Approx(std::pow(X - 1, 3) * std::pow(X - 3, 2) * (X - 9)).epsilon(1e-10));
    const double t = 2 * pi / 3;  // theta1 = -theta2, cos = -1/2
    CHECK(p_of(TilingName::trTH, sp, t, -t) ==
          doctest::Approx(std::pow(X * X - 7 * X + 3, 2) * (X - 4) * X).epsilon(1e-10));
  }
}

TEST_CASE("root sets") {
  auto r = dispersion_root_set(TilingName::trH, {0, 0});
  CHECK(r.size() == 4);
  CHECK(has_root(r, -2.0 / 3.0));
  CHECK(has_root(r, 0.0));
  CHECK(has_root(r, 1.0 / 3.0));
  CHECK(has_root(r, 1.0));
  CHECK(std::is_sorted(r.begin(), r.end()));

  CHECK(has_root(dispersion_root_set(TilingName::SS, {0, 0}), 1.0));

  r = dispersion_root_set(TilingName::trTH, {0, 0});
  for (double x : {-1.0, -1 / std::sqrt(3.0), 1 / std::sqrt(3.0), 1.0}) CHECK(has_root(r, x));
  // Triple roots only resolve to about the cube root of the working precision.
  CHECK(has_root(r, 1.0 / 3.0, 1e-6));
  CHECK(has_root(r, -1.0 / 3.0, 1e-6));

  // Tangential roots at band edges are kept.
  r = dispersion_root_set(TilingName::SS, {pi, 0});
  CHECK(has_root(r, 1 / std::sqrt(5.0), 1e-7));
  CHECK(has_root(r, -1 / std::sqrt(5.0), 1e-7));
}

TEST_CASE("root sets agree with a fine sign-change scan") {
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> th(-pi, pi);
  for (auto name : all_tilings())
    for (int s = 0; s < 10; ++s) {
      const QuasiMomentum k{th(rng), th(rng)};
      const auto roots = dispersion_root_set(name, k);
      const auto c = dispersion_coefficients(name, k);
      double scale = 0.0;
      for (double v : c) scale += std::abs(v) * 4;
      for (double x : roots) CHECK(std::abs(evaluate_dispersion(name, x, k)) <= 1e-10 * scale);
      const int n = 30000;
      double prev = evaluate_dispersion(name, -1.5, k);
      for (int i = 1; i <= n; ++i) {
        const double x = -1.5 + 3.0 * i / n;
        const double cur = evaluate_dispersion(name, x, k);
        if ((prev < 0) != (cur < 0)) {
          CAPTURE(x);
          CHECK(has_root(roots, x, 2e-4));
        }
        prev = cur;
      }
    }
}

TEST_CASE("generic root finder") {
  // (x - 0.5)^2 (x + 1) = x^3 - 0.75 x + 0.25
  const auto r = real_roots({0.25L, -0.75L, 0.0L, 1.0L});
  REQUIRE(r.size() == 2);
  CHECK(static_cast<double>(r[0]) == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(static_cast<double>(r[1]) == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(real_roots({1.0L, 0.0L, 1.0L}).empty());
}
