#include "qgtile/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>

#include "qgtile/dispersion.hpp"
#include "qgtile/error.hpp"
#include "qgtile/parallel.hpp"

namespace qgtile {

namespace {

constexpr double kPi = std::numbers::pi;

double nearest_distance(const std::vector<double>& sorted, double x) {
  if (sorted.empty()) return std::numeric_limits<double>::infinity();
  const auto it = std::lower_bound(sorted.begin(), sorted.end(), x);
  double best = std::numeric_limits<double>::infinity();
  if (it != sorted.end()) best = std::min(best, *it - x);
  if (it != sorted.begin()) best = std::min(best, x - *(it - 1));
  return best;
}

double distance_to_union(const std::vector<Interval>& ranges, double x) {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& r : ranges) {
    if (r.contains(x)) return 0.0;
    best = std::min(best, x < r.lo ? r.lo - x : x - r.hi);
  }
  return best;
}

void require_grid(int n, int min, const char* what) {
  if (n < min) throw InputError(std::string(what) + " grid needs at least " + std::to_string(min) + " points");
}

}  // namespace

double grid_point(double lo, double hi, int n, int i) {
  if (i == n - 1) return hi;
  // (2i - (n-1)) / (n-1) is exact for symmetric grids.
  const double u = static_cast<double>(2 * i - (n - 1)) / static_cast<double>(n - 1);
  return 0.5 * (lo + hi) + 0.5 * (hi - lo) * u;
}

double RangeRecovery::max_endpoint_gap() const {
  double m = 0.0;
  for (double g : endpoint_gaps) m = std::max(m, g);
  return m;
}

RangeRecovery recover_ac_range(TilingName name, int n) {
  require_grid(n, 51, "range recovery");
  RangeRecovery rec;
  rec.tiling = name;
  rec.n = n;
  rec.reference = ac_range(name);

  std::vector<std::vector<double>> rows(static_cast<std::size_t>(n));
  parallel_for(static_cast<std::size_t>(n), [&](std::size_t i) {
    const double t1 = grid_point(-kPi, kPi, n, static_cast<int>(i));
    for (int j = 0; j < n; ++j) {
      const double t2 = grid_point(-kPi, kPi, n, j);
      const auto r = dispersion_root_set(name, {t1, t2});
      rows[i].insert(rows[i].end(), r.begin(), r.end());
    }
  });
  for (const auto& r : rows) rec.roots.insert(rec.roots.end(), r.begin(), r.end());
  std::sort(rec.roots.begin(), rec.roots.end());

  for (double x : rec.roots) rec.soundness_excess = std::max(rec.soundness_excess, distance_to_union(rec.reference, x));

  // Directed distance from the union to the roots: the worst point of an
  // interval is an endpoint or a midpoint between consecutive roots.
  double from_union = 0.0;
  for (const auto& iv : rec.reference) {
    std::vector<double> probes{iv.lo, iv.hi};
    for (std::size_t k = 0; k + 1 < rec.roots.size(); ++k) {
      const double m = 0.5 * (rec.roots[k] + rec.roots[k + 1]);
      if (iv.contains(m)) probes.push_back(m);
    }
    for (double p : probes) from_union = std::max(from_union, nearest_distance(rec.roots, p));
    rec.endpoint_gaps.push_back(nearest_distance(rec.roots, iv.lo));
    rec.endpoint_gaps.push_back(nearest_distance(rec.roots, iv.hi));
  }
  rec.hausdorff = std::max(rec.soundness_excess, from_union);
  return rec;
}

double appendix_b_m_theta(int index, double t1, double t2) {
  const auto w = trig_invariants({t1, t2});
  const double r3 = std::sqrt(3.0);
  switch (index) {
    case 1: return w.omega1 - 2 * w.omega3 - 190 * w.omega2 + 191;
    case 2: return 8 * w.omega1 - 16 * w.omega3 + 160 * w.omega2 + 37;
    case 3: return w.omega1 - 14 * w.omega3 - 826 * w.omega2 + 839;
    case 4:
      return 8 * w.omega1 - 16 * w.omega3 + 16 * w.omega2 + 16 * r3 * w.omega3 + 48 * r3 * w.omega2 - 10 * r3 + 19;
    case 5: return 8 * w.omegaT1 - 272 * w.omegaT3 - 17648 * w.omegaT2 + 17912;
    case 6: return 16 * w.omegaT3 + 8 * w.omegaT1 + 64 * w.omegaT2 - 7;
    default: break;
  }
  throw InputError("no inequality M" + std::to_string(index));
}

double appendix_b_m_xieta(int index, double x, double e) {
  const double r3 = std::sqrt(3.0);
  const double x2 = x * x, x3 = x2 * x, x4 = x2 * x2, e2 = e * e;
  switch (index) {
    case 1: return 2 * (x4 - 2 * x3 * e + x2 * e2 - 46 * x * e - 49 * x2 - e2 + 96);
    case 2: return 16 * x4 - 32 * x3 * e + 16 * x2 * e2 + 56 * x2 + 104 * x * e - 16 * e2 + 45;
    case 3: return 2 * x4 - 28 * x3 * e + 2 * x2 * e2 - 416 * x2 - 392 * x * e - 8 * e2 + 840;
    case 4:
      return 16 * x4 + (32 * r3 - 32) * x3 * e + 16 * x2 * e2 + (24 * r3 - 16) * x2 + 32 * x * e +
             (8 * r3 - 16) * e2 + 27 - 10 * r3;
    case 5: return 16 * (x4 - 34 * x3 * e + x2 * e2 - 526 * x * e - 553 * x2 - 9 * e2 + 1120);
    case 6: return 16 * x4 + 32 * x3 * e + 16 * x2 * e2 + 8 * x2 + 8 * x * e + 1;
    default: break;
  }
  throw InputError("no inequality M" + std::to_string(index));
}

double appendix_b_g_theta(double t, double t1, double t2) {
  const auto w = trig_invariants({t1, t2});
  const double u1 = w.omegaT1, u2 = w.omegaT2, u3 = w.omegaT3;
  const double t2p = t * t, t3 = t2p * t, t4 = t3 * t, t5 = t4 * t, t6 = t5 * t;
  return t6 - 6 * t5 - 9 * t4 + (60 - 48 * u2) * t3 + (63 - 48 * u2) * t2p + (144 * u2 - 32 * u3 - 118) * t +
         8 * u1 - 48 * u3 + 160 * u2 - 127;
}

double appendix_b_g_xieta(double t, double x, double e) {
  const double t2 = t * t, t3 = t2 * t, t4 = t3 * t, t5 = t4 * t, t6 = t5 * t;
  const double x2 = x * x, x3 = x2 * x, x4 = x2 * x2, e2 = e * e;
  return t6 - 6 * t5 - 9 * t4 - t3 * (24 * x2 + 24 * x * e - 60) - t2 * (24 * x2 + 24 * x * e - 63) -
         t * (64 * x3 * e - 72 * x2 - 120 * x * e + 16 * e2 + 118) + 16 * x4 - 96 * x3 * e + 16 * x2 * e2 +
         56 * x2 + 152 * x * e - 32 * e2 - 119;
}

std::vector<double> appendix_b_t_values() {
  std::vector<double> t{-0.99};
  for (int k = -9; k <= 9; ++k) t.push_back(k / 10.0);
  t.push_back(0.99);
  return t;
}

AppendixBReport appendix_b_suite(int n, int g_grid) {
  require_grid(n, 101, "inequality");
  require_grid(g_grid, 101, "g");
  AppendixBReport rep;
  rep.n = n;
  rep.g_grid = g_grid;
  const std::size_t N = static_cast<std::size_t>(n);

  struct RowResult {
    std::vector<Extremum> tmin, xmin;
    double m2_factor = 0.0, subst = 0.0;
  };
  const auto inf = std::numeric_limits<double>::infinity();
  std::vector<RowResult> rows(N);
  parallel_for(N, [&](std::size_t i) {
    RowResult& rr = rows[i];
    rr.tmin.assign(6, {inf, 0, 0});
    rr.xmin.assign(6, {inf, 0, 0});
    const double t1 = grid_point(-kPi, kPi, n, static_cast<int>(i));
    const double xi = grid_point(-1.0, 1.0, n, static_cast<int>(i));
    for (int j = 0; j < n; ++j) {
      const double t2 = grid_point(-kPi, kPi, n, j);
      const double eta = grid_point(-1.0, 1.0, n, j);
      const double txi = std::cos((t1 + t2) / 2), teta = std::cos((t1 - t2) / 2);
      for (int m = 1; m <= 6; ++m) {
        const double vt = appendix_b_m_theta(m, t1, t2);
        if (vt < rr.tmin[m - 1].value) rr.tmin[m - 1] = {vt, t1, t2};
        const double vx = appendix_b_m_xieta(m, xi, eta);
        if (vx < rr.xmin[m - 1].value) rr.xmin[m - 1] = {vx, xi, eta};
        // The last two use the omegas with theta2 reflected, whose
        // substitution swaps the roles of xi and eta.
        const double sub = m <= 4 ? appendix_b_m_xieta(m, txi, teta) : appendix_b_m_xieta(m, teta, txi);
        rr.subst = std::max(rr.subst, std::abs(vt - sub) / std::max(1.0, std::abs(vt)));
      }
      const double sq = (4 * xi * xi - 4 * xi * eta - 3) * (4 * xi * xi - 4 * xi * eta - 3) +
                        20 * (2 * xi + eta) * (2 * xi + eta) + 36 * (1 - eta * eta);
      rr.m2_factor = std::max(rr.m2_factor, std::abs(sq - appendix_b_m_xieta(2, xi, eta)));
    }
  });
  rep.theta_minima.assign(6, {inf, 0, 0});
  rep.xieta_minima.assign(6, {inf, 0, 0});
  for (const auto& rr : rows) {
    for (int m = 0; m < 6; ++m) {
      if (rr.tmin[m].value < rep.theta_minima[m].value) rep.theta_minima[m] = rr.tmin[m];
      if (rr.xmin[m].value < rep.xieta_minima[m].value) rep.xieta_minima[m] = rr.xmin[m];
    }
    rep.m2_factor_residual = std::max(rep.m2_factor_residual, rr.m2_factor);
    rep.substitution_residual = std::max(rep.substitution_residual, rr.subst);
  }
  rep.m4_zero_plus = appendix_b_m_xieta(4, 0.5, -1.0);
  rep.m4_zero_minus = appendix_b_m_xieta(4, -0.5, 1.0);
  rep.m6_at_xi_zero = appendix_b_m_xieta(6, 0.0, 0.37);

  const auto ts = appendix_b_t_values();
  const std::size_t G = static_cast<std::size_t>(g_grid);
  struct GRow {
    Extremum th{-std::numeric_limits<double>::infinity(), 0, 0};
    Extremum xe{-std::numeric_limits<double>::infinity(), 0, 0};
    double t_at = 0.0, subst = 0.0;
  };
  std::vector<GRow> grows(G);
  parallel_for(G, [&](std::size_t i) {
    GRow& gr = grows[i];
    const double t1 = grid_point(-kPi, kPi, g_grid, static_cast<int>(i));
    const double xi = grid_point(-1.0, 1.0, g_grid, static_cast<int>(i));
    for (int j = 0; j < g_grid; ++j) {
      const double t2 = grid_point(-kPi, kPi, g_grid, j);
      const double eta = grid_point(-1.0, 1.0, g_grid, j);
      const double txi = std::cos((t1 - t2) / 2), teta = std::cos((t1 + t2) / 2);
      for (double t : ts) {
        const double vt = appendix_b_g_theta(t, t1, t2);
        if (vt > gr.th.value) {
          gr.th = {vt, t1, t2};
          gr.t_at = t;
        }
        const double vx = appendix_b_g_xieta(t, xi, eta);
        if (vx > gr.xe.value) gr.xe = {vx, xi, eta};
        gr.subst = std::max(gr.subst, std::abs(vt - appendix_b_g_xieta(t, txi, teta)) / std::max(1.0, std::abs(vt)));
      }
    }
  });
  rep.g_max_theta = {-inf, 0, 0};
  rep.g_max_xieta = {-inf, 0, 0};
  for (const auto& gr : grows) {
    if (gr.th.value > rep.g_max_theta.value) {
      rep.g_max_theta = gr.th;
      rep.g_max_t_theta = gr.t_at;
    }
    if (gr.xe.value > rep.g_max_xieta.value) rep.g_max_xieta = gr.xe;
    rep.substitution_residual = std::max(rep.substitution_residual, gr.subst);
  }
  return rep;
}

double IdentityReport::max_residual() const {
  return std::max({omega_modulus_residual, omega_cosine_residual, omega3_residual});
}

IdentityReport identity_suite(int n) {
  require_grid(n, 101, "identity");
  IdentityReport rep;
  rep.n = n;
  std::vector<IdentityReport> rows(static_cast<std::size_t>(n));
  parallel_for(static_cast<std::size_t>(n), [&](std::size_t i) {
    const double t1 = grid_point(-kPi, kPi, n, static_cast<int>(i));
    for (int j = 0; j < n; ++j) {
      const double t2 = grid_point(-kPi, kPi, n, j);
      const auto w = trig_invariants({t1, t2});
      const double lhs = 1.0 + 8.0 * w.omega;
      const double mod = std::norm(1.0 + std::polar(1.0, t1) + std::polar(1.0, t2));
      const double cosines = 3.0 + 2.0 * (std::cos(t1) + std::cos(t2) + std::cos(t1 - t2));
      const double three = std::cos(t1 + 2 * t2) + std::cos(2 * t1 + t2) + std::cos(t2 - t1);
      auto& r = rows[i];
      r.omega_modulus_residual = std::max(r.omega_modulus_residual, std::abs(lhs - mod));
      r.omega_cosine_residual = std::max(r.omega_cosine_residual, std::abs(lhs - cosines));
      r.omega3_residual = std::max(r.omega3_residual, std::abs(three - (4.0 * w.omega3 - 1.0)));
    }
  });
  for (const auto& r : rows) {
    rep.omega_modulus_residual = std::max(rep.omega_modulus_residual, r.omega_modulus_residual);
    rep.omega_cosine_residual = std::max(rep.omega_cosine_residual, r.omega_cosine_residual);
    rep.omega3_residual = std::max(rep.omega3_residual, r.omega3_residual);
  }
  return rep;
}

}  // namespace qgtile
