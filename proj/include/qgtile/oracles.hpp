#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "qgtile/spectrum.hpp"
#include "qgtile/tiling.hpp"

namespace qgtile {

/// Uniform grid of n points on [lo, hi] including both ends.
double grid_point(double lo, double hi, int n, int i);

struct RangeRecovery {
  TilingName tiling = TilingName::S;
  int n = 0;
  std::vector<double> roots;  // every root found over the grid, sorted
  std::vector<Interval> reference;
  double hausdorff = 0.0;
  /// Largest distance of a recovered root outside the reference union.
  double soundness_excess = 0.0;
  /// For each reference endpoint (lo, hi of each interval in order), the
  /// distance to the nearest recovered root.
  std::vector<double> endpoint_gaps;
  double max_endpoint_gap() const;
};

/// Collects the real roots of p(., theta) in [-1.5, 1.5] over an n x n grid
/// of [-pi, pi]^2 and compares them with ac_range.
RangeRecovery recover_ac_range(TilingName name, int n = 201);

struct Extremum {
  double value = 0.0;
  double at1 = 0.0;  // theta1 or xi
  double at2 = 0.0;  // theta2 or eta
};

struct AppendixBReport {
  int n = 0;
  /// Minima of M1..M6 over the theta grid and over the (xi, eta) grid.
  std::vector<Extremum> theta_minima;
  std::vector<Extremum> xieta_minima;
  /// M4 at (xi, eta) = (1/2, -1) and (-1/2, 1).
  double m4_zero_plus = 0.0;
  double m4_zero_minus = 0.0;
  /// M6 at xi = 0 (any eta).
  double m6_at_xi_zero = 0.0;
  /// max |expanded M2 - sum-of-squares form| on the (xi, eta) grid.
  double m2_factor_residual = 0.0;
  /// max |theta form - (xi, eta) form| over the theta grid, all of M1..M6 and g.
  double substitution_residual = 0.0;
  /// Maximum of g over theta grid x t samples, and over (xi, eta) grid x t.
  Extremum g_max_theta;
  Extremum g_max_xieta;
  double g_max_t_theta = 0.0;
  int g_grid = 0;
};

/// n is the grid size for M1..M6; g is scanned on a g_grid x g_grid theta grid
/// (and the same size on (xi, eta)) for t in {-0.99, -0.9, ..., 0.9, 0.99}.
AppendixBReport appendix_b_suite(int n = 401, int g_grid = 201);

/// The t values at which g is sampled.
std::vector<double> appendix_b_t_values();

/// M1..M6 in theta variables (index 1..6) and in (xi, eta) variables.
double appendix_b_m_theta(int index, double t1, double t2);
double appendix_b_m_xieta(int index, double xi, double eta);
double appendix_b_g_theta(double t, double t1, double t2);
double appendix_b_g_xieta(double t, double xi, double eta);

struct IdentityReport {
  int n = 0;
  double omega_modulus_residual = 0.0;  // |(1 + 8 omega) - |1 + e^{i t1} + e^{i t2}|^2|
  double omega_cosine_residual = 0.0;   // |(1 + 8 omega) - (3 + 2 (cos t1 + cos t2 + cos(t1 - t2)))|
  double omega3_residual = 0.0;         // |cos(t1+2t2) + cos(2t1+t2) + cos(t2-t1) - (4 omega3 - 1)|
  double max_residual() const;
};

IdentityReport identity_suite(int n = 201);

}  // namespace qgtile
