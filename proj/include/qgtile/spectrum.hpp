#pragma once

#include <string>
#include <vector>

#include "qgtile/interval_solver.hpp"
#include "qgtile/potential.hpp"
#include "qgtile/tiling.hpp"

namespace qgtile {

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  bool contains(double x, double tol = 0.0) const { return x >= lo - tol && x <= hi + tol; }
};

/// Closed S'-intervals on which the absolutely continuous spectrum lives.
std::vector<Interval> ac_range(TilingName name);

bool in_ranges(const std::vector<Interval>& ranges, double x, double tol = 0.0);

struct SpectralBand {
  int band_index = 0;
  double lambda_lo = 0.0;
  double lambda_hi = 0.0;
};

/// Bands for q = 0, one per monotone branch k pi <= rho a <= (k+1) pi of
/// cos(rho a) and per range interval, over the periods 0..k_max.
std::vector<SpectralBand> bands_zero_potential(TilingName name, double a, int k_max);

/// S'(a, lambda) tabulated on a signed-frequency grid from below inf q up to
/// lambda_max, with the critical points of S' located once. Preimages of a
/// value x are found by bisecting sign changes of S' - x and by matching
/// critical values, which catches tangential touches.
class DiscriminantProfile {
 public:
  DiscriminantProfile(const Potential& q, double lambda_max, SolverOptions opts = {}, double rho_step = 0.0);

  double lambda_min() const { return lambda_.front(); }
  double lambda_max() const { return lambda_.back(); }
  const IntervalSolver& solver() const { return solver_; }

  /// Energies in [lambda_min, lambda_max] where S'(a) = x, ascending.
  std::vector<double> preimage(double x) const;
  /// Energies where S(a) = 0.
  std::vector<double> dirichlet_roots() const;

  struct Critical {
    double lambda;
    double sprime;
  };
  const std::vector<Critical>& critical_points() const { return critical_; }

  double sprime(double lambda) const { return solver_.solve(lambda).Sp; }

 private:
  double bisect(double lo, double hi, double target, bool use_s) const;

  IntervalSolver solver_;
  std::vector<double> lambda_;
  std::vector<double> s_;
  std::vector<double> sp_;
  std::vector<double> dsp_;
  std::vector<Critical> critical_;
};

/// Bands { lambda <= lambda_max : S'(a) in ac_range } for an even potential.
/// Bands are split where S' touches a range endpoint tangentially.
std::vector<SpectralBand> bands_general(TilingName name, const Potential& q, double lambda_max,
                                        const SolverOptions& opts = {});

enum class PointGenerator { S_zero, Sprime_zero, Sprime_minus_two_thirds, TwoSprimePlusOne_zero };

std::string generator_label(PointGenerator g);

struct PointSpectrumEntry {
  PointGenerator generator;
  std::vector<double> lambdas;
};

/// Quasi-momentum independent eigenvalues, one entry per prefactor factor.
std::vector<PointSpectrumEntry> point_spectrum(TilingName name, const Potential& q, double lambda_max,
                                               const SolverOptions& opts = {});

struct SpectrumReport {
  std::vector<SpectralBand> ac_bands;
  std::vector<PointSpectrumEntry> point_spectrum;
};

SpectrumReport spectrum_report(TilingName name, const Potential& q, double lambda_max, const SolverOptions& opts = {});

/// Throws PreconditionError when q is not even to 1e-6 of its magnitude.
void require_even(const Potential& q);

}  // namespace qgtile
