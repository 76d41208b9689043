#pragma once

#include <cstddef>
#include <vector>

#include "qgtile/potential.hpp"

namespace qgtile {

/// Values at x = a of the fundamental solutions C, S of -y'' + q y = lambda y
/// with C(0)=S'(0)=1, C'(0)=S(0)=0.
struct EdgeSolutionBasis {
  double lambda = 0.0;
  double C = 1.0;
  double S = 0.0;
  double Cp = 0.0;
  double Sp = 1.0;

  /// Signed frequency: sqrt(lambda) for lambda >= 0, -sqrt(-lambda) otherwise
  /// (the imaginary frequency i*sqrt(-lambda) encoded by its sign).
  double rho() const;
  /// C S' - S C' - 1
  double lagrange_residual() const;
  /// C - S', which vanishes for an even potential.
  double evenness_defect() const { return C - Sp; }
};

struct SolverOptions {
  std::size_t steps = 4096;
};

/// Fixed-step classical Runge-Kutta integrator bound to one potential.
/// The potential is tabulated once at the nodes and midpoints so repeated
/// solves at different energies only pay for the arithmetic.
class IntervalSolver {
 public:
  explicit IntervalSolver(const Potential& q, SolverOptions opts = {});

  const Potential& potential() const { return q_; }
  std::size_t steps() const { return n_; }

  EdgeSolutionBasis solve(double lambda) const;

  /// S'(a) and dS'(a)/dlambda, the latter from the variational equation.
  struct Discriminant {
    double Sp;
    double dSp;
  };
  Discriminant discriminant(double lambda) const;

  /// C, S and their derivatives at `points` + 1 equally spaced abscissae
  /// x_k = k a / points. `points` must divide the step count (for the
  /// zero potential the closed forms are used instead).
  struct Samples {
    std::vector<double> x, C, S, Cp, Sp;
  };
  Samples sample(double lambda, std::size_t points) const;

 private:
  Potential q_;
  std::size_t n_;
  double h_;
  std::vector<double> q_nodes_;
  std::vector<double> q_mid_;
};

EdgeSolutionBasis solve_basis(const Potential& q, double lambda, const SolverOptions& opts = {});

/// Elementwise solve_basis over a sorted energy grid, evaluated in parallel.
std::vector<EdgeSolutionBasis> discriminant_scan(const Potential& q, const std::vector<double>& lambda_grid,
                                                 const SolverOptions& opts = {});

/// Closed forms for q = 0 on [0, a]; used directly by the solver and as a
/// reference in tests.
EdgeSolutionBasis zero_potential_basis(double a, double lambda);

}  // namespace qgtile
