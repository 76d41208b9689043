#include "qgtile/interval_solver.hpp"

#include <array>
#include <cmath>

#include "qgtile/error.hpp"
#include "qgtile/parallel.hpp"

namespace qgtile {

namespace {

void require_finite(double lambda) {
  if (!std::isfinite(lambda)) throw InputError("energy must be finite");
}

// c(z) = sum (-z)^k/(2k)!, s(z) = sum (-z)^k/(2k+1)!, i.e. cos(sqrt z) and
// sin(sqrt z)/sqrt z without dividing by sqrt z. Only used for |z| < 1.
void small_argument_series(double z, double& c, double& s) {
  double term_c = 1.0, term_s = 1.0;
  c = 1.0;
  s = 1.0;
  for (int k = 1; k < 24; ++k) {
    term_c *= -z / ((2.0 * k - 1.0) * (2.0 * k));
    term_s *= -z / ((2.0 * k) * (2.0 * k + 1.0));
    c += term_c;
    s += term_s;
  }
}

// Zero potential: C = S' = c(lambda a^2), S = a s(lambda a^2), C' = -lambda a s(lambda a^2).
void zero_cs(double lambda, double x, double& c, double& s_over_x) {
  const double z = lambda * x * x;
  if (std::abs(z) < 1.0) {
    small_argument_series(z, c, s_over_x);
  } else if (lambda > 0.0) {
    const double r = std::sqrt(lambda);
    c = std::cos(r * x);
    s_over_x = std::sin(r * x) / (r * x);
  } else {
    const double k = std::sqrt(-lambda);
    c = std::cosh(k * x);
    s_over_x = std::sinh(k * x) / (k * x);
  }
}

}  // namespace

double EdgeSolutionBasis::rho() const {
  return lambda >= 0.0 ? std::sqrt(lambda) : -std::sqrt(-lambda);
}

double EdgeSolutionBasis::lagrange_residual() const { return C * Sp - S * Cp - 1.0; }

EdgeSolutionBasis zero_potential_basis(double a, double lambda) {
  require_finite(lambda);
  if (!(a > 0.0)) throw InputError("edge length must be positive");
  double c = 1.0, s = 1.0;
  zero_cs(lambda, a, c, s);
  EdgeSolutionBasis b;
  b.lambda = lambda;
  b.C = c;
  b.S = a * s;
  b.Cp = -lambda * a * s;
  b.Sp = c;
  return b;
}

IntervalSolver::IntervalSolver(const Potential& q, SolverOptions opts) : q_(q), n_(opts.steps) {
  if (n_ < 2) throw InputError("integrator needs at least two steps");
  h_ = q_.edge_length() / static_cast<double>(n_);
  if (q_.kind() != Potential::Kind::Zero) {
    q_nodes_.resize(n_ + 1);
    q_mid_.resize(n_);
    for (std::size_t i = 0; i <= n_; ++i) q_nodes_[i] = q_(h_ * static_cast<double>(i));
    for (std::size_t i = 0; i < n_; ++i) q_mid_[i] = q_(h_ * (static_cast<double>(i) + 0.5));
  }
}

EdgeSolutionBasis IntervalSolver::solve(double lambda) const {
  require_finite(lambda);
  if (q_.kind() == Potential::Kind::Zero) return zero_potential_basis(q_.edge_length(), lambda);

  // State: (C, C', S, S'); each pair obeys y'' = (q - lambda) y.
  double c = 1.0, cp = 0.0, s = 0.0, sp = 1.0;
  const double h = h_, h2 = 0.5 * h_;
  for (std::size_t i = 0; i < n_; ++i) {
    const double w0 = q_nodes_[i] - lambda;
    const double wm = q_mid_[i] - lambda;
    const double w1 = q_nodes_[i + 1] - lambda;

    const double k1c = cp, k1cp = w0 * c;
    const double k1s = sp, k1sp = w0 * s;
    const double k2c = cp + h2 * k1cp, k2cp = wm * (c + h2 * k1c);
    const double k2s = sp + h2 * k1sp, k2sp = wm * (s + h2 * k1s);
    const double k3c = cp + h2 * k2cp, k3cp = wm * (c + h2 * k2c);
    const double k3s = sp + h2 * k2sp, k3sp = wm * (s + h2 * k2s);
    const double k4c = cp + h * k3cp, k4cp = w1 * (c + h * k3c);
    const double k4s = sp + h * k3sp, k4sp = w1 * (s + h * k3s);

    c += h / 6.0 * (k1c + 2.0 * k2c + 2.0 * k3c + k4c);
    cp += h / 6.0 * (k1cp + 2.0 * k2cp + 2.0 * k3cp + k4cp);
    s += h / 6.0 * (k1s + 2.0 * k2s + 2.0 * k3s + k4s);
    sp += h / 6.0 * (k1sp + 2.0 * k2sp + 2.0 * k3sp + k4sp);
  }
  EdgeSolutionBasis b;
  b.lambda = lambda;
  b.C = c;
  b.S = s;
  b.Cp = cp;
  b.Sp = sp;
  return b;
}

IntervalSolver::Discriminant IntervalSolver::discriminant(double lambda) const {
  require_finite(lambda);
  if (q_.kind() == Potential::Kind::Zero) {
    const auto b = zero_potential_basis(q_.edge_length(), lambda);
    return {b.Sp, -0.5 * q_.edge_length() * b.S};
  }
  // (S, S', dS/dlambda, dS'/dlambda) with z'' = (q - lambda) z - S.
  std::array<double, 4> y{0.0, 1.0, 0.0, 0.0};
  auto rhs = [](double w, const std::array<double, 4>& u) {
    return std::array<double, 4>{u[1], w * u[0], u[3], w * u[2] - u[0]};
  };
  auto axpy = [](const std::array<double, 4>& u, double t, const std::array<double, 4>& k) {
    return std::array<double, 4>{u[0] + t * k[0], u[1] + t * k[1], u[2] + t * k[2], u[3] + t * k[3]};
  };
  for (std::size_t i = 0; i < n_; ++i) {
    const double w0 = q_nodes_[i] - lambda;
    const double wm = q_mid_[i] - lambda;
    const double w1 = q_nodes_[i + 1] - lambda;
    const auto k1 = rhs(w0, y);
    const auto k2 = rhs(wm, axpy(y, 0.5 * h_, k1));
    const auto k3 = rhs(wm, axpy(y, 0.5 * h_, k2));
    const auto k4 = rhs(w1, axpy(y, h_, k3));
    for (int j = 0; j < 4; ++j) y[j] += h_ / 6.0 * (k1[j] + 2.0 * k2[j] + 2.0 * k3[j] + k4[j]);
  }
  return {y[1], y[3]};
}

IntervalSolver::Samples IntervalSolver::sample(double lambda, std::size_t points) const {
  require_finite(lambda);
  if (points == 0) throw InputError("sample count must be positive");
  Samples out;
  out.x.resize(points + 1);
  out.C.resize(points + 1);
  out.S.resize(points + 1);
  out.Cp.resize(points + 1);
  out.Sp.resize(points + 1);
  const double a = q_.edge_length();

  if (q_.kind() == Potential::Kind::Zero) {
    for (std::size_t k = 0; k <= points; ++k) {
      const double x = (k == points) ? a : a * static_cast<double>(k) / static_cast<double>(points);
      out.x[k] = x;
      if (x == 0.0) {
        out.C[k] = 1.0;
        out.S[k] = 0.0;
        out.Cp[k] = 0.0;
        out.Sp[k] = 1.0;
        continue;
      }
      const auto b = zero_potential_basis(x, lambda);
      out.C[k] = b.C;
      out.S[k] = b.S;
      out.Cp[k] = b.Cp;
      out.Sp[k] = b.Sp;
    }
    return out;
  }

  if (n_ % points != 0)
    throw InputError("sample count " + std::to_string(points) + " must divide the step count " + std::to_string(n_));
  const std::size_t stride = n_ / points;
  double c = 1.0, cp = 0.0, s = 0.0, sp = 1.0;
  auto record = [&](std::size_t k, double x) {
    out.x[k] = x;
    out.C[k] = c;
    out.Cp[k] = cp;
    out.S[k] = s;
    out.Sp[k] = sp;
  };
  record(0, 0.0);
  const double h = h_, h2 = 0.5 * h_;
  for (std::size_t i = 0; i < n_; ++i) {
    const double w0 = q_nodes_[i] - lambda;
    const double wm = q_mid_[i] - lambda;
    const double w1 = q_nodes_[i + 1] - lambda;
    const double k1c = cp, k1cp = w0 * c;
    const double k1s = sp, k1sp = w0 * s;
    const double k2c = cp + h2 * k1cp, k2cp = wm * (c + h2 * k1c);
    const double k2s = sp + h2 * k1sp, k2sp = wm * (s + h2 * k1s);
    const double k3c = cp + h2 * k2cp, k3cp = wm * (c + h2 * k2c);
    const double k3s = sp + h2 * k2sp, k3sp = wm * (s + h2 * k2s);
    const double k4c = cp + h * k3cp, k4cp = w1 * (c + h * k3c);
    const double k4s = sp + h * k3sp, k4sp = w1 * (s + h * k3s);
    c += h / 6.0 * (k1c + 2.0 * k2c + 2.0 * k3c + k4c);
    cp += h / 6.0 * (k1cp + 2.0 * k2cp + 2.0 * k3cp + k4cp);
    s += h / 6.0 * (k1s + 2.0 * k2s + 2.0 * k3s + k4s);
    sp += h / 6.0 * (k1sp + 2.0 * k2sp + 2.0 * k3sp + k4sp);
    if ((i + 1) % stride == 0) {
      const std::size_t k = (i + 1) / stride;
      record(k, k == points ? a : h * static_cast<double>(i + 1));
    }
  }
  return out;
}

EdgeSolutionBasis solve_basis(const Potential& q, double lambda, const SolverOptions& opts) {
  require_finite(lambda);
  if (q.kind() == Potential::Kind::Zero) return zero_potential_basis(q.edge_length(), lambda);
  return IntervalSolver(q, opts).solve(lambda);
}

std::vector<EdgeSolutionBasis> discriminant_scan(const Potential& q, const std::vector<double>& lambda_grid,
                                                 const SolverOptions& opts) {
  for (std::size_t i = 0; i < lambda_grid.size(); ++i) {
    require_finite(lambda_grid[i]);
    if (i > 0 && lambda_grid[i] < lambda_grid[i - 1]) throw InputError("energy grid must be sorted");
  }
  const IntervalSolver solver(q, opts);
  std::vector<EdgeSolutionBasis> out(lambda_grid.size());
  parallel_for(lambda_grid.size(), [&](std::size_t i) { out[i] = solver.solve(lambda_grid[i]); });
  return out;
}

}  // namespace qgtile
