#include "qgtile/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qgtile/dispersion.hpp"
#include "qgtile/error.hpp"
#include "qgtile/parallel.hpp"

namespace qgtile {

namespace {

constexpr double kPi = std::numbers::pi;

double lambda_tolerance(double lambda) { return 1e-13 * std::max(1.0, std::abs(lambda)); }

}  // namespace

std::vector<Interval> ac_range(TilingName name) {
  const double r3 = std::sqrt(3.0);
  switch (name) {
    case TilingName::T:
    case TilingName::TH:
      return {{-0.5, 1.0}};
    case TilingName::ET:
      // Lower root (4u^2 - 2u - 3) / 5 with u = |cos(theta1 / 2)| after
      // maximising over theta2; its minimum sits at u = 1/4.
      return {{-0.65, 1.0}};
    case TilingName::SS:
      return {{-0.6, 1.0}};
    case TilingName::S:
    case TilingName::H:
    case TilingName::trS:
      return {{-1.0, 1.0}};
    case TilingName::trH:
      return {{-2.0 / 3.0, 0.0}, {1.0 / 3.0, 1.0}};
    case TilingName::RTH:
      return {{-0.75, 1.0}};
    case TilingName::STH:
      return {{-(1.0 + r3) / 5.0, 1.0}};
    case TilingName::trTH:
      return {{-1.0, -1.0 / r3}, {-1.0 / 3.0, 1.0 / 3.0}, {1.0 / r3, 1.0}};
  }
  return {};
}

bool in_ranges(const std::vector<Interval>& ranges, double x, double tol) {
  for (const auto& r : ranges)
    if (r.contains(x, tol)) return true;
  return false;
}

std::vector<SpectralBand> bands_zero_potential(TilingName name, double a, int k_max) {
  if (!(a > 0.0) || !std::isfinite(a)) throw InputError("edge length must be positive");
  if (k_max < 0) throw InputError("period count must be non-negative");
  const auto ranges = ac_range(name);
  std::vector<SpectralBand> out;
  for (int branch = 0; branch < 2 * (k_max + 1); ++branch) {
    // On [branch pi, (branch+1) pi] cos is monotone; map each interval back.
    std::vector<Interval> pieces;
    for (const auto& r : ranges) {
      const double u = std::acos(r.hi), v = std::acos(r.lo);  // u <= v
      if (branch % 2 == 0)
        pieces.push_back({branch * kPi + u, branch * kPi + v});
      else
        pieces.push_back({(branch + 1) * kPi - v, (branch + 1) * kPi - u});
    }
    std::sort(pieces.begin(), pieces.end(), [](const Interval& x, const Interval& y) { return x.lo < y.lo; });
    for (const auto& p : pieces) {
      SpectralBand b;
      b.lambda_lo = (p.lo / a) * (p.lo / a);
      b.lambda_hi = (p.hi / a) * (p.hi / a);
      out.push_back(b);
    }
  }
  for (std::size_t i = 0; i < out.size(); ++i) out[i].band_index = static_cast<int>(i);
  return out;
}

void require_even(const Potential& q) {
  const double res = q.evenness_residual();
  if (res > 1e-6 * q.magnitude())
    throw PreconditionError("potential is not even: max |q(x) - q(a-x)| = " + std::to_string(res));
}

DiscriminantProfile::DiscriminantProfile(const Potential& q, double lambda_max, SolverOptions opts, double rho_step)
    : solver_(q, opts) {
  if (!std::isfinite(lambda_max)) throw InputError("lambda_max must be finite");
  const double a = q.edge_length();
  if (rho_step <= 0.0) rho_step = kPi / (50.0 * a);
  const double lambda_start = std::min(q.lower_bound(), 0.0) - 1.0;
  if (lambda_max <= lambda_start) throw InputError("lambda_max lies below the spectrum");
  const double r0 = -std::sqrt(-lambda_start);
  const double r1 = std::sqrt(std::max(lambda_max, 0.0));
  const std::size_t n = static_cast<std::size_t>(std::ceil((r1 - r0) / rho_step));

  std::vector<double> rho(n + 1);
  for (std::size_t i = 0; i <= n; ++i) rho[i] = (i == n) ? r1 : r0 + rho_step * static_cast<double>(i);
  lambda_.resize(n + 1);
  for (std::size_t i = 0; i <= n; ++i) lambda_[i] = rho[i] >= 0.0 ? rho[i] * rho[i] : -rho[i] * rho[i];
  if (lambda_max < 0.0) lambda_.back() = lambda_max;

  s_.resize(n + 1);
  sp_.resize(n + 1);
  dsp_.resize(n + 1);
  parallel_for(n + 1, [&](std::size_t i) {
    const auto b = solver_.solve(lambda_[i]);
    const auto d = solver_.discriminant(lambda_[i]);
    s_[i] = b.S;
    sp_[i] = b.Sp;
    dsp_[i] = d.dSp;
  });

  for (std::size_t i = 0; i + 1 <= n; ++i) {
    const double d0 = dsp_[i], d1 = dsp_[i + 1];
    double lc;
    if (d0 == 0.0) {
      lc = lambda_[i];
    } else if (d0 * d1 < 0.0) {
      double lo = lambda_[i], hi = lambda_[i + 1];
      double flo = d0;
      while (hi - lo > lambda_tolerance(hi)) {
        const double mid = 0.5 * (lo + hi);
        const double fm = solver_.discriminant(mid).dSp;
        if (fm == 0.0) {
          lo = hi = mid;
          break;
        }
        if ((fm > 0.0) == (flo > 0.0)) {
          lo = mid;
          flo = fm;
        } else {
          hi = mid;
        }
      }
      lc = 0.5 * (lo + hi);
    } else {
      continue;
    }
    critical_.push_back({lc, solver_.solve(lc).Sp});
  }

  // Critical points become sample nodes too, so that a pair of crossings
  // straddling an extremum inside one grid cell shows up as sign changes.
  for (const auto& c : critical_) {
    const auto it = std::lower_bound(lambda_.begin(), lambda_.end(), c.lambda);
    if (it != lambda_.end() && *it == c.lambda) continue;
    const auto pos = it - lambda_.begin();
    const auto b = solver_.solve(c.lambda);
    lambda_.insert(it, c.lambda);
    s_.insert(s_.begin() + pos, b.S);
    sp_.insert(sp_.begin() + pos, b.Sp);
    dsp_.insert(dsp_.begin() + pos, 0.0);
  }
}

double DiscriminantProfile::bisect(double lo, double hi, double target, bool use_s) const {
  auto f = [&](double l) {
    const auto b = solver_.solve(l);
    return (use_s ? b.S : b.Sp) - target;
  };
  double flo = f(lo);
  while (hi - lo > lambda_tolerance(hi)) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if ((fm > 0.0) == (flo > 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

std::vector<double> DiscriminantProfile::preimage(double x) const {
  std::vector<double> out;
  for (std::size_t i = 0; i < lambda_.size(); ++i) {
    const double g0 = sp_[i] - x;
    if (g0 == 0.0) {
      out.push_back(lambda_[i]);
      continue;
    }
    if (i + 1 < lambda_.size()) {
      const double g1 = sp_[i + 1] - x;
      if (g1 != 0.0 && (g0 > 0.0) != (g1 > 0.0)) out.push_back(bisect(lambda_[i], lambda_[i + 1], x, false));
    }
  }
  for (const auto& c : critical_) {
    if (std::abs(c.sprime - x) > 1e-9) continue;
    bool near = false;
    for (double l : out)
      if (std::abs(l - c.lambda) <= 1e-7 * std::max(1.0, std::abs(l))) near = true;
    if (!near) out.push_back(c.lambda);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<double> DiscriminantProfile::dirichlet_roots() const {
  std::vector<double> out;
  for (std::size_t i = 0; i + 1 < lambda_.size(); ++i) {
    if (s_[i] == 0.0) out.push_back(lambda_[i]);
    if (s_[i] != 0.0 && s_[i + 1] != 0.0 && (s_[i] > 0.0) != (s_[i + 1] > 0.0))
      out.push_back(bisect(lambda_[i], lambda_[i + 1], 0.0, true));
  }
  return out;
}

std::vector<SpectralBand> bands_general(TilingName name, const Potential& q, double lambda_max,
                                        const SolverOptions& opts) {
  require_even(q);
  const auto ranges = ac_range(name);
  const DiscriminantProfile prof(q, lambda_max, opts);

  struct Break {
    double lambda;
    bool tangency;
  };
  std::vector<Break> breaks{{prof.lambda_min(), false}, {prof.lambda_max(), false}};
  std::vector<double> endpoints;
  for (const auto& r : ranges) {
    endpoints.push_back(r.lo);
    endpoints.push_back(r.hi);
  }
  for (double e : endpoints) {
    for (double l : prof.preimage(e)) {
      bool tangential = false;
      for (const auto& c : prof.critical_points())
        if (std::abs(c.lambda - l) <= 1e-9 * std::max(1.0, std::abs(l)) && std::abs(c.sprime - e) <= 1e-9)
          tangential = true;
      breaks.push_back({l, tangential});
    }
  }
  std::sort(breaks.begin(), breaks.end(), [](const Break& x, const Break& y) { return x.lambda < y.lambda; });
  std::vector<Break> uniq;
  for (const auto& b : breaks) {
    if (!uniq.empty() && b.lambda - uniq.back().lambda <= 1e-12 * std::max(1.0, std::abs(b.lambda))) {
      uniq.back().tangency = uniq.back().tangency || b.tangency;
      continue;
    }
    uniq.push_back(b);
  }

  std::vector<SpectralBand> out;
  bool prev_in = false;
  for (std::size_t i = 0; i + 1 < uniq.size(); ++i) {
    const double lo = uniq[i].lambda, hi = uniq[i + 1].lambda;
    if (hi <= lo) continue;
    const bool in = in_ranges(ranges, prof.sprime(0.5 * (lo + hi)));
    if (in) {
      if (prev_in && !uniq[i].tangency && !out.empty())
        out.back().lambda_hi = hi;
      else
        out.push_back({0, lo, hi});
    }
    prev_in = in;
  }
  for (std::size_t i = 0; i < out.size(); ++i) out[i].band_index = static_cast<int>(i);
  return out;
}

std::string generator_label(PointGenerator g) {
  switch (g) {
    case PointGenerator::S_zero: return "S_zero";
    case PointGenerator::Sprime_zero: return "Sprime_zero";
    case PointGenerator::Sprime_minus_two_thirds: return "Sprime_minus_two_thirds";
    case PointGenerator::TwoSprimePlusOne_zero: return "TwoSprimePlusOne_zero";
  }
  return "?";
}

std::vector<PointSpectrumEntry> point_spectrum(TilingName name, const Potential& q, double lambda_max,
                                               const SolverOptions& opts) {
  require_even(q);
  const DispersionForm form = dispersion_form(name);
  const DiscriminantProfile prof(q, lambda_max, opts);
  std::vector<PointSpectrumEntry> out;
  if (form.i > 0) out.push_back({PointGenerator::S_zero, prof.dirichlet_roots()});
  if (form.j > 0) out.push_back({PointGenerator::Sprime_zero, prof.preimage(0.0)});
  if (form.l > 0) out.push_back({PointGenerator::Sprime_minus_two_thirds, prof.preimage(-2.0 / 3.0)});
  if (form.k > 0) out.push_back({PointGenerator::TwoSprimePlusOne_zero, prof.preimage(-0.5)});
  return out;
}

SpectrumReport spectrum_report(TilingName name, const Potential& q, double lambda_max, const SolverOptions& opts) {
  return {bands_general(name, q, lambda_max, opts), point_spectrum(name, q, lambda_max, opts)};
}

}  // namespace qgtile
