#include "qgtile/dispersion.hpp"

#include "qgtile/polynomial.hpp"

namespace qgtile {

TrigInvariants trig_invariants(const QuasiMomentum& k) {
  using std::cos;
  const double t1 = k.theta1, t2 = k.theta2;
  TrigInvariants w;
  w.c = cos(t1);
  w.d = cos(t2);
  w.xi = cos((t1 + t2) / 2.0);
  w.eta = cos((t1 - t2) / 2.0);
  w.omega1 = w.c * w.d * cos(t1 + t2);
  w.omega2 = cos(t1 / 2.0) * cos(t2 / 2.0) * cos((t1 + t2) / 2.0);
  w.omega3 = cos((2.0 * t1 + t2) / 2.0) * cos((t2 - t1) / 2.0) * cos((t1 + 2.0 * t2) / 2.0);
  w.omegaT1 = w.c * w.d * cos(t1 - t2);
  w.omegaT2 = cos(t1 / 2.0) * cos(t2 / 2.0) * cos((t1 - t2) / 2.0);
  w.omegaT3 = cos((2.0 * t1 - t2) / 2.0) * cos((t1 + t2) / 2.0) * cos((t1 - 2.0 * t2) / 2.0);
  w.omega = w.omegaT2;
  return w;
}

DispersionForm dispersion_form(TilingName name) {
  DispersionForm f;
  f.name = name;
  switch (name) {
    case TilingName::S: f.i = 2; f.degree = 2; break;
    case TilingName::H: f.i = 2; f.degree = 2; break;
    case TilingName::T: f.i = 2; f.degree = 1; break;
    case TilingName::ET: f.i = 3; f.degree = 2; break;
    case TilingName::trS: f.i = 2; f.degree = 4; break;
    case TilingName::TH: f.i = 3; f.k = 1; f.degree = 2; break;
    case TilingName::trH: f.i = 3; f.j = 1; f.l = 1; f.degree = 4; break;
    case TilingName::SS: f.i = 6; f.degree = 4; break;
    case TilingName::RTH: f.i = 6; f.degree = 6; break;
    case TilingName::STH: f.i = 9; f.degree = 6; break;
    case TilingName::trTH: f.i = 6; f.degree = 12; break;
  }
  return f;
}

std::vector<double> dispersion_coefficients(TilingName name, const QuasiMomentum& k) {
  return dispersion_coefficients<double>(name, angle_terms<double>(k.theta1, k.theta2));
}

double evaluate_dispersion(TilingName name, double x, const QuasiMomentum& k) {
  return horner(dispersion_coefficients(name, k), x);
}

std::vector<double> dispersion_root_set(TilingName name, const QuasiMomentum& k) {
  const auto c = dispersion_coefficients<long double>(name, angle_terms<long double>(k.theta1, k.theta2));
  return real_roots(c);
}

}  // namespace qgtile
