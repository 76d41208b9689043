#pragma once

#include <cmath>
#include <vector>

#include "qgtile/tiling.hpp"

namespace qgtile {

/// Trigonometric combinations of the quasi-momentum used by the dispersion
/// polynomials and their range proofs.
struct TrigInvariants {
  double omega = 1.0;  // cos(t1/2) cos(t2/2) cos((t1-t2)/2)
  double omega1 = 1.0, omega2 = 1.0, omega3 = 1.0;
  double omegaT1 = 1.0, omegaT2 = 1.0, omegaT3 = 1.0;
  double xi = 1.0;   // cos((t1+t2)/2)
  double eta = 1.0;  // cos((t1-t2)/2)
  double c = 1.0;    // cos t1
  double d = 1.0;    // cos t2
};

TrigInvariants trig_invariants(const QuasiMomentum& k);

/// Every cosine a dispersion polynomial needs. At the origin all of them
/// equal one, which lets the coefficients be evaluated in exact arithmetic.
template <class T>
struct AngleTerms {
  T c1, c2;          // cos t1, cos t2
  T cp, cm;          // cos(t1+t2), cos(t1-t2)
  T c2_1, c2_2;      // cos 2t1, cos 2t2
  T c2p, c2m;        // cos 2(t1+t2), cos 2(t1-t2)
  T c21p, c12p;      // cos(2t1+t2), cos(t1+2t2)
  T c21m, c12m;      // cos(2t1-t2), cos(t1-2t2)
  T omega;           // cos(t1/2) cos(t2/2) cos((t1-t2)/2)
  T half_sq;         // cos^2(t1/2) cos^2(t2/2)

  static AngleTerms origin() {
    const T one(1);
    return {one, one, one, one, one, one, one, one, one, one, one, one, one, one};
  }
};

template <class T>
AngleTerms<T> angle_terms(T t1, T t2) {
  using std::cos;
  const T two(2), half = T(1) / two;
  const T h = cos(t1 * half) * cos(t2 * half);
  return {cos(t1),
          cos(t2),
          cos(t1 + t2),
          cos(t1 - t2),
          cos(two * t1),
          cos(two * t2),
          cos(two * (t1 + t2)),
          cos(two * (t1 - t2)),
          cos(two * t1 + t2),
          cos(t1 + two * t2),
          cos(two * t1 - t2),
          cos(t1 - two * t2),
          h * cos((t1 - t2) * half),
          h * h};
}

/// Coefficients (ascending powers of x = S'(a, rho)) of the dispersion
/// polynomial p(x, theta1, theta2) of a tiling.
template <class T>
std::vector<T> dispersion_coefficients(TilingName name, const AngleTerms<T>& t) {
  const auto K = [](long long v) { return T(v); };
  switch (name) {
    case TilingName::S:
      return {-t.half_sq, K(0), K(1)};
    case TilingName::H:
      return {K(-1) - K(8) * t.omega, K(0), K(9)};
    case TilingName::T:
      return {K(1) - K(4) * t.omega, K(3)};
    case TilingName::ET:
      return {K(-8) * t.omega + K(4) * t.c1 * t.c1 - K(1), K(-20) * t.c1, K(25)};
    case TilingName::trS:
      return {K(1) - K(4) * t.c1 * t.c2, K(-12) * (t.c1 + t.c2), K(-54), K(0), K(81)};
    case TilingName::TH:
      return {-t.omega, K(-1), K(2)};
    case TilingName::trH:
      return {K(8) - K(8) * t.omega, K(18), K(-45), K(-54), K(81)};
    case TilingName::SS: {
      const T c = t.c1, d = t.c2;
      return {K(1) - K(4) * (c + d + K(4) * c * d - c * c - d * d), K(-40) - K(40) * (c + d + c * d),
              K(-250) - K(100) * (c + d), K(0), K(625)};
    }
    case TilingName::RTH: {
      const T s1 = t.c1 + t.cp + t.c2;
      const T s2 = t.c2p + t.c2_1 + t.c2_2;
      const T s3 = t.c21p + t.cm + t.c12p;
      return {K(-3) + K(2) * s1 + s2 - K(2) * s3, K(0), K(192) - K(64) * s1, K(-128) - K(128) * s1, K(-1536),
              K(0), K(2048)};
    }
    case TilingName::STH: {
      const T s1 = t.c1 + t.c2 + t.cp;
      const T s2 = t.c2_1 + t.c2_2 + t.c2p;
      const T s4 = t.c21p + t.c12p + t.cm;
      return {K(-11) + K(2) * s2 - K(8) * s4 + K(8) * s1,
              K(120) - K(20) * s4 - K(60) * s1,
              K(675) - K(600) * s1,
              K(-2000) - K(1000) * s1,
              K(-9375),
              K(0),
              K(15625)};
    }
    case TilingName::trTH: {
      const T s5 = t.c2_1 + t.c2_2 + t.c2m;
      const T s6 = t.c21m + t.cp + t.c12m;
      const T s7 = t.c1 + t.cm + t.c2;
      return {K(15) + K(2) * s5 + K(4) * s6 + K(16) * s7,
              K(0),
              K(-918) - K(72) * s6 - K(540) * s7,
              K(0),
              K(21627) + K(4860) * s7,
              K(0),
              K(-204120) - K(8748) * s7,
              K(0),
              K(728271),
              K(0),
              K(-1062882),
              K(0),
              K(531441)};
    }
  }
  return {};
}

/// S^i (S')^j (2S'+1)^k (3S'+2)^l p(S', theta) = 0.
struct DispersionForm {
  TilingName name = TilingName::S;
  int i = 0;  // power of S
  int j = 0;  // power of S'
  int k = 0;  // power of (2S'+1)
  int l = 0;  // power of (3S'+2)
  int degree = 0;

  double prefactor(double S, double Sp) const {
    return std::pow(S, i) * std::pow(Sp, j) * std::pow(2.0 * Sp + 1.0, k) * std::pow(3.0 * Sp + 2.0, l);
  }
};

DispersionForm dispersion_form(TilingName name);

std::vector<double> dispersion_coefficients(TilingName name, const QuasiMomentum& k);

double evaluate_dispersion(TilingName name, double x, const QuasiMomentum& k);

/// Real roots of p(., theta1, theta2) in [-1.5, 1.5], ascending.
std::vector<double> dispersion_root_set(TilingName name, const QuasiMomentum& k);

}  // namespace qgtile
