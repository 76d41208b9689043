#pragma once

#include <cmath>
#include <vector>

namespace qgtile {

/// Coefficients in ascending powers.
template <class T>
T horner(const std::vector<T>& c, T x) {
  T acc = T(0);
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

template <class T>
std::vector<T> derivative(const std::vector<T>& c) {
  std::vector<T> d;
  for (std::size_t k = 1; k < c.size(); ++k) d.push_back(c[k] * T(static_cast<int>(k)));
  return d;
}

/// sum |c_k| |x|^k, the natural size of rounding errors in horner(c, x).
inline long double magnitude_at(const std::vector<long double>& c, long double x) {
  long double acc = 0.0L;
  const long double ax = std::fabs(x);
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * ax + std::fabs(*it);
  return acc;
}

struct RootSearchOptions {
  double lo = -1.5;
  double hi = 1.5;
  double bisection_width = 1e-13;
  double dedupe = 1e-9;
  /// A local minimum of |p| counts as a (tangential) root when
  /// |p| <= tangency_tolerance * magnitude_at(p, x).
  double tangency_tolerance = 1e-12;
};

/// Real roots of a polynomial in [lo, hi], sorted ascending. Isolation is
/// exact: the real roots of p' (found recursively) cut the window into
/// monotone pieces, each bracketing at most one crossing. A critical point
/// where |p| is below the tangency tolerance is reported as an even-order
/// root.
std::vector<double> real_roots(const std::vector<long double>& coeffs, const RootSearchOptions& opts = {});

}  // namespace qgtile
