#include "qgtile/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace qgtile {

namespace {

int sign_of(long double v) { return (v > 0.0L) - (v < 0.0L); }

std::vector<long double> trimmed(std::vector<long double> c) {
  while (!c.empty() && c.back() == 0.0L) c.pop_back();
  return c;
}

// Root of a polynomial that is monotone on [a, b] with a sign change.
// Newton steps that leave the bracket, or fail to halve it over two steps,
// are replaced by bisection so multiple roots at the ends still converge.
long double monotone_root(const std::vector<long double>& c, const std::vector<long double>& dc, long double a,
                          long double b, long double fa, double width) {
  long double x = 0.5L * (a + b);
  long double checkpoint = b - a;
  for (int it = 0; it < 200; ++it) {
    const long double fx = horner(c, x);
    if (fx == 0.0L) return x;
    if (sign_of(fx) == sign_of(fa)) {
      a = x;
      fa = fx;
    } else {
      b = x;
    }
    if (b - a <= width) return 0.5L * (a + b);
    const long double d = horner(dc, x);
    long double xn = d != 0.0L ? x - fx / d : a;
    bool stalled = false;
    if (it % 2 == 1) {
      stalled = b - a > 0.5L * checkpoint;
      checkpoint = b - a;
    }
    if (stalled || !(xn > a && xn < b)) xn = 0.5L * (a + b);
    if (std::fabs(xn - x) <= 4.0L * std::numeric_limits<long double>::epsilon() * std::max(1.0L, std::fabs(x)))
      return xn;
    x = xn;
  }
  return x;
}

// Roots of p in [lo, hi], unsorted and possibly with near-duplicates. The
// roots of p' split the window into pieces on which p is monotone, so each
// piece holds at most one crossing; a critical point where p nearly vanishes
// is a root of even multiplicity.
std::vector<long double> isolate(const std::vector<long double>& c, long double lo, long double hi,
                                 const RootSearchOptions& opts) {
  std::vector<long double> out;
  if (c.size() <= 1) return out;
  if (c.size() == 2) {
    const long double r = -c[0] / c[1];
    if (r >= lo && r <= hi) out.push_back(r);
    return out;
  }
  const auto dc = trimmed(derivative(c));
  std::vector<long double> knots{lo};
  for (long double x : isolate(dc, lo, hi, opts))
    if (x > lo && x < hi) knots.push_back(x);
  knots.push_back(hi);
  std::sort(knots.begin(), knots.end());

  std::vector<long double> vals(knots.size());
  for (std::size_t i = 0; i < knots.size(); ++i) vals[i] = horner(c, knots[i]);
  const auto tol = static_cast<long double>(opts.tangency_tolerance);
  for (std::size_t i = 0; i < knots.size(); ++i) {
    const bool interior = i > 0 && i + 1 < knots.size();
    if (vals[i] == 0.0L || (interior && std::fabs(vals[i]) <= tol * magnitude_at(c, knots[i])))
      out.push_back(knots[i]);
    if (i + 1 < knots.size() && vals[i] != 0.0L && vals[i + 1] != 0.0L && sign_of(vals[i]) != sign_of(vals[i + 1]))
      out.push_back(monotone_root(c, dc, knots[i], knots[i + 1], vals[i], opts.bisection_width));
  }
  return out;
}

}  // namespace

std::vector<double> real_roots(const std::vector<long double>& coeffs, const RootSearchOptions& opts) {
  std::vector<double> roots;
  const auto c = trimmed(coeffs);
  std::vector<long double> found;
  bool even = c.size() > 2;
  for (std::size_t k = 1; k < c.size() && even; k += 2) even = c[k] == 0.0L;
  if (even && opts.lo <= 0.0 && opts.hi >= 0.0) {
    // p(x) = r(x^2): isolate r on [0, max(lo^2, hi^2)] and map back.
    std::vector<long double> r;
    for (std::size_t k = 0; k < c.size(); k += 2) r.push_back(c[k]);
    const long double top = std::max(opts.lo * opts.lo, opts.hi * opts.hi);
    auto ys = isolate(r, 0.0L, top, opts);
    // y = 0 is an endpoint of the reduced window but an interior point for p.
    const long double r0 = r.front();
    if (r0 == 0.0L || std::fabs(r0) <= static_cast<long double>(opts.tangency_tolerance) * magnitude_at(r, 0.0L))
      ys.push_back(0.0L);
    for (long double y : ys) {
      const long double x = std::sqrt(std::max(y, 0.0L));
      if (x <= opts.hi) found.push_back(x);
      if (-x >= opts.lo) found.push_back(-x);
    }
  } else {
    found = isolate(c, opts.lo, opts.hi, opts);
  }
  std::sort(found.begin(), found.end());
  for (long double x : found) {
    if (!roots.empty() && std::fabs(static_cast<double>(x) - roots.back()) <= opts.dedupe) continue;
    roots.push_back(static_cast<double>(x));
  }
  return roots;
}

}  // namespace qgtile
