// Scalar bracketing utilities: bisection for monotone equations and
// golden-section minimization of unimodal functions. All solvers tolerate
// +inf function values (overflow regions) as "very large".
#pragma once

#include <cmath>
#include <limits>
#include <utility>

namespace orlicz {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

namespace detail {

/// Solve f(x) = target for nondecreasing f by doubling/halving a bracket
/// around `seed` and bisecting. f may return +inf above its overflow edge.
/// Stops when the bracket width falls below rel_tol * max(1, x).
template <class F>
double solve_nondecreasing(F&& f, double target, double seed, double rel_tol = 1e-13,
                           int max_iter = 300) {
  double hi = seed > 0 ? seed : 1.0;
  double lo = hi;
  int guard = 0;
  while (!(f(hi) >= target) && guard++ < 2100) hi *= 2.0;
  guard = 0;
  while (f(lo) > target && lo > 5e-324 && guard++ < 2100) lo *= 0.5;
  for (int i = 0; i < max_iter && (hi - lo) > rel_tol * std::max(1.0, hi); ++i) {
    const double mid = 0.5 * (lo + hi);
    if (f(mid) >= target)
      hi = mid;
    else
      lo = mid;
  }
  return 0.5 * (lo + hi);
}

/// Bisect for the boundary of {x : f(x) <= bound} when f is nonincreasing:
/// returns the smallest x (within tolerance) with f(x) <= bound, given a
/// bracket f(lo) > bound >= f(hi). Returns the hi end, so the predicate is
/// guaranteed to hold at the result.
template <class F>
double smallest_satisfying(F&& f, double bound, double lo, double hi, double rel_tol = 1e-10,
                           int max_iter = 200) {
  for (int i = 0; i < max_iter && (hi - lo) > rel_tol * std::max(1.0, hi); ++i) {
    const double mid = 0.5 * (lo + hi);
    if (f(mid) <= bound)
      hi = mid;
    else
      lo = mid;
  }
  return hi;
}

struct MinResult {
  double x;
  double value;
};

/// Golden-section search on [a, c] assuming g is unimodal with an interior
/// minimum; b must satisfy a < b < c and g(b) <= min(g(a), g(c)). Endpoint
/// values may be +inf.
template <class G>
MinResult golden_min(G&& g, double a, double b, double c, double rel_tol = 1e-10,
                     int max_iter = 240) {
  constexpr double invphi = 0.6180339887498949;
  double x1 = c - invphi * (c - a);
  double x2 = a + invphi * (c - a);
  double g1 = g(x1), g2 = g(x2);
  (void)b;
  for (int i = 0; i < max_iter && (c - a) > rel_tol * std::max(1.0, std::abs(x1)); ++i) {
    if (g1 <= g2) {
      c = x2;
      x2 = x1;
      g2 = g1;
      x1 = c - invphi * (c - a);
      g1 = g(x1);
    } else {
      a = x1;
      x1 = x2;
      g1 = g2;
      x2 = a + invphi * (c - a);
      g2 = g(x2);
    }
  }
  return g1 <= g2 ? MinResult{x1, g1} : MinResult{x2, g2};
}

/// Walk multiplicatively from x0 until a three-point bracket of a unimodal
/// minimum is found. Endpoint values may be +inf; g(x0) must be finite.
template <class G>
MinResult bracket_and_minimize(G&& g, double x0, double rel_tol = 1e-10) {
  const double step = 2.0;
  double b = x0, gb = g(b);
  double a = b / step, ga = g(a);
  double c = b * step, gc = g(c);
  int guard = 0;
  while (ga < gb && guard++ < 2100) {  // walk down
    c = b;
    gc = gb;
    b = a;
    gb = ga;
    a /= step;
    ga = g(a);
  }
  guard = 0;
  while (gc < gb && guard++ < 2100) {  // walk up
    a = b;
    ga = gb;
    b = c;
    gb = gc;
    c *= step;
    gc = g(c);
  }
  return golden_min(g, a, b, c, rel_tol);
}

}  // namespace detail
}  // namespace orlicz
