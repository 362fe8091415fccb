#pragma once

#include <cmath>
#include <functional>

namespace sagin {

struct LineSearchResult {
  double x = 0.0;
  double value = 0.0;
  int evaluations = 0;
};

/// Golden-section maximisation of `f` on [lo, hi] down to a bracket of width
/// `tol`. Both end points are compared against the interior optimum so that a
/// monotone objective returns the boundary exactly.
inline LineSearchResult golden_section_maximize(const std::function<double(double)>& f,
                                                double lo, double hi, double tol) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo;
  double b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  int evals = 2;
  while (b - a > tol) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
    ++evals;
  }

  LineSearchResult best{(a + b) / 2.0, f((a + b) / 2.0), evals + 1};
  for (double edge : {lo, hi}) {
    const double fe = f(edge);
    ++best.evaluations;
    if (fe >= best.value) best = {edge, fe, best.evaluations};
  }
  return best;
}

}  // namespace sagin
