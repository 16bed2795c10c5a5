#pragma once

#include <cmath>
#include <utility>

namespace gbessel {

struct ScalarExtremum {
  double x = 0.0;
  double value = 0.0;
};

/// Golden-section minimization of a unimodal f on [lo, hi].
template <class F>
ScalarExtremum golden_section_minimize(F&& f, double lo, double hi, double x_tol = 1e-12,
                                       int max_iterations = 200) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = hi - inv_phi * (hi - lo);
  double d = lo + inv_phi * (hi - lo);
  double fc = f(c);
  double fd = f(d);
  for (int i = 0; i < max_iterations && (hi - lo) > x_tol; ++i) {
    if (fc < fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - inv_phi * (hi - lo);
      fc = f(c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + inv_phi * (hi - lo);
      fd = f(d);
    }
  }
  const double x = 0.5 * (lo + hi);
  return {x, f(x)};
}

template <class F>
ScalarExtremum golden_section_maximize(F&& f, double lo, double hi, double x_tol = 1e-12,
                                       int max_iterations = 200) {
  auto negated = [&f](double x) { return -f(x); };
  ScalarExtremum r = golden_section_minimize(negated, lo, hi, x_tol, max_iterations);
  r.value = -r.value;
  return r;
}

}  // namespace gbessel
