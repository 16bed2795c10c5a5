#pragma once

// Callable analytic functions carrying their first three derivatives.
// Series-backed functions differentiate by exact coefficient shifts.

#include <complex>
#include <functional>
#include <limits>
#include <memory>
#include <utility>

#include "gbessel/power_series.hpp"

namespace gbessel {

struct Jet {
  Complex value{};
  Complex d1{};
  Complex d2{};
  Complex d3{};
};

using AnalyticFn = std::function<Jet(Complex)>;
using ComplexFn = std::function<Complex(Complex)>;

inline AnalyticFn series_function(const PowerSeries& f) {
  struct Derivatives {
    PowerSeries f, d1, d2, d3;
  };
  auto d = std::make_shared<const Derivatives>(
      Derivatives{f, f.derivative(), f.derivative().derivative(),
                  f.derivative().derivative().derivative()});
  return [d](Complex z) {
    return Jet{eval_series(d->f, z), d->d1.horner(z), d->d2.horner(z), d->d3.horner(z)};
  };
}

inline AnalyticFn identity_function() {
  return [](Complex z) { return Jet{z, 1.0, 0.0, 0.0}; };
}

/// z/(1 - z) in closed form.
inline AnalyticFn convex_kernel_function() {
  return [](Complex z) {
    const Complex u = 1.0 / (1.0 - z);
    return Jet{z * u, u * u, 2.0 * u * u * u, 6.0 * u * u * u * u};
  };
}

/// z f'(z). The third derivative of the image would need f'''' and is left NaN.
inline AnalyticFn alexander_image(AnalyticFn f) {
  return [f = std::move(f)](Complex z) {
    const Jet j = f(z);
    const double nan = std::numeric_limits<double>::quiet_NaN();
    return Jet{z * j.d1, j.d1 + z * j.d2, 2.0 * j.d2 + z * j.d3, Complex(nan, nan)};
  };
}

}  // namespace gbessel
