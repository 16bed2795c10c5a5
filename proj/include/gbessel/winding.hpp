#pragma once

#include <complex>
#include <cstddef>
#include <span>

namespace gbessel {

/// Winding number of the closed polygon `vertices` (last vertex joins the
/// first) around `p`; nonzero means p is enclosed.
inline int winding_number(std::complex<double> p, std::span<const std::complex<double>> vertices) {
  auto is_left = [](std::complex<double> a, std::complex<double> b, std::complex<double> q) {
    return (b.real() - a.real()) * (q.imag() - a.imag()) - (q.real() - a.real()) * (b.imag() - a.imag());
  };
  int wn = 0;
  const std::size_t n = vertices.size();
  for (std::size_t i = 0; i < n; ++i) {
    const auto a = vertices[i];
    const auto b = vertices[(i + 1) % n];
    if (a.imag() <= p.imag()) {
      if (b.imag() > p.imag() && is_left(a, b, p) > 0.0) ++wn;
    } else if (b.imag() <= p.imag() && is_left(a, b, p) < 0.0) {
      --wn;
    }
  }
  return wn;
}

inline bool inside_polygon(std::complex<double> p, std::span<const std::complex<double>> vertices) {
  return winding_number(p, vertices) != 0;
}

}  // namespace gbessel
