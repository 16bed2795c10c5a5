#pragma once

// Images of the circle |z| = r under a quantity built from an analytic
// function, with the boundary of exp(D) or a centered circle as overlay.
// The inside/outside verdict uses the winding number of the overlay polygon.
// Since exp(D) is convex, its inscribed polygon lies inside the true region,
// so "inside" is never reported for a point outside exp(D).

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gbessel/analytic.hpp"
#include "gbessel/disk_checks.hpp"
#include "gbessel/json_io.hpp"
#include "gbessel/theorems.hpp"
#include "gbessel/winding.hpp"

namespace gbessel {

enum class FigureQuantity {
  value,         // f(z)
  starlike,      // z f'/f
  convex,        // 1 + z f''/f'
  second_ratio,  // z f''/f'
};

enum class Overlay { none, exp_boundary, circle };

inline FigureQuantity parse_figure_quantity(std::string_view s) {
  if (s == "value") return FigureQuantity::value;
  if (s == "starlike") return FigureQuantity::starlike;
  if (s == "convex") return FigureQuantity::convex;
  if (s == "second_ratio") return FigureQuantity::second_ratio;
  throw std::invalid_argument("unknown figure quantity: " + std::string(s));
}

inline Overlay parse_overlay(std::string_view s) {
  if (s == "none") return Overlay::none;
  if (s == "exp") return Overlay::exp_boundary;
  if (s == "circle") return Overlay::circle;
  throw std::invalid_argument("unknown overlay: " + std::string(s));
}

struct FigureSpec {
  std::string function_id;
  FigureQuantity quantity = FigureQuantity::value;
  double radius = 0.999;
  std::size_t points = 2048;
  Overlay overlay = Overlay::exp_boundary;
  double circle_radius = constants::small_circle_radius();

  void validate() const {
    if (!(radius > 0.0 && radius < 1.0)) throw std::invalid_argument("figure radius must lie in (0, 1)");
    if (points < 64) throw std::invalid_argument("figure needs at least 64 points");
    if (overlay == Overlay::circle && !(circle_radius > 0.0)) {
      throw std::invalid_argument("overlay circle radius must be positive");
    }
  }
};

struct FigureData {
  FigureSpec spec;
  std::vector<double> theta;
  std::vector<Complex> curve;
  std::vector<Complex> overlay_curve;
  std::size_t outside_count = 0;
  bool inside = true;
};

inline Complex figure_quantity(const AnalyticFn& f, FigureQuantity q, Complex z) {
  switch (q) {
    case FigureQuantity::value:
      return f(z).value;
    case FigureQuantity::starlike:
      return starlike_quantity(f, z);
    case FigureQuantity::convex:
      return convex_quantity(f, z);
    case FigureQuantity::second_ratio:
      return convex_quantity(f, z) - 1.0;
  }
  return {};
}

/// theta -> e^{e^{i theta}}, the boundary of exp(D).
inline std::vector<Complex> exp_boundary(std::size_t points) {
  std::vector<Complex> out(points);
  for (std::size_t k = 0; k < points; ++k) {
    out[k] = std::exp(std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(points)));
  }
  return out;
}

inline std::vector<Complex> circle_boundary(double radius, std::size_t points) {
  std::vector<Complex> out(points);
  for (std::size_t k = 0; k < points; ++k) {
    out[k] = std::polar(radius, 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(points));
  }
  return out;
}

inline FigureData make_figure(const AnalyticFn& f, const FigureSpec& spec) {
  spec.validate();
  FigureData data;
  data.spec = spec;
  data.theta.reserve(spec.points);
  data.curve.reserve(spec.points);
  for (std::size_t k = 0; k < spec.points; ++k) {
    const double t = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(spec.points);
    data.theta.push_back(t);
    data.curve.push_back(figure_quantity(f, spec.quantity, std::polar(spec.radius, t)));
  }
  if (spec.overlay == Overlay::exp_boundary) data.overlay_curve = exp_boundary(spec.points);
  if (spec.overlay == Overlay::circle) data.overlay_curve = circle_boundary(spec.circle_radius, spec.points);

  // The region test uses a finer polygon than the plotted overlay.
  const std::size_t region_points = std::max<std::size_t>(8192, spec.points);
  const std::vector<Complex> region = spec.overlay == Overlay::circle
                                          ? circle_boundary(spec.circle_radius, region_points)
                                          : exp_boundary(region_points);
  for (const Complex& w : data.curve) {
    if (!inside_polygon(w, region)) ++data.outside_count;
  }
  data.inside = data.outside_count == 0;
  return data;
}

inline std::string figure_csv(const std::vector<double>& theta, const std::vector<Complex>& pts) {
  std::string out = "theta,re,im\n";
  for (std::size_t k = 0; k < pts.size(); ++k) {
    out += format_number(theta[k]);
    out += ',';
    out += format_number(pts[k].real());
    out += ',';
    out += format_number(pts[k].imag());
    out += '\n';
  }
  return out;
}

inline std::string overlay_csv(const FigureData& d) {
  std::vector<double> theta(d.overlay_curve.size());
  for (std::size_t k = 0; k < theta.size(); ++k) {
    theta[k] = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(theta.size());
  }
  return figure_csv(theta, d.overlay_curve);
}

namespace detail {

inline std::string svg_polyline(const std::vector<Complex>& pts, std::string_view stroke) {
  std::string s = "  <polyline fill=\"none\" stroke=\"";
  s += stroke;
  s += "\" stroke-width=\"0.01\" points=\"";
  char buf[64];
  for (std::size_t k = 0; k <= pts.size(); ++k) {
    const Complex& p = pts[k % pts.size()];
    std::snprintf(buf, sizeof buf, "%.6f,%.6f ", p.real(), -p.imag());
    s += buf;
  }
  s += "\"/>\n";
  return s;
}

}  // namespace detail

/// Standalone SVG with a fixed viewBox covering [-1.5, 3.5] x [-2.5, 2.5].
inline std::string figure_svg(const FigureData& d) {
  std::string s =
      "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"600\" height=\"600\" viewBox=\"-1.5 -2.5 5 5\">\n"
      "  <rect x=\"-1.5\" y=\"-2.5\" width=\"5\" height=\"5\" fill=\"white\"/>\n"
      "  <line x1=\"-1.5\" y1=\"0\" x2=\"3.5\" y2=\"0\" stroke=\"#999\" stroke-width=\"0.005\"/>\n"
      "  <line x1=\"0\" y1=\"-2.5\" x2=\"0\" y2=\"2.5\" stroke=\"#999\" stroke-width=\"0.005\"/>\n";
  if (!d.overlay_curve.empty()) s += detail::svg_polyline(d.overlay_curve, "#d62728");
  s += detail::svg_polyline(d.curve, "#1f77b4");
  s += "</svg>\n";
  return s;
}

/// Writes <prefix>.csv, <prefix>.svg and, with an overlay, <prefix>_overlay.csv.
/// Throws std::ios_base::failure on I/O errors.
inline std::vector<std::string> write_figure(const FigureData& d, const std::string& prefix) {
  std::vector<std::string> written;
  auto write = [&written](const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::ios_base::failure("cannot open " + path);
    out << content;
    if (!out) throw std::ios_base::failure("write failed: " + path);
    written.push_back(path);
  };
  write(prefix + ".csv", figure_csv(d.theta, d.curve));
  if (!d.overlay_curve.empty()) write(prefix + "_overlay.csv", overlay_csv(d));
  write(prefix + ".svg", figure_svg(d));
  return written;
}

}  // namespace gbessel
