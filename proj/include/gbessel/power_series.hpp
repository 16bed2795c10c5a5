#pragma once

// Truncated power series about 0 with complex coefficients, and the
// convolution operators built on them (Hadamard product, B_kappa^c,
// Libera, Alexander).

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include <json.hpp>

#include "gbessel/errors.hpp"
#include "gbessel/special_fn.hpp"

namespace gbessel {

inline constexpr std::size_t kDefaultSeriesOrder = 64;
inline constexpr std::size_t kMaxSeriesOrder = 500;
inline constexpr double kSeriesGuardRadius = 1.05;
inline constexpr double kSeriesEqualityTolerance = 1e-12;

/// a_0 + a_1 z + ... + a_N z^N.
class PowerSeries {
 public:
  PowerSeries() : coeffs_(1, Complex(0.0, 0.0)) {}

  explicit PowerSeries(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) coeffs_.emplace_back(0.0, 0.0);
    for (const Complex& a : coeffs_) {
      if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
        throw OutOfDomain("PowerSeries: non-finite coefficient");
      }
    }
  }

  static PowerSeries zero(std::size_t order) {
    return PowerSeries(std::vector<Complex>(order + 1, Complex(0.0, 0.0)));
  }

  /// The identity map z.
  static PowerSeries identity(std::size_t order = kDefaultSeriesOrder) {
    PowerSeries s = zero(std::max<std::size_t>(order, 1));
    s.coeffs_[1] = 1.0;
    return s;
  }

  /// z/(1 - z): every coefficient from degree 1 on equals one.
  static PowerSeries convex_kernel(std::size_t order = kDefaultSeriesOrder) {
    PowerSeries s = zero(order);
    for (std::size_t n = 1; n <= order; ++n) s.coeffs_[n] = 1.0;
    return s;
  }

  std::size_t order() const { return coeffs_.size() - 1; }
  std::span<const Complex> coeffs() const { return coeffs_; }
  Complex operator[](std::size_t n) const { return n < coeffs_.size() ? coeffs_[n] : Complex{}; }

  /// a_0 = 0 and a_1 = 1, both exactly.
  bool in_normalized_class() const {
    return coeffs_.size() >= 2 && coeffs_[0] == Complex(0.0, 0.0) &&
           coeffs_[1] == Complex(1.0, 0.0);
  }

  PowerSeries truncated(std::size_t order) const {
    std::vector<Complex> c(order + 1, Complex(0.0, 0.0));
    std::copy_n(coeffs_.begin(), std::min(c.size(), coeffs_.size()), c.begin());
    return PowerSeries(std::move(c));
  }

  PowerSeries derivative() const {
    if (coeffs_.size() == 1) return PowerSeries();
    std::vector<Complex> d(coeffs_.size() - 1);
    for (std::size_t n = 1; n < coeffs_.size(); ++n) d[n - 1] = coeffs_[n] * static_cast<double>(n);
    return PowerSeries(std::move(d));
  }

  /// z * f(z); raises the order by one.
  PowerSeries times_z() const {
    std::vector<Complex> s(coeffs_.size() + 1, Complex(0.0, 0.0));
    std::copy(coeffs_.begin(), coeffs_.end(), s.begin() + 1);
    return PowerSeries(std::move(s));
  }

  friend PowerSeries operator+(const PowerSeries& f, const PowerSeries& g) {
    std::vector<Complex> s(std::max(f.coeffs_.size(), g.coeffs_.size()), Complex(0.0, 0.0));
    for (std::size_t n = 0; n < s.size(); ++n) s[n] = f[n] + g[n];
    return PowerSeries(std::move(s));
  }

  friend PowerSeries operator-(const PowerSeries& f, const PowerSeries& g) {
    return f + (-1.0) * g;
  }

  friend PowerSeries operator*(Complex k, const PowerSeries& f) {
    std::vector<Complex> s(f.coeffs_);
    for (Complex& a : s) a *= k;
    return PowerSeries(std::move(s));
  }

  /// Horner evaluation without the domain guard; internal callers only.
  Complex horner(Complex z) const {
    Complex acc(0.0, 0.0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
    return acc;
  }

 private:
  std::vector<Complex> coeffs_;
};

/// Largest coefficient deviation, treating missing coefficients as zero.
inline double max_coefficient_deviation(const PowerSeries& f, const PowerSeries& g) {
  double worst = 0.0;
  for (std::size_t n = 0; n <= std::max(f.order(), g.order()); ++n) {
    worst = std::max(worst, std::abs(f[n] - g[n]));
  }
  return worst;
}

inline bool series_equal(const PowerSeries& f, const PowerSeries& g,
                         double tol = kSeriesEqualityTolerance) {
  return max_coefficient_deviation(f, g) < tol;
}

/// Horner evaluation, restricted to |z| <= 1.05.
inline Complex eval_series(const PowerSeries& f, Complex z) {
  if (!(std::abs(z) <= kSeriesGuardRadius)) {
    throw OutOfDomain("eval_series: |z| exceeds the truncation guard radius 1.05");
  }
  return f.horner(z);
}

/// Coefficients b_n = (-c/4)^n / ((kappa)_n n!) of phi, n = 0..order.
inline PowerSeries series_of_phi(const BesselParams& params, std::size_t order = kDefaultSeriesOrder) {
  if (order > kMaxSeriesOrder) throw std::invalid_argument("series_of_phi: order exceeds 500");
  std::vector<Complex> b(order + 1);
  const Complex step = -params.c() / 4.0;
  const Complex kappa = params.kappa();
  b[0] = 1.0;
  for (std::size_t n = 0; n < order; ++n) {
    b[n + 1] = b[n] * step / ((kappa + static_cast<double>(n)) * static_cast<double>(n + 1));
  }
  return PowerSeries(std::move(b));
}

/// vartheta = z phi, a member of the normalized class; order counts degree.
inline PowerSeries series_of_vartheta(const BesselParams& params,
                                      std::size_t order = kDefaultSeriesOrder) {
  return series_of_phi(params, order == 0 ? 0 : order - 1).times_z();
}

/// Coefficient-wise product; the result has the smaller of the two orders.
inline PowerSeries hadamard(const PowerSeries& f, const PowerSeries& g) {
  const std::size_t order = std::min(f.order(), g.order());
  std::vector<Complex> c(order + 1);
  for (std::size_t n = 0; n <= order; ++n) c[n] = f[n] * g[n];
  return PowerSeries(std::move(c));
}

inline void require_normalized(const PowerSeries& f, const char* where) {
  if (!f.in_normalized_class()) {
    throw NotNormalized(std::string(where) + ": series must satisfy a_0 = 0, a_1 = 1");
  }
}

/// B_kappa^c f = vartheta_nu * f for f in the normalized class.
inline PowerSeries b_operator(const BesselParams& params, const PowerSeries& f) {
  require_normalized(f, "b_operator");
  return hadamard(series_of_vartheta(params, f.order()), f);
}

/// L[f](z) = (2/z) int_0^z f(t) dt, i.e. a_n -> 2 a_n / (n + 1).
inline PowerSeries libera(const PowerSeries& f) {
  if (f[0] != Complex(0.0, 0.0)) throw NonvanishingAtZero("libera: f(0) must vanish");
  std::vector<Complex> c(f.order() + 1, Complex(0.0, 0.0));
  for (std::size_t n = 1; n <= f.order(); ++n) c[n] = 2.0 * f[n] / static_cast<double>(n + 1);
  return PowerSeries(std::move(c));
}

/// -2(z + log(1 - z))/z = sum_{n>=1} 2/(n+1) z^n, built from log(1-z) = -sum z^n/n.
inline PowerSeries libera_kernel(std::size_t order = kDefaultSeriesOrder) {
  std::vector<Complex> log_one_minus(order + 2, Complex(0.0, 0.0));
  for (std::size_t n = 1; n < log_one_minus.size(); ++n) log_one_minus[n] = -1.0 / static_cast<double>(n);
  // z + log(1 - z), then divide by z and scale by -2.
  log_one_minus[1] += 1.0;
  std::vector<Complex> k(order + 1, Complex(0.0, 0.0));
  for (std::size_t n = 0; n <= order; ++n) k[n] = -2.0 * log_one_minus[n + 1];
  return PowerSeries(std::move(k));
}

enum class AlexanderDirection { to_starlike, to_convex };

/// to_starlike: f -> z f' (a_n -> n a_n). to_convex: the inverse, a_n -> a_n / n.
inline PowerSeries alexander(const PowerSeries& f, AlexanderDirection direction) {
  if (f[0] != Complex(0.0, 0.0)) throw NotNormalized("alexander: a_0 must vanish");
  std::vector<Complex> c(f.order() + 1, Complex(0.0, 0.0));
  for (std::size_t n = 1; n <= f.order(); ++n) {
    const double k = static_cast<double>(n);
    c[n] = direction == AlexanderDirection::to_starlike ? f[n] * k : f[n] / k;
  }
  return PowerSeries(std::move(c));
}

/// Coefficients as [[re, im], ...].
inline nlohmann::json to_json(const PowerSeries& f) {
  nlohmann::json out = nlohmann::json::array();
  for (const Complex& a : f.coeffs()) out.push_back({a.real(), a.imag()});
  return out;
}

inline PowerSeries series_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.empty()) throw std::invalid_argument("series JSON must be a non-empty array");
  std::vector<Complex> c;
  c.reserve(j.size());
  for (const auto& pair : j) {
    if (pair.is_number()) {
      c.emplace_back(pair.get<double>(), 0.0);
    } else if (pair.is_array() && pair.size() == 2 && pair[0].is_number() && pair[1].is_number()) {
      c.emplace_back(pair[0].get<double>(), pair[1].get<double>());
    } else {
      throw std::invalid_argument("series JSON entries must be [re, im] pairs");
    }
  }
  return PowerSeries(std::move(c));
}

}  // namespace gbessel
