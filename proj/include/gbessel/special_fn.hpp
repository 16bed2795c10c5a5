#pragma once

// Generalized Bessel family.
//
//   omega_{nu,b,c}(z) = sum_n (-c)^n / (n! Gamma(nu + n + (b+1)/2)) (z/2)^(2n+nu)
//   phi_{nu,b,c}(z)   = sum_n (-c/4)^n / ((kappa)_n n!) z^n,   kappa = nu + (b+1)/2
//
// phi is entire and normalized by phi(0) = 1; omega is recovered from it as
//   omega(z) = z^nu phi(z^2) / (2^nu Gamma(kappa)).
//
// Series are summed until a geometric tail estimate drops below the requested
// tolerance. The estimate is only trusted once the term ratios are provably
// non-increasing, i.e. past the index where Re(kappa + n) turns positive.

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <stdexcept>
#include <string>
#include <string_view>

#include "gbessel/errors.hpp"

namespace gbessel {

using Complex = std::complex<double>;

inline constexpr double kPoleTolerance = 1e-12;
inline constexpr std::size_t kDefaultMaxTerms = 500;

namespace detail {

// Distance from z to the nearest non-positive integer (infinity when Re z is
// well to the right of the origin).
inline double distance_to_nonpositive_integer(Complex z) {
  const double nearest = std::min(0.0, std::round(z.real()));
  return std::abs(z - Complex(nearest, 0.0));
}

inline bool is_finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

// sin(pi z) with the real part reduced exactly to [-1/2, 1/2] first.
inline Complex sin_pi(Complex z) {
  const double k = std::round(z.real());
  const Complex r(z.real() - k, z.imag());
  const Complex s = std::sin(std::numbers::pi * r);
  return (static_cast<long long>(k) % 2 == 0) ? s : -s;
}

// Lanczos approximation with Godfrey's coefficients, g = 607/128, fifteen
// terms; valid for Re z >= 1/2.
inline Complex gamma_right_half_plane(Complex z) {
  static constexpr std::array<double, 15> kCoeffs = {
      0.99999999999999709182,   57.156235665862923517,    -59.597960355475491248,
      14.136097974741747174,    -0.49191381609762019978,  0.33994649984811888699e-4,
      0.46523628927048575665e-4, -0.98374475304879564677e-4, 0.15808870322491248884e-3,
      -0.21026444172410488319e-3, 0.21743961811521264320e-3, -0.16431810653676389022e-3,
      0.84418223983852743293e-4, -0.26190838401581408670e-4, 0.36899182659531622704e-5};
  constexpr long double kG = 607.0L / 128.0L;
  // Long double keeps the phase of t^(z - 1/2) accurate when |Im z| is large.
  using LComplex = std::complex<long double>;
  const LComplex zm1 = LComplex(z.real(), z.imag()) - 1.0L;
  LComplex series(kCoeffs[0], 0.0L);
  for (std::size_t i = 1; i < kCoeffs.size(); ++i) {
    series += static_cast<long double>(kCoeffs[i]) / (zm1 + static_cast<long double>(i));
  }
  const LComplex t = zm1 + kG + 0.5L;
  // t^(zm1 + 1/2) e^(-t), folded into one exponential to delay overflow.
  const LComplex log_power = (zm1 + 0.5L) * std::log(t) - t;
  const LComplex g = std::sqrt(2.0L * std::numbers::pi_v<long double>) * std::exp(log_power) * series;
  return {static_cast<double>(g.real()), static_cast<double>(g.imag())};
}

}  // namespace detail

/// Complex Euler Gamma function. Throws PoleError within 1e-12 of a
/// non-positive integer.
inline Complex gamma(Complex z) {
  if (!detail::is_finite(z)) throw OutOfDomain("gamma: non-finite argument");
  if (detail::distance_to_nonpositive_integer(z) <= kPoleTolerance) {
    throw PoleError("gamma: pole at non-positive integer");
  }
  if (z.real() < 0.5) {
    // Reflection: Gamma(z) Gamma(1 - z) = pi / sin(pi z).
    return std::numbers::pi / (detail::sin_pi(z) * detail::gamma_right_half_plane(1.0 - z));
  }
  return detail::gamma_right_half_plane(z);
}

/// Rising factorial (x)_n = x (x+1) ... (x+n-1), with (x)_0 = 1.
inline Complex pochhammer(Complex x, std::size_t n) {
  Complex product(1.0, 0.0);
  for (std::size_t k = 0; k < n; ++k) product *= x + static_cast<double>(k);
  return product;
}

/// Parameter triple (nu, b, c). kappa = nu + (b+1)/2 is always derived.
class BesselParams {
 public:
  BesselParams(Complex nu, Complex b, Complex c) : nu_(nu), b_(b), c_(c) {
    if (!detail::is_finite(nu) || !detail::is_finite(b) || !detail::is_finite(c)) {
      throw OutOfDomain("BesselParams: non-finite parameter");
    }
    if (detail::distance_to_nonpositive_integer(kappa()) <= kPoleTolerance) {
      throw PoleError("BesselParams: kappa = nu + (b+1)/2 is a non-positive integer");
    }
  }

  Complex nu() const { return nu_; }
  Complex b() const { return b_; }
  Complex c() const { return c_; }
  Complex kappa() const { return nu_ + (b_ + 1.0) / 2.0; }

  /// Same (b, c), order shifted by an integer: kappa moves by the same amount.
  BesselParams shifted(int delta) const { return {nu_ + static_cast<double>(delta), b_, c_}; }

  /// Parameters realizing a prescribed kappa with the given b and c.
  static BesselParams from_kappa(Complex kappa, Complex b, Complex c) {
    return {kappa - (b + 1.0) / 2.0, b, c};
  }

 private:
  Complex nu_;
  Complex b_;
  Complex c_;
};

struct EvalResult {
  Complex value{};
  std::size_t terms_used = 0;
  double tail_bound = 0.0;
};

namespace detail {

inline void check_tolerance(double tol) {
  if (!(tol >= 1e-15) || !std::isfinite(tol)) {
    throw std::invalid_argument("tolerance must be a finite value >= 1e-15");
  }
}

// Sums the k-th derivative of phi term by term:
//   phi^(k)(z) = sum_{n>=k} (-c/4)^n / ((kappa)_n (n-k)!) z^(n-k).
inline EvalResult sum_phi_derivative(const BesselParams& params, Complex z, int order, double tol,
                                     std::size_t max_terms) {
  check_tolerance(tol);
  if (!is_finite(z)) throw OutOfDomain("phi: non-finite argument");
  const Complex kappa = params.kappa();
  const Complex step = -params.c() * z / 4.0;
  const auto k = static_cast<std::size_t>(order);

  // Leading term: (-c/4)^k / (kappa)_k.
  Complex term = std::pow(-params.c() / 4.0, order) / pochhammer(kappa, k);
  if (order == 0) term = Complex(1.0, 0.0);

  EvalResult out;
  Complex sum(0.0, 0.0);
  for (std::size_t j = 0;; ++j) {
    if (j >= max_terms) {
      throw MaxTermsExceeded("phi: series did not reach tolerance within " +
                             std::to_string(max_terms) + " terms");
    }
    sum += term;
    const std::size_t n = k + j;
    const double nd = static_cast<double>(n);
    const Complex ratio = step / ((kappa + nd) * static_cast<double>(n + 1 - k));
    const Complex next = term * ratio;
    const double rho = std::abs(ratio);
    if (next == Complex(0.0, 0.0)) {
      out.terms_used = j + 1;
      out.tail_bound = 0.0;
      break;
    }
    // Ratios are non-increasing once Re(kappa) + n >= 0.
    if (kappa.real() + nd >= 0.0 && rho < 0.5) {
      const double bound = std::abs(next) / (1.0 - rho);
      if (bound < tol) {
        out.terms_used = j + 1;
        out.tail_bound = bound;
        break;
      }
    }
    term = next;
  }
  out.value = sum;
  return out;
}

}  // namespace detail

/// phi_{nu,b,c}(z) with absolute truncation error bounded by tol.
inline EvalResult phi_eval(const BesselParams& params, Complex z, double tol = 1e-12,
                           std::size_t max_terms = kDefaultMaxTerms) {
  return detail::sum_phi_derivative(params, z, 0, tol, max_terms);
}

/// Derivative of phi of order 1, 2 or 3, summed from the differentiated series.
inline EvalResult phi_derivative(const BesselParams& params, Complex z, int order,
                                 double tol = 1e-12, std::size_t max_terms = kDefaultMaxTerms) {
  if (order < 1 || order > 3) throw std::invalid_argument("phi_derivative: order must be 1, 2 or 3");
  return detail::sum_phi_derivative(params, z, order, tol, max_terms);
}

namespace detail {

// z^nu with the branch cut along the ray at angle (pi + cut_angle).
inline Complex branch_power(Complex z, Complex nu, double cut_angle) {
  const Complex rotated = z * std::polar(1.0, -cut_angle);
  const bool integer_order =
      nu.imag() == 0.0 && nu.real() == std::round(nu.real());
  if (!integer_order && rotated.imag() == 0.0 && rotated.real() < 0.0) {
    throw BranchError("z lies on the branch cut of z^nu");
  }
  if (z == Complex(0.0, 0.0)) {
    if (nu == Complex(0.0, 0.0)) return {1.0, 0.0};
    if (nu.real() > 0.0) return {0.0, 0.0};
    throw OutOfDomain("z^nu undefined at z = 0 for Re(nu) <= 0, nu != 0");
  }
  const double arg = std::arg(rotated) + cut_angle;
  return std::exp(nu * Complex(std::log(std::abs(z)), arg));
}

}  // namespace detail

/// omega_{nu,b,c}(z) = z^nu phi(z^2) / (2^nu Gamma(kappa)). The branch of z^nu
/// is the principal one rotated by branch_cut_angle.
inline EvalResult omega_eval(const BesselParams& params, Complex z, double branch_cut_angle = 0.0,
                             double tol = 1e-12, std::size_t max_terms = kDefaultMaxTerms) {
  detail::check_tolerance(tol);
  const Complex nu = params.nu();
  const Complex power = detail::branch_power(z, nu, branch_cut_angle);
  const Complex scale = power / (std::pow(Complex(2.0, 0.0), nu) * gamma(params.kappa()));
  const double scale_abs = std::abs(scale);
  if (scale_abs == 0.0) return {Complex(0.0, 0.0), 1, 0.0};
  const double inner_tol = std::max(1e-15, scale_abs > 1.0 ? tol / scale_abs : tol);
  const EvalResult inner = phi_eval(params, z * z, inner_tol, max_terms);
  return {scale * inner.value, inner.terms_used, scale_abs * inner.tail_bound};
}

/// Named members of the family.
enum class NamedFunction {
  J,       // Bessel J_nu = omega_{nu,1,1}
  I,       // modified Bessel I_nu = omega_{nu,1,-1}
  j_sph,   // spherical j_nu = sqrt(pi)/2 omega_{nu,2,1}
  i_sph,   // modified spherical i_nu = sqrt(pi)/2 omega_{nu,2,-1}
  calJ,    // 2^nu Gamma(nu+1) z^(-nu/2) J_nu(sqrt z) = phi_{nu,1,1}
  calI,    // phi_{nu,1,-1}
  frakj,   // 2^(nu+1) Gamma(nu+3/2) z^(-nu/2) j_nu(sqrt z) / sqrt(pi) = phi_{nu,2,1}
  fraki,   // phi_{nu,2,-1}
};

inline NamedFunction parse_named_function(std::string_view name) {
  if (name == "J") return NamedFunction::J;
  if (name == "I") return NamedFunction::I;
  if (name == "j_sph") return NamedFunction::j_sph;
  if (name == "i_sph") return NamedFunction::i_sph;
  if (name == "calJ") return NamedFunction::calJ;
  if (name == "calI") return NamedFunction::calI;
  if (name == "frakj") return NamedFunction::frakj;
  if (name == "fraki") return NamedFunction::fraki;
  throw std::invalid_argument("unknown named function: " + std::string(name));
}

/// (b, c) pair underlying a named function.
inline BesselParams named_params(NamedFunction name, Complex nu) {
  switch (name) {
    case NamedFunction::J:
    case NamedFunction::calJ:
      return {nu, 1.0, 1.0};
    case NamedFunction::I:
    case NamedFunction::calI:
      return {nu, 1.0, -1.0};
    case NamedFunction::j_sph:
    case NamedFunction::frakj:
      return {nu, 2.0, 1.0};
    case NamedFunction::i_sph:
    case NamedFunction::fraki:
      return {nu, 2.0, -1.0};
  }
  throw std::invalid_argument("unknown named function");
}

inline EvalResult named_family(NamedFunction name, Complex nu, Complex z, double tol = 1e-12) {
  const BesselParams params = named_params(name, nu);
  switch (name) {
    case NamedFunction::J:
    case NamedFunction::I:
      return omega_eval(params, z, 0.0, tol);
    case NamedFunction::j_sph:
    case NamedFunction::i_sph: {
      const double factor = std::sqrt(std::numbers::pi) / 2.0;
      EvalResult r = omega_eval(params, z, 0.0, std::max(1e-15, tol / factor));
      r.value *= factor;
      r.tail_bound *= factor;
      return r;
    }
    default:
      return phi_eval(params, z, tol);
  }
}

}  // namespace gbessel
