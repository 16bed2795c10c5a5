#pragma once

// Hypothesis checkers for the sufficient conditions on (kappa, c) that place
// phi, vartheta = z phi and the B_kappa^c images in P_e, S*_e and K_e, with
// optional numerical confirmation of each conclusion, plus the trigonometric
// boundary functions whose extrema drive those conditions.

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gbessel/analytic.hpp"
#include "gbessel/disk_checks.hpp"
#include "gbessel/golden_section.hpp"
#include "gbessel/power_series.hpp"
#include "gbessel/special_fn.hpp"

namespace gbessel {

namespace constants {

inline double e() { return std::numbers::e; }

/// (e^2 + e - 1) / (e^2 (e - 1)) ~= 0.717312.
inline double convex_rhs() {
  const double e = constants::e();
  return (e * e + e - 1.0) / (e * e * (e - 1.0));
}

/// 1/e^2 + 3/(4(e - 1)), the |c| = 1, kappa = nu + 1 specialization.
inline double bessel_corollary_rhs() {
  const double e = constants::e();
  return 1.0 / (e * e) + 3.0 / (4.0 * (e - 1.0));
}

/// 2/e^2 + 3/(2(e - 1)), the |c| = 1, kappa = nu + 3/2 specialization.
inline double spherical_corollary_rhs() {
  const double e = constants::e();
  return 2.0 / (e * e) + 3.0 / (2.0 * (e - 1.0));
}

/// 1 - 1/e.
inline double small_circle_radius() { return 1.0 - 1.0 / e(); }

/// 1/e - 1/e^2 + 1.
inline double product_threshold() {
  const double e = constants::e();
  return 1.0 / e - 1.0 / (e * e) + 1.0;
}

/// Smallest real order nu for which the Bessel instance of the omega theorem
/// applies: kappa = nu + 1 >= 5/3 + 3/4, i.e. nu >= 17/12.
inline double omega_bessel_min_order() { return 5.0 / 3.0 + 3.0 / 4.0 - 1.0; }

}  // namespace constants

// Non-strict inequalities admit equality; the relative slack absorbs rounding
// in parameters such as nu = 17/12.
inline constexpr double kHypothesisSlack = 1e-12;

enum class TheoremId {
  ThmPe,
  ThmKe,
  ThmSe,
  CorBessel_a,
  CorBessel_b,
  CorSpherical_a,
  CorSpherical_b,
  CorLibera,
  ThmOmegaSe,
  ThmBkcChain,
  CorBkcBessel,
  Ex_linear,
  Ex_product,
};

inline std::string_view to_string(TheoremId id) {
  switch (id) {
    case TheoremId::ThmPe: return "ThmPe";
    case TheoremId::ThmKe: return "ThmKe";
    case TheoremId::ThmSe: return "ThmSe";
    case TheoremId::CorBessel_a: return "CorBessel_a";
    case TheoremId::CorBessel_b: return "CorBessel_b";
    case TheoremId::CorSpherical_a: return "CorSpherical_a";
    case TheoremId::CorSpherical_b: return "CorSpherical_b";
    case TheoremId::CorLibera: return "CorLibera";
    case TheoremId::ThmOmegaSe: return "ThmOmegaSe";
    case TheoremId::ThmBkcChain: return "ThmBkcChain";
    case TheoremId::CorBkcBessel: return "CorBkcBessel";
    case TheoremId::Ex_linear: return "Ex_linear";
    case TheoremId::Ex_product: return "Ex_product";
  }
  return "?";
}

enum class Relation { le, ge, ne, holds };

inline std::string_view to_string(Relation r) {
  switch (r) {
    case Relation::le: return "<=";
    case Relation::ge: return ">=";
    case Relation::ne: return "!=";
    case Relation::holds: return "holds";
  }
  return "?";
}

struct Hypothesis {
  std::string name;
  Relation relation = Relation::le;
  double lhs = 0.0;
  double rhs = 0.0;
  bool holds = false;

  /// Positive when the inequality holds with room to spare.
  double slack() const {
    switch (relation) {
      case Relation::le: return rhs - lhs;
      case Relation::ge: return lhs - rhs;
      case Relation::ne: return std::abs(lhs - rhs);
      case Relation::holds: return holds ? 1.0 : -1.0;
    }
    return 0.0;
  }

  static Hypothesis le(std::string name, double lhs, double rhs) {
    const bool ok = lhs <= rhs + kHypothesisSlack * std::max(1.0, std::abs(rhs));
    return {std::move(name), Relation::le, lhs, rhs, ok};
  }
  static Hypothesis ge(std::string name, double lhs, double rhs) {
    const bool ok = lhs + kHypothesisSlack * std::max(1.0, std::abs(rhs)) >= rhs;
    return {std::move(name), Relation::ge, lhs, rhs, ok};
  }
  static Hypothesis nonzero(std::string name, double magnitude) {
    return {std::move(name), Relation::ne, magnitude, 0.0, magnitude != 0.0};
  }
  /// A premise verified numerically; lhs/rhs carry the sup and its threshold.
  static Hypothesis numeric(std::string name, const MembershipReport& r) {
    return {std::move(name), Relation::holds, r.sup_value, r.threshold, r.passed()};
  }
};

struct LabeledReport {
  std::string label;
  MembershipReport report;
};

struct TheoremReport {
  TheoremId theorem_id = TheoremId::ThmPe;
  std::optional<BesselParams> params;
  std::vector<Hypothesis> hypotheses;
  bool applicable = false;
  std::vector<LabeledReport> conclusion_checks;

  /// Applicable and every requested conclusion check passed.
  bool confirmed() const {
    if (!applicable) return false;
    for (const auto& c : conclusion_checks) {
      if (!c.report.passed()) return false;
    }
    return true;
  }

  /// Some conclusion check failed although the hypotheses hold.
  bool counterexample() const {
    if (!applicable) return false;
    for (const auto& c : conclusion_checks) {
      if (c.report.verdict == Verdict::fail) return true;
    }
    return false;
  }
};

struct CheckOptions {
  bool verify = false;
  DiskGrid grid{};
  double guard = kDefaultGuard;
  std::size_t series_order = kDefaultSeriesOrder;
};

namespace detail {

inline bool all_hold(const std::vector<Hypothesis>& hs) {
  for (const auto& h : hs) {
    if (!h.holds) return false;
  }
  return true;
}

inline TheoremReport make_report(TheoremId id, std::optional<BesselParams> params,
                                 std::vector<Hypothesis> hs) {
  TheoremReport r;
  r.theorem_id = id;
  r.params = std::move(params);
  r.hypotheses = std::move(hs);
  r.applicable = all_hold(r.hypotheses);
  return r;
}

inline std::vector<Hypothesis> ke_hypotheses(const BesselParams& p) {
  const double abs_c = std::abs(p.c());
  const double e = constants::e();
  return {
      Hypothesis::nonzero("c != 0", abs_c),
      Hypothesis::ge("Re(kappa) >= |c|/4", p.kappa().real(), abs_c / 4.0),
      Hypothesis::le("|kappa - 2| + |c|/(4(e-1)) <= (e^2+e-1)/(e^2(e-1))",
                     std::abs(p.kappa() - 2.0) + abs_c / (4.0 * (e - 1.0)), constants::convex_rhs()),
  };
}

inline std::vector<Hypothesis> se_hypotheses(const BesselParams& p) {
  const double abs_c = std::abs(p.c());
  const double e = constants::e();
  return {
      Hypothesis::nonzero("c != 0", abs_c),
      Hypothesis::ge("Re(kappa) >= |c|/4 + 1", p.kappa().real(), abs_c / 4.0 + 1.0),
      Hypothesis::le("|kappa - 3| + |c|/(4(e-1)) <= (e^2+e-1)/(e^2(e-1))",
                     std::abs(p.kappa() - 3.0) + abs_c / (4.0 * (e - 1.0)), constants::convex_rhs()),
  };
}

}  // namespace detail

/// -4 kappa (phi - 1) / c, the normalized member of the class built from phi.
inline PowerSeries normalized_phi_series(const BesselParams& p, std::size_t order = kDefaultSeriesOrder) {
  if (p.c() == Complex(0.0, 0.0)) throw NotNormalized("normalized phi requires c != 0");
  PowerSeries phi = series_of_phi(p, order);
  std::vector<Complex> a(phi.coeffs().begin(), phi.coeffs().end());
  a[0] = 0.0;
  const Complex scale = -4.0 * p.kappa() / p.c();
  for (std::size_t n = 1; n < a.size(); ++n) a[n] *= scale;
  a[1] = 1.0;
  return PowerSeries(std::move(a));
}

/// phi in P_e when Re(kappa) >= |c|/4 + 1.
inline TheoremReport hyp_Pe(const BesselParams& p, const CheckOptions& opt = {}) {
  auto r = detail::make_report(
      TheoremId::ThmPe, p,
      {Hypothesis::ge("Re(kappa) >= |c|/4 + 1", p.kappa().real(), std::abs(p.c()) / 4.0 + 1.0)});
  if (opt.verify && r.applicable) {
    const AnalyticFn phi = series_function(series_of_phi(p, opt.series_order));
    r.conclusion_checks.push_back(
        {"phi in Pe",
         check_subordinate_exp([&phi](Complex z) { return phi(z).value; }, opt.grid, opt.guard)});
  }
  return r;
}

/// -4 kappa (phi - 1)/c in K_e.
inline TheoremReport hyp_Ke(const BesselParams& p, const CheckOptions& opt = {}) {
  auto r = detail::make_report(TheoremId::ThmKe, p, detail::ke_hypotheses(p));
  if (opt.verify && r.applicable) {
    r.conclusion_checks.push_back(
        {"-4 kappa (phi - 1)/c in Ke",
         check_class(normalized_phi_series(p, opt.series_order), ClassId::Ke, opt.grid, opt.guard)});
  }
  return r;
}

/// vartheta = z phi in S*_e.
inline TheoremReport hyp_Se(const BesselParams& p, const CheckOptions& opt = {}) {
  auto r = detail::make_report(TheoremId::ThmSe, p, detail::se_hypotheses(p));
  if (opt.verify && r.applicable) {
    r.conclusion_checks.push_back(
        {"vartheta in Se",
         check_class(series_of_vartheta(p, opt.series_order), ClassId::Se, opt.grid, opt.guard)});
  }
  return r;
}

enum class BesselFamily { bessel, spherical };
enum class CorollaryPart { a, b };

/// The |c| = 1 specializations: part (a) convexity of the normalized phi,
/// part (b) starlikeness of z phi, each for c = 1 and c = -1.
inline TheoremReport hyp_corollaries(Complex nu, BesselFamily family, CorollaryPart part,
                                     const CheckOptions& opt = {}) {
  const bool bessel = family == BesselFamily::bessel;
  const bool convex = part == CorollaryPart::a;
  const double b = bessel ? 1.0 : 2.0;
  std::vector<Hypothesis> hs;
  if (bessel) {
    const double re_min = convex ? -0.75 : 0.25;
    const Complex center = convex ? 1.0 : 2.0;
    hs.push_back(Hypothesis::ge(convex ? "Re(nu) >= -0.75" : "Re(nu) >= 0.25", nu.real(), re_min));
    hs.push_back(Hypothesis::le(convex ? "|nu - 1| <= 1/e^2 + 3/(4(e-1))" : "|nu - 2| <= 1/e^2 + 3/(4(e-1))",
                                std::abs(nu - center), constants::bessel_corollary_rhs()));
  } else {
    const double re_min = convex ? -1.25 : -0.25;
    const Complex center = convex ? 1.0 : 3.0;
    hs.push_back(Hypothesis::ge(convex ? "Re(nu) >= -1.25" : "Re(nu) >= -0.25", nu.real(), re_min));
    hs.push_back(Hypothesis::le(convex ? "|2nu - 1| <= 2/e^2 + 3/(2(e-1))" : "|2nu - 3| <= 2/e^2 + 3/(2(e-1))",
                                std::abs(2.0 * nu - center), constants::spherical_corollary_rhs()));
  }
  const TheoremId id = bessel ? (convex ? TheoremId::CorBessel_a : TheoremId::CorBessel_b)
                              : (convex ? TheoremId::CorSpherical_a : TheoremId::CorSpherical_b);
  std::optional<BesselParams> params;
  try {
    params = BesselParams(nu, b, 1.0);
  } catch (const PoleError&) {
    hs.push_back({"kappa not a non-positive integer", Relation::holds, 0.0, 0.0, false});
  }
  auto r = detail::make_report(id, params, std::move(hs));
  if (opt.verify && r.applicable) {
    for (double c : {1.0, -1.0}) {
      const BesselParams p(nu, b, c);
      const std::string fn = bessel ? (c > 0 ? "calJ" : "calI") : (c > 0 ? "frakj" : "fraki");
      if (convex) {
        r.conclusion_checks.push_back(
            {"normalized " + fn + " in Ke",
             check_class(normalized_phi_series(p, opt.series_order), ClassId::Ke, opt.grid, opt.guard)});
      } else {
        r.conclusion_checks.push_back(
            {"z " + fn + " in Se",
             check_class(series_of_vartheta(p, opt.series_order), ClassId::Se, opt.grid, opt.guard)});
      }
    }
  }
  return r;
}

enum class LiberaTarget { convex, starlike };

/// Libera images: L[-4 kappa (phi - 1)/c] in K_e under the convexity
/// hypotheses, L[vartheta] in S*_e under the starlikeness hypotheses.
inline TheoremReport hyp_libera(const BesselParams& p, LiberaTarget target, const CheckOptions& opt = {}) {
  const bool convex = target == LiberaTarget::convex;
  auto r = detail::make_report(TheoremId::CorLibera, p,
                               convex ? detail::ke_hypotheses(p) : detail::se_hypotheses(p));
  if (opt.verify && r.applicable) {
    if (convex) {
      r.conclusion_checks.push_back(
          {"L[-4 kappa (phi - 1)/c] in Ke",
           check_class(libera(normalized_phi_series(p, opt.series_order)), ClassId::Ke, opt.grid, opt.guard)});
    } else {
      r.conclusion_checks.push_back(
          {"L[vartheta] in Se",
           check_class(libera(series_of_vartheta(p, opt.series_order)), ClassId::Se, opt.grid, opt.guard)});
    }
  }
  return r;
}

/// h(z) = z phi(z^2) = 2^nu Gamma(kappa) z^(1-nu) omega(z), as a series.
inline PowerSeries omega_normalized_series(const BesselParams& p, std::size_t phi_order = kDefaultSeriesOrder) {
  const PowerSeries phi = series_of_phi(p, phi_order);
  std::vector<Complex> h(2 * phi_order + 2, Complex(0.0, 0.0));
  for (std::size_t n = 0; n <= phi_order; ++n) h[2 * n + 1] = phi[n];
  return PowerSeries(std::move(h));
}

/// 2^nu Gamma(kappa) z^(1-nu) omega in S*_e for real kappa >= max{|c|/4 + 1, 5|c|/3 + 3/4}.
/// The conclusion also confirms the intermediate bound |z phi'/phi| < 1/4.
inline TheoremReport hyp_omega_Se(const BesselParams& p, const CheckOptions& opt = {}) {
  const double abs_c = std::abs(p.c());
  const Complex kappa = p.kappa();
  auto r = detail::make_report(
      TheoremId::ThmOmegaSe, p,
      {
          {"kappa real", Relation::holds, kappa.imag(), 0.0, kappa.imag() == 0.0},
          Hypothesis::ge("kappa >= max{|c|/4 + 1, 5|c|/3 + 3/4}", kappa.real(),
                         std::max(abs_c / 4.0 + 1.0, 5.0 * abs_c / 3.0 + 0.75)),
      });
  if (opt.verify && r.applicable) {
    r.conclusion_checks.push_back(
        {"z phi(z^2) in Se",
         check_class(omega_normalized_series(p, opt.series_order), ClassId::Se, opt.grid, opt.guard)});
    const AnalyticFn phi = series_function(series_of_phi(p, opt.series_order));
    r.conclusion_checks.push_back({"|z phi'/phi| < 1/4", check_quarter_bound(
                                                             [&phi](Complex z) {
                                                               const Jet j = phi(z);
                                                               if (std::abs(j.value) <= kDenominatorFloor) {
                                                                 throw ZeroDenominator("phi(z) = 0");
                                                               }
                                                               return z * j.d1 / j.value;
                                                             },
                                                             opt.grid, opt.guard)});
  }
  return r;
}

/// Re kappa >= max{2, |c|/4 + (Im kappa)^2/6 + 3/2}.
///   part a: f convex and B_{kappa-1} f in S*_e  =>  B_kappa f in S*_e
///   part b: z f' convex and B_{kappa-1} f in K_e  =>  B_kappa f in K_e
/// Convexity and the premise are verified numerically and count as hypotheses.
/// `f_exact`, when given, is used for the convexity test in place of the
/// truncated series (whose partial sums misbehave near |z| = 1 for slowly
/// decaying coefficients such as those of z/(1-z)).
inline TheoremReport hyp_bkc_chain(const BesselParams& p, const PowerSeries& f, CorollaryPart part,
                                   const CheckOptions& opt = {},
                                   const std::optional<AnalyticFn>& f_exact = std::nullopt) {
  require_normalized(f, "hyp_bkc_chain");
  const bool starlike = part == CorollaryPart::a;
  const ClassId target = starlike ? ClassId::Se : ClassId::Ke;
  const Complex kappa = p.kappa();
  std::vector<Hypothesis> hs;
  hs.push_back(Hypothesis::ge("Re(kappa) >= max{2, |c|/4 + (Im kappa)^2/6 + 3/2}", kappa.real(),
                              std::max(2.0, std::abs(p.c()) / 4.0 + kappa.imag() * kappa.imag() / 6.0 + 1.5)));

  const AnalyticFn base = f_exact ? *f_exact : series_function(f);
  const AnalyticFn convex_candidate = starlike ? base : alexander_image(base);
  auto re_convex = [&convex_candidate](Complex z) -> Sample {
    const Complex q = convex_quantity(convex_candidate, z);
    // Threshold 0 on -Re q: passes when Re(1 + z g''/g') > 0 everywhere.
    return {-q.real()};
  };
  MembershipReport convexity = sweep_against_threshold(re_convex, opt.grid, 0.0, ClassId::custom, 0.0);
  // The maximum principle does not order suprema of -Re q across circles in
  // the direction required, so only the sign of the sampled values matters.
  if (convexity.verdict == Verdict::inconclusive && convexity.sup_value < 0.0) convexity.verdict = Verdict::pass;
  hs.push_back(Hypothesis::numeric(starlike ? "f convex" : "z f' convex", convexity));

  try {
    const BesselParams previous = p.shifted(-1);
    const MembershipReport premise =
        check_class(b_operator(previous, f.truncated(opt.series_order)), target, opt.grid, opt.guard);
    hs.push_back(Hypothesis::numeric(starlike ? "B_{kappa-1} f in Se" : "B_{kappa-1} f in Ke", premise));
  } catch (const MathError&) {
    hs.push_back({starlike ? "B_{kappa-1} f in Se" : "B_{kappa-1} f in Ke", Relation::holds, 0.0, 0.0, false});
  }

  auto r = detail::make_report(TheoremId::ThmBkcChain, p, std::move(hs));
  if (opt.verify && r.applicable) {
    r.conclusion_checks.push_back(
        {starlike ? "B_kappa f in Se" : "B_kappa f in Ke",
         check_class(b_operator(p, f.truncated(opt.series_order)), target, opt.grid, opt.guard)});
  }
  return r;
}

/// Bessel case of the chain with f = z/(1 - z): for real nu >= 1,
/// z calJ_nu in S*_e implies z calJ_{nu+1} in S*_e (c = 1; c = -1 for calI).
inline TheoremReport hyp_bkc_bessel(double nu, double c, const CheckOptions& opt = {}) {
  const BesselParams next(nu + 1.0, 1.0, c);
  TheoremReport r = hyp_bkc_chain(next, PowerSeries::convex_kernel(opt.series_order), CorollaryPart::a, opt,
                                  convex_kernel_function());
  r.theorem_id = TheoremId::CorBkcBessel;
  r.hypotheses.insert(r.hypotheses.begin(), Hypothesis::ge("nu >= 1", nu, 1.0));
  r.applicable = detail::all_hold(r.hypotheses);
  if (!r.applicable) r.conclusion_checks.clear();
  return r;
}

enum class ExtremalKind { g1, g2, ell1, ell2 };

inline std::string_view to_string(ExtremalKind k) {
  switch (k) {
    case ExtremalKind::g1: return "g1";
    case ExtremalKind::g2: return "g2";
    case ExtremalKind::ell1: return "ell1";
    case ExtremalKind::ell2: return "ell2";
  }
  return "?";
}

struct ExtremalCurve {
  ExtremalKind kind = ExtremalKind::g1;
  double m = 1.0;
  double alpha = 1.0;
  bool is_minimum = true;
  std::vector<std::pair<double, double>> samples;
  double theta_star = 0.0;
  double extremal_value = 0.0;
  double claimed_theta = 0.0;
  double claimed_value = 0.0;

  /// Circular distance between the refined and the claimed location.
  double location_error() const {
    const double d = std::fmod(std::abs(theta_star - claimed_theta), 2.0 * std::numbers::pi);
    return std::min(d, 2.0 * std::numbers::pi - d);
  }
  double value_error() const { return std::abs(extremal_value - claimed_value); }
};

/// Boundary functions of theta from the admissibility arguments:
///   g1 = ell2 = |m e^{i t} e^{e^{i t}} + e^{2 e^{i t}} - 1|^2
///   g2        = |e^{e^{i t}} - 1|^2
///   ell1      = |e^{e^{i t}} + alpha m e^{i t} - 1|^2
inline double extremal_function(ExtremalKind kind, double m, double alpha, double t) {
  const double ec = std::exp(std::cos(t));
  const double s = std::sin(t);
  switch (kind) {
    case ExtremalKind::g1:
    case ExtremalKind::ell2: {
      const double re = m * ec * std::cos(t + s) + ec * ec * std::cos(2.0 * s) - 1.0;
      const double im = m * ec * std::sin(t + s) + ec * ec * std::sin(2.0 * s);
      return re * re + im * im;
    }
    case ExtremalKind::g2:
      return 1.0 + ec * ec - 2.0 * ec * std::cos(s);
    case ExtremalKind::ell1: {
      const double re = ec * std::cos(s) + alpha * m * std::cos(t) - 1.0;
      const double im = ec * std::sin(s) + alpha * m * std::sin(t);
      return re * re + im * im;
    }
  }
  return 0.0;
}

/// Samples the curve on 2048 angles of [0, 2 pi), refines the extremum with
/// golden-section search and records the claimed location and value:
/// g1, ell2 minimal at pi with value (-m/e + 1/e^2 - 1)^2; g2 maximal at 0 with
/// value (e - 1)^2; ell1 minimal at pi with value (alpha m - 1/e + 1)^2.
inline ExtremalCurve extremal_curve(ExtremalKind kind, double m, double alpha = 1.0,
                                    std::size_t points = 2048) {
  if (!(m >= 1.0)) throw std::invalid_argument("extremal_curve: m must be >= 1");
  if (points < 8) throw std::invalid_argument("extremal_curve: need at least 8 samples");
  const double e = constants::e();
  ExtremalCurve out;
  out.kind = kind;
  out.m = m;
  out.alpha = alpha;
  out.is_minimum = kind != ExtremalKind::g2;
  switch (kind) {
    case ExtremalKind::g1:
    case ExtremalKind::ell2:
      out.claimed_theta = std::numbers::pi;
      out.claimed_value = std::pow(-m / e + 1.0 / (e * e) - 1.0, 2);
      break;
    case ExtremalKind::g2:
      out.claimed_theta = 0.0;
      out.claimed_value = (e - 1.0) * (e - 1.0);
      break;
    case ExtremalKind::ell1:
      out.claimed_theta = std::numbers::pi;
      out.claimed_value = std::pow(alpha * m - 1.0 / e + 1.0, 2);
      break;
  }
  auto f = [&](double t) { return extremal_function(kind, m, alpha, t); };
  const double h = 2.0 * std::numbers::pi / static_cast<double>(points);
  out.samples.reserve(points);
  std::size_t best = 0;
  for (std::size_t k = 0; k < points; ++k) {
    const double t = h * static_cast<double>(k);
    out.samples.emplace_back(t, f(t));
    const bool better = out.is_minimum ? out.samples[k].second < out.samples[best].second
                                       : out.samples[k].second > out.samples[best].second;
    if (better) best = k;
  }
  const double t0 = out.samples[best].first;
  const ScalarExtremum refined = out.is_minimum ? golden_section_minimize(f, t0 - h, t0 + h, 1e-12)
                                                : golden_section_maximize(f, t0 - h, t0 + h, 1e-12);
  // Keep the better of the sampled and refined extremum.
  const bool refined_better = out.is_minimum ? refined.value <= out.samples[best].second
                                             : refined.value >= out.samples[best].second;
  out.theta_star = refined_better ? refined.x : t0;
  out.extremal_value = refined_better ? refined.value : out.samples[best].second;
  out.theta_star = std::fmod(out.theta_star + 2.0 * std::numbers::pi, 2.0 * std::numbers::pi);
  return out;
}

struct ExampleReport {
  MembershipReport premise;
  std::optional<MembershipReport> conclusion;

  /// A satisfied premise must come with a passing S*_e check.
  bool consistent() const { return !premise.passed() || (conclusion && conclusion->passed()); }
};

namespace detail {

struct BkcQuantities {
  Complex starlike;
  Complex convex;
};

inline BkcQuantities bkc_quantities(const AnalyticFn& g, Complex z) {
  return {starlike_quantity(g, z), convex_quantity(g, z)};
}

}  // namespace detail

/// |(1 - alpha) z g'/g + alpha (1 + z g''/g') - 1| < alpha - 1/e with g = B_kappa^c f.
inline ExampleReport example_linear_check(const BesselParams& p, const PowerSeries& f, double alpha,
                                          const DiskGrid& grid = {}, double guard = kDefaultGuard) {
  if (!(alpha > 1.0 / constants::e())) throw std::invalid_argument("example_linear_check: alpha must exceed 1/e");
  const PowerSeries g_series = b_operator(p, f);
  const AnalyticFn g = series_function(g_series);
  auto metric = [&g, alpha](Complex z) -> Sample {
    const auto q = detail::bkc_quantities(g, z);
    return {std::abs((1.0 - alpha) * q.starlike + alpha * q.convex - 1.0)};
  };
  ExampleReport out{sweep_against_threshold(metric, grid, alpha - 1.0 / constants::e(), ClassId::custom, guard),
                    std::nullopt};
  if (out.premise.passed()) out.conclusion = check_class(g, ClassId::Se, grid, guard);
  return out;
}

/// |z g'/g (1 + z g''/g') - 1| < 1/e - 1/e^2 + 1 with g = B_kappa^c f.
inline ExampleReport example_product_check(const BesselParams& p, const PowerSeries& f,
                                           const DiskGrid& grid = {}, double guard = kDefaultGuard) {
  const PowerSeries g_series = b_operator(p, f);
  const AnalyticFn g = series_function(g_series);
  auto metric = [&g](Complex z) -> Sample {
    const auto q = detail::bkc_quantities(g, z);
    return {std::abs(q.starlike * q.convex - 1.0)};
  };
  ExampleReport out{sweep_against_threshold(metric, grid, constants::product_threshold(), ClassId::custom, guard),
                    std::nullopt};
  if (out.premise.passed()) out.conclusion = check_class(g, ClassId::Se, grid, guard);
  return out;
}

}  // namespace gbessel
