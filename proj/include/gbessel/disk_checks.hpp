#pragma once

// Membership checks for P_e, S*_e and K_e by dense sampling of circles in the
// unit disk. All tested quantities are analytic, so suprema over a circle grow
// with the radius and the largest circle controls the disk it bounds. This is
// numerical verification at sampling precision, not a proof.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <future>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gbessel/analytic.hpp"
#include "gbessel/errors.hpp"
#include "gbessel/golden_section.hpp"

namespace gbessel {

inline constexpr double kDefaultGuard = 1e-6;
inline constexpr double kMonotoneSlack = 1e-9;
inline constexpr double kDenominatorFloor = 1e-14;

class DiskGrid {
 public:
  DiskGrid() : DiskGrid({0.5, 0.9, 0.99, 0.999}, 4096) {}

  DiskGrid(std::vector<double> radii, std::size_t angles_per_circle)
      : radii_(std::move(radii)), angles_(angles_per_circle) {
    if (radii_.empty()) throw std::invalid_argument("DiskGrid: no radii");
    if (angles_ == 0) throw std::invalid_argument("DiskGrid: angles_per_circle must be positive");
    for (std::size_t i = 0; i < radii_.size(); ++i) {
      if (!(radii_[i] > 0.0 && radii_[i] < 1.0)) {
        throw std::invalid_argument("DiskGrid: radii must lie in (0, 1)");
      }
      if (i > 0 && !(radii_[i] > radii_[i - 1])) {
        throw std::invalid_argument("DiskGrid: radii must be strictly ascending");
      }
    }
  }

  const std::vector<double>& radii() const { return radii_; }
  std::size_t angles_per_circle() const { return angles_; }
  double max_radius() const { return radii_.back(); }
  double angle(std::size_t k) const {
    return 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(angles_);
  }

 private:
  std::vector<double> radii_;
  std::size_t angles_;
};

enum class ClassId { Pe, Se, Ke, bound_quarter, custom };
enum class Verdict { pass, fail, inconclusive };

inline std::string_view to_string(ClassId id) {
  switch (id) {
    case ClassId::Pe: return "Pe";
    case ClassId::Se: return "Se";
    case ClassId::Ke: return "Ke";
    case ClassId::bound_quarter: return "bound_quarter";
    case ClassId::custom: return "custom";
  }
  return "?";
}

inline std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "?";
}

struct MembershipReport {
  ClassId class_id = ClassId::custom;
  Verdict verdict = Verdict::inconclusive;
  double sup_value = 0.0;
  Complex witness{};
  double threshold = 1.0;
  double margin = 0.0;
  std::vector<double> circle_sups;
  bool monotone = true;
  // Empty unless the sweep hit a hard violation (zero denominator, Re w <= 0).
  std::string reason;
  DiskGrid grid;

  bool passed() const { return verdict == Verdict::pass; }
};

/// One sample of a swept quantity. A violation fails the check outright.
struct Sample {
  double value = 0.0;
  bool violation = false;
  const char* reason = nullptr;
};

namespace detail {

struct CircleSweep {
  double sup = -1.0;
  double theta = 0.0;
  bool violation = false;
  std::string reason;
};

template <class Metric>
Sample guarded_sample(const Metric& metric, Complex z) {
  try {
    return metric(z);
  } catch (const ZeroDenominator&) {
    return {std::numeric_limits<double>::infinity(), true, "zero_denominator"};
  }
}

template <class Metric>
CircleSweep sweep_circle(const Metric& metric, const DiskGrid& grid, double r, bool refine) {
  CircleSweep out;
  for (std::size_t k = 0; k < grid.angles_per_circle(); ++k) {
    const double theta = grid.angle(k);
    const Sample s = guarded_sample(metric, std::polar(r, theta));
    if (s.violation) {
      out.sup = std::numeric_limits<double>::infinity();
      out.theta = theta;
      out.violation = true;
      out.reason = s.reason ? s.reason : "violation";
      return out;
    }
    if (s.value > out.sup) {
      out.sup = s.value;
      out.theta = theta;
    }
  }
  if (refine) {
    const double h = 2.0 * std::numbers::pi / static_cast<double>(grid.angles_per_circle());
    double best_theta = out.theta;
    double best = out.sup;
    bool hit_violation = false;
    const char* violation_reason = nullptr;
    auto f = [&](double theta) {
      const Sample s = guarded_sample(metric, std::polar(r, theta));
      if (s.violation) {
        hit_violation = true;
        violation_reason = s.reason;
        best_theta = theta;
        return std::numeric_limits<double>::infinity();
      }
      if (s.value > best) {
        best = s.value;
        best_theta = theta;
      }
      return s.value;
    };
    golden_section_maximize(f, out.theta - h, out.theta + h, 1e-10);
    if (hit_violation) {
      out.sup = std::numeric_limits<double>::infinity();
      out.violation = true;
      out.reason = violation_reason ? violation_reason : "violation";
    } else {
      out.sup = best;
    }
    out.theta = std::fmod(best_theta + 2.0 * std::numbers::pi, 2.0 * std::numbers::pi);
  }
  return out;
}

}  // namespace detail

/// Sweeps metric over every circle of the grid (circles in parallel) and
/// classifies sup against `threshold`:
///   fail          some sample >= threshold, or a hard violation;
///   pass          sup < threshold - guard and the circle suprema grow with r;
///   inconclusive  otherwise.
template <class Metric>
MembershipReport sweep_against_threshold(const Metric& metric, const DiskGrid& grid,
                                         double threshold, ClassId class_id,
                                         double guard = kDefaultGuard, bool refine = true) {
  std::vector<std::future<detail::CircleSweep>> jobs;
  jobs.reserve(grid.radii().size());
  for (double r : grid.radii()) {
    jobs.push_back(std::async(std::launch::async, [&metric, &grid, r, refine] {
      return detail::sweep_circle(metric, grid, r, refine);
    }));
  }
  MembershipReport report;
  report.class_id = class_id;
  report.threshold = threshold;
  report.grid = grid;
  report.sup_value = 0.0;
  bool violation = false;
  bool first = true;
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    detail::CircleSweep c = jobs[i].get();
    report.circle_sups.push_back(c.sup);
    if (first || c.sup > report.sup_value) {
      report.sup_value = c.sup;
      report.witness = std::polar(grid.radii()[i], c.theta);
      first = false;
    }
    if (c.violation && !violation) {
      violation = true;
      report.reason = c.reason;
      report.witness = std::polar(grid.radii()[i], c.theta);
    }
  }
  for (std::size_t i = 1; i < report.circle_sups.size(); ++i) {
    if (report.circle_sups[i - 1] > report.circle_sups[i] + kMonotoneSlack) report.monotone = false;
  }
  report.margin = threshold - report.sup_value;
  const double outer = report.circle_sups.back();
  if (violation || report.sup_value >= threshold) {
    report.verdict = Verdict::fail;
  } else if (outer < threshold - guard && report.monotone) {
    report.verdict = Verdict::pass;
  } else {
    report.verdict = Verdict::inconclusive;
  }
  return report;
}

/// z f'(z) / f(z), with the normalized limit 1 at the origin.
inline Complex starlike_quantity(const AnalyticFn& f, Complex z) {
  if (z == Complex(0.0, 0.0)) return {1.0, 0.0};
  const Jet j = f(z);
  if (std::abs(j.value) <= kDenominatorFloor) throw ZeroDenominator("starlike_quantity: f(z) = 0");
  return z * j.d1 / j.value;
}

/// 1 + z f''(z) / f'(z).
inline Complex convex_quantity(const AnalyticFn& f, Complex z) {
  if (z == Complex(0.0, 0.0)) return {1.0, 0.0};
  const Jet j = f(z);
  if (std::abs(j.d1) <= kDenominatorFloor) throw ZeroDenominator("convex_quantity: f'(z) = 0");
  return 1.0 + z * j.d2 / j.d1;
}

/// Tests w < e^z via sup |Log w| < 1. A zero of w or a sample with Re w <= 0
/// rules out subordination to e^z and fails immediately.
inline MembershipReport check_subordinate_exp(const ComplexFn& w, const DiskGrid& grid = {},
                                              double guard = kDefaultGuard,
                                              ClassId class_id = ClassId::Pe) {
  auto metric = [&w](Complex z) -> Sample {
    const Complex v = w(z);
    if (!(v.real() > 0.0)) {
      return {v == Complex(0.0, 0.0) ? std::numeric_limits<double>::infinity() : std::abs(std::log(v)),
              true, "re_w_nonpositive"};
    }
    return {std::abs(std::log(v))};
  };
  return sweep_against_threshold(metric, grid, 1.0, class_id, guard);
}

inline void require_normalized(const AnalyticFn& f, const char* where) {
  const Jet origin = f(Complex(0.0, 0.0));
  if (std::abs(origin.value) > 1e-12 || std::abs(origin.d1 - 1.0) > 1e-12) {
    throw NotNormalized(std::string(where) + ": f(0) = 0 and f'(0) = 1 required");
  }
}

/// S*_e via z f'/f in P_e, K_e via 1 + z f''/f' in P_e.
inline MembershipReport check_class(const AnalyticFn& f, ClassId class_id, const DiskGrid& grid = {},
                                    double guard = kDefaultGuard) {
  require_normalized(f, "check_class");
  if (class_id == ClassId::Se) {
    return check_subordinate_exp([&f](Complex z) { return starlike_quantity(f, z); }, grid, guard,
                                 ClassId::Se);
  }
  if (class_id == ClassId::Ke) {
    return check_subordinate_exp([&f](Complex z) { return convex_quantity(f, z); }, grid, guard,
                                 ClassId::Ke);
  }
  throw std::invalid_argument("check_class: class must be Se or Ke");
}

inline MembershipReport check_class(const PowerSeries& f, ClassId class_id, const DiskGrid& grid = {},
                                    double guard = kDefaultGuard) {
  require_normalized(f, "check_class");
  return check_class(series_function(f), class_id, grid, guard);
}

/// sup |p| < 1/4 for p with p(0) = 0.
inline MembershipReport check_quarter_bound(const ComplexFn& p, const DiskGrid& grid = {},
                                            double guard = kDefaultGuard) {
  auto metric = [&p](Complex z) -> Sample { return {std::abs(p(z))}; };
  return sweep_against_threshold(metric, grid, 0.25, ClassId::bound_quarter, guard);
}

/// |Log(1 + w)| <= 3|w|/2 for |w| < 1/2.
inline bool log_bound_lemma_check(Complex w) {
  if (!(std::abs(w) < 0.5)) throw OutOfDomain("log_bound_lemma_check: |w| must be below 1/2");
  return std::abs(std::log(1.0 + w)) <= 1.5 * std::abs(w);
}

}  // namespace gbessel
