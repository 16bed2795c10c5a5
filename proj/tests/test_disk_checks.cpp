#include <catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <vector>

#include "closed_forms.hpp"
#include "gbessel/analytic.hpp"
#include "gbessel/disk_checks.hpp"
#include "gbessel/theorems.hpp"

using namespace gbessel;
using Catch::Approx;

namespace {

AnalyticFn vartheta_fn(double nu, double b, double c) {
  return series_function(series_of_vartheta(BesselParams(nu, b, c)));
}

// A coarser grid for the property tests; same radii as the default.
const DiskGrid kSmallGrid({0.5, 0.9, 0.99, 0.999}, 1024);

}  // namespace

TEST_CASE("DiskGrid validation", "[checks]") {
  const DiskGrid g;
  CHECK(g.radii() == std::vector<double>{0.5, 0.9, 0.99, 0.999});
  CHECK(g.angles_per_circle() == 4096);
  CHECK(g.angle(0) == 0.0);
  CHECK_THROWS_AS(DiskGrid({0.5, 1.0}, 16), std::invalid_argument);
  CHECK_THROWS_AS(DiskGrid({0.9, 0.5}, 16), std::invalid_argument);
  CHECK_THROWS_AS(DiskGrid({0.5}, 0), std::invalid_argument);
  CHECK_THROWS_AS(DiskGrid({}, 16), std::invalid_argument);
}

TEST_CASE("starlike and convex quantities", "[checks]") {
  const AnalyticFn id = identity_function();
  for (const Complex z : {Complex(0.0, 0.0), Complex(0.3, 0.4), Complex(-0.9, 0.1)}) {
    CHECK(std::abs(starlike_quantity(id, z) - 1.0) < 1e-15);
    CHECK(std::abs(convex_quantity(id, z) - 1.0) < 1e-15);
  }
  const AnalyticFn vanishing = [](Complex) { return Jet{0.0, 0.0, 0.0, 0.0}; };
  CHECK_THROWS_AS(starlike_quantity(vanishing, 0.5), ZeroDenominator);
  CHECK_THROWS_AS(convex_quantity(vanishing, 0.5), ZeroDenominator);

  // 1 + z calJ''/calJ' for -6(calJ_{1/2} - 1) against its closed form.
  const AnalyticFn f = series_function(normalized_phi_series(BesselParams(0.5, 1.0, 1.0)));
  CHECK(convex_quantity(f, 0.0) == Complex(1.0, 0.0));
  for (int k = 0; k < 64; ++k) {
    const Complex z = std::polar(0.999, 2.0 * std::numbers::pi * k / 64.0);
    CHECK(std::abs(convex_quantity(f, z) - testing::convex_quantity_calJ_half(z)) < 1e-10);
  }
}

TEST_CASE("check_subordinate_exp", "[checks]") {
  const auto one = check_subordinate_exp([](Complex) { return Complex(1.0, 0.0); });
  CHECK(one.passed());
  CHECK(one.sup_value == 0.0);
  CHECK(one.margin == 1.0);

  const BesselParams p(1.0, 0.0, 2.0);
  const auto phi = check_subordinate_exp([&p](Complex z) { return phi_eval(p, z).value; });
  CHECK(phi.passed());
  CHECK(phi.sup_value == Approx(0.358).margin(1e-3));

  const auto exp105 = check_subordinate_exp([](Complex z) { return std::exp(1.05 * z); });
  CHECK(exp105.verdict == Verdict::fail);
  CHECK(exp105.sup_value == Approx(1.05 * 0.999).epsilon(1e-9));

  const auto negative = check_subordinate_exp([](Complex z) { return 1.0 + 3.0 * z; });
  CHECK(negative.verdict == Verdict::fail);
  CHECK(negative.reason == "re_w_nonpositive");

  // Just under the threshold but inside the guard band.
  const auto close = check_subordinate_exp([](Complex z) { return std::exp(z / 0.999 * (1.0 - 5e-7)); });
  CHECK(close.verdict == Verdict::inconclusive);
}

TEST_CASE("check_class on named examples", "[checks]") {
  CHECK(check_class(identity_function(), ClassId::Se).passed());
  CHECK(check_class(PowerSeries::identity(), ClassId::Ke).passed());
  CHECK(check_class(vartheta_fn(2.5, 1.0, 1.0), ClassId::Se).passed());
  CHECK(check_class(vartheta_fn(-1.5, 1.0, 1.0), ClassId::Se).verdict == Verdict::fail);
  CHECK(check_class(vartheta_fn(-0.5, 1.0, 1.0), ClassId::Se).verdict == Verdict::fail);
  CHECK_THROWS_AS(check_class(PowerSeries::convex_kernel() + PowerSeries::identity(), ClassId::Se), NotNormalized);
  CHECK_THROWS_AS(check_class(identity_function(), ClassId::Pe), std::invalid_argument);

  // Closed forms of the same functions give the same verdicts.
  const AnalyticFn closed = [](Complex z) {
    // z cos sqrt z with derivatives from its own series.
    static const AnalyticFn s = series_function(series_of_vartheta(BesselParams(-0.5, 1.0, 1.0)));
    Jet j = s(z);
    j.value = testing::vartheta_mhalf_J(z);
    return j;
  };
  CHECK(check_class(closed, ClassId::Se, kSmallGrid).verdict == Verdict::fail);
}

TEST_CASE("check_quarter_bound", "[checks]") {
  const auto zero = check_quarter_bound([](Complex) { return Complex(0.0, 0.0); });
  CHECK(zero.passed());
  CHECK(zero.sup_value == 0.0);

  const BesselParams p(1.5, 1.0, 1.0);
  const auto q = check_quarter_bound([&p](Complex z) {
    return z * phi_derivative(p, z, 1).value / phi_eval(p, z).value;
  });
  CHECK(q.passed());

  const auto third = check_quarter_bound([](Complex z) { return z / 3.0; });
  CHECK(third.verdict == Verdict::fail);
  CHECK(third.sup_value == Approx(0.999 / 3.0).epsilon(1e-12));
}

TEST_CASE("log bound lemma", "[checks]") {
  CHECK(log_bound_lemma_check(0.0));
  CHECK(log_bound_lemma_check(0.49));
  CHECK(log_bound_lemma_check(-0.49));
  CHECK(std::abs(std::log(1.49)) == Approx(0.3988).margin(1e-4));
  CHECK(std::abs(std::log(0.51)) == Approx(0.6733).margin(1e-4));
  CHECK_THROWS_AS(log_bound_lemma_check(0.5), OutOfDomain);
  CHECK_THROWS_AS(log_bound_lemma_check(Complex(0.0, -0.7)), OutOfDomain);
}

TEST_CASE("suprema grow with the radius", "[checks][property]") {
  const std::vector<AnalyticFn> fns = {
      vartheta_fn(1.5, 1.0, 1.0), vartheta_fn(2.5, 1.0, -1.0), vartheta_fn(-2.5, 1.0, 1.0),
      series_function(normalized_phi_series(BesselParams(0.5, 1.0, -1.0))),
      series_function(libera(series_of_vartheta(BesselParams(1.5, 1.0, 1.0))))};
  for (const auto& f : fns) {
    for (const ClassId id : {ClassId::Se, ClassId::Ke}) {
      const auto r = check_class(f, id, kSmallGrid);
      if (r.reason.empty()) {
        CHECK(r.monotone);
        for (std::size_t i = 1; i < r.circle_sups.size(); ++i) {
          CHECK(r.circle_sups[i - 1] <= r.circle_sups[i] + kMonotoneSlack);
        }
      }
    }
  }
}

TEST_CASE("Alexander duality of verdicts", "[checks][property]") {
  const std::vector<PowerSeries> fns = {
      PowerSeries::identity(),
      PowerSeries::convex_kernel(),
      normalized_phi_series(BesselParams(0.5, 1.0, 1.0)),
      normalized_phi_series(BesselParams(0.5, 1.0, -1.0)),
      normalized_phi_series(BesselParams(-0.5, 1.0, 1.0)),
      normalized_phi_series(BesselParams(2.0, 0.0, 8.0)),
      series_of_vartheta(BesselParams(1.5, 1.0, 1.0)),
      series_of_vartheta(BesselParams(-2.5, 1.0, 1.0)),
  };
  for (const auto& f : fns) {
    const auto ke = check_class(f, ClassId::Ke, kSmallGrid);
    const auto se = check_class(alexander(f, AlexanderDirection::to_starlike), ClassId::Se, kSmallGrid);
    CHECK(ke.verdict == se.verdict);
    if (std::isfinite(ke.sup_value)) {
      CHECK(ke.sup_value == Approx(se.sup_value).epsilon(1e-9).margin(1e-12));
    } else {
      CHECK_FALSE(std::isfinite(se.sup_value));
    }
  }
}

TEST_CASE("passing functions have positive real part", "[checks][property]") {
  const std::vector<ComplexFn> ws = {
      [](Complex z) { return phi_eval(BesselParams(1.0, 0.0, 2.0), z).value; },
      [](Complex z) { return phi_eval(BesselParams::from_kappa(16.0, 0.0, 60.0), z).value; },
      [](Complex z) { return std::exp(0.9 * z); },
      [](Complex z) { return 1.0 + 0.5 * z; },
  };
  for (const auto& w : ws) {
    const auto r = check_subordinate_exp(w, kSmallGrid);
    REQUIRE(r.passed());
    double min_re = 1.0;
    for (double rad : kSmallGrid.radii()) {
      for (std::size_t k = 0; k < kSmallGrid.angles_per_circle(); ++k) {
        min_re = std::min(min_re, w(std::polar(rad, kSmallGrid.angle(k))).real());
      }
    }
    CHECK(min_re > 0.0);
  }
}

TEST_CASE("Libera image of a starlike example stays starlike", "[checks][property]") {
  for (const auto& p : {BesselParams(1.5, 1.0, 1.0), BesselParams(1.5, 1.0, -1.0), BesselParams(2.5, 1.0, 1.0)}) {
    const PowerSeries f = series_of_vartheta(p);
    REQUIRE(check_class(f, ClassId::Se, kSmallGrid).passed());
    CHECK(check_class(libera(f), ClassId::Se, kSmallGrid).passed());
  }
}

TEST_CASE("reports carry the witness and the grid", "[checks]") {
  const auto r = check_quarter_bound([](Complex z) { return z * z / 8.0; });
  CHECK(r.passed());
  CHECK(std::abs(r.witness) == Approx(0.999));
  CHECK(r.grid.angles_per_circle() == 4096);
  CHECK(r.circle_sups.size() == 4);
  CHECK(r.margin == Approx(0.25 - 0.999 * 0.999 / 8.0));
}
