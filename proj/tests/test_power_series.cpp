#include <catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "closed_forms.hpp"
#include "gbessel/json_io.hpp"
#include "gbessel/power_series.hpp"
#include "gbessel/theorems.hpp"

using namespace gbessel;

namespace {

PowerSeries random_normalized(std::mt19937_64& rng, std::size_t degree) {
  std::normal_distribution<double> n(0.0, 1.0);
  std::vector<Complex> a(degree + 1, Complex(0.0, 0.0));
  a[1] = 1.0;
  for (std::size_t k = 2; k <= degree; ++k) a[k] = Complex(n(rng), n(rng)) / static_cast<double>(k);
  return PowerSeries(std::move(a));
}

PowerSeries monomial(std::size_t degree, Complex coeff = 1.0) {
  PowerSeries s = PowerSeries::zero(degree);
  std::vector<Complex> a(s.coeffs().begin(), s.coeffs().end());
  a[degree] = coeff;
  return PowerSeries(std::move(a));
}

}  // namespace

TEST_CASE("PowerSeries basics", "[series]") {
  const PowerSeries z = PowerSeries::identity(8);
  CHECK(z.order() == 8);
  CHECK(z.in_normalized_class());
  CHECK_FALSE(PowerSeries::zero(4).in_normalized_class());
  CHECK(PowerSeries::convex_kernel(5)[5] == Complex(1.0, 0.0));
  CHECK(z[100] == Complex(0.0, 0.0));
  CHECK_THROWS_AS(PowerSeries({Complex(0, 0), Complex(NAN, 0)}), OutOfDomain);
}

TEST_CASE("series_of_phi coefficients", "[series]") {
  const PowerSeries phi = series_of_phi(BesselParams(1.0, 0.0, 2.0), 10);
  CHECK(phi[0] == Complex(1.0, 0.0));
  CHECK(std::abs(phi[1] - (-1.0 / 3.0)) < 1e-16);
  CHECK(series_of_vartheta(BesselParams(1.0, 0.0, 2.0), 10).in_normalized_class());
  CHECK_THROWS_AS(series_of_phi(BesselParams(1.0, 0.0, 2.0), 501), std::invalid_argument);

  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int i = 0; i < 50; ++i) {
    const BesselParams p(Complex(2.0 * u(rng), u(rng)), 1.0, Complex(5.0 * u(rng), u(rng)));
    const Complex z(0.7 * u(rng), 0.7 * u(rng));
    const auto ev = phi_eval(p, z, 1e-14);
    CHECK(std::abs(eval_series(series_of_phi(p), z) - ev.value) < ev.tail_bound + 1e-13);
  }
}

TEST_CASE("hadamard product", "[series]") {
  std::mt19937_64 rng(2);
  const PowerSeries f = random_normalized(rng, 30);
  const PowerSeries g = random_normalized(rng, 20);
  CHECK(series_equal(hadamard(f, PowerSeries::convex_kernel(30)), f));
  CHECK(series_equal(hadamard(f, g), hadamard(g, f)));
  CHECK(hadamard(f, g).order() == 20);

  const BesselParams p(-2.5, 1.0, 1.0);
  CHECK(series_equal(hadamard(series_of_vartheta(p), PowerSeries::convex_kernel()), series_of_vartheta(p)));
}

TEST_CASE("b_operator", "[series]") {
  const BesselParams p(Complex(0.4, -0.2), 1.0, Complex(3.0, 1.0));
  CHECK(series_equal(b_operator(p, PowerSeries::identity()), PowerSeries::identity()));
  CHECK(series_equal(b_operator(p, PowerSeries::convex_kernel()), series_of_vartheta(p)));
  CHECK(b_operator(p, PowerSeries::convex_kernel()).in_normalized_class());
  CHECK_THROWS_AS(b_operator(p, PowerSeries::convex_kernel() + PowerSeries::identity()), NotNormalized);

  // Displayed coefficient formula: z + sum (-c/4)^n a_{n+1} / ((kappa)_n n!) z^{n+1}.
  std::mt19937_64 rng(9);
  const PowerSeries f = random_normalized(rng, 12);
  const PowerSeries g = b_operator(p, f);
  Complex factorial = 1.0;
  for (std::size_t n = 1; n < 12; ++n) {
    factorial *= static_cast<double>(n);
    const Complex expected = std::pow(-p.c() / 4.0, static_cast<double>(n)) * f[n + 1] /
                             (pochhammer(p.kappa(), n) * factorial);
    CHECK(std::abs(g[n + 1] - expected) < 1e-14 * std::max(1.0, std::abs(expected)));
  }
}

TEST_CASE("b_operator recurrence on random inputs", "[series][property]") {
  // z (B_{kappa+1} f)' = kappa B_kappa f - (kappa - 1) B_{kappa+1} f
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::uniform_int_distribution<std::size_t> deg(2, 40);
  for (int i = 0; i < 200; ++i) {
    const PowerSeries f = random_normalized(rng, deg(rng));
    BesselParams p(0.0, 1.0, 1.0);
    for (;;) {
      try {
        p = BesselParams(Complex(6.0 * u(rng), 3.0 * u(rng)), Complex(1.0 + u(rng), u(rng)),
                         Complex(8.0 * u(rng), 4.0 * u(rng)));
        (void)BesselParams(p.shifted(1));
        break;
      } catch (const PoleError&) {
      }
    }
    const PowerSeries b0 = b_operator(p, f);
    const PowerSeries b1 = b_operator(p.shifted(1), f);
    const PowerSeries lhs = alexander(b1, AlexanderDirection::to_starlike);
    const PowerSeries rhs = p.kappa() * b0 - (p.kappa() - 1.0) * b1;
    INFO("kappa = " << p.kappa());
    CHECK(max_coefficient_deviation(lhs, rhs) < 1e-12);
  }
}

TEST_CASE("libera operator", "[series]") {
  CHECK(series_equal(libera(PowerSeries::identity()), PowerSeries::identity()));
  CHECK(series_equal(libera(monomial(2)), monomial(2, 2.0 / 3.0)));
  CHECK_THROWS_AS(libera(PowerSeries::convex_kernel() + PowerSeries(std::vector<Complex>{1.0})), NonvanishingAtZero);

  // L[-6(calJ_{1/2} - 1)] = (12/z)(z + 2 cos sqrt z - 2)
  const PowerSeries img = libera(normalized_phi_series(BesselParams(0.5, 1.0, 1.0)));
  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> u(-0.7, 0.7);
  for (int i = 0; i < 100; ++i) {
    const Complex z(u(rng), u(rng));
    if (std::abs(z) < 1e-3) continue;
    CHECK(std::abs(eval_series(img, z) - testing::libera_calJ_half(z)) < 1e-10);
  }
}

TEST_CASE("libera equals convolution with its kernel", "[series][property]") {
  const PowerSeries k = libera_kernel(64);
  CHECK(k[0] == Complex(0.0, 0.0));
  CHECK(k[1] == Complex(1.0, 0.0));
  CHECK(std::abs(k[9] - 0.2) < 1e-16);
  std::mt19937_64 rng(8);
  for (int i = 0; i < 50; ++i) {
    const PowerSeries f = random_normalized(rng, 64);
    CHECK(max_coefficient_deviation(libera(f), hadamard(k, f)) < 1e-12);
  }
  // Against the closed form of the kernel.
  const Complex z(0.3, 0.4);
  CHECK(std::abs(eval_series(k, z) - (-2.0 * (z + std::log(1.0 - z)) / z)) < 1e-12);
}

TEST_CASE("alexander transform", "[series]") {
  const PowerSeries z = PowerSeries::identity();
  CHECK(series_equal(alexander(z, AlexanderDirection::to_starlike), z));
  CHECK(series_equal(alexander(z, AlexanderDirection::to_convex), z));
  CHECK_THROWS_AS(alexander(PowerSeries(std::vector<Complex>{1.0, 1.0}), AlexanderDirection::to_starlike),
                  NotNormalized);

  std::mt19937_64 rng(10);
  for (int i = 0; i < 50; ++i) {
    const PowerSeries f = random_normalized(rng, 40);
    const PowerSeries back =
        alexander(alexander(f, AlexanderDirection::to_starlike), AlexanderDirection::to_convex);
    CHECK(max_coefficient_deviation(back, f) < 1e-15);
  }

  // -4(kappa-1)(phi_{nu-1} - 1)/c maps to vartheta_nu.
  for (const auto& p : {BesselParams(1.5, 1.0, 1.0), BesselParams(Complex(2.2, 0.5), 0.0, Complex(-3.0, 1.0))}) {
    const BesselParams q = p.shifted(-1);
    PowerSeries phi = series_of_phi(q);
    const PowerSeries g = (-4.0 * (p.kappa() - 1.0) / p.c()) * (phi - PowerSeries(std::vector<Complex>{1.0}));
    CHECK(max_coefficient_deviation(alexander(g, AlexanderDirection::to_starlike), series_of_vartheta(p)) < 1e-12);
  }
}

TEST_CASE("eval_series", "[series]") {
  std::mt19937_64 rng(12);
  const PowerSeries f = random_normalized(rng, 30);
  const PowerSeries g = random_normalized(rng, 25);
  CHECK(eval_series(PowerSeries(std::vector<Complex>{Complex(2.0, 1.0), 3.0}), 0.0) == Complex(2.0, 1.0));
  const Complex z(0.5, -0.6);
  CHECK(std::abs(eval_series(f + g, z) - (eval_series(f, z) + eval_series(g, z))) < 1e-13);
  CHECK_NOTHROW(eval_series(f, Complex(1.05, 0.0)));
  CHECK_THROWS_AS(eval_series(f, Complex(1.06, 0.0)), OutOfDomain);
  CHECK_THROWS_AS(eval_series(f, Complex(NAN, 0.0)), OutOfDomain);
}

TEST_CASE("series JSON round trip", "[series]") {
  std::mt19937_64 rng(14);
  const PowerSeries f = random_normalized(rng, 10);
  const auto text = dump17(to_json(f));
  const PowerSeries g = series_from_json(json::parse(text));
  CHECK(max_coefficient_deviation(f, g) == 0.0);
  CHECK(series_from_json(json::parse("[0, 1, 0.5]"))[2] == Complex(0.5, 0.0));
  CHECK_THROWS_AS(series_from_json(json::parse("[[1, 2, 3]]")), std::invalid_argument);
  CHECK_THROWS_AS(series_from_json(json::parse("{}")), std::invalid_argument);
}

TEST_CASE("closed forms of the calJ and calI family match the series", "[series][closed_form]") {
  std::mt19937_64 rng(15);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const PowerSeries zJ52 = series_of_vartheta(BesselParams(2.5, 1.0, 1.0));
  const PowerSeries zI52 = series_of_vartheta(BesselParams(2.5, 1.0, -1.0));
  const PowerSeries zJ32 = series_of_vartheta(BesselParams(1.5, 1.0, 1.0));
  const PowerSeries zI32 = series_of_vartheta(BesselParams(1.5, 1.0, -1.0));
  for (int i = 0; i < 100; ++i) {
    const Complex z(u(rng), u(rng));
    if (std::abs(z) > 1.0 || std::abs(z) < 1e-2) continue;
    CHECK(testing::rel_error(eval_series(zJ32, z), testing::z_calJ_3half(z)) < 1e-11);
    CHECK(testing::rel_error(eval_series(zI32, z), testing::z_calI_3half(z)) < 1e-11);
    CHECK(testing::rel_error(eval_series(zJ52, z), testing::z_calJ_5half(z)) < 1e-11);
    CHECK(testing::rel_error(eval_series(zI52, z), testing::z_calI_5half(z)) < 1e-11);
  }
}

TEST_CASE("z calI_{5/2} with cos in the last term is not the series", "[series][closed_form]") {
  // The expression with cos sqrt(z) in place of cosh sqrt(z) differs from the
  // series at every sample: it is a transcription error, not a branch issue.
  const PowerSeries zI52 = series_of_vartheta(BesselParams(2.5, 1.0, -1.0));
  for (const Complex z : {Complex(0.5, 0.0), Complex(-0.3, 0.6), Complex(0.9, -0.1)}) {
    CHECK(testing::rel_error(testing::z_calI_5half_as_typeset(z), eval_series(zI52, z)) > 1.0);
    CHECK(testing::rel_error(eval_series(zI52, z), testing::z_calI_5half(z)) < 1e-12);
  }
}
