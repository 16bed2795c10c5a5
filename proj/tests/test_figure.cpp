#include <catch_amalgamated.hpp>

#include <algorithm>
#include <complex>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "gbessel/figure.hpp"

using namespace gbessel;

namespace {

AnalyticFn phi_fn(double kappa, double c) {
  return series_function(series_of_phi(BesselParams::from_kappa(kappa, 0.0, c)));
}

AnalyticFn vartheta_fn(double nu, double c) { return series_function(series_of_vartheta(BesselParams(nu, 1.0, c))); }

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("winding number", "[figure]") {
  const std::vector<Complex> square = {{-1, -1}, {1, -1}, {1, 1}, {-1, 1}};
  CHECK(winding_number(0.0, square) == 1);
  CHECK(winding_number(Complex(0.5, -0.9), square) == 1);
  CHECK(winding_number(Complex(2.0, 0.0), square) == 0);
  CHECK(winding_number(Complex(0.0, 1.5), square) == 0);
  const std::vector<Complex> clockwise(square.rbegin(), square.rend());
  CHECK(winding_number(0.0, clockwise) == -1);
  CHECK(inside_polygon(0.0, clockwise));

  const auto boundary = exp_boundary(4096);
  CHECK(inside_polygon(1.0, boundary));
  CHECK(inside_polygon(Complex(2.7, 0.0), boundary));
  CHECK_FALSE(inside_polygon(Complex(2.75, 0.0), boundary));
  CHECK(inside_polygon(Complex(0.37, 0.0), boundary));
  CHECK_FALSE(inside_polygon(Complex(0.36, 0.0), boundary));
  CHECK_FALSE(inside_polygon(0.0, boundary));
}

TEST_CASE("figure spec validation", "[figure]") {
  FigureSpec s;
  CHECK_NOTHROW(s.validate());
  s.radius = 1.0;
  CHECK_THROWS_AS(s.validate(), std::invalid_argument);
  s.radius = 0.9;
  s.points = 63;
  CHECK_THROWS_AS(s.validate(), std::invalid_argument);
  CHECK(parse_figure_quantity("second_ratio") == FigureQuantity::second_ratio);
  CHECK(parse_overlay("circle") == Overlay::circle);
  CHECK_THROWS_AS(parse_overlay("square"), std::invalid_argument);
}

TEST_CASE("phi images lie in exp(D)", "[figure]") {
  FigureSpec s;
  s.quantity = FigureQuantity::value;
  for (const auto& [kappa, c] : std::vector<std::pair<double, double>>{
           {1.5, 2.0}, {2.5, 6.0}, {4.5, 10.0}, {8.5, 30.0}, {16.0, 60.0}}) {
    const auto d = make_figure(phi_fn(kappa, c), s);
    INFO("kappa = " << kappa << " c = " << c);
    CHECK(d.inside);
    CHECK(d.outside_count == 0);
    CHECK(d.curve.size() == 2048);
    CHECK(d.overlay_curve.size() == 2048);
  }
}

TEST_CASE("second ratio of vartheta_{-5/2} lies in the small circle", "[figure]") {
  FigureSpec s;
  s.quantity = FigureQuantity::second_ratio;
  s.overlay = Overlay::circle;
  for (double c : {1.0, -1.0}) {
    const auto d = make_figure(vartheta_fn(-2.5, c), s);
    CHECK(d.inside);
    double sup = 0.0;
    for (const Complex& w : d.curve) sup = std::max(sup, std::abs(w));
    CHECK(sup < constants::small_circle_radius() - 1e-3);
  }
}

TEST_CASE("starlike quantity of vartheta_{-1/2} leaves exp(D)", "[figure]") {
  FigureSpec s;
  s.quantity = FigureQuantity::starlike;
  const auto d = make_figure(vartheta_fn(-0.5, 1.0), s);
  CHECK_FALSE(d.inside);
  CHECK(d.outside_count > 0);
}

TEST_CASE("figure verdict agrees with the membership check", "[figure][property]") {
  struct Case {
    AnalyticFn f;
    FigureQuantity q;
    ClassId id;
  };
  const std::vector<Case> cases = {
      {vartheta_fn(1.5, 1.0), FigureQuantity::starlike, ClassId::Se},
      {vartheta_fn(2.5, -1.0), FigureQuantity::starlike, ClassId::Se},
      {vartheta_fn(-0.5, 1.0), FigureQuantity::starlike, ClassId::Se},
      {vartheta_fn(-1.5, 1.0), FigureQuantity::starlike, ClassId::Se},
      {vartheta_fn(-2.5, 1.0), FigureQuantity::starlike, ClassId::Se},
      {series_function(normalized_phi_series(BesselParams(0.5, 1.0, 1.0))), FigureQuantity::convex, ClassId::Ke},
      {series_function(normalized_phi_series(BesselParams(-0.5, 1.0, 1.0))), FigureQuantity::convex, ClassId::Ke},
  };
  FigureSpec s;
  for (const auto& c : cases) {
    s.quantity = c.q;
    const auto d = make_figure(c.f, s);
    const auto r = check_class(c.f, c.id);
    REQUIRE(r.verdict != Verdict::inconclusive);
    CHECK(d.inside == r.passed());
  }
}

TEST_CASE("CSV output is bit-stable", "[figure]") {
  FigureSpec s;
  s.points = 256;
  const auto a = make_figure(phi_fn(2.5, 6.0), s);
  const auto b = make_figure(phi_fn(2.5, 6.0), s);
  const std::string csv = figure_csv(a.theta, a.curve);
  CHECK(csv == figure_csv(b.theta, b.curve));
  CHECK(csv.rfind("theta,re,im\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 257);
  CHECK(overlay_csv(a) == overlay_csv(b));
  // 17 significant digits per field.
  const std::string second_line = csv.substr(12, csv.find('\n', 12) - 12);
  CHECK(second_line.rfind("0,", 0) == 0);
}

TEST_CASE("SVG and file output", "[figure]") {
  FigureSpec s;
  s.points = 128;
  const auto d = make_figure(phi_fn(1.5, 2.0), s);
  const std::string svg = figure_svg(d);
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(svg.find("viewBox=\"-1.5 -2.5 5 5\"") != std::string::npos);

  const auto dir = std::filesystem::temp_directory_path() / "gbessel_figure_test";
  std::filesystem::create_directories(dir);
  const auto written = write_figure(d, (dir / "fig").string());
  CHECK(written.size() == 3);
  CHECK(slurp(dir / "fig.csv") == figure_csv(d.theta, d.curve));
  CHECK(slurp(dir / "fig.svg") == svg);
  std::filesystem::remove_all(dir);

  CHECK_THROWS_AS(write_figure(d, "/nonexistent-dir/sub/fig"), std::ios_base::failure);
}
