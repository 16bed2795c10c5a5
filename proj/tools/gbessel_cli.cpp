// Command-line front end: eval, check, figure, selftest.

#include <CLI11.hpp>

#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "gbessel/gbessel.hpp"

using namespace gbessel;

namespace {

enum ExitCode { kPass = 0, kFail = 1, kUsage = 2, kMath = 3, kInconclusive = 4, kIo = 5 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

double parse_real(const std::string& s) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw UsageError("not a number: '" + s + "'");
  }
  if (used != s.size()) throw UsageError("not a number: '" + s + "'");
  return v;
}

// Accepts "x", "x,y", "(x,y)", "x+yi", "x-yi" and "yi".
Complex parse_complex(std::string s) {
  std::erase(s, ' ');
  if (s.size() >= 2 && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
  if (s.empty()) throw UsageError("empty complex number");
  if (const auto comma = s.find(','); comma != std::string::npos) {
    return {parse_real(s.substr(0, comma)), parse_real(s.substr(comma + 1))};
  }
  if (s.back() == 'i' || s.back() == 'j') {
    s.pop_back();
    std::size_t split = std::string::npos;
    for (std::size_t k = s.size(); k-- > 1;) {
      if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
        split = k;
        break;
      }
    }
    auto imag_part = [](const std::string& t) {
      if (t.empty() || t == "+") return 1.0;
      if (t == "-") return -1.0;
      return parse_real(t);
    };
    if (split == std::string::npos) return {0.0, imag_part(s)};
    return {parse_real(s.substr(0, split)), imag_part(s.substr(split))};
  }
  return {parse_real(s), 0.0};
}

struct GlobalOptions {
  double tol = 1e-12;
  std::vector<double> radii{0.5, 0.9, 0.99, 0.999};
  std::size_t angles = 4096;
  bool pretty = false;

  DiskGrid grid() const { return DiskGrid(radii, angles); }
};

// Which function a subcommand operates on.
struct FunctionOptions {
  std::string nu = "0";
  std::string b = "1";
  std::string c = "1";
  std::string kappa;
  bool phi = false;
  bool vartheta = false;
  bool normalized = false;
  bool omega = false;
  bool omega_normalized = false;
  std::string named;
  std::string fn;
  std::string series_file;
  bool libera = false;
  std::size_t order = kDefaultSeriesOrder;

  void attach(CLI::App* app, bool allow_omega) {
    app->add_option("--nu", nu, "order nu (complex: x, x,y or x+yi)");
    app->add_option("--b", b, "parameter b");
    app->add_option("--c", c, "parameter c");
    app->add_option("--kappa", kappa, "set nu from kappa = nu + (b+1)/2");
    app->add_flag("--phi", phi, "phi_{nu,b,c}");
    app->add_flag("--vartheta", vartheta, "z phi_{nu,b,c}");
    app->add_flag("--normalized", normalized, "-4 kappa (phi - 1)/c");
    if (allow_omega) app->add_flag("--omega", omega, "generalized Bessel omega_{nu,b,c}");
    app->add_flag("--omega-normalized", omega_normalized, "z phi(z^2)");
    app->add_option("--named", named, "J, I, j_sph, i_sph, calJ, calI, frakj, fraki");
    app->add_option("--fn", fn, "z, kernel (z/(1-z)) or koebe (z/(1-z)^2)");
    app->add_option("--series", series_file, "JSON file of [re, im] coefficients");
    app->add_flag("--libera", libera, "apply the Libera operator to the selected series");
    app->add_option("--order", order, "truncation degree for series work")->check(CLI::Range(1, 500));
  }

  BesselParams params() const {
    const Complex bb = parse_complex(b);
    const Complex cc = parse_complex(c);
    if (!kappa.empty()) return BesselParams::from_kappa(parse_complex(kappa), bb, cc);
    return BesselParams(parse_complex(nu), bb, cc);
  }

  int selections() const {
    return int(phi) + int(vartheta) + int(normalized) + int(omega) + int(omega_normalized) +
           int(!named.empty()) + int(!fn.empty()) + int(!series_file.empty());
  }
};

struct Selected {
  std::string id;
  PowerSeries series;
  AnalyticFn fn;
};

PowerSeries read_series_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::ios_base::failure("cannot open " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw UsageError(std::string("invalid series JSON: ") + e.what());
  }
  try {
    return series_from_json(j);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

AnalyticFn koebe_function() {
  return [](Complex z) {
    const Complex u = 1.0 / (1.0 - z);
    return Jet{z * u * u, (1.0 + z) * u * u * u, (4.0 + 2.0 * z) * u * u * u * u,
               (18.0 + 6.0 * z) * u * u * u * u * u};
  };
}

// Series-backed selection for check and figure.
Selected select_function(const FunctionOptions& o) {
  if (o.selections() != 1) {
    throw UsageError("select exactly one of --phi, --vartheta, --normalized, --omega-normalized, --named, --fn, --series");
  }
  Selected s;
  if (!o.fn.empty()) {
    if (o.fn == "z") {
      s = {"z", PowerSeries::identity(o.order), identity_function()};
    } else if (o.fn == "kernel") {
      s = {"z/(1-z)", PowerSeries::convex_kernel(o.order), convex_kernel_function()};
    } else if (o.fn == "koebe") {
      std::vector<Complex> a(o.order + 1, Complex(0.0, 0.0));
      for (std::size_t n = 1; n <= o.order; ++n) a[n] = static_cast<double>(n);
      s = {"z/(1-z)^2", PowerSeries(std::move(a)), koebe_function()};
    } else {
      throw UsageError("unknown --fn '" + o.fn + "' (z, kernel, koebe)");
    }
  } else if (!o.series_file.empty()) {
    s.id = o.series_file;
    s.series = read_series_file(o.series_file);
  } else if (!o.named.empty()) {
    NamedFunction name{};
    try {
      name = parse_named_function(o.named);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    if (name != NamedFunction::calJ && name != NamedFunction::calI && name != NamedFunction::frakj &&
        name != NamedFunction::fraki) {
      throw UsageError("only the normalized families calJ, calI, frakj, fraki are series-backed");
    }
    s.id = o.named;
    s.series = series_of_phi(named_params(name, parse_complex(o.nu)), o.order);
  } else {
    const BesselParams p = o.params();
    if (o.phi) {
      s = {"phi", series_of_phi(p, o.order), {}};
    } else if (o.vartheta) {
      s = {"vartheta", series_of_vartheta(p, o.order), {}};
    } else if (o.normalized) {
      s = {"-4 kappa (phi - 1)/c", normalized_phi_series(p, o.order), {}};
    } else if (o.omega_normalized) {
      s = {"z phi(z^2)", omega_normalized_series(p, o.order / 2), {}};
    } else {
      throw UsageError("--omega is available for eval only");
    }
  }
  if (o.libera) {
    s.series = libera(s.series);
    s.id = "L[" + s.id + "]";
    s.fn = {};
  }
  if (!s.fn) s.fn = series_function(s.series);
  return s;
}

EvalResult scaled(EvalResult r, Complex factor, Complex shift = 0.0) {
  r.value = factor * r.value + shift;
  r.tail_bound *= std::abs(factor);
  return r;
}

EvalResult run_eval(const FunctionOptions& o, Complex z, double tol, double cut) {
  if (o.selections() != 1) throw UsageError("select exactly one function");
  if (!o.named.empty()) {
    try {
      return named_family(parse_named_function(o.named), parse_complex(o.nu), z, tol);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  if (o.phi || o.vartheta || o.normalized || o.omega || o.omega_normalized) {
    if (o.libera) throw UsageError("--libera applies to series-backed functions");
    const BesselParams p = o.params();
    if (o.phi) return phi_eval(p, z, tol);
    if (o.vartheta) return scaled(phi_eval(p, z, tol), z);
    if (o.omega) return omega_eval(p, z, cut, tol);
    if (o.omega_normalized) return scaled(phi_eval(p, z * z, tol), z);
    if (p.c() == Complex(0.0, 0.0)) throw NotNormalized("normalized phi requires c != 0");
    const Complex s = -4.0 * p.kappa() / p.c();
    return scaled(phi_eval(p, z, tol), s, -s);
  }
  const Selected sel = select_function(o);
  const Jet j = sel.fn(z);
  // Polynomials and closed forms carry no truncation tail.
  return {j.value, o.fn.empty() ? sel.series.order() + 1 : 0, 0.0};
}

int verdict_code(Verdict v) {
  switch (v) {
    case Verdict::pass: return kPass;
    case Verdict::fail: return kFail;
    case Verdict::inconclusive: return kInconclusive;
  }
  return kFail;
}

int theorem_code(const TheoremReport& r) {
  if (!r.applicable) return kFail;
  if (r.counterexample()) return kFail;
  for (const auto& c : r.conclusion_checks) {
    if (!c.report.passed()) return kInconclusive;
  }
  return kPass;
}

int example_code(const ExampleReport& r) {
  if (!r.consistent()) return kFail;
  return verdict_code(r.premise.verdict);
}

TheoremId parse_theorem(std::string s) {
  static const std::map<std::string, TheoremId> ids = {
      {"Pe", TheoremId::ThmPe},
      {"Ke", TheoremId::ThmKe},
      {"Se", TheoremId::ThmSe},
      {"CorBessel_a", TheoremId::CorBessel_a},
      {"CorBessel_b", TheoremId::CorBessel_b},
      {"CorSpherical_a", TheoremId::CorSpherical_a},
      {"CorSpherical_b", TheoremId::CorSpherical_b},
      {"CorLibera", TheoremId::CorLibera},
      {"OmegaSe", TheoremId::ThmOmegaSe},
      {"BkcChain", TheoremId::ThmBkcChain},
      {"CorBkcBessel", TheoremId::CorBkcBessel},
      {"Ex_linear", TheoremId::Ex_linear},
      {"Ex_product", TheoremId::Ex_product},
  };
  if (s.rfind("Thm", 0) == 0) s = s.substr(3);
  const auto it = ids.find(s);
  if (it == ids.end()) throw UsageError("unknown theorem '" + s + "'");
  return it->second;
}

struct CheckArgs {
  std::string theorem;
  std::string class_id;
  bool verify = false;
  double alpha = 1.0;
  std::string part = "a";
  std::string target = "convex";
  double guard = kDefaultGuard;
};

int run_check(const GlobalOptions& g, FunctionOptions fo, const CheckArgs& a, json& out) {
  if (a.theorem.empty() == a.class_id.empty()) throw UsageError("give exactly one of --theorem or --class");
  const DiskGrid grid = g.grid();

  if (!a.class_id.empty()) {
    const Selected s = select_function(fo);
    MembershipReport r;
    if (a.class_id == "Pe") {
      r = check_subordinate_exp([&s](Complex z) { return s.fn(z).value; }, grid, a.guard);
    } else if (a.class_id == "Se") {
      r = check_class(s.fn, ClassId::Se, grid, a.guard);
    } else if (a.class_id == "Ke") {
      r = check_class(s.fn, ClassId::Ke, grid, a.guard);
    } else if (a.class_id == "quarter") {
      r = check_quarter_bound([&s](Complex z) { return s.fn(z).value; }, grid, a.guard);
    } else {
      throw UsageError("unknown class '" + a.class_id + "' (Pe, Se, Ke, quarter)");
    }
    out = to_json(r);
    out["function"] = s.id;
    return verdict_code(r.verdict);
  }

  CheckOptions opt;
  opt.verify = a.verify;
  opt.grid = grid;
  opt.guard = a.guard;
  opt.series_order = fo.order;
  if (a.part != "a" && a.part != "b") throw UsageError("--part must be a or b");
  const CorollaryPart part = a.part == "a" ? CorollaryPart::a : CorollaryPart::b;

  // B-operator theorems default to f = z/(1-z).
  auto operand = [&fo]() -> Selected {
    if (fo.selections() == 0) fo.fn = "kernel";
    return select_function(fo);
  };
  auto params_only = [&fo]() {
    if (fo.selections() > 0) throw UsageError("this theorem takes --nu/--b/--c or --kappa only");
    return fo.params();
  };

  const TheoremId id = parse_theorem(a.theorem);
  TheoremReport r;
  switch (id) {
    case TheoremId::ThmPe: r = hyp_Pe(params_only(), opt); break;
    case TheoremId::ThmKe: r = hyp_Ke(params_only(), opt); break;
    case TheoremId::ThmSe: r = hyp_Se(params_only(), opt); break;
    case TheoremId::CorBessel_a:
    case TheoremId::CorBessel_b:
    case TheoremId::CorSpherical_a:
    case TheoremId::CorSpherical_b: {
      const bool bessel = id == TheoremId::CorBessel_a || id == TheoremId::CorBessel_b;
      const bool pa = id == TheoremId::CorBessel_a || id == TheoremId::CorSpherical_a;
      r = hyp_corollaries(parse_complex(fo.nu), bessel ? BesselFamily::bessel : BesselFamily::spherical,
                          pa ? CorollaryPart::a : CorollaryPart::b, opt);
      break;
    }
    case TheoremId::CorLibera:
      if (a.target != "convex" && a.target != "starlike") throw UsageError("--target must be convex or starlike");
      r = hyp_libera(params_only(), a.target == "convex" ? LiberaTarget::convex : LiberaTarget::starlike, opt);
      break;
    case TheoremId::ThmOmegaSe: r = hyp_omega_Se(params_only(), opt); break;
    case TheoremId::ThmBkcChain: {
      const BesselParams p = fo.params();
      const Selected f = operand();
      r = hyp_bkc_chain(p, f.series, part, opt, fo.fn.empty() ? std::nullopt : std::optional<AnalyticFn>(f.fn));
      break;
    }
    case TheoremId::CorBkcBessel: {
      const Complex nu = parse_complex(fo.nu);
      const Complex c = parse_complex(fo.c);
      if (nu.imag() != 0.0 || c.imag() != 0.0) throw UsageError("CorBkcBessel takes real --nu and --c");
      r = hyp_bkc_bessel(nu.real(), c.real(), opt);
      break;
    }
    case TheoremId::Ex_linear:
    case TheoremId::Ex_product: {
      const BesselParams p = fo.params();
      const Selected f = operand();
      ExampleReport e;
      if (id == TheoremId::Ex_linear) {
        if (!(a.alpha > 1.0 / constants::e())) throw UsageError("--alpha must exceed 1/e");
        e = example_linear_check(p, f.series, a.alpha, grid, a.guard);
      } else {
        e = example_product_check(p, f.series, grid, a.guard);
      }
      out = to_json(e);
      out["theorem"] = std::string(to_string(id));
      out["params"] = to_json(p);
      return example_code(e);
    }
  }
  out = to_json(r);
  return theorem_code(r);
}

struct FigureArgs {
  std::string quantity = "value";
  std::string overlay = "exp";
  double radius = 0.999;
  std::size_t points = 2048;
  double circle_radius = constants::small_circle_radius();
  std::string out;
};

int run_figure(FunctionOptions fo, const FigureArgs& a, json& out) {
  const Selected s = select_function(fo);
  FigureSpec spec;
  spec.function_id = s.id;
  try {
    spec.quantity = parse_figure_quantity(a.quantity);
    spec.overlay = parse_overlay(a.overlay);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  spec.radius = a.radius;
  spec.points = a.points;
  spec.circle_radius = a.circle_radius;
  try {
    spec.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const FigureData d = make_figure(s.fn, spec);
  const auto files = write_figure(d, a.out);
  out = {{"function", s.id},
         {"quantity", a.quantity},
         {"overlay", a.overlay},
         {"radius", spec.radius},
         {"points", spec.points},
         {"inside", d.inside},
         {"outside_count", d.outside_count},
         {"files", files}};
  return kPass;
}

int run_selftest(json& out) {
  out = json::array();
  bool all = true;
  auto record = [&](const std::string& name, bool ok) {
    out.push_back({{"name", name}, {"pass", ok}});
    all = all && ok;
  };
  const double s = std::sqrt(0.49);
  record("calJ_{1/2}(0.49) = sin(0.7)/0.7",
         std::abs(named_family(NamedFunction::calJ, 0.5, 0.49).value - std::sin(s) / s) < 1e-12);
  record("Gamma(5/2) = 3 sqrt(pi)/4",
         std::abs(gbessel::gamma(2.5) - 0.75 * std::sqrt(std::numbers::pi)) < 1e-13);
  const BesselParams p1 = BesselParams::from_kappa(1.5, 0.0, 2.0);
  record("phi_{1,0,2} in Pe",
         check_subordinate_exp([&p1](Complex z) { return phi_eval(p1, z).value; }).passed());
  record("vartheta_{-1/2,1,1} not in Se",
         check_class(series_of_vartheta(BesselParams(-0.5, 1.0, 1.0)), ClassId::Se).verdict == Verdict::fail);
  record("z calJ_{3/2} in Se", check_class(series_of_vartheta(BesselParams(1.5, 1.0, 1.0)), ClassId::Se).passed());
  const auto g2 = extremal_curve(ExtremalKind::g2, 1.0);
  record("g2 maximum (e-1)^2 at 0", g2.value_error() < 1e-10 && g2.location_error() < 1e-6);
  return all ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalized Bessel functions: evaluation, class membership checks and figures"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions g;
  app.add_option("--tol", g.tol, "series truncation tolerance")->capture_default_str();
  app.add_option("--grid-radii", g.radii, "comma-separated radii in (0, 1)")->delimiter(',');
  app.add_option("--grid-angles", g.angles, "samples per circle")->check(CLI::PositiveNumber);
  app.add_flag("--json", g.pretty, "pretty-print JSON output");

  FunctionOptions eval_fn, check_fn, figure_fn;
  std::string z_text = "0";
  double branch_cut = 0.0;
  auto* eval = app.add_subcommand("eval", "evaluate a function at one point");
  eval_fn.attach(eval, true);
  eval->add_option("--z", z_text, "evaluation point");
  eval->add_option("--branch-cut", branch_cut, "angle of the branch cut of z^nu (default: negative axis)");

  CheckArgs ca;
  auto* check = app.add_subcommand("check", "class membership or theorem hypothesis check");
  check_fn.attach(check, false);
  check->add_option("--theorem", ca.theorem,
                    "Pe, Ke, Se, CorBessel_a, CorBessel_b, CorSpherical_a, CorSpherical_b, CorLibera, "
                    "OmegaSe, BkcChain, CorBkcBessel, Ex_linear, Ex_product");
  check->add_option("--class", ca.class_id, "Pe, Se, Ke or quarter");
  check->add_flag("--verify", ca.verify, "also run the conclusion checks");
  check->add_option("--alpha", ca.alpha, "alpha for Ex_linear");
  check->add_option("--part", ca.part, "a or b for BkcChain");
  check->add_option("--target", ca.target, "convex or starlike for CorLibera");
  check->add_option("--guard", ca.guard, "guard band between pass and inconclusive");

  FigureArgs fa;
  auto* figure = app.add_subcommand("figure", "image of |z| = r as CSV and SVG");
  figure_fn.attach(figure, false);
  figure->add_option("--quantity", fa.quantity, "value, starlike, convex or second_ratio");
  figure->add_option("--overlay", fa.overlay, "exp, circle or none");
  figure->add_option("--radius", fa.radius, "sampling radius");
  figure->add_option("--points", fa.points, "samples on the circle");
  figure->add_option("--circle-radius", fa.circle_radius, "radius of the circle overlay (default 1 - 1/e)");
  figure->add_option("--out", fa.out, "output prefix")->required();

  auto* selftest = app.add_subcommand("selftest", "quick internal consistency run");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  json out;
  int code = kPass;
  try {
    if (!(std::isfinite(g.tol) && g.tol >= 1e-15)) throw UsageError("--tol must be at least 1e-15");
    try {
      (void)g.grid();
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    if (eval->parsed()) {
      const EvalResult r = run_eval(eval_fn, parse_complex(z_text), g.tol, branch_cut);
      out = to_json(r);
    } else if (check->parsed()) {
      code = run_check(g, check_fn, ca, out);
    } else if (figure->parsed()) {
      code = run_figure(figure_fn, fa, out);
    } else if (selftest->parsed()) {
      code = run_selftest(out);
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const MathError& e) {
    std::cerr << "math error: " << e.what() << "\n";
    return kMath;
  } catch (const std::ios_base::failure& e) {
    std::cerr << "I/O error: " << e.what() << "\n";
    return kIo;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  std::cout << dump17(out, g.pretty ? 2 : -1) << "\n";
  return code;
}
