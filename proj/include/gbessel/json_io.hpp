#pragma once

// JSON encodings of reports, printed with 17 significant digits.

#include <cmath>
#include <complex>
#include <cstdio>
#include <string>

#include <json.hpp>

#include "gbessel/disk_checks.hpp"
#include "gbessel/special_fn.hpp"
#include "gbessel/theorems.hpp"

namespace gbessel {

using nlohmann::json;

inline std::string format_number(double x) {
  if (!std::isfinite(x)) return "null";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

namespace detail {

inline void dump17(const json& j, std::string& out, int indent, int depth) {
  const auto newline = [&](int d) {
    if (indent < 0) return;
    out += '\n';
    out.append(static_cast<std::size_t>(indent * d), ' ');
  };
  switch (j.type()) {
    case json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += '{';
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ',';
        first = false;
        newline(depth + 1);
        out += json(it.key()).dump();
        out += indent < 0 ? ":" : ": ";
        dump17(it.value(), out, indent, depth + 1);
      }
      newline(depth);
      out += '}';
      return;
    }
    case json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      // Arrays of scalars stay on one line.
      bool nested = false;
      for (const auto& v : j) nested = nested || v.is_structured();
      out += '[';
      bool first = true;
      for (const auto& v : j) {
        if (!first) out += (indent < 0 || nested) ? "," : ", ";
        first = false;
        if (nested) newline(depth + 1);
        dump17(v, out, indent, depth + 1);
      }
      if (nested) newline(depth);
      out += ']';
      return;
    }
    case json::value_t::number_float:
      out += format_number(j.get<double>());
      return;
    default:
      out += j.dump();
  }
}

}  // namespace detail

/// Serializes with every floating-point number at 17 significant digits.
inline std::string dump17(const json& j, int indent = -1) {
  std::string out;
  detail::dump17(j, out, indent, 0);
  return out;
}

inline json complex_json(Complex z) { return json::array({z.real(), z.imag()}); }

inline json to_json(const EvalResult& r) {
  return {{"value", complex_json(r.value)}, {"terms_used", r.terms_used}, {"tail_bound", r.tail_bound}};
}

inline json to_json(const DiskGrid& g) {
  return {{"radii", g.radii()}, {"angles", g.angles_per_circle()}};
}

inline json to_json(const MembershipReport& r) {
  json j = {
      {"class", std::string(to_string(r.class_id))},
      {"verdict", std::string(to_string(r.verdict))},
      {"sup", r.sup_value},
      {"witness", complex_json(r.witness)},
      {"margin", r.margin},
      {"threshold", r.threshold},
      {"circle_sups", r.circle_sups},
      {"monotone", r.monotone},
      {"grid", to_json(r.grid)},
      {"method", "dense boundary sampling (numerical verification, not proof)"},
  };
  if (!r.reason.empty()) j["reason"] = r.reason;
  return j;
}

inline json to_json(const BesselParams& p) {
  return {{"nu", complex_json(p.nu())},
          {"b", complex_json(p.b())},
          {"c", complex_json(p.c())},
          {"kappa", complex_json(p.kappa())}};
}

inline json to_json(const Hypothesis& h) {
  return {{"name", h.name},
          {"relation", std::string(to_string(h.relation))},
          {"lhs", h.lhs},
          {"rhs", h.rhs},
          {"slack", h.slack()},
          {"holds", h.holds}};
}

inline json to_json(const TheoremReport& r) {
  json j = {{"theorem", std::string(to_string(r.theorem_id))}, {"applicable", r.applicable}};
  if (r.params) j["params"] = to_json(*r.params);
  j["hypotheses"] = json::array();
  for (const auto& h : r.hypotheses) j["hypotheses"].push_back(to_json(h));
  if (!r.conclusion_checks.empty()) {
    j["conclusion_checks"] = json::array();
    for (const auto& c : r.conclusion_checks) {
      json entry = to_json(c.report);
      entry["label"] = c.label;
      j["conclusion_checks"].push_back(entry);
    }
  }
  return j;
}

inline json to_json(const ExampleReport& r) {
  json j = {{"premise", to_json(r.premise)}, {"consistent", r.consistent()}};
  if (r.conclusion) j["conclusion"] = to_json(*r.conclusion);
  return j;
}

inline json to_json(const ExtremalCurve& c) {
  return {{"kind", std::string(to_string(c.kind))},
          {"m", c.m},
          {"alpha", c.alpha},
          {"extremum", c.is_minimum ? "min" : "max"},
          {"theta_star", c.theta_star},
          {"value", c.extremal_value},
          {"claimed_theta", c.claimed_theta},
          {"claimed_value", c.claimed_value},
          {"location_error", c.location_error()},
          {"value_error", c.value_error()}};
}

}  // namespace gbessel
