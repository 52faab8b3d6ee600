#pragma once

#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "eqtc/action.hpp"
#include "eqtc/error.hpp"
#include "eqtc/euler.hpp"
#include "eqtc/path.hpp"
#include "eqtc/tc_oracle.hpp"
#include "eqtc/verify.hpp"
#include "eqtc/vfield.hpp"

namespace eqtc::io {

using nlohmann::json;

namespace detail {

template <class T>
T field(const json& j, const char* key) {
  if (!j.contains(key)) throw Error(Errc::ParseError, std::string("missing key '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw Error(Errc::ParseError, std::string("bad value for '") + key + "': " + e.what());
  }
}

template <class T>
T field_or(const json& j, const char* key, T fallback) {
  return j.contains(key) ? field<T>(j, key) : fallback;
}

}  // namespace detail

inline json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(Errc::ParseError, e.what());
  }
}

inline json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::ParseError, "cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

// --- actions -----------------------------------------------------------

inline json to_json(const ActionParams& a) {
  return {{"p", a.p}, {"fixed_dim", a.fixed_dim}, {"weights", a.weights}, {"sign_dim", a.sign_dim}};
}

inline ActionParams action_from_json(const json& j) {
  if (!j.is_object()) throw Error(Errc::ParseError, "action must be a JSON object");
  ActionParams a;
  a.p = detail::field<int>(j, "p");
  a.fixed_dim = detail::field<int>(j, "fixed_dim");
  a.weights = detail::field_or<std::vector<int>>(j, "weights", {});
  a.sign_dim = detail::field_or<int>(j, "sign_dim", 0);
  return a;
}

// --- G-CW complexes ----------------------------------------------------

inline json to_json(const euler::GCWComplex& c) {
  json cells = json::array();
  for (const euler::GCWCell& cell : c.cells)
    cells.push_back({{"dim", cell.dim}, {"isotropy", cell.isotropy}, {"count", cell.count}});
  json j{{"group_order", c.group_order}, {"cells", cells}};
  if (c.group != euler::GroupKind::Cyclic) j["group"] = "other";
  return j;
}

inline euler::GCWComplex complex_from_json(const json& j) {
  if (!j.is_object()) throw Error(Errc::ParseError, "complex must be a JSON object");
  euler::GCWComplex c;
  c.group_order = detail::field<int>(j, "group_order");
  const std::string group = detail::field_or<std::string>(j, "group", "cyclic");
  if (group == "cyclic") c.group = euler::GroupKind::Cyclic;
  else if (group == "other") c.group = euler::GroupKind::Other;
  else throw Error(Errc::ParseError, "group must be 'cyclic' or 'other'");
  const json& cells = j.contains("cells") ? j.at("cells") : json::array();
  if (!cells.is_array()) throw Error(Errc::ParseError, "'cells' must be an array");
  for (const json& cell : cells)
    c.cells.push_back({detail::field<int>(cell, "dim"), detail::field<int>(cell, "isotropy"),
                       detail::field<long long>(cell, "count")});
  c.validate();
  return c;
}

inline json to_json(const euler::BurnsideElement& b) {
  json coeffs = json::object();
  for (const auto& [d, c] : b.coefficients()) coeffs[std::to_string(d)] = c;
  return {{"group_order", b.group_order()}, {"coefficients", coeffs}, {"text", b.to_string()}};
}

inline json to_json(const euler::WeakGapReport& r) {
  json entries = json::array();
  for (const auto& e : r.entries) {
    entries.push_back({{"isotropy", e.isotropy},
                       {"dim_fixed", e.fixed_dim == euler::kEmptyDim ? json(nullptr) : json(e.fixed_dim)},
                       {"dim_larger", e.larger_dim == euler::kEmptyDim ? json(nullptr) : json(e.larger_dim)},
                       {"holds", e.holds}});
  }
  return {{"holds", r.holds}, {"entries", entries}};
}

// --- oracle ------------------------------------------------------------

inline json bound_json(tc::Bound b) { return b.is_infinite() ? json("inf") : json(b.value()); }

inline json to_json(const tc::TCValue& v) {
  return {{"lower", bound_json(v.lower)},
          {"upper", bound_json(v.upper)},
          {"status", std::string(tc::to_string(v.status))},
          {"value", v.render()},
          {"out_of_theorem_scope", v.out_of_theorem_scope},
          {"provenance", v.provenance}};
}

inline json to_json(const tc::BoundsReport& r) {
  json out = json::object();
  for (const auto& [q, iv] : r.intervals) out[std::string(tc::to_string(q))] = to_json(r.value(q));
  return out;
}

// --- fields ------------------------------------------------------------

inline json to_json(const FieldCertificate& c) {
  json j{{"kind", std::string(to_string(c.kind))},
         {"seed", c.seed},
         {"samples", c.samples},
         {"max_tangency", c.max_tangency},
         {"max_equivariance", c.max_equivariance},
         {"min_norm", c.min_norm},
         {"min_norm_witness", c.min_norm_witness},
         {"max_norm_deviation_from_one", c.max_norm_deviation_from_one},
         {"zero_locus", c.zero_locus}};
  j["commutator_norm"] = c.commutator_norm ? json(*c.commutator_norm) : json(nullptr);
  return j;
}

// --- paths -------------------------------------------------------------

/// Samples `points` evenly spaced t values including both endpoints.
inline json path_samples(const PlannedPath& path, std::size_t points) {
  json rows = json::array();
  Vec buf(path.ambient_dim());
  for (std::size_t i = 0; i < points; ++i) {
    const double t = points == 1 ? 0.0 : static_cast<double>(i) / static_cast<double>(points - 1);
    path.evaluate_into(t, buf);
    rows.push_back({{"t", t}, {"point", buf}});
  }
  json segs = json::array();
  for (const PathSegment& s : path.segments())
    segs.push_back({{"kind", std::string(to_string(s.kind()))}, {"t0", s.t0()}, {"t1", s.t1()}});
  return {{"domain", std::string(to_string(path.domain()))}, {"segments", segs}, {"samples", rows}};
}

inline std::string path_csv(const PlannedPath& path, std::size_t points) {
  std::ostringstream os;
  os.precision(17);
  os << "t";
  for (std::size_t i = 0; i < path.ambient_dim(); ++i) os << ",x" << i;
  os << '\n';
  Vec buf(path.ambient_dim());
  for (std::size_t i = 0; i < points; ++i) {
    const double t = points == 1 ? 0.0 : static_cast<double>(i) / static_cast<double>(points - 1);
    path.evaluate_into(t, buf);
    os << t;
    for (double c : buf) os << ',' << c;
    os << '\n';
  }
  return os.str();
}

// --- verification reports ---------------------------------------------

inline json to_json(const verify::Witness& w) {
  json j{{"x", w.x}, {"y", w.y}};
  if (w.g) j["g"] = *w.g;
  if (w.t) j["t"] = *w.t;
  if (w.domain) j["domain"] = std::string(to_string(*w.domain));
  return j;
}

/// With `timings` false the output is a pure function of the inputs and
/// seed, so two runs compare byte for byte.
inline json to_json(const verify::VerifyReport& r, bool timings = true) {
  json checks = json::array();
  for (const verify::CheckResult& c : r.checks) {
    json cj{{"name", c.name},
            {"pass", c.pass},
            {"worst_residual", c.worst_residual},
            {"threshold", c.threshold},
            {"samples", c.samples},
            {"detail", c.detail}};
    cj["witness"] = c.witness ? to_json(*c.witness) : json(nullptr);
    if (timings) cj["elapsed_ms"] = c.elapsed_ms;
    checks.push_back(std::move(cj));
  }
  const verify::VerifyConfig& cfg = r.config;
  json j{{"action", to_json(r.action)},
         {"planner", r.planner},
         {"config",
          {{"seed", cfg.seed},
           {"samples", cfg.samples},
           {"path_samples", cfg.path_samples},
           {"t_grid", cfg.t_grid},
           {"continuity_samples", cfg.continuity_samples},
           {"continuity_delta", cfg.continuity_delta},
           {"tolerances",
            {{"endpoint", cfg.tol.endpoint},
             {"equivariance", cfg.tol.equivariance},
             {"membership", cfg.tol.membership},
             {"tangency", cfg.tol.tangency},
             {"unit_norm", cfg.tol.unit_norm}}}}},
         {"domains_observed", r.domains_observed},
         {"checks", checks},
         {"verdict", r.verdict ? "pass" : "fail"}};
  j["error"] = r.error ? json(*r.error) : json(nullptr);
  return j;
}

}  // namespace eqtc::io
