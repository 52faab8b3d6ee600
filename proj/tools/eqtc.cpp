// eqtc: planners, verification, oracle, Euler characteristics, vector fields.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "eqtc/eqtc.hpp"

namespace {

using eqtc::io::json;

// Arguments that look like JSON objects are parsed inline, anything else is
// read as a file path.
json load(const std::string& arg) {
  if (!arg.empty() && arg.front() == '{') return eqtc::io::parse(arg);
  return eqtc::io::read_file(arg);
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream f(out);
  if (!f) throw eqtc::Error(eqtc::Errc::ParseError, "cannot write '" + out + "'");
  f << text;
  if (!text.empty() && text.back() != '\n') f << '\n';
}

std::optional<eqtc::PlannerKind> parse_planner(const std::string& s, const eqtc::CyclicLinearAction& a) {
  if (s == "two") return eqtc::PlannerKind::Two;
  if (s == "three") return eqtc::PlannerKind::Three;
  if (s == "hemisphere") return eqtc::PlannerKind::Hemisphere;
  if (s == "auto") return eqtc::select_planner_kind(a);
  throw eqtc::Error(eqtc::Errc::ParseError, "planner must be two, three, hemisphere or auto");
}

int run_plan(const std::string& action_arg, const std::string& query_arg, const std::string& planner,
             const std::string& format, const std::string& out) {
  const auto a = eqtc::CyclicLinearAction::validate(eqtc::io::action_from_json(load(action_arg)));
  const json q = load(query_arg);
  const auto x = eqtc::SpherePoint::from_unit(q.at("x").get<std::vector<double>>());
  const auto y = eqtc::SpherePoint::from_unit(q.at("y").get<std::vector<double>>());
  const auto samples = q.value("samples", std::size_t{11});
  const auto p = eqtc::make_planner(a, *parse_planner(planner, a));
  const eqtc::Membership m = p->membership(x, y);
  const eqtc::PlannedPath path = q.contains("domain")
                                     ? p->plan_in(eqtc::parse_domain(q.at("domain").get<std::string>()), x, y)
                                     : p->plan(x, y);
  if (format == "csv") {
    std::string csv = eqtc::io::path_csv(path, samples);
    emit("# domain " + std::string(eqtc::to_string(path.domain())) + "\n" + csv, out);
    return 0;
  }
  json j = eqtc::io::path_samples(path, samples);
  json doms = json::array();
  for (eqtc::DomainId d : m.domains) doms.push_back(std::string(eqtc::to_string(d)));
  j["membership"] = {{"domains", doms}, {"ambiguous", m.ambiguous}};
  emit(j.dump(2), out);
  return 0;
}

int run_verify(const std::string& action_arg, const std::string& planner, const eqtc::verify::VerifyConfig& cfg,
               bool timings, const std::string& out) {
  const eqtc::ActionParams raw = eqtc::io::action_from_json(load(action_arg));
  eqtc::PlannerKind kind = eqtc::PlannerKind::Three;
  try {
    kind = *parse_planner(planner, eqtc::CyclicLinearAction::validate(raw));
  } catch (const eqtc::Error&) {
    // Invalid actions and planner preconditions surface in the report.
    if (planner == "two") kind = eqtc::PlannerKind::Two;
    else if (planner == "hemisphere") kind = eqtc::PlannerKind::Hemisphere;
    else if (planner != "three" && planner != "auto") throw;
  }
  const eqtc::verify::VerifyReport r = eqtc::verify::run_verify(raw, kind, cfg);
  emit(eqtc::io::to_json(r, timings).dump(2), out);
  return r.verdict ? 0 : 1;
}

int run_tc(const std::string& query_arg, bool table, int max_n, const std::vector<int>& primes, bool bounds,
           const std::string& out) {
  if (table) {
    emit(eqtc::verify::run_table(max_n, primes), out);
    return 0;
  }
  if (query_arg.empty()) throw eqtc::Error(eqtc::Errc::InvalidQuery, "tc needs --query or --table");
  const json q = load(query_arg);
  const auto sq = eqtc::tc::SphereQuery::validate(q.at("n").get<int>(), q.at("k").get<int>(), q.at("p").get<int>());
  json j{{"query", {{"n", sq.n}, {"k", sq.k}, {"p", sq.p}}}};
  if (q.contains("invariant")) {
    const auto which = eqtc::tc::parse_invariant(q.at("invariant").get<std::string>());
    j["invariant"] = std::string(eqtc::tc::to_string(which));
    j["result"] = eqtc::io::to_json(eqtc::tc::evaluate(sq, which));
    if (which == eqtc::tc::Invariant::TCInv) j["conjecture"] = std::string(eqtc::tc::kLinearityConjecture);
  } else {
    json all = json::object();
    for (auto which : {eqtc::tc::Invariant::TC, eqtc::tc::Invariant::TCG, eqtc::tc::Invariant::TCInv,
                       eqtc::tc::Invariant::CatG}) {
      try {
        all[std::string(eqtc::tc::to_string(which))] = eqtc::io::to_json(eqtc::tc::evaluate(sq, which));
      } catch (const eqtc::Error& e) {
        all[std::string(eqtc::tc::to_string(which))] = {{"error", std::string(eqtc::to_string(e.code()))}};
      }
    }
    j["results"] = all;
  }
  if (bounds) j["propagated"] = eqtc::io::to_json(eqtc::tc::propagate_bounds(eqtc::tc::sphere_facts(sq)));
  emit(j.dump(2), out);
  return 0;
}

int run_euler(const std::string& action_arg, const std::string& complex_arg, const std::string& out) {
  json j;
  eqtc::euler::GCWComplex c;
  std::optional<eqtc::CyclicLinearAction> a;
  if (!action_arg.empty()) {
    a = eqtc::CyclicLinearAction::validate(eqtc::io::action_from_json(load(action_arg)));
    c = eqtc::euler::linear_sphere_gcw(*a);
    j["action"] = eqtc::io::to_json(a->params());
  } else if (!complex_arg.empty()) {
    c = eqtc::io::complex_from_json(load(complex_arg));
  } else {
    throw eqtc::Error(eqtc::Errc::InvalidQuery, "euler needs --action or --complex");
  }
  j["complex"] = eqtc::io::to_json(c);
  const auto by_def = eqtc::euler::euler_definition(c);
  j["chi_definition"] = eqtc::io::to_json(by_def);
  bool agree = true;
  try {
    const auto by_fp = eqtc::euler::euler_fixed_point_formula(c);
    j["chi_fixed_point_formula"] = eqtc::io::to_json(by_fp);
    agree = by_def == by_fp;
  } catch (const eqtc::Error& e) {
    j["chi_fixed_point_formula"] = {{"error", std::string(eqtc::to_string(e.code()))}};
  }
  j["formulas_agree"] = agree;
  if (a) {
    const auto gap = eqtc::euler::weak_gap_check(*a);
    j["weak_gap"] = eqtc::io::to_json(gap);
    j["orbit_space_euler"] = eqtc::euler::orbit_space_euler(*a);
    j["vector_field"] = std::string(eqtc::euler::to_string(eqtc::euler::vector_field_exists_predicate(*a)));
  } else {
    const auto gap = eqtc::euler::weak_gap_check(c);
    j["weak_gap"] = eqtc::io::to_json(gap);
    j["field_sufficient_condition"] = by_def.is_zero() && gap.holds;
  }
  emit(j.dump(2), out);
  return agree ? 0 : 1;
}

int run_vfield(const std::string& action_arg, const std::string& field, std::uint64_t seed, std::size_t samples,
               const std::string& out) {
  const auto a = eqtc::CyclicLinearAction::validate(eqtc::io::action_from_json(load(action_arg)));
  const auto verdict = eqtc::euler::vector_field_exists_predicate(a);
  json j{{"action", eqtc::io::to_json(a.params())}, {"verdict", std::string(eqtc::euler::to_string(verdict))}};
  std::optional<eqtc::TangentField> f;
  if (field == "projection") {
    if (a.fixed_dim() < 1) throw eqtc::Error(eqtc::Errc::NoFixedPoint, "projection field needs a fixed point");
    f = eqtc::projection_field(a, a.fixed_basis(0));
  } else if (field == "j" || field == "auto") {
    try {
      f = eqtc::j_field(a);
    } catch (const eqtc::Error& e) {
      if (field == "j") throw;
      j["error"] = std::string(eqtc::to_string(e.code()));
      j["message"] = "no nowhere-vanishing equivariant field is constructed for this action";
      emit(j.dump(2), out);
      return 1;
    }
  } else {
    throw eqtc::Error(eqtc::Errc::ParseError, "field must be auto, j or projection");
  }
  const eqtc::FieldCertificate cert = eqtc::field_certificate(*f, seed, samples);
  j["certificate"] = eqtc::io::to_json(cert);
  bool pass = cert.max_tangency <= 1e-12 && cert.max_equivariance <= 1e-12;
  if (f->kind() == eqtc::FieldKind::J)
    pass = pass && std::abs(cert.min_norm - 1.0) <= 1e-12 && cert.commutator_norm.value_or(1.0) == 0.0;
  j["pass"] = pass;
  emit(j.dump(2), out);
  return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Equivariant motion planners and topological complexity of spheres"};
  app.require_subcommand(1);

  std::string action, query, complex, planner = "auto", out, format = "json", field = "auto";
  std::uint64_t seed = 0;
  bool table = false, bounds = false, no_timing = false;
  int max_n = 10;
  std::vector<int> primes{2, 3, 5};
  eqtc::verify::VerifyConfig cfg;

  auto* plan = app.add_subcommand("plan", "Evaluate the planner on one pair");
  plan->add_option("--action", action, "Action JSON file or inline object")->required();
  plan->add_option("--query", query, R"(Query {"x":[..],"y":[..],"samples":N[,"domain":"U2"]})")->required();
  plan->add_option("--planner", planner, "two, three, hemisphere or auto")->capture_default_str();
  plan->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
  plan->add_option("--out", out, "Output file (default stdout)");

  auto* ver = app.add_subcommand("verify", "Seeded Monte-Carlo verification of a planner");
  ver->add_option("--action", action, "Action JSON file or inline object")->required();
  ver->add_option("--planner", planner, "two, three, hemisphere or auto")->capture_default_str();
  ver->add_option("--seed", cfg.seed, "RNG seed")->capture_default_str();
  ver->add_option("--samples", cfg.samples, "Pairs for coverage")->capture_default_str();
  ver->add_option("--path-samples", cfg.path_samples, "Pairs per domain for path checks")->capture_default_str();
  ver->add_option("--t-grid", cfg.t_grid, "t-points per path")->capture_default_str();
  ver->add_option("--format", format, "json")->check(CLI::IsMember({"json"}));
  ver->add_flag("--no-timing", no_timing, "Omit elapsed times, for byte-for-byte comparison");
  ver->add_option("--out", out, "Output file (default stdout)");

  auto* tc = app.add_subcommand("tc", "Topological complexity values and bounds");
  tc->add_option("--query", query, R"(Query {"n":..,"k":..,"p":..[,"invariant":"TC_G"]})");
  tc->add_flag("--table", table, "Emit the CSV grid");
  tc->add_option("--max-n", max_n, "Largest n in the grid")->capture_default_str();
  tc->add_option("--p", primes, "Comma-separated primes")->delimiter(',')->capture_default_str();
  tc->add_flag("--bounds", bounds, "Include the propagated bound report");
  tc->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  tc->add_option("--out", out, "Output file (default stdout)");

  auto* eu = app.add_subcommand("euler", "Equivariant Euler characteristics");
  auto* eu_action = eu->add_option("--action", action, "Linear sphere action");
  eu->add_option("--complex", complex, "G-CW complex JSON")->excludes(eu_action);
  eu->add_option("--out", out, "Output file (default stdout)");

  auto* vf = app.add_subcommand("vfield", "Equivariant tangent field certificate");
  vf->add_option("--action", action, "Action JSON file or inline object")->required();
  vf->add_option("--field", field, "auto, j or projection")->capture_default_str();
  vf->add_option("--seed", seed, "RNG seed")->capture_default_str();
  vf->add_option("--samples", cfg.samples, "Uniform samples")->capture_default_str();
  vf->add_option("--out", out, "Output file (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*plan) return run_plan(action, query, planner, format, out);
    if (*ver) return run_verify(action, planner, cfg, !no_timing, out);
    if (*tc) return run_tc(query, table || format == "csv", max_n, primes, bounds, out);
    if (*eu) return run_euler(action, complex, out);
    if (*vf) return run_vfield(action, field, seed, cfg.samples, out);
  } catch (const eqtc::Error& e) {
    std::cerr << json{{"error", std::string(eqtc::to_string(e.code()))}, {"message", e.what()}}.dump() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << json{{"error", "Exception"}, {"message", e.what()}}.dump() << '\n';
    return 2;
  }
  return 2;
}
