#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "eqtc/action.hpp"
#include "eqtc/error.hpp"
#include "eqtc/linalg.hpp"
#include "eqtc/path.hpp"
#include "eqtc/planner.hpp"
#include "eqtc/rng.hpp"
#include "eqtc/tc_oracle.hpp"
#include "eqtc/vfield.hpp"

namespace eqtc::verify {

struct Tolerances {
  double endpoint = 1e-12;
  double equivariance = 1e-9;
  double membership = kMembershipTol;
  double tangency = 1e-12;
  double unit_norm = 1e-9;
};

struct VerifyConfig {
  std::uint64_t seed = 0;
  std::size_t samples = 100000;       // pairs for coverage and domain checks
  std::size_t path_samples = 10000;   // pairs per domain for path-level checks
  std::size_t t_grid = 1000;          // t-points per path, endpoints included
  std::size_t continuity_samples = 1000;
  double continuity_delta = 1e-5;     // perturbation size, must be <= 1e-4
  double continuity_limit = 1e6;      // smoke bound on the reported constant C
  Tolerances tol;

  void validate() const {
    const double tols[] = {tol.endpoint, tol.equivariance, tol.membership, tol.tangency, tol.unit_norm};
    for (double t : tols)
      if (!(t > 0.0)) throw Error(Errc::InvalidQuery, "tolerances must be positive");
    if (t_grid < 2) throw Error(Errc::InvalidQuery, "t-grid needs at least 2 points");
    if (!(continuity_delta > 0.0) || continuity_delta > 1e-4)
      throw Error(Errc::InvalidQuery, "continuity delta must lie in (0, 1e-4]");
  }
};

/// Reproducible input for a failing (or worst) sample; replays under `plan`.
struct Witness {
  Vec x, y;
  std::optional<int> g;
  std::optional<double> t;
  std::optional<DomainId> domain;
};

struct CheckResult {
  std::string name;
  bool pass = true;
  double worst_residual = 0.0;
  double threshold = 0.0;
  std::optional<Witness> witness;
  std::size_t samples = 0;
  double elapsed_ms = 0.0;
  std::string detail;
};

struct VerifyReport {
  ActionParams action;
  std::string planner;
  VerifyConfig config;
  std::optional<std::string> error;  // precondition failure, e.g. ParityMismatch
  std::vector<std::string> domains_observed;
  std::vector<CheckResult> checks;
  bool verdict = false;
};

namespace detail {

using Clock = std::chrono::steady_clock;

inline double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

// Tracks a running maximum and the input that produced it.
struct Worst {
  double value = 0.0;
  std::optional<Witness> witness;
  void offer(double r, const auto& make_witness) {
    if (r > value || (!witness && r >= value)) {
      value = r;
      witness = make_witness();
    }
  }
};

inline CheckResult finish(std::string name, const Worst& w, double threshold, std::size_t samples,
                          Clock::time_point start, std::string detail = {}) {
  CheckResult c;
  c.name = std::move(name);
  c.worst_residual = w.value;
  c.threshold = threshold;
  c.pass = w.value <= threshold;
  c.witness = w.witness;
  c.samples = samples;
  c.elapsed_ms = ms_since(start);
  c.detail = std::move(detail);
  return c;
}

class Harness {
 public:
  Harness(const CyclicLinearAction& a, const EquivariantPlanner& planner, const VerifyConfig& cfg)
      : a_(a), planner_(planner), cfg_(cfg), dim_(static_cast<std::size_t>(a.ambient_dim())) {}

  std::vector<CheckResult> run(std::vector<std::string>& observed) {
    std::vector<CheckResult> out;
    out.push_back(coverage(observed));
    path_checks(out);
    out.push_back(tangency());
    out.push_back(continuity());
    out.push_back(oracle_consistency(observed));
    return out;
  }

 private:
  SpherePoint random_point(SphereSampler& s) const { return SpherePoint::trusted(s.point(dim_)); }

  // Pairs whose planner output is determined by a particular domain: random
  // pairs, rejection-sampled into the domain.
  std::optional<std::pair<SpherePoint, SpherePoint>> pair_in(DomainId id, SphereSampler& s) const {
    for (int attempt = 0; attempt < 1000; ++attempt) {
      SpherePoint x = random_point(s), y = random_point(s);
      if (planner_.membership(x, y).contains(id)) return std::make_pair(std::move(x), std::move(y));
    }
    return std::nullopt;
  }

  // Pairs outside U1: x = -y with y random, and with y at the fixed basis
  // vectors +-e_i where the projection fields vanish.
  std::vector<std::pair<SpherePoint, SpherePoint>> antipodal_pairs(SphereSampler& s, std::size_t count) const {
    std::vector<std::pair<SpherePoint, SpherePoint>> out;
    for (int i = 0; i < std::min(a_.fixed_dim(), 3); ++i)
      for (int sign : {1, -1}) {
        SpherePoint e = a_.fixed_basis(i);
        if (sign < 0) e = -e;
        out.emplace_back(-e, e);
      }
    for (std::size_t i = 0; i < count; ++i) {
      SpherePoint y = random_point(s);
      out.emplace_back(-y, y);
    }
    return out;
  }

  CheckResult coverage(std::vector<std::string>& observed) {
    const auto start = Clock::now();
    SphereSampler s(cfg_.seed, rng::stream::kCoverage);
    std::set<DomainId> seen;
    Worst uncovered;
    std::size_t missing = 0, ambiguous = 0, total = 0;
    auto visit = [&](const SpherePoint& x, const SpherePoint& y) {
      ++total;
      const Membership m = planner_.membership(x, y);
      if (m.ambiguous) ++ambiguous;
      if (m.domains.empty()) {
        ++missing;
        uncovered.offer(static_cast<double>(missing), [&] { return Witness{x.vec(), y.vec(), {}, {}, {}}; });
        return;
      }
      seen.insert(m.domains.front());
    };
    for (std::size_t i = 0; i < cfg_.samples; ++i) {
      const SpherePoint x = random_point(s), y = random_point(s);
      visit(x, y);
    }
    for (const auto& [x, y] : antipodal_pairs(s, std::max<std::size_t>(1, cfg_.samples / 100))) visit(x, y);
    // Pairs in every collar combination, which uniform samples reach rarely
    // near the collar boundaries.
    for (const auto& [x, y] : collar_pairs()) visit(x, y);
    for (DomainId id : seen) observed.emplace_back(to_string(id));
    return finish("coverage", uncovered, 0.0, total, start,
                  std::to_string(missing) + " uncovered, " + std::to_string(ambiguous) + " ambiguous of " +
                      std::to_string(total));
  }

  std::vector<std::pair<SpherePoint, SpherePoint>> collar_pairs() const {
    std::vector<std::pair<SpherePoint, SpherePoint>> out;
    if (a_.fixed_dim() < 1) return out;
    const SpherePoint n = a_.fixed_basis(0), sp = -a_.fixed_basis(0);
    out.emplace_back(n, n);
    out.emplace_back(n, sp);
    out.emplace_back(sp, n);
    out.emplace_back(sp, sp);
    return out;
  }

  Vec t_grid() const {
    Vec ts(cfg_.t_grid);
    for (std::size_t i = 0; i < ts.size(); ++i) ts[i] = static_cast<double>(i) / static_cast<double>(ts.size() - 1);
    return ts;
  }

  // Endpoint, segment-join, unit-norm, equivariance and domain-invariance
  // checks share one pass over the sampled paths.
  void path_checks(std::vector<CheckResult>& out) {
    const auto start = Clock::now();
    SphereSampler s(cfg_.seed, rng::stream::kEquivariance);
    const Vec ts = t_grid();
    Worst endpoint, joins, norm, equiv, invariance;
    std::size_t paths = 0;
    Vec p(dim_), gp(dim_), q(dim_), gx(dim_), gy(dim_);

    auto examine = [&](DomainId id, const SpherePoint& x, const SpherePoint& y) {
      const PlannedPath path = planner_.plan_in(id, x, y);
      ++paths;
      auto wit = [&](std::optional<int> g = {}, std::optional<double> t = {}) {
        return [&, g, t] { return Witness{x.vec(), y.vec(), g, t, id}; };
      };
      path.evaluate_into(0.0, p);
      const double e0 = linalg::distance(p, x.coords());
      path.evaluate_into(1.0, p);
      const double e1 = linalg::distance(p, y.coords());
      endpoint.offer(std::max(e0, e1), wit());
      const auto& segs = path.segments();
      for (std::size_t i = 0; i + 1 < segs.size(); ++i)
        joins.offer(linalg::distance(segs[i].end(), segs[i + 1].start()), wit({}, segs[i].t1()));

      const Membership m = planner_.membership(x, y);
      std::vector<std::optional<PlannedPath>> images(static_cast<std::size_t>(a_.order()));
      for (int g = 1; g < a_.order(); ++g) {
        a_.apply_into(GroupElement{g}, x.coords(), gx);
        a_.apply_into(GroupElement{g}, y.coords(), gy);
        const SpherePoint sgx = SpherePoint::trusted(gx), sgy = SpherePoint::trusted(gy);
        const Membership mg = planner_.membership(sgx, sgy);
        const bool same = mg.domains == m.domains;
        invariance.offer(same ? 0.0 : 1.0, wit(g));
        if (mg.contains(id)) images[static_cast<std::size_t>(g)] = planner_.plan_in(id, sgx, sgy);
        else equiv.offer(std::numeric_limits<double>::infinity(), wit(g));
      }
      for (double t : ts) {
        path.evaluate_into(t, p);
        norm.offer(std::fabs(linalg::norm(p) - 1.0), wit({}, t));
        for (int g = 1; g < a_.order(); ++g) {
          const auto& img = images[static_cast<std::size_t>(g)];
          if (!img) continue;
          a_.apply_into(GroupElement{g}, p, gp);
          img->evaluate_into(t, q);
          equiv.offer(linalg::distance(gp, q), wit(g, t));
        }
      }
    };

    std::string detail;
    for (DomainId id : planner_.domains()) {
      std::size_t produced = 0;
      for (std::size_t i = 0; i < cfg_.path_samples; ++i) {
        auto pr = pair_in(id, s);
        if (!pr) break;
        examine(id, pr->first, pr->second);
        ++produced;
      }
      detail += std::string(detail.empty() ? "" : ", ") + std::string(to_string(id)) + ": " +
                std::to_string(produced) + " pairs";
    }
    // Dispatcher on pairs outside U1.
    std::size_t dispatched = 0;
    for (const auto& [x, y] : antipodal_pairs(s, std::max<std::size_t>(1, cfg_.path_samples / 10))) {
      const Membership m = planner_.membership(x, y);
      if (m.domains.empty()) continue;
      examine(m.domains.front(), x, y);
      ++dispatched;
    }
    detail += ", antipodal dispatch: " + std::to_string(dispatched) + " pairs";

    out.push_back(finish("endpoints", endpoint, cfg_.tol.endpoint, paths, start, detail));
    out.push_back(finish("segment_joins", joins, cfg_.tol.endpoint, paths, start));
    out.push_back(finish("unit_norm", norm, cfg_.tol.unit_norm, paths * ts.size(), start));
    out.push_back(finish("equivariance", equiv, cfg_.tol.equivariance,
                         paths * ts.size() * static_cast<std::size_t>(a_.order() - 1), start));
    out.push_back(finish("domain_invariance", invariance, 0.0, paths * static_cast<std::size_t>(a_.order() - 1), start));
  }

  std::vector<const TangentField*> fields() const {
    if (auto* two = dynamic_cast<const TwoDomainPlanner*>(&planner_)) return {&two->field()};
    if (auto* three = dynamic_cast<const ThreeDomainPlanner*>(&planner_))
      return {&three->field(DomainId::D2), &three->field(DomainId::D3)};
    return {};
  }

  CheckResult tangency() {
    const auto start = Clock::now();
    SphereSampler s(cfg_.seed, rng::stream::kTangency);
    Worst worst;
    std::size_t n = 0;
    Vec v(dim_), gx(dim_), vg(dim_), gv(dim_);
    const auto fs = fields();
    for (std::size_t i = 0; i < cfg_.path_samples && !fs.empty(); ++i) {
      const Vec x = s.point(dim_);
      for (const TangentField* f : fs) {
        f->evaluate_into(x, v);
        worst.offer(std::fabs(linalg::dot(v, x)), [&] { return Witness{x, x, {}, {}, {}}; });
        for (int g = 1; g < a_.order(); ++g) {
          a_.apply_into(GroupElement{g}, x, gx);
          f->evaluate_into(gx, vg);
          a_.apply_into(GroupElement{g}, v, gv);
          worst.offer(linalg::distance(vg, gv), [&] { return Witness{x, x, g, {}, {}}; });
        }
        ++n;
      }
    }
    return finish("tangency", worst, cfg_.tol.tangency, n, start,
                  fs.empty() ? "planner uses no tangent field" : "max of |<v(x),x>| and |v(gx) - g v(x)|");
  }

  CheckResult continuity() {
    const auto start = Clock::now();
    SphereSampler s(cfg_.seed, rng::stream::kContinuity);
    const Vec ts = t_grid();
    Worst worst;
    std::size_t n = 0;
    std::string detail;
    Vec p(dim_), q(dim_);
    auto perturb = [&](const SpherePoint& x) {
      Vec v = x.vec();
      const Vec xi = s.point(dim_);
      for (std::size_t i = 0; i < dim_; ++i) v[i] += cfg_.continuity_delta * xi[i];
      return SpherePoint::normalize(std::move(v));
    };
    for (DomainId id : planner_.domains()) {
      double domain_c = 0.0;
      for (std::size_t i = 0; i < cfg_.continuity_samples; ++i) {
        auto pr = pair_in(id, s);
        if (!pr) break;
        const auto& [x, y] = *pr;
        const SpherePoint x2 = perturb(x), y2 = perturb(y);
        if (!planner_.membership(x2, y2).contains(id)) continue;
        const double delta = std::max(linalg::distance(x.coords(), x2.coords()), linalg::distance(y.coords(), y2.coords()));
        if (delta == 0.0) continue;
        const PlannedPath a = planner_.plan_in(id, x, y), b = planner_.plan_in(id, x2, y2);
        double sup = 0.0;
        for (double t : ts) {
          a.evaluate_into(t, p);
          b.evaluate_into(t, q);
          sup = std::max(sup, linalg::distance(p, q));
        }
        const double c = sup / delta;
        domain_c = std::max(domain_c, c);
        worst.offer(c, [&] { return Witness{x.vec(), y.vec(), {}, {}, id}; });
        ++n;
      }
      detail += std::string(detail.empty() ? "" : ", ") + "C(" + std::string(to_string(id)) + ") = " +
                std::to_string(domain_c);
    }
    return finish("continuity_smoke", worst, cfg_.continuity_limit, n, start, detail);
  }

  CheckResult oracle_consistency(const std::vector<std::string>& observed) {
    const auto start = Clock::now();
    const tc::TCValue v = tc::tc_equivariant(tc::SphereQuery::of(a_));
    const auto count = static_cast<int>(observed.size());
    const auto emitted = static_cast<int>(planner_.domains().size());
    Worst w;
    std::string detail = "observed " + std::to_string(count) + " of " + std::to_string(emitted) +
                         " domains; TC_G in " + v.render();
    double residual = count == emitted ? 0.0 : 1.0;
    if (tc::Bound(count) < v.lower) residual = std::max(residual, 1.0);
    bool selected = false;
    try {
      selected = select_planner_kind(a_) == planner_.kind();
    } catch (const Error&) {
    }
    if (selected) {
      const double gap = v.upper.is_infinite() ? 1.0 : std::fabs(count - v.upper.value());
      residual = std::max(residual, gap);
      detail += "; selected planner, count must equal the upper bound";
    }
    w.value = residual;
    return finish("oracle_consistency", w, 0.0, static_cast<std::size_t>(count), start, detail);
  }

  const CyclicLinearAction& a_;
  const EquivariantPlanner& planner_;
  const VerifyConfig& cfg_;
  std::size_t dim_;
};

}  // namespace detail

/// Seeded Monte-Carlo verification of one planner on one action. Failures,
/// including rejected preconditions, are report entries rather than throws.
inline VerifyReport run_verify(const ActionParams& raw, PlannerKind kind, const VerifyConfig& cfg) {
  VerifyReport report;
  report.action = raw;
  report.planner = std::string(to_string(kind));
  report.config = cfg;
  const auto start = detail::Clock::now();
  try {
    cfg.validate();
    const CyclicLinearAction a = CyclicLinearAction::validate(raw);
    report.action = a.params();
    const auto planner = make_planner(a, kind);
    detail::Harness h(a, *planner, cfg);
    report.checks = h.run(report.domains_observed);
  } catch (const Error& e) {
    report.error = std::string(to_string(e.code()));
    CheckResult c;
    c.name = "precondition";
    c.pass = false;
    c.worst_residual = 1.0;
    c.detail = e.what();
    c.elapsed_ms = detail::ms_since(start);
    c.witness = Witness{};
    report.checks.push_back(std::move(c));
  }
  report.verdict = !report.checks.empty() &&
                   std::all_of(report.checks.begin(), report.checks.end(), [](const CheckResult& c) { return c.pass; });
  return report;
}

inline std::string run_table(int max_n, const std::vector<int>& primes) { return tc::table_csv(max_n, primes); }

}  // namespace eqtc::verify
