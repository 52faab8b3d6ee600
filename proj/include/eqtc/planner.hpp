#pragma once

#include <algorithm>
#include <cmath>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "eqtc/action.hpp"
#include "eqtc/error.hpp"
#include "eqtc/linalg.hpp"
#include "eqtc/path.hpp"
#include "eqtc/vfield.hpp"

namespace eqtc {

enum class PlannerKind { Two, Three, Hemisphere };

constexpr std::string_view to_string(PlannerKind k) {
  switch (k) {
    case PlannerKind::Two: return "two";
    case PlannerKind::Three: return "three";
    case PlannerKind::Hemisphere: return "hemisphere";
  }
  return "?";
}

struct Membership {
  std::vector<DomainId> domains;  // in selection order
  bool ambiguous = false;         // some predicate is within 2*eta of its boundary

  bool contains(DomainId id) const { return std::find(domains.begin(), domains.end(), id) != domains.end(); }
  friend bool operator==(const Membership&, const Membership&) = default;
};

namespace detail {

// Open-set predicate "q > eta" with the ambiguity band (0, 2 eta].
inline bool open_test(double q, bool& ambiguous) {
  if (q > 0.0 && q <= 2.0 * kMembershipTol) ambiguous = true;
  return q > kMembershipTol;
}

inline Vec normalized(Vec v) {
  const double r = linalg::norm(v);
  for (double& c : v) c /= r;
  return v;
}

}  // namespace detail

/// s1: constant-speed shortest arc. Equivariant under any orthogonal action.
inline PlannedPath geodesic_planner(const SpherePoint& x, const SpherePoint& y) {
  if (x.size() != y.size()) throw Error(Errc::DimensionMismatch, "endpoints live on different spheres");
  std::vector<PathSegment> segs;
  segs.push_back(PathSegment::geodesic(x.vec(), y.vec(), 0.0, 1.0));
  return PlannedPath(std::move(segs), DomainId::U1);
}

/// Shortest arc x -> -y on [0, 1/2], then the half great circle -y -> y
/// leaving in direction u on [1/2, 1]. u must be unit and orthogonal to y.
inline PlannedPath antipodal_arc_planner(const SpherePoint& x, const SpherePoint& y, Vec u, DomainId id) {
  if (x.size() != y.size() || u.size() != y.size())
    throw Error(Errc::DimensionMismatch, "endpoints live on different spheres");
  if (linalg::distance(x.coords(), y.coords()) <= kMembershipTol)
    throw Error(Errc::CoincidentPair, "x = y is outside every field-arc domain");
  std::vector<PathSegment> segs;
  segs.push_back(PathSegment::geodesic(x.vec(), linalg::negated(y.coords()), 0.0, 0.5));
  segs.push_back(PathSegment::field_arc(y.vec(), std::move(u), 0.5, 1.0));
  return PlannedPath(std::move(segs), id);
}

/// Common surface of the explicit planners. Each owns an open invariant
/// cover of S^n x S^n and an equivariant planner per domain.
class EquivariantPlanner {
 public:
  virtual ~EquivariantPlanner() = default;

  virtual PlannerKind kind() const noexcept = 0;
  /// Every domain id this planner can emit.
  virtual std::span<const DomainId> domains() const noexcept = 0;
  virtual Membership membership(const SpherePoint& x, const SpherePoint& y) const = 0;

  /// Planner of one specific domain; throws OutsideDomain if (x, y) fails
  /// that domain's predicate.
  virtual PlannedPath plan_in(DomainId id, const SpherePoint& x, const SpherePoint& y) const = 0;

  /// Lowest-index containing domain.
  PlannedPath plan(const SpherePoint& x, const SpherePoint& y) const {
    const Membership m = membership(x, y);
    if (m.domains.empty()) throw Error(Errc::OutsideDomain, "pair lies in no domain");
    return plan_in(m.domains.front(), x, y);
  }

  const CyclicLinearAction& action() const noexcept { return action_; }

 protected:
  explicit EquivariantPlanner(CyclicLinearAction a) : action_(std::move(a)) {}

  void check_pair(const SpherePoint& x, const SpherePoint& y) const {
    action_.require_dim(x.size());
    action_.require_dim(y.size());
  }

  void require_member(DomainId id, const SpherePoint& x, const SpherePoint& y) const {
    if (!membership(x, y).contains(id))
      throw Error(Errc::OutsideDomain, "pair is not in domain " + std::string(to_string(id)));
  }

  CyclicLinearAction action_;
};

/// Two-domain cover for n and k both odd:
///   U1 = {x != -y}: shortest arc.
///   U2 = {x != y}:  shortest arc x -> -y, then the arc -y -> y along Jy.
class TwoDomainPlanner final : public EquivariantPlanner {
 public:
  explicit TwoDomainPlanner(const CyclicLinearAction& a) : EquivariantPlanner(a), field_(make_field(a)) {}

  PlannerKind kind() const noexcept override { return PlannerKind::Two; }
  std::span<const DomainId> domains() const noexcept override { return kDomains; }

  Membership membership(const SpherePoint& x, const SpherePoint& y) const override {
    check_pair(x, y);
    Membership m;
    if (detail::open_test(linalg::sum_norm(x.coords(), y.coords()), m.ambiguous)) m.domains.push_back(DomainId::U1);
    if (detail::open_test(linalg::distance(x.coords(), y.coords()), m.ambiguous)) m.domains.push_back(DomainId::U2);
    return m;
  }

  PlannedPath plan_in(DomainId id, const SpherePoint& x, const SpherePoint& y) const override {
    require_member(id, x, y);
    if (id == DomainId::U1) return geodesic_planner(x, y);
    return antipodal_arc_planner(x, y, field_(y), DomainId::U2);
  }

  const TangentField& field() const noexcept { return field_; }

 private:
  static constexpr DomainId kDomains[] = {DomainId::U1, DomainId::U2};

  static TangentField make_field(const CyclicLinearAction& a) {
    if (a.sphere_dim() % 2 == 0) throw Error(Errc::ParityMismatch, "two-domain planner needs n odd");
    if (a.fixed_sphere_dim() < 1) throw Error(Errc::NoFixedPoint, "two-domain planner needs a fixed sphere S^k, k >= 1");
    if (a.fixed_sphere_dim() % 2 == 0) throw Error(Errc::ParityMismatch, "two-domain planner needs k odd");
    return j_field(a);
  }

  TangentField field_;
};

/// Three-domain cover for any action whose fixed set contains a circle.
/// With e, e' the first two fixed basis vectors:
///   U1 = {x != -y}:                 shortest arc.
///   D2 = {x != y, y not in {+-e}}:  x -> -y, then -y -> y along e - <e,y>y.
///   D3 = {x != y, y not in {+-e'}}: the same with e'.
/// A pair outside U1 has x = -y != y, and y cannot equal +-e and +-e' at once.
class ThreeDomainPlanner final : public EquivariantPlanner {
 public:
  explicit ThreeDomainPlanner(const CyclicLinearAction& a)
      : EquivariantPlanner(a),
        first_(make_field(a, 0)),
        second_(make_field(a, 1)) {}

  PlannerKind kind() const noexcept override { return PlannerKind::Three; }
  std::span<const DomainId> domains() const noexcept override { return kDomains; }

  Membership membership(const SpherePoint& x, const SpherePoint& y) const override {
    check_pair(x, y);
    Membership m;
    if (detail::open_test(linalg::sum_norm(x.coords(), y.coords()), m.ambiguous)) m.domains.push_back(DomainId::U1);
    const bool distinct = detail::open_test(linalg::distance(x.coords(), y.coords()), m.ambiguous);
    const bool off_e = away_from_poles(first_.anchor(), y, m.ambiguous);
    const bool off_e2 = away_from_poles(second_.anchor(), y, m.ambiguous);
    if (distinct && off_e) m.domains.push_back(DomainId::D2);
    if (distinct && off_e2) m.domains.push_back(DomainId::D3);
    return m;
  }

  PlannedPath plan_in(DomainId id, const SpherePoint& x, const SpherePoint& y) const override {
    require_member(id, x, y);
    if (id == DomainId::U1) return geodesic_planner(x, y);
    const TangentField& w = id == DomainId::D2 ? first_ : second_;
    return antipodal_arc_planner(x, y, detail::normalized(w(y)), id);
  }

  const TangentField& field(DomainId id) const { return id == DomainId::D3 ? second_ : first_; }

 private:
  static constexpr DomainId kDomains[] = {DomainId::U1, DomainId::D2, DomainId::D3};

  static TangentField make_field(const CyclicLinearAction& a, int index) {
    if (a.fixed_sphere_dim() < 1) throw Error(Errc::NoFixedCircle, "three-domain planner needs k >= 1");
    return projection_field(a, a.fixed_basis(index));
  }

  static bool away_from_poles(const Vec& e, const SpherePoint& y, bool& ambiguous) {
    const bool a = detail::open_test(linalg::distance(y.coords(), e), ambiguous);
    const bool b = detail::open_test(linalg::sum_norm(y.coords(), e), ambiguous);
    return a && b;
  }

  TangentField first_, second_;
};

/// Straight-line homotopy of a collared hemisphere onto a fixed pole:
/// H(x, t) = ((1-t)x + t*pole) / |(1-t)x + t*pole| with pole = +-e_0.
class HemisphereTrack {
 public:
  HemisphereTrack(Vec x, Vec pole) : x_(std::move(x)), pole_(std::move(pole)) {}

  const Vec& start() const noexcept { return x_; }
  const Vec& pole() const noexcept { return pole_; }

  double denominator(double t) const {
    double r2 = 0.0;
    for (std::size_t i = 0; i < x_.size(); ++i) {
      const double c = (1.0 - t) * x_[i] + t * pole_[i];
      r2 += c * c;
    }
    return std::sqrt(r2);
  }

  SpherePoint evaluate(double t) const {
    if (t <= 0.0) return SpherePoint::trusted(x_);
    if (t >= 1.0) return SpherePoint::trusted(pole_);
    Vec out(x_.size());
    for (std::size_t i = 0; i < x_.size(); ++i) out[i] = (1.0 - t) * x_[i] + t * pole_[i];
    const double r = linalg::norm(out);
    for (double& c : out) c /= r;
    return SpherePoint::trusted(std::move(out));
  }

 private:
  Vec x_, pole_;
};

/// Collared hemisphere S^n_{+-} = {<x, +-e_0> > -1/2} and its contraction
/// onto the pole +-e_0, e_0 the first fixed coordinate.
inline bool in_collar(const CyclicLinearAction& a, const SpherePoint& x, int pole_sign) {
  a.require_dim(x.size());
  if (a.fixed_dim() < 1) throw Error(Errc::NoFixedPoint, "collared hemispheres need a fixed pole");
  return pole_sign * x[0] > -0.5;
}

inline HemisphereTrack hemisphere_cover(const CyclicLinearAction& a, const SpherePoint& x, int pole_sign) {
  if (pole_sign != 1 && pole_sign != -1) throw std::invalid_argument("pole_sign must be +1 or -1");
  if (!in_collar(a, x, pole_sign)) throw Error(Errc::OutsideCollar, "point is outside the collared hemisphere");
  Vec pole(x.size(), 0.0);
  pole[0] = pole_sign;
  return HemisphereTrack(x.vec(), std::move(pole));
}

/// Product of the two G-categorical hemispheres: W_ij = S^n_i x S^n_j. A
/// path contracts x to pole i, crosses the fixed circle to pole j if needed,
/// and expands to y. Four domains; needs k >= 1 to join the poles.
class HemispherePlanner final : public EquivariantPlanner {
 public:
  explicit HemispherePlanner(const CyclicLinearAction& a) : EquivariantPlanner(a) {
    if (a.fixed_sphere_dim() < 1) throw Error(Errc::NoFixedCircle, "joining the poles needs k >= 1");
  }

  PlannerKind kind() const noexcept override { return PlannerKind::Hemisphere; }
  std::span<const DomainId> domains() const noexcept override { return kDomains; }

  Membership membership(const SpherePoint& x, const SpherePoint& y) const override {
    check_pair(x, y);
    Membership m;
    // <x, e0> > -1/2 for the northern collar, < 1/2 for the southern one.
    const bool xn = detail::open_test(x[0] + 0.5, m.ambiguous);
    const bool xs = detail::open_test(0.5 - x[0], m.ambiguous);
    const bool yn = detail::open_test(y[0] + 0.5, m.ambiguous);
    const bool ys = detail::open_test(0.5 - y[0], m.ambiguous);
    if (xn && yn) m.domains.push_back(DomainId::W11);
    if (xn && ys) m.domains.push_back(DomainId::W12);
    if (xs && yn) m.domains.push_back(DomainId::W21);
    if (xs && ys) m.domains.push_back(DomainId::W22);
    return m;
  }

  PlannedPath plan_in(DomainId id, const SpherePoint& x, const SpherePoint& y) const override {
    require_member(id, x, y);
    const double from_sign = (id == DomainId::W11 || id == DomainId::W12) ? 1.0 : -1.0;
    const double to_sign = (id == DomainId::W11 || id == DomainId::W21) ? 1.0 : -1.0;
    const std::size_t d = x.size();
    Vec from_pole(d, 0.0), to_pole(d, 0.0), bridge(d, 0.0);
    from_pole[0] = from_sign;
    to_pole[0] = to_sign;
    bridge[1] = 1.0;
    std::vector<PathSegment> segs;
    segs.push_back(PathSegment::chord(x.vec(), from_pole, 0.0, 1.0 / 3.0));
    if (from_sign == to_sign)
      segs.push_back(PathSegment::geodesic(from_pole, to_pole, 1.0 / 3.0, 2.0 / 3.0));
    else
      segs.push_back(PathSegment::field_arc(to_pole, bridge, 1.0 / 3.0, 2.0 / 3.0));
    segs.push_back(PathSegment::chord(to_pole, y.vec(), 2.0 / 3.0, 1.0));
    return PlannedPath(std::move(segs), id);
  }

 private:
  static constexpr DomainId kDomains[] = {DomainId::W11, DomainId::W12, DomainId::W21, DomainId::W22};
};

inline std::unique_ptr<EquivariantPlanner> make_planner(const CyclicLinearAction& a, PlannerKind kind) {
  switch (kind) {
    case PlannerKind::Two: return std::make_unique<TwoDomainPlanner>(a);
    case PlannerKind::Three: return std::make_unique<ThreeDomainPlanner>(a);
    case PlannerKind::Hemisphere: return std::make_unique<HemispherePlanner>(a);
  }
  throw std::invalid_argument("unknown planner kind");
}

/// The planner whose domain count matches TC_G: two domains when n and k are
/// both odd, three otherwise. Needs k >= 1.
inline PlannerKind select_planner_kind(const CyclicLinearAction& a) {
  if (a.fixed_sphere_dim() < 1) throw Error(Errc::NoFixedCircle, "explicit planners need k >= 1");
  const bool odd_odd = a.sphere_dim() % 2 == 1 && a.fixed_sphere_dim() % 2 == 1;
  return odd_odd ? PlannerKind::Two : PlannerKind::Three;
}

inline Membership domain_membership(const CyclicLinearAction& a, const SpherePoint& x, const SpherePoint& y,
                                    PlannerKind kind) {
  return make_planner(a, kind)->membership(x, y);
}

}  // namespace eqtc
