#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "eqtc/action.hpp"
#include "eqtc/error.hpp"
#include "eqtc/linalg.hpp"

namespace eqtc {

inline constexpr double kMembershipTol = 1e-9;

// Below this angle cosine the slerp weights lose precision; use the
// normalized chord instead. Both limits agree at theta = 0.
inline constexpr double kSlerpFallbackCos = 1.0 - 1e-12;

enum class SegmentKind {
  Geodesic,  // constant-speed great-circle arc, from != -to
  FieldArc,  // t -> -cos(pi t) y + sin(pi t) u, runs -y -> y through u
  Chord,     // t -> normalize((1-t) from + t to), the straight-line homotopy
};

constexpr std::string_view to_string(SegmentKind k) {
  switch (k) {
    case SegmentKind::Geodesic: return "geodesic";
    case SegmentKind::FieldArc: return "field_arc";
    case SegmentKind::Chord: return "chord";
  }
  return "?";
}

/// One closed-form leg of a path, active on [t0, t1].
class PathSegment {
 public:
  static PathSegment geodesic(Vec from, Vec to, double t0, double t1) {
    const double sep = linalg::sum_norm(from, to);
    if (sep <= kMembershipTol) throw Error(Errc::AntipodalPair, "geodesic endpoints are antipodal");
    PathSegment s(SegmentKind::Geodesic, std::move(from), std::move(to), t0, t1);
    // 2 atan2(|x-y|, |x+y|) is accurate at both ends of [0, pi].
    s.theta_ = 2.0 * std::atan2(linalg::distance(s.a_, s.b_), sep);
    s.linear_ = linalg::dot(s.a_, s.b_) > kSlerpFallbackCos;
    s.sin_theta_ = std::sin(s.theta_);
    s.constant_ = s.a_ == s.b_;
    return s;
  }

  /// Arc from -y to y leaving in direction u; u must be a unit vector
  /// orthogonal to y.
  static PathSegment field_arc(Vec y, Vec u, double t0, double t1) {
    return PathSegment(SegmentKind::FieldArc, std::move(y), std::move(u), t0, t1);
  }

  static PathSegment chord(Vec from, Vec to, double t0, double t1) {
    if (linalg::sum_norm(from, to) <= kMembershipTol)
      throw Error(Errc::AntipodalPair, "chord through the origin");
    return PathSegment(SegmentKind::Chord, std::move(from), std::move(to), t0, t1);
  }

  SegmentKind kind() const noexcept { return kind_; }
  double t0() const noexcept { return t0_; }
  double t1() const noexcept { return t1_; }

  /// Geodesic/Chord: endpoints. FieldArc: the goal y and the direction u.
  const Vec& first() const noexcept { return a_; }
  const Vec& second() const noexcept { return b_; }

  /// Segment start and end points.
  Vec start() const {
    return kind_ == SegmentKind::FieldArc ? linalg::negated(a_) : a_;
  }
  const Vec& end() const noexcept { return kind_ == SegmentKind::FieldArc ? a_ : b_; }

  /// Evaluate at local time tau in [0, 1]; tau = 0 and tau = 1 return the
  /// stored endpoints exactly.
  void evaluate_local(double tau, std::span<double> out) const {
    const std::size_t d = a_.size();
    if (tau <= 0.0) {
      for (std::size_t i = 0; i < d; ++i) out[i] = kind_ == SegmentKind::FieldArc ? -a_[i] : a_[i];
      return;
    }
    if (tau >= 1.0 || constant_) {
      const Vec& e = end();
      std::copy(e.begin(), e.end(), out.begin());
      return;
    }
    switch (kind_) {
      case SegmentKind::Geodesic:
        if (!linear_) {
          const double wa = std::sin((1.0 - tau) * theta_) / sin_theta_;
          const double wb = std::sin(tau * theta_) / sin_theta_;
          for (std::size_t i = 0; i < d; ++i) out[i] = wa * a_[i] + wb * b_[i];
          return;
        }
        [[fallthrough]];
      case SegmentKind::Chord: {
        double r2 = 0.0;
        for (std::size_t i = 0; i < d; ++i) {
          out[i] = (1.0 - tau) * a_[i] + tau * b_[i];
          r2 += out[i] * out[i];
        }
        const double r = std::sqrt(r2);
        for (std::size_t i = 0; i < d; ++i) out[i] /= r;
        return;
      }
      case SegmentKind::FieldArc: {
        const double c = -std::cos(std::numbers::pi * tau);
        const double s = std::sin(std::numbers::pi * tau);
        for (std::size_t i = 0; i < d; ++i) out[i] = c * a_[i] + s * b_[i];
        return;
      }
    }
  }

 private:
  PathSegment(SegmentKind k, Vec a, Vec b, double t0, double t1)
      : kind_(k), a_(std::move(a)), b_(std::move(b)), t0_(t0), t1_(t1) {}

  SegmentKind kind_;
  Vec a_, b_;
  double t0_, t1_;
  double theta_ = 0.0, sin_theta_ = 0.0;
  bool linear_ = false;
  bool constant_ = false;
};

enum class DomainId { U1, U2, D2, D3, W11, W12, W21, W22 };

inline constexpr DomainId kAllDomains[] = {DomainId::U1,  DomainId::U2,  DomainId::D2,  DomainId::D3,
                                           DomainId::W11, DomainId::W12, DomainId::W21, DomainId::W22};

constexpr std::string_view to_string(DomainId id) {
  switch (id) {
    case DomainId::U1: return "U1";
    case DomainId::U2: return "U2";
    case DomainId::D2: return "D2";
    case DomainId::D3: return "D3";
    case DomainId::W11: return "W11";
    case DomainId::W12: return "W12";
    case DomainId::W21: return "W21";
    case DomainId::W22: return "W22";
  }
  return "?";
}

inline DomainId parse_domain(std::string_view s) {
  for (DomainId id : kAllDomains)
    if (to_string(id) == s) return id;
  throw Error(Errc::ParseError, "unknown domain '" + std::string(s) + "'");
}

/// Piecewise closed-form path on S^n covering [0, 1].
class PlannedPath {
 public:
  PlannedPath(std::vector<PathSegment> segments, DomainId domain)
      : segments_(std::move(segments)), domain_(domain) {}

  DomainId domain() const noexcept { return domain_; }
  const std::vector<PathSegment>& segments() const noexcept { return segments_; }
  std::size_t ambient_dim() const noexcept { return segments_.front().first().size(); }

  void evaluate_into(double t, std::span<double> out) const {
    t = std::clamp(t, 0.0, 1.0);
    // Shared breakpoints belong to the earlier segment; both sides agree there.
    for (const PathSegment& s : segments_) {
      if (t <= s.t1() || &s == &segments_.back()) {
        const double span = s.t1() - s.t0();
        s.evaluate_local(span > 0.0 ? (t - s.t0()) / span : 1.0, out);
        return;
      }
    }
  }

  SpherePoint evaluate(double t) const {
    Vec out(ambient_dim());
    evaluate_into(t, out);
    return SpherePoint::trusted(std::move(out));
  }

 private:
  std::vector<PathSegment> segments_;
  DomainId domain_;
};

}  // namespace eqtc
