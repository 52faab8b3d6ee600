#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "eqtc/action.hpp"
#include "eqtc/error.hpp"
#include "eqtc/linalg.hpp"
#include "eqtc/rng.hpp"

namespace eqtc {

enum class FieldKind { J, Projection };

constexpr std::string_view to_string(FieldKind k) { return k == FieldKind::J ? "j_field" : "projection_field"; }

/// Equivariant tangent field on the unit sphere of an action.
///
/// J: v(x) = Jx where J rotates each consecutive pair of fixed coordinates,
/// each rotation block and each pair of sign coordinates by 90 degrees. J is
/// orthogonal and skew, so v is unit length and tangent everywhere.
///
/// Projection: w(y) = e - <e,y> y for a fixed unit vector e. Vanishes exactly
/// at y = +-e.
class TangentField {
 public:
  FieldKind kind() const noexcept { return kind_; }
  const CyclicLinearAction& action() const noexcept { return action_; }
  /// The fixed vector of a projection field.
  const Vec& anchor() const noexcept { return anchor_; }

  void evaluate_into(std::span<const double> x, std::span<double> out) const {
    action_.require_dim(x.size());
    if (kind_ == FieldKind::J) {
      for (std::size_t i = 0; i + 1 < x.size(); i += 2) {
        out[i] = -x[i + 1];
        out[i + 1] = x[i];
      }
      return;
    }
    const double c = linalg::dot(anchor_, x);
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = anchor_[i] - c * x[i];
  }

  Vec operator()(std::span<const double> x) const {
    Vec out(x.size());
    evaluate_into(x, out);
    return out;
  }
  Vec operator()(const SpherePoint& x) const { return (*this)(x.coords()); }

  /// Row-major matrix of the linear map x -> v(x). Only the J field is linear.
  std::optional<Vec> matrix() const {
    if (kind_ != FieldKind::J) return std::nullopt;
    const std::size_t d = static_cast<std::size_t>(action_.ambient_dim());
    Vec m(d * d, 0.0);
    for (std::size_t i = 0; i + 1 < d; i += 2) {
      m[i * d + (i + 1)] = -1.0;
      m[(i + 1) * d + i] = 1.0;
    }
    return m;
  }

  friend TangentField j_field(const CyclicLinearAction& a);
  friend TangentField projection_field(const CyclicLinearAction& a, const SpherePoint& e);

 private:
  TangentField(FieldKind kind, CyclicLinearAction a, Vec anchor)
      : kind_(kind), action_(std::move(a)), anchor_(std::move(anchor)) {}

  FieldKind kind_;
  CyclicLinearAction action_;
  Vec anchor_;
};

/// Needs n odd and an even number of fixed coordinates (k odd, or k = -1).
/// Then fixed part, rotation blocks and sign part all pair up consecutively.
inline TangentField j_field(const CyclicLinearAction& a) {
  if (a.sphere_dim() % 2 == 0) throw Error(Errc::ParityMismatch, "J field needs an odd-dimensional sphere");
  if (a.fixed_dim() % 2 != 0) throw Error(Errc::ParityMismatch, "J field needs an odd-dimensional fixed sphere");
  // n odd and f even leave 2|weights| + s even, so s is even as well.
  return TangentField(FieldKind::J, a, {});
}

inline TangentField projection_field(const CyclicLinearAction& a, const SpherePoint& e) {
  a.require_dim(e.size());
  if (!a.is_fixed(e)) throw Error(Errc::NotAFixedPoint, "projection field anchor must be a fixed point");
  return TangentField(FieldKind::Projection, a, e.vec());
}

struct FieldCertificate {
  FieldKind kind = FieldKind::J;
  std::uint64_t seed = 0;
  std::size_t samples = 0;
  double max_tangency = 0.0;      // max |<v(x), x>|
  double max_equivariance = 0.0;  // max |v(gx) - g v(x)|
  double min_norm = std::numeric_limits<double>::infinity();
  Vec min_norm_witness;
  double max_norm_deviation_from_one = 0.0;
  std::optional<double> commutator_norm;  // max_g |J M(g) - M(g) J|, J field only
  std::vector<Vec> zero_locus;            // exact zero set, empty for J
};

/// Sampled certificate: uniform sphere samples plus, for projection fields,
/// points clustered at distances 10^-1 .. 10^-8 from +-e so the reported
/// minimum norm approaches the zero locus.
inline FieldCertificate field_certificate(const TangentField& field, std::uint64_t seed, std::size_t samples) {
  const CyclicLinearAction& a = field.action();
  const std::size_t d = static_cast<std::size_t>(a.ambient_dim());
  FieldCertificate cert;
  cert.kind = field.kind();
  cert.seed = seed;

  SphereSampler sampler(seed, rng::stream::kFieldCertificate);
  Vec v(d), gx(d), vgx(d), gv(d);
  auto visit = [&](const Vec& x) {
    field.evaluate_into(x, v);
    const double nv = linalg::norm(v);
    cert.max_tangency = std::fmax(cert.max_tangency, std::fabs(linalg::dot(v, x)));
    if (nv < cert.min_norm) {
      cert.min_norm = nv;
      cert.min_norm_witness = x;
    }
    cert.max_norm_deviation_from_one = std::fmax(cert.max_norm_deviation_from_one, std::fabs(nv - 1.0));
    for (int g = 1; g < a.order(); ++g) {
      a.apply_into(GroupElement{g}, x, gx);
      field.evaluate_into(gx, vgx);
      a.apply_into(GroupElement{g}, v, gv);
      cert.max_equivariance = std::fmax(cert.max_equivariance, linalg::distance(vgx, gv));
    }
    ++cert.samples;
  };

  for (std::size_t s = 0; s < samples; ++s) visit(sampler.point(d));

  if (field.kind() == FieldKind::Projection) {
    const Vec& e = field.anchor();
    cert.zero_locus = {e, linalg::negated(e)};
    for (const Vec& pole : cert.zero_locus)
      for (int exp10 = 1; exp10 <= 8; ++exp10) {
        const double radius = std::pow(10.0, -exp10);
        Vec dir = sampler.point(d);
        const double c = linalg::dot(dir, pole);
        for (std::size_t i = 0; i < d; ++i) dir[i] -= c * pole[i];
        const double nd = linalg::norm(dir);
        if (nd == 0.0) continue;
        Vec x(d);
        for (std::size_t i = 0; i < d; ++i) x[i] = std::cos(radius) * pole[i] + std::sin(radius) * dir[i] / nd;
        visit(x);
      }
  }

  if (auto jm = field.matrix()) {
    double worst = 0.0;
    for (int g = 0; g < a.order(); ++g) {
      const Vec m = a.matrix(GroupElement{g});
      worst = std::fmax(worst, linalg::max_abs_diff(linalg::matmul(*jm, m, d), linalg::matmul(m, *jm, d)));
    }
    cert.commutator_norm = worst;
  }
  return cert;
}

}  // namespace eqtc
