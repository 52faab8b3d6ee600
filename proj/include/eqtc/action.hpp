#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "eqtc/error.hpp"
#include "eqtc/linalg.hpp"

namespace eqtc {

using linalg::Vec;

inline constexpr double kOnSphereTol = 1e-12;
inline constexpr double kFixedTol = 1e-9;

inline constexpr bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

/// A unit vector in R^{n+1}. Construction either checks the norm or
/// normalizes; `trusted` is for values produced by norm-preserving maps.
class SpherePoint {
 public:
  SpherePoint() = default;

  static SpherePoint from_unit(Vec coords) {
    check_finite(coords);
    const double r = linalg::norm(coords);
    if (std::fabs(r - 1.0) > kOnSphereTol)
      throw Error(Errc::NotOnSphere, "norm " + std::to_string(r) + " is not 1 within 1e-12");
    return SpherePoint(std::move(coords));
  }

  static SpherePoint normalize(Vec coords) {
    check_finite(coords);
    const double r = linalg::norm(coords);
    if (!(r > 0.0)) throw Error(Errc::NotOnSphere, "cannot normalize the zero vector");
    for (double& c : coords) c /= r;
    return SpherePoint(std::move(coords));
  }

  static SpherePoint trusted(Vec coords) noexcept { return SpherePoint(std::move(coords)); }

  std::span<const double> coords() const noexcept { return coords_; }
  const Vec& vec() const noexcept { return coords_; }
  std::size_t size() const noexcept { return coords_.size(); }
  double operator[](std::size_t i) const { return coords_[i]; }

  SpherePoint operator-() const { return SpherePoint(linalg::negated(coords_)); }

  friend bool operator==(const SpherePoint&, const SpherePoint&) = default;

 private:
  explicit SpherePoint(Vec c) : coords_(std::move(c)) {}

  static void check_finite(const Vec& coords) {
    if (coords.size() < 2) throw Error(Errc::AmbientTooSmall, "sphere points need at least 2 coordinates");
    for (double c : coords)
      if (!std::isfinite(c)) throw Error(Errc::NotOnSphere, "non-finite coordinate");
  }

  Vec coords_;
};

/// Element g^exponent of Z/p. Composition is addition; reduction mod p
/// happens where the group order is known.
struct GroupElement {
  long exponent = 0;

  int residue(int p) const noexcept {
    const long r = exponent % p;
    return static_cast<int>(r < 0 ? r + p : r);
  }

  friend GroupElement operator+(GroupElement a, GroupElement b) { return {a.exponent + b.exponent}; }
  friend bool operator==(GroupElement, GroupElement) = default;
};

/// Raw, unvalidated action parameters as they appear in files.
struct ActionParams {
  int p = 2;
  int fixed_dim = 0;
  std::vector<int> weights;
  int sign_dim = 0;

  friend bool operator==(const ActionParams&, const ActionParams&) = default;
};

/// Orthogonal Z/p representation on R^{n+1}, stored in canonical block
/// order: `fixed_dim` trivial coordinates, then 2x2 rotation blocks sorted by
/// weight, then (p = 2 only) coordinates on which the generator acts by -1.
class CyclicLinearAction {
 public:
  static CyclicLinearAction validate(ActionParams raw) {
    if (!is_prime(raw.p)) throw Error(Errc::NonPrime, "group order " + std::to_string(raw.p) + " is not prime");
    if (raw.fixed_dim < 0 || raw.sign_dim < 0)
      throw Error(Errc::NegativeDimension, "fixed_dim and sign_dim must be non-negative");
    for (int q : raw.weights)
      if (q < 1 || q > raw.p - 1)
        throw Error(Errc::WeightOutOfRange, "weight " + std::to_string(q) + " outside [1, p-1]");
    if (raw.sign_dim != 0 && raw.p != 2)
      throw Error(Errc::SignBlockWithOddP, "sign summands need p = 2");
    const long ambient = raw.fixed_dim + 2L * static_cast<long>(raw.weights.size()) + raw.sign_dim;
    if (ambient < 2) throw Error(Errc::AmbientTooSmall, "ambient dimension must be at least 2");
    std::sort(raw.weights.begin(), raw.weights.end());
    return CyclicLinearAction(std::move(raw));
  }

  /// Some linear action on S^n with fixed set S^k. Odd p needs n - k even;
  /// p = 2 uses one sign summand when the codimension is odd.
  static CyclicLinearAction linear_sphere(int n, int k, int p) {
    if (n < 1 || k < -1 || k > n) throw Error(Errc::InvalidQuery, "need n >= 1 and -1 <= k <= n");
    const int codim = n - k;
    ActionParams raw{p, k + 1, {}, 0};
    if (p == 2) {
      raw.sign_dim = codim % 2;
      raw.weights.assign(static_cast<std::size_t>(codim / 2), 1);
    } else {
      if (codim % 2 != 0)
        throw Error(Errc::NotRealizable, "odd p needs an even codimension fixed sphere");
      for (int b = 0; b < codim / 2; ++b) raw.weights.push_back(1 + b % (p - 1));
    }
    return validate(std::move(raw));
  }

  int order() const noexcept { return params_.p; }
  int fixed_dim() const noexcept { return params_.fixed_dim; }
  std::span<const int> weights() const noexcept { return params_.weights; }
  int sign_dim() const noexcept { return params_.sign_dim; }
  const ActionParams& params() const noexcept { return params_; }

  int ambient_dim() const noexcept {
    return params_.fixed_dim + 2 * static_cast<int>(params_.weights.size()) + params_.sign_dim;
  }
  /// n, the dimension of the sphere S^n in R^{n+1}.
  int sphere_dim() const noexcept { return ambient_dim() - 1; }
  /// k = fixed_dim - 1; -1 encodes an empty fixed set.
  int fixed_sphere_dim() const noexcept { return params_.fixed_dim - 1; }
  bool is_trivial() const noexcept { return fixed_dim() == ambient_dim(); }

  void apply_into(GroupElement g, std::span<const double> x, std::span<double> out) const {
    require_dim(x.size());
    const int r = g.residue(order());
    const std::size_t f = static_cast<std::size_t>(fixed_dim());
    for (std::size_t i = 0; i < f; ++i) out[i] = x[i];
    std::size_t i = f;
    const auto& table = rotations_[static_cast<std::size_t>(r)];
    for (const auto& [c, s] : table) {
      const double a = x[i], b = x[i + 1];
      out[i] = c * a - s * b;
      out[i + 1] = s * a + c * b;
      i += 2;
    }
    const bool flip = (r % 2) == 1;  // only reachable with sign summands, i.e. p = 2
    for (; i < x.size(); ++i) out[i] = flip ? -x[i] : x[i];
  }

  SpherePoint apply(GroupElement g, const SpherePoint& x) const {
    Vec out(x.size());
    apply_into(g, x.coords(), out);
    return SpherePoint::trusted(std::move(out));
  }

  /// Row-major (n+1)x(n+1) matrix of g.
  Vec matrix(GroupElement g) const {
    const std::size_t d = static_cast<std::size_t>(ambient_dim());
    Vec m(d * d, 0.0);
    Vec col(d), e(d);
    for (std::size_t j = 0; j < d; ++j) {
      std::fill(e.begin(), e.end(), 0.0);
      e[j] = 1.0;
      apply_into(g, e, col);
      for (std::size_t i = 0; i < d; ++i) m[i * d + j] = col[i];
    }
    return m;
  }

  bool is_fixed(std::span<const double> x) const {
    require_dim(x.size());
    for (std::size_t i = static_cast<std::size_t>(fixed_dim()); i < x.size(); ++i)
      if (std::fabs(x[i]) > kFixedTol) return false;
    return true;
  }
  bool is_fixed(const SpherePoint& x) const { return is_fixed(x.coords()); }

  std::vector<SpherePoint> orbit(const SpherePoint& x) const {
    std::vector<SpherePoint> out;
    out.reserve(static_cast<std::size_t>(order()));
    for (int g = 0; g < order(); ++g) out.push_back(apply(GroupElement{g}, x));
    return out;
  }

  /// i-th canonical fixed basis vector.
  SpherePoint fixed_basis(int i) const {
    if (i < 0 || i >= fixed_dim()) throw Error(Errc::NoFixedPoint, "action has fewer fixed coordinates");
    Vec e(static_cast<std::size_t>(ambient_dim()), 0.0);
    e[static_cast<std::size_t>(i)] = 1.0;
    return SpherePoint::trusted(std::move(e));
  }

  void require_dim(std::size_t size) const {
    if (size != static_cast<std::size_t>(ambient_dim()))
      throw Error(Errc::DimensionMismatch, "expected " + std::to_string(ambient_dim()) + " coordinates, got " +
                                               std::to_string(size));
  }

  friend bool operator==(const CyclicLinearAction& a, const CyclicLinearAction& b) { return a.params_ == b.params_; }

 private:
  explicit CyclicLinearAction(ActionParams p) : params_(std::move(p)) {
    const int order = params_.p;
    rotations_.resize(static_cast<std::size_t>(order));
    for (int r = 0; r < order; ++r)
      for (int q : params_.weights) rotations_[static_cast<std::size_t>(r)].push_back(root_of_unity(q * r % order, order));
  }

  // (cos, sin) of 2*pi*r/p; angles 0 and pi are exact, and r and p - r are
  // exact conjugates so g^{-1} is exactly the transpose of g.
  static std::pair<double, double> root_of_unity(int r, int p) {
    if (r == 0) return {1.0, 0.0};
    if (2 * r == p) return {-1.0, 0.0};
    if (2 * r > p) {
      const auto [c, s] = root_of_unity(p - r, p);
      return {c, -s};
    }
    const double angle = 2.0 * std::numbers::pi * r / p;
    return {std::cos(angle), std::sin(angle)};
  }

  ActionParams params_;
  std::vector<std::vector<std::pair<double, double>>> rotations_;
};

}  // namespace eqtc
