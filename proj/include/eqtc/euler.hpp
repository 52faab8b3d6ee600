#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "eqtc/action.hpp"
#include "eqtc/error.hpp"

// Burnside-ring arithmetic and equivariant Euler characteristics for finite
// cyclic groups Z/m. A subgroup of Z/m is identified by its order d | m.
namespace eqtc::euler {

inline std::vector<int> divisors(int m) {
  std::vector<int> out;
  for (int d = 1; d <= m; ++d)
    if (m % d == 0) out.push_back(d);
  return out;
}

/// Subgroup of order d in Z/m.
struct Subgroup {
  int order = 1;

  /// H <= K in a cyclic group iff |H| divides |K|.
  bool contained_in(Subgroup k) const noexcept { return k.order % order == 0; }
  friend auto operator<=>(const Subgroup&, const Subgroup&) = default;
};

/// Weyl group order |W_G H| = |G/H| (G abelian).
inline long weyl_order(int group_order, Subgroup h) { return group_order / h.order; }

/// Integer combination of the transitive G-sets [G/H].
class BurnsideElement {
 public:
  explicit BurnsideElement(int group_order) : m_(group_order) {
    for (int d : divisors(m_)) coeff_[d] = 0;
  }

  int group_order() const noexcept { return m_; }
  long long coefficient(Subgroup h) const { return coeff_.at(h.order); }
  long long& coefficient(Subgroup h) { return coeff_.at(h.order); }
  /// Coefficient of [G/G].
  long long fixed_part() const { return coefficient({m_}); }
  /// Coefficient of [G/e].
  long long free_part() const { return coefficient({1}); }
  const std::map<int, long long>& coefficients() const noexcept { return coeff_; }

  bool is_zero() const {
    return std::all_of(coeff_.begin(), coeff_.end(), [](const auto& kv) { return kv.second == 0; });
  }

  BurnsideElement& operator+=(const BurnsideElement& o) {
    if (o.m_ != m_) throw Error(Errc::InvalidComplex, "adding Burnside elements of different groups");
    for (auto& [d, c] : coeff_) c += o.coeff_.at(d);
    return *this;
  }
  friend BurnsideElement operator+(BurnsideElement a, const BurnsideElement& b) { return a += b; }
  friend bool operator==(const BurnsideElement&, const BurnsideElement&) = default;

  /// e.g. "2[G/G] + 0[G/e]" (largest subgroup first).
  std::string to_string() const {
    std::string out;
    for (auto it = coeff_.rbegin(); it != coeff_.rend(); ++it) {
      if (!out.empty()) out += " + ";
      out += std::to_string(it->second) + "[G/" + subgroup_name(it->first) + "]";
    }
    return out;
  }

 private:
  std::string subgroup_name(int d) const {
    if (d == m_) return "G";
    if (d == 1) return "e";
    return "C" + std::to_string(d);
  }

  int m_;
  std::map<int, long long> coeff_;
};

enum class GroupKind { Cyclic, Other };

struct GCWCell {
  int dim = 0;
  int isotropy = 1;  // order of the isotropy subgroup K; cell type G/K
  long long count = 0;
  friend bool operator==(const GCWCell&, const GCWCell&) = default;
};

/// Equivariant cell inventory of a finite G-CW complex.
struct GCWComplex {
  int group_order = 1;
  GroupKind group = GroupKind::Cyclic;
  std::vector<GCWCell> cells;

  void validate() const {
    if (group_order < 1) throw Error(Errc::InvalidComplex, "group order must be positive");
    for (const GCWCell& c : cells) {
      if (c.dim < 0) throw Error(Errc::InvalidComplex, "negative cell dimension");
      if (c.count < 0) throw Error(Errc::InvalidComplex, "negative cell count");
      if (c.isotropy < 1 || group_order % c.isotropy != 0)
        throw Error(Errc::InvalidComplex, "isotropy order " + std::to_string(c.isotropy) + " does not divide " +
                                              std::to_string(group_order));
    }
  }

  int dimension() const {
    int d = -1;
    for (const GCWCell& c : cells)
      if (c.count > 0) d = std::max(d, c.dim);
    return d;
  }

  friend GCWComplex disjoint_union(GCWComplex a, const GCWComplex& b) {
    if (a.group_order != b.group_order) throw Error(Errc::InvalidComplex, "disjoint union of different groups");
    a.cells.insert(a.cells.end(), b.cells.begin(), b.cells.end());
    return a;
  }
  friend bool operator==(const GCWComplex&, const GCWComplex&) = default;
};

inline long long sign_of_dim(int d) { return d % 2 == 0 ? 1 : -1; }

/// chi^G(X) = sum over types (H) and dimensions n of (-1)^n nu(n, (H)) [G/H].
inline BurnsideElement euler_definition(const GCWComplex& c) {
  c.validate();
  BurnsideElement chi(c.group_order);
  for (const GCWCell& cell : c.cells) chi.coefficient({cell.isotropy}) += sign_of_dim(cell.dim) * cell.count;
  return chi;
}

/// chi^G(X) via the fixed-point expression sum_H chi((X^H, X^{>H}) / W_G H) [G/H].
///
/// Works on the underlying non-equivariant cells: one G-cell of type G/K
/// contributes |G/K| ordinary cells, all of them fixed by H whenever H <= K
/// (G abelian). chi(X^H) - chi(X^{>H}) counts the relative cells, and W_G H
/// acts freely on X^H - X^{>H} (points there have isotropy exactly H), so
/// the orbit Euler characteristic is that count divided by |W_G H|.
inline BurnsideElement euler_fixed_point_formula(const GCWComplex& c) {
  if (c.group != GroupKind::Cyclic) throw Error(Errc::NonCyclicGroup, "fixed-point formula is implemented for cyclic groups");
  c.validate();
  const int m = c.group_order;
  BurnsideElement chi(m);
  for (int h : divisors(m)) {
    const Subgroup H{h};
    long long chi_fixed = 0;   // chi(X^H)
    long long chi_larger = 0;  // chi(X^{>H})
    for (const GCWCell& cell : c.cells) {
      const Subgroup K{cell.isotropy};
      if (!H.contained_in(K)) continue;
      const long long ordinary = cell.count * (m / cell.isotropy) * sign_of_dim(cell.dim);
      chi_fixed += ordinary;
      if (K != H) chi_larger += ordinary;
    }
    const long long relative = chi_fixed - chi_larger;
    const long w = weyl_order(m, H);
    if (relative % w != 0) throw Error(Errc::NonIntegralQuotient, "relative Euler characteristic not divisible by |W_G H|");
    chi.coefficient(H) = relative / w;
  }
  return chi;
}

/// chi(S^d) with chi(S^{-1}) = chi(empty) = 0.
inline int sphere_euler(int d) {
  if (d < 0) return 0;
  return d % 2 == 0 ? 2 : 0;
}

/// Join cell structure of a linear Z/p-sphere S^n = S^k * S^{n-k-1}:
///   S^k with two cells per dimension 0..k, type G/G;
///   S^{n-k-1} with one free orbit cell per dimension 0..n-k-1;
///   one free cell of dimension a+b+1 per (fixed a-cell, free b-orbit) pair.
inline GCWComplex linear_sphere_gcw(const CyclicLinearAction& a) {
  const int p = a.order();
  const int k = a.fixed_sphere_dim();
  const int free_top = a.sphere_dim() - k - 1;  // dimension of the free sphere
  GCWComplex c{p, GroupKind::Cyclic, {}};
  for (int d = 0; d <= k; ++d) c.cells.push_back({d, p, 2});
  for (int b = 0; b <= free_top; ++b) c.cells.push_back({b, 1, 1});
  for (int d = 0; d <= k; ++d)
    for (int b = 0; b <= free_top; ++b) c.cells.push_back({d + b + 1, 1, 2});
  return c;
}

/// chi(S^n / G) = chi(S^k) + (chi(S^n) - chi(S^k)) / p for raw (n, k, p).
inline long long orbit_space_euler(int n, int k, int p) {
  if (p < 2) throw Error(Errc::NonPrime, "group order must be at least 2");
  const int diff = sphere_euler(n) - sphere_euler(k);
  if (diff % p != 0)
    throw Error(Errc::NonIntegralQuotient, "(chi(S^n) - chi(S^k)) is not divisible by p; no such action exists");
  return sphere_euler(k) + diff / p;
}

inline long long orbit_space_euler(const CyclicLinearAction& a) {
  return orbit_space_euler(a.sphere_dim(), a.fixed_sphere_dim(), a.order());
}

/// Dimension with the empty set mapped to a -infinity sentinel.
inline constexpr int kEmptyDim = std::numeric_limits<int>::min();

struct WeakGapEntry {
  int isotropy = 1;        // orbit type (H)
  int fixed_dim = 0;       // dim X^H
  int larger_dim = 0;      // dim X^{>H}, kEmptyDim if empty
  bool holds = true;       // larger_dim <= fixed_dim - 2
};

struct WeakGapReport {
  bool holds = true;
  std::vector<WeakGapEntry> entries;
};

/// Weak gap hypothesis dim X^{>H} <= dim X^H - 2 for every orbit type H that
/// occurs. Uses the dimension of the whole fixed set; for linear spheres the
/// relevant components are the whole sets (free points) or have empty
/// X^{>G} (fixed points), so this is exact there.
inline WeakGapReport weak_gap_check(const GCWComplex& c) {
  c.validate();
  WeakGapReport report;
  for (int h : divisors(c.group_order)) {
    const Subgroup H{h};
    bool occurs = false;
    int fixed_dim = kEmptyDim, larger_dim = kEmptyDim;
    for (const GCWCell& cell : c.cells) {
      if (cell.count == 0) continue;
      const Subgroup K{cell.isotropy};
      if (K == H) occurs = true;
      if (!H.contained_in(K)) continue;
      fixed_dim = std::max(fixed_dim, cell.dim);
      if (K != H) larger_dim = std::max(larger_dim, cell.dim);
    }
    if (!occurs) continue;
    WeakGapEntry e{h, fixed_dim, larger_dim, larger_dim == kEmptyDim || larger_dim <= fixed_dim - 2};
    report.holds = report.holds && e.holds;
    report.entries.push_back(e);
  }
  return report;
}

/// For Z/p linear spheres: free points need k <= n - 2 (or no fixed set);
/// fixed points have X^{>G} empty.
inline WeakGapReport weak_gap_check(const CyclicLinearAction& a) {
  const int n = a.sphere_dim();
  const int k = a.fixed_sphere_dim();
  WeakGapReport report;
  if (!a.is_trivial()) {
    const int larger = k < 0 ? kEmptyDim : k;
    WeakGapEntry free{1, n, larger, k < 0 || k <= n - 2};
    report.entries.push_back(free);
    report.holds = free.holds;
  }
  if (k >= 0) report.entries.push_back({a.order(), k, kEmptyDim, true});
  return report;
}

enum class FieldVerdict { Guaranteed, Unknown, ImpossibleByParity };

constexpr std::string_view to_string(FieldVerdict v) {
  switch (v) {
    case FieldVerdict::Guaranteed: return "guaranteed";
    case FieldVerdict::Unknown: return "unknown";
    case FieldVerdict::ImpossibleByParity: return "impossible_by_parity";
  }
  return "?";
}

/// guaranteed: chi^G = 0 and the weak gap hypothesis holds (sufficient
/// condition for a nowhere-vanishing equivariant field).
/// impossible_by_parity: a nonempty even-dimensional fixed sphere. An
/// equivariant field is G-invariant at fixed points, so it restricts to a
/// tangent field of S^k, which must vanish somewhere (for k = 0 the tangent
/// space is zero).
/// unknown: everything else.
inline FieldVerdict vector_field_exists_predicate(const CyclicLinearAction& a) {
  const BurnsideElement chi = euler_definition(linear_sphere_gcw(a));
  if (chi.is_zero() && weak_gap_check(a).holds) return FieldVerdict::Guaranteed;
  const int k = a.fixed_sphere_dim();
  if (k >= 0 && k % 2 == 0) return FieldVerdict::ImpossibleByParity;
  return FieldVerdict::Unknown;
}

}  // namespace eqtc::euler
