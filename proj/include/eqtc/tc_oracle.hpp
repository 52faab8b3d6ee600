#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "eqtc/action.hpp"
#include "eqtc/error.hpp"

// Theorem-backed values and interval bounds for TC, TC_G, TC^G and cat_G of
// linear Z/p-spheres. Non-reduced convention throughout: cat(S^n) = 2.
namespace eqtc::tc {

/// Integer >= 1 or an explicit infinity.
class Bound {
 public:
  constexpr Bound(int v) : value_(v) {}  // NOLINT(google-explicit-constructor)
  static constexpr Bound infinity() { return Bound(kInf, 0); }

  constexpr bool is_infinite() const noexcept { return value_ == kInf; }
  constexpr int value() const {
    if (is_infinite()) throw Error(Errc::InvalidQuery, "infinite bound has no integer value");
    return value_;
  }

  /// 2b - 1, saturating at infinity.
  constexpr Bound twice_minus_one() const { return is_infinite() ? infinity() : Bound(2 * value_ - 1); }
  /// Smallest c with 2c - 1 >= b.
  constexpr Bound half_ceil_plus() const { return is_infinite() ? infinity() : Bound((value_ + 2) / 2); }

  std::string str() const { return is_infinite() ? "inf" : std::to_string(value_); }

  friend constexpr auto operator<=>(Bound a, Bound b) { return a.value_ <=> b.value_; }
  friend constexpr bool operator==(Bound a, Bound b) { return a.value_ == b.value_; }

 private:
  static constexpr int kInf = std::numeric_limits<int>::max();
  constexpr Bound(int v, int) : value_(v) {}
  int value_;
};

/// Stable citation keys. Each names a result by what it states.
enum class Rule {
  SphereTC,
  DisconnectedTC,
  SphereCat,
  TCCatSandwich,
  TCCharacterization,
  FixedSetLower,
  EquivariantCatSandwich,
  InvariantFixedOrbitLower,
  InvariantCatUpper,
  InvariantCatLower,
  InvariantContractible,
  NotOddSphereCorollary,
  LinearCatG,
  LinearSphereBounds,
  LinearOrbitSpace,
  FieldPlannerUpper,
  LinearEquivariantTC,
  LinearInvariantTC,
  InvariantTCUnsettled,
  TrivialAction,
};

constexpr std::string_view key(Rule r) {
  switch (r) {
    case Rule::SphereTC: return "sphere_tc";
    case Rule::DisconnectedTC: return "disconnected_tc";
    case Rule::SphereCat: return "sphere_cat";
    case Rule::TCCatSandwich: return "tc_cat_sandwich";
    case Rule::TCCharacterization: return "tc_characterization";
    case Rule::FixedSetLower: return "fixed_set_lower_bound";
    case Rule::EquivariantCatSandwich: return "equivariant_cat_sandwich";
    case Rule::InvariantFixedOrbitLower: return "invariant_fixed_orbit_lower_bound";
    case Rule::InvariantCatUpper: return "invariant_cat_upper_bound";
    case Rule::InvariantCatLower: return "invariant_cat_lower_bound";
    case Rule::InvariantContractible: return "invariant_contractibility";
    case Rule::NotOddSphereCorollary: return "fixed_or_orbit_not_odd_sphere";
    case Rule::LinearCatG: return "linear_sphere_cat_g";
    case Rule::LinearSphereBounds: return "linear_sphere_two_three_bounds";
    case Rule::LinearOrbitSpace: return "linear_orbit_space_type";
    case Rule::FieldPlannerUpper: return "equivariant_field_planner";
    case Rule::LinearEquivariantTC: return "linear_sphere_equivariant_tc";
    case Rule::LinearInvariantTC: return "linear_sphere_invariant_tc";
    case Rule::InvariantTCUnsettled: return "linear_sphere_invariant_tc_unsettled";
    case Rule::TrivialAction: return "trivial_action";
  }
  return "?";
}

constexpr std::string_view statement(Rule r) {
  switch (r) {
    case Rule::SphereTC: return "TC(S^n) = 2 for n odd and 3 for n even";
    case Rule::DisconnectedTC: return "TC(X) is infinite when X is not path-connected";
    case Rule::SphereCat: return "cat(S^n) = 2";
    case Rule::TCCatSandwich: return "cat(X) <= TC(X) <= 2 cat(X) - 1 for path-connected paracompact X";
    case Rule::TCCharacterization:
      return "TC(X) = 1 iff X is contractible; TC(X) = 2 iff X is homotopy equivalent to an odd-dimensional sphere";
    case Rule::FixedSetLower: return "TC(X^H) <= TC_G(X) for every closed subgroup H";
    case Rule::EquivariantCatSandwich:
      return "cat_G(X) <= TC_G(X) <= 2 cat_G(X) - 1 for G-connected X with X^G nonempty";
    case Rule::InvariantFixedOrbitLower: return "max{TC(X^G), TC(X/G)} <= TC^G(X) when X^G is nonempty";
    case Rule::InvariantCatUpper: return "TC^G(X) <= 2 cat_G(X) - 1 for G-connected X with X^G nonempty";
    case Rule::InvariantCatLower: return "max{cat(X), cat_G(X)} <= TC^G(X) when X^G is nonempty";
    case Rule::InvariantContractible: return "TC^G(X) = 1 iff X is G-contractible, when X^G is nonempty";
    case Rule::NotOddSphereCorollary:
      return "TC^G(S^n) = 3 for a linear G-connected sphere with fixed set S^k, 0 < k < n, when k is even or "
             "S^n/G is neither contractible nor an odd-dimensional homotopy sphere";
    case Rule::LinearCatG: return "cat_G(S^n) = 2 for a linear action with nonempty fixed set";
    case Rule::LinearSphereBounds:
      return "2 <= TC_G(S^n), TC^G(S^n) <= 3 for a linear G-connected sphere with nonempty fixed set";
    case Rule::LinearOrbitSpace:
      return "S^n/Z_p for a linear action with fixed S^k: at least three nonzero mod-p homology groups if "
             "0 < k < n-2; a topological sphere if k = n-2; a disk if k = n-1";
    case Rule::FieldPlannerUpper:
      return "TC_{Z/p}(S^n) <= 2 when n and k are odd: shortest arcs plus a nowhere-vanishing equivariant field";
    case Rule::LinearEquivariantTC:
      return "TC_{Z/p}(S^n) = 2 if n and k are both odd and 3 otherwise, for fixed set S^k with 0 < k < n";
    case Rule::LinearInvariantTC:
      return "TC^{Z/p}(S^n) = 3 if k < n-2, or k = n-2 with n even, or k = n-1 with n odd (0 < k < n)";
    case Rule::InvariantTCUnsettled:
      return "TC^{Z/p}(S^n) is unsettled for k = n-2 with n odd and for k = n-1 with n even";
    case Rule::TrivialAction: return "for the trivial action TC_G(X) = TC^G(X) = TC(X)";
  }
  return "?";
}

inline std::string citation(Rule r) { return std::string(key(r)) + ": " + std::string(statement(r)); }

/// Open problem exposed as documentation only; never turned into a value.
inline constexpr std::string_view kLinearityConjecture =
    "open: is a smooth Z/p-sphere with nonempty path-connected fixed set equivariantly equivalent to a "
    "linear one iff 2 <= TC^{Z/p}(S^n) <= 3?";

enum class Status { Exact, Unsettled, Infinite, BoundsOnly };

constexpr std::string_view to_string(Status s) {
  switch (s) {
    case Status::Exact: return "exact";
    case Status::Unsettled: return "unsettled";
    case Status::Infinite: return "infinite";
    case Status::BoundsOnly: return "bounds_only";
  }
  return "?";
}

struct TCValue {
  Bound lower = 1;
  Bound upper = Bound::infinity();
  Status status = Status::BoundsOnly;
  std::vector<std::string> provenance;
  bool out_of_theorem_scope = false;

  static TCValue exact(int v, std::vector<Rule> rules) { return make(v, v, Status::Exact, rules); }
  static TCValue infinite(std::vector<Rule> rules) {
    return make(Bound::infinity(), Bound::infinity(), Status::Infinite, rules);
  }
  static TCValue unsettled(int lo, int hi, std::vector<Rule> rules) { return make(lo, hi, Status::Unsettled, rules); }

  static TCValue make(Bound lo, Bound hi, Status status, const std::vector<Rule>& rules) {
    if (lo > hi) throw Error(Errc::InconsistentFacts, "lower bound exceeds upper bound");
    if (lo < Bound(1)) throw Error(Errc::InconsistentFacts, "topological complexity is at least 1");
    if (status == Status::Exact && lo != hi) throw Error(Errc::InconsistentFacts, "exact value needs lower = upper");
    TCValue v{lo, hi, status, {}, false};
    for (Rule r : rules) v.provenance.push_back(citation(r));
    return v;
  }

  bool is_exact() const { return status == Status::Exact || status == Status::Infinite; }

  /// "2", "inf", or "lo..hi".
  std::string render() const { return lower == upper ? lower.str() : lower.str() + ".." + upper.str(); }
};

/// (n, k, p) for a linear Z/p action on S^n with fixed set S^k (k = -1:
/// empty). Realizable iff p is prime and, for odd p, n - k is even.
struct SphereQuery {
  int n = 1;
  int k = -1;
  int p = 2;

  static SphereQuery validate(int n, int k, int p) {
    if (n < 1) throw Error(Errc::InvalidQuery, "sphere dimension must be >= 1");
    if (k < -1 || k > n) throw Error(Errc::InvalidQuery, "fixed sphere dimension must lie in [-1, n]");
    if (!is_prime(p)) throw Error(Errc::InvalidQuery, "group order must be prime");
    if (p != 2 && (n - k) % 2 != 0)
      throw Error(Errc::InvalidQuery, "odd p forces an even-codimension fixed sphere");
    return {n, k, p};
  }

  static SphereQuery of(const CyclicLinearAction& a) {
    return validate(a.sphere_dim(), a.fixed_sphere_dim(), a.order());
  }
};

inline TCValue tc_sphere(int n) {
  if (n < 1) throw Error(Errc::InvalidQuery, "TC(S^n) needs n >= 1");
  return TCValue::exact(n % 2 == 1 ? 2 : 3, {Rule::SphereTC});
}

inline TCValue cat_g_sphere(const SphereQuery& q) {
  const SphereQuery v = SphereQuery::validate(q.n, q.k, q.p);
  if (v.k < 0) throw Error(Errc::EmptyFixedSet, "cat_G(S^n) = 2 needs a nonempty fixed set");
  return TCValue::exact(2, {Rule::LinearCatG});
}

// ---------------------------------------------------------------------------
// Bound propagation.

enum class Quantity { TC, Cat, TCFixed, TCOrbit, CatG, TCG, TCInv };

inline constexpr std::array<Quantity, 7> kQuantities = {Quantity::TC,   Quantity::Cat, Quantity::TCFixed,
                                                        Quantity::TCOrbit, Quantity::CatG, Quantity::TCG,
                                                        Quantity::TCInv};

constexpr std::string_view to_string(Quantity q) {
  switch (q) {
    case Quantity::TC: return "TC(X)";
    case Quantity::Cat: return "cat(X)";
    case Quantity::TCFixed: return "TC(X^G)";
    case Quantity::TCOrbit: return "TC(X/G)";
    case Quantity::CatG: return "cat_G(X)";
    case Quantity::TCG: return "TC_G(X)";
    case Quantity::TCInv: return "TC^G(X)";
  }
  return "?";
}

enum class OrbitSpaceType { Unknown, Contractible, OddSphere, NeitherContractibleNorOddSphere };

/// Side conditions of the rules plus the seeded intervals.
struct SpaceFacts {
  bool fixed_nonempty = false;
  bool g_connected = false;  // X^G path-connected (Z/p)
  bool trivial_action = false;
  struct Seed {
    Quantity quantity;
    Bound lower;
    Bound upper;
    std::vector<Rule> because;
  };
  std::vector<Seed> seeds;
};

struct Interval {
  Bound lower = 1;
  Bound upper = Bound::infinity();
  std::set<Rule> lower_because;  // rule chain behind the current lower bound
  std::set<Rule> upper_because;
};

struct Derivation {
  Quantity quantity;
  bool lower;  // true: lower bound raised; false: upper bound lowered
  Bound value;
  Rule rule;
};

struct BoundsReport {
  std::map<Quantity, Interval> intervals;
  std::vector<Derivation> log;
  int passes = 0;

  const Interval& at(Quantity q) const { return intervals.at(q); }

  /// Interval for q as a TCValue with the union of both rule chains.
  TCValue value(Quantity q) const {
    const Interval& iv = at(q);
    std::set<Rule> rules = iv.lower_because;
    rules.insert(iv.upper_because.begin(), iv.upper_because.end());
    Status st = Status::BoundsOnly;
    if (iv.lower == iv.upper) st = iv.lower.is_infinite() ? Status::Infinite : Status::Exact;
    return TCValue::make(iv.lower, iv.upper, st, std::vector<Rule>(rules.begin(), rules.end()));
  }
};

namespace detail {

class Engine {
 public:
  explicit Engine(const SpaceFacts& facts) : facts_(facts) {
    for (Quantity q : kQuantities) report_.intervals[q] = Interval{};
    for (const auto& s : facts.seeds) {
      raise(s.quantity, s.lower, s.because);
      lower_upper(s.quantity, s.upper, s.because);
    }
  }

  BoundsReport run() {
    const int max_passes = 64;
    for (int pass = 0; pass < max_passes; ++pass) {
      changed_ = false;
      sweep();
      report_.passes = pass + 1;
      check_consistent();
      if (!changed_) return report_;
    }
    return report_;
  }

 private:
  Interval& iv(Quantity q) { return report_.intervals.at(q); }

  static std::vector<Rule> chain(Rule r, std::initializer_list<const std::set<Rule>*> premises) {
    std::set<Rule> all{r};
    for (const auto* p : premises) all.insert(p->begin(), p->end());
    return {all.begin(), all.end()};
  }

  void raise(Quantity q, Bound value, const std::vector<Rule>& because) {
    Interval& i = iv(q);
    if (value <= i.lower) return;
    i.lower = value;
    i.lower_because = {because.begin(), because.end()};
    report_.log.push_back({q, true, value, because.front()});
    changed_ = true;
  }

  void lower_upper(Quantity q, Bound value, const std::vector<Rule>& because) {
    Interval& i = iv(q);
    if (value >= i.upper) return;
    i.upper = value;
    i.upper_because = {because.begin(), because.end()};
    report_.log.push_back({q, false, value, because.front()});
    changed_ = true;
  }

  // a <= b
  void less_equal(Quantity a, Quantity b, Rule r) {
    raise(b, iv(a).lower, chain(r, {&iv(a).lower_because}));
    lower_upper(a, iv(b).upper, chain(r, {&iv(b).upper_because}));
  }

  // b <= 2a - 1
  void twice_minus_one(Quantity a, Quantity b, Rule r) {
    lower_upper(b, iv(a).upper.twice_minus_one(), chain(r, {&iv(a).upper_because}));
    raise(a, iv(b).lower.half_ceil_plus(), chain(r, {&iv(b).lower_because}));
  }

  void sweep() {
    less_equal(Quantity::Cat, Quantity::TC, Rule::TCCatSandwich);
    twice_minus_one(Quantity::Cat, Quantity::TC, Rule::TCCatSandwich);

    less_equal(Quantity::TC, Quantity::TCG, Rule::FixedSetLower);
    if (facts_.fixed_nonempty) less_equal(Quantity::TCFixed, Quantity::TCG, Rule::FixedSetLower);

    const bool connected_with_fixed = facts_.fixed_nonempty && facts_.g_connected;
    if (connected_with_fixed) {
      less_equal(Quantity::CatG, Quantity::TCG, Rule::EquivariantCatSandwich);
      twice_minus_one(Quantity::CatG, Quantity::TCG, Rule::EquivariantCatSandwich);
      twice_minus_one(Quantity::CatG, Quantity::TCInv, Rule::InvariantCatUpper);
    }

    if (facts_.fixed_nonempty) {
      if (connected_with_fixed) {
        for (Quantity q : {Quantity::TCFixed, Quantity::TCOrbit})
          if (iv(q).lower >= Bound(3) && iv(Quantity::CatG).upper <= Bound(2))
            raise(Quantity::TCInv, 3, chain(Rule::NotOddSphereCorollary, {&iv(q).lower_because}));
      }
      less_equal(Quantity::TCFixed, Quantity::TCInv, Rule::InvariantFixedOrbitLower);
      less_equal(Quantity::TCOrbit, Quantity::TCInv, Rule::InvariantFixedOrbitLower);
      less_equal(Quantity::Cat, Quantity::TCInv, Rule::InvariantCatLower);
      less_equal(Quantity::CatG, Quantity::TCInv, Rule::InvariantCatLower);
      // TC^G = 1 exactly when cat_G = 1.
      if (iv(Quantity::CatG).lower >= Bound(2))
        raise(Quantity::TCInv, 2, chain(Rule::InvariantContractible, {&iv(Quantity::CatG).lower_because}));
      if (iv(Quantity::TCInv).upper == Bound(1))
        lower_upper(Quantity::CatG, 1, chain(Rule::InvariantContractible, {&iv(Quantity::TCInv).upper_because}));
    }

    if (facts_.trivial_action) {
      for (Quantity q : {Quantity::TCG, Quantity::TCInv}) {
        less_equal(Quantity::TC, q, Rule::TrivialAction);
        less_equal(q, Quantity::TC, Rule::TrivialAction);
      }
    }
  }

  void check_consistent() {
    for (const auto& [q, i] : report_.intervals)
      if (i.lower > i.upper)
        throw Error(Errc::InconsistentFacts, std::string(to_string(q)) + " has lower " + i.lower.str() +
                                                 " above upper " + i.upper.str());
  }

  const SpaceFacts& facts_;
  BoundsReport report_;
  bool changed_ = false;
};

}  // namespace detail

/// Fixed-point iteration of the inequality rules over interval facts.
/// Bounds only ever tighten; each change records the rule that caused it.
inline BoundsReport propagate_bounds(const SpaceFacts& facts) { return detail::Engine(facts).run(); }

/// Homotopy type of S^n/Z_p for a linear action, where standard.
inline OrbitSpaceType orbit_space_type(const SphereQuery& q) {
  if (q.k == q.n) return q.n % 2 == 1 ? OrbitSpaceType::OddSphere : OrbitSpaceType::NeitherContractibleNorOddSphere;
  if (q.k <= 0) return OrbitSpaceType::Unknown;
  if (q.k < q.n - 2) return OrbitSpaceType::NeitherContractibleNorOddSphere;
  if (q.k == q.n - 2)
    return q.n % 2 == 1 ? OrbitSpaceType::OddSphere : OrbitSpaceType::NeitherContractibleNorOddSphere;
  return OrbitSpaceType::Contractible;  // k = n - 1, a reflection
}

/// Seeds for a linear sphere: cat/TC of the sphere, of the fixed sphere,
/// cat_G = 2, and orbit-space facts. With `planner_witness`, also the upper
/// bound TC_G <= 2 realized by the two-domain planner when n and k are odd.
inline SpaceFacts sphere_facts(const SphereQuery& query, bool planner_witness = false) {
  const SphereQuery q = SphereQuery::validate(query.n, query.k, query.p);
  SpaceFacts f;
  f.fixed_nonempty = q.k >= 0;
  f.g_connected = q.k >= 1;
  f.trivial_action = q.k == q.n;
  const int tc_n = q.n % 2 == 1 ? 2 : 3;
  f.seeds.push_back({Quantity::Cat, 2, 2, {Rule::SphereCat}});
  f.seeds.push_back({Quantity::TC, tc_n, tc_n, {Rule::SphereTC}});
  if (q.k >= 1) {
    const int tc_k = q.k % 2 == 1 ? 2 : 3;
    f.seeds.push_back({Quantity::TCFixed, tc_k, tc_k, {Rule::SphereTC}});
  } else if (q.k == 0) {
    f.seeds.push_back({Quantity::TCFixed, Bound::infinity(), Bound::infinity(), {Rule::DisconnectedTC}});
  }
  if (q.k >= 0) f.seeds.push_back({Quantity::CatG, 2, 2, {Rule::LinearCatG}});
  const std::vector<Rule> orbit_rules =
      q.k == q.n ? std::vector<Rule>{Rule::TrivialAction, Rule::TCCharacterization}
                 : std::vector<Rule>{Rule::LinearOrbitSpace, Rule::TCCharacterization};
  switch (orbit_space_type(q)) {
    case OrbitSpaceType::Contractible: f.seeds.push_back({Quantity::TCOrbit, 1, 1, orbit_rules}); break;
    case OrbitSpaceType::OddSphere: f.seeds.push_back({Quantity::TCOrbit, 2, 2, orbit_rules}); break;
    case OrbitSpaceType::NeitherContractibleNorOddSphere:
      f.seeds.push_back({Quantity::TCOrbit, 3, Bound::infinity(), orbit_rules});
      break;
    case OrbitSpaceType::Unknown: break;
  }
  if (planner_witness && q.k >= 1 && q.n % 2 == 1 && q.k % 2 == 1)
    f.seeds.push_back({Quantity::TCG, 1, 2, {Rule::FieldPlannerUpper}});
  return f;
}

namespace detail {
inline TCValue out_of_scope(const SphereQuery& q, Quantity which) {
  TCValue v = propagate_bounds(sphere_facts(q, true)).value(which);
  v.out_of_theorem_scope = true;
  return v;
}
}  // namespace detail

/// TC_{Z/p}(S^n): trivial action gives TC(S^n); k = 0 gives infinity (the
/// fixed set S^0 is disconnected); 0 < k < n gives 2 iff n and k are odd.
/// An empty fixed set is outside every theorem here and returns bounds only.
inline TCValue tc_equivariant(const SphereQuery& query) {
  const SphereQuery q = SphereQuery::validate(query.n, query.k, query.p);
  if (q.k == q.n) {
    TCValue v = tc_sphere(q.n);
    v.provenance.push_back(citation(Rule::TrivialAction));
    return v;
  }
  if (q.k == 0) return TCValue::infinite({Rule::FixedSetLower, Rule::DisconnectedTC});
  if (q.k < 0) return detail::out_of_scope(q, Quantity::TCG);
  const bool odd_odd = q.n % 2 == 1 && q.k % 2 == 1;
  return TCValue::exact(odd_odd ? 2 : 3, {Rule::LinearEquivariantTC, odd_odd ? Rule::FieldPlannerUpper : Rule::FixedSetLower});
}

/// TC^{Z/p}(S^n) for 0 < k < n: 3 in the settled families, [2, 3] in the two
/// unsettled ones. k in {-1, 0, n} returns propagated bounds flagged as out of
/// theorem scope.
inline TCValue tc_invariant(const SphereQuery& query) {
  const SphereQuery q = SphereQuery::validate(query.n, query.k, query.p);
  if (q.k <= 0 || q.k == q.n) return detail::out_of_scope(q, Quantity::TCInv);
  const bool settled = q.k < q.n - 2 || (q.k == q.n - 2 && q.n % 2 == 0) || (q.k == q.n - 1 && q.n % 2 == 1);
  if (settled) return TCValue::exact(3, {Rule::LinearInvariantTC});
  return TCValue::unsettled(2, 3, {Rule::LinearSphereBounds, Rule::InvariantTCUnsettled});
}

enum class Invariant { TC, TCG, TCInv, CatG };

constexpr std::string_view to_string(Invariant i) {
  switch (i) {
    case Invariant::TC: return "TC";
    case Invariant::TCG: return "TC_G";
    case Invariant::TCInv: return "TC^G";
    case Invariant::CatG: return "cat_G";
  }
  return "?";
}

inline Invariant parse_invariant(std::string_view s) {
  if (s == "TC") return Invariant::TC;
  if (s == "TC_G") return Invariant::TCG;
  if (s == "TC^G") return Invariant::TCInv;
  if (s == "cat_G") return Invariant::CatG;
  throw Error(Errc::ParseError, "unknown invariant '" + std::string(s) + "' (TC, TC_G, TC^G, cat_G)");
}

inline TCValue evaluate(const SphereQuery& q, Invariant which) {
  switch (which) {
    case Invariant::TC: return tc_sphere(q.n);
    case Invariant::TCG: return tc_equivariant(q);
    case Invariant::TCInv: return tc_invariant(q);
    case Invariant::CatG: return cat_g_sphere(q);
  }
  throw std::invalid_argument("unknown invariant");
}

/// All realizable (n, k, p) with 1 <= n <= max_n and 0 <= k <= n.
inline std::vector<SphereQuery> sphere_grid(int max_n, const std::vector<int>& primes) {
  std::vector<SphereQuery> out;
  for (int n = 1; n <= max_n; ++n)
    for (int k = 0; k <= n; ++k)
      for (int p : primes) {
        if (!is_prime(p)) throw Error(Errc::InvalidQuery, "group order " + std::to_string(p) + " is not prime");
        if (p != 2 && (n - k) % 2 != 0) continue;
        out.push_back({n, k, p});
      }
  return out;
}

/// CSV grid: n,k,p,TC,TC_G,TC^G,cat_G. Intervals render as "2..3".
inline std::string table_csv(int max_n, const std::vector<int>& primes) {
  std::ostringstream os;
  os << "n,k,p,TC,TC_G,TC^G,cat_G\n";
  for (const SphereQuery& q : sphere_grid(max_n, primes)) {
    os << q.n << ',' << q.k << ',' << q.p << ',' << tc_sphere(q.n).render() << ',' << tc_equivariant(q).render()
       << ',' << tc_invariant(q).render() << ',' << cat_g_sphere(q).render() << '\n';
  }
  return os.str();
}

}  // namespace eqtc::tc
