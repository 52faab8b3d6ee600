#include <cmath>
#include <set>

#include <gtest/gtest.h>

#include "eqtc/planner.hpp"
#include "eqtc/rng.hpp"

using namespace eqtc;

namespace {

CyclicLinearAction act(int p, int f, std::vector<int> w, int s) {
  return CyclicLinearAction::validate(ActionParams{p, f, std::move(w), s});
}

SpherePoint pt(Vec v) { return SpherePoint::from_unit(std::move(v)); }

template <class F>
Errc code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an error";
  return Errc::ParseError;
}

double path_equivariance(const CyclicLinearAction& a, const EquivariantPlanner& pl, DomainId id, const SpherePoint& x,
                         const SpherePoint& y, int grid) {
  const PlannedPath p = pl.plan_in(id, x, y);
  double worst = 0.0;
  for (int g = 1; g < a.order(); ++g) {
    const PlannedPath q = pl.plan_in(id, a.apply(GroupElement{g}, x), a.apply(GroupElement{g}, y));
    for (int i = 0; i <= grid; ++i) {
      const double t = static_cast<double>(i) / grid;
      worst = std::max(worst, linalg::distance(a.apply(GroupElement{g}, p.evaluate(t)).coords(), q.evaluate(t).coords()));
    }
  }
  return worst;
}

}  // namespace

TEST(GeodesicPlanner, ConstantWhenEqual) {
  const auto x = pt({0, 0.6, 0.8});
  const auto p = geodesic_planner(x, x);
  for (double t : {0.0, 0.2, 0.5, 1.0}) EXPECT_EQ(p.evaluate(t), x);
}

TEST(GeodesicPlanner, EquivariantOnRandomPairs) {
  const auto a = act(3, 2, {1}, 0);
  SphereSampler s(21);
  for (int i = 0; i < 200; ++i) {
    const auto x = SpherePoint::trusted(s.point(4)), y = SpherePoint::trusted(s.point(4));
    const auto p = geodesic_planner(x, y);
    for (int g = 1; g < 3; ++g) {
      const auto q = geodesic_planner(a.apply(GroupElement{g}, x), a.apply(GroupElement{g}, y));
      for (int j = 0; j <= 100; ++j) {
        const double t = j / 100.0;
        EXPECT_LE(linalg::distance(a.apply(GroupElement{g}, p.evaluate(t)).coords(), q.evaluate(t).coords()), 1e-9);
      }
    }
  }
}

TEST(TwoDomain, Examples) {
  const TwoDomainPlanner pl(act(3, 2, {1}, 0));
  const auto x = pt({1, 0, 0, 0});
  EXPECT_EQ(pl.plan(x, pt({0, 1, 0, 0})).domain(), DomainId::U1);

  const auto y = pt({-1, 0, 0, 0});
  const auto path = pl.plan(x, y);
  EXPECT_EQ(path.domain(), DomainId::U2);
  EXPECT_EQ(path.evaluate(0.5).vec(), (Vec{1, 0, 0, 0}));
  EXPECT_EQ(path.evaluate(1.0).vec(), (Vec{-1, 0, 0, 0}));
  // The field arc leaves -y along J y = (0, -1, 0, 0).
  const auto quarter = path.evaluate(0.75);
  EXPECT_NEAR(quarter[0], 0.0, 1e-15);
  EXPECT_NEAR(quarter[1], -1.0, 1e-15);
}

TEST(TwoDomain, Preconditions) {
  EXPECT_EQ(code_of([] { TwoDomainPlanner(act(2, 2, {}, 1)); }), Errc::ParityMismatch);   // n = 2
  EXPECT_EQ(code_of([] { TwoDomainPlanner(act(2, 3, {}, 1)); }), Errc::ParityMismatch);   // n = 3, k = 2
  EXPECT_EQ(code_of([] { TwoDomainPlanner(act(2, 0, {}, 2)); }), Errc::NoFixedPoint);     // k = -1
  EXPECT_EQ(code_of([] { TwoDomainPlanner(act(3, 0, {1, 1}, 0)); }), Errc::NoFixedPoint); // n = 3, k = -1
}

TEST(TwoDomain, Membership) {
  const TwoDomainPlanner pl(act(2, 2, {1}, 0));
  const auto x = pt({0, 0, 1, 0});
  EXPECT_EQ(pl.membership(x, x).domains, (std::vector<DomainId>{DomainId::U1}));
  EXPECT_EQ(pl.membership(x, -x).domains, (std::vector<DomainId>{DomainId::U2}));
  EXPECT_EQ(pl.membership(x, pt({1, 0, 0, 0})).domains, (std::vector<DomainId>{DomainId::U1, DomainId::U2}));
  EXPECT_EQ(code_of([&] { pl.plan_in(DomainId::U2, x, x); }), Errc::OutsideDomain);
  EXPECT_EQ(code_of([&] { pl.plan_in(DomainId::D2, x, pt({1, 0, 0, 0})); }), Errc::OutsideDomain);
}

TEST(TwoDomain, AmbiguityBand) {
  const TwoDomainPlanner pl(act(2, 2, {1}, 0));
  const double e = 1.5e-9;
  const auto x = pt({1, 0, 0, 0});
  const auto y = SpherePoint::normalize({-1, e, 0, 0});
  const Membership m = pl.membership(x, y);
  EXPECT_TRUE(m.ambiguous);
  EXPECT_TRUE(m.contains(DomainId::U2));
  EXPECT_FALSE(pl.membership(x, pt({0, 1, 0, 0})).ambiguous);
}

TEST(ThreeDomain, Examples) {
  const auto a = act(2, 2, {}, 1);
  const ThreeDomainPlanner pl(a);
  const auto x = pt({1, 0, 0}), y = pt({-1, 0, 0});
  const Membership m = pl.membership(x, y);
  EXPECT_EQ(m.domains, (std::vector<DomainId>{DomainId::D3}));
  const auto path = pl.plan(x, y);
  EXPECT_EQ(path.domain(), DomainId::D3);
  EXPECT_LE(linalg::distance(path.evaluate(1.0).coords(), y.coords()), 1e-12);
  EXPECT_LE(linalg::distance(path.evaluate(0.0).coords(), x.coords()), 1e-12);

  const auto e = a.fixed_basis(0);
  EXPECT_EQ(pl.membership(-e, e).domains, (std::vector<DomainId>{DomainId::D3}));
  const auto e2 = a.fixed_basis(1);
  EXPECT_EQ(pl.membership(-e2, e2).domains, (std::vector<DomainId>{DomainId::D2}));
  EXPECT_TRUE(pl.membership(x, x).contains(DomainId::U1));
}

TEST(ThreeDomain, FirstMatchIsU1) {
  SphereSampler s(22);
  for (const auto& a : {act(2, 2, {}, 1), act(3, 3, {2}, 0), act(5, 2, {1, 4}, 0)}) {
    const ThreeDomainPlanner pl(a);
    for (int i = 0; i < 200; ++i) {
      const auto x = SpherePoint::trusted(s.point(static_cast<std::size_t>(a.ambient_dim())));
      const auto y = SpherePoint::trusted(s.point(static_cast<std::size_t>(a.ambient_dim())));
      EXPECT_EQ(pl.plan(x, y).domain(), DomainId::U1);
    }
  }
}

TEST(ThreeDomain, Preconditions) {
  EXPECT_EQ(code_of([] { ThreeDomainPlanner(act(2, 1, {}, 2)); }), Errc::NoFixedCircle);
  EXPECT_EQ(code_of([] { ThreeDomainPlanner(act(3, 0, {1}, 0)); }), Errc::NoFixedCircle);
}

TEST(ThreeDomain, AntipodalPairsAlwaysCovered) {
  SphereSampler s(23);
  for (const auto& a : {act(2, 2, {}, 1), act(2, 2, {1}, 1), act(5, 3, {1, 2}, 0)}) {
    const ThreeDomainPlanner pl(a);
    const auto d = static_cast<std::size_t>(a.ambient_dim());
    for (int i = 0; i < 500; ++i) {
      const auto y = SpherePoint::trusted(s.point(d));
      EXPECT_FALSE(pl.membership(-y, y).domains.empty());
    }
    for (int i = 0; i < 2; ++i)
      for (const auto& y : {a.fixed_basis(i), -a.fixed_basis(i)}) EXPECT_FALSE(pl.membership(-y, y).domains.empty());
  }
}

TEST(Planners, EquivarianceOnEveryDomain) {
  SphereSampler s(24);
  const std::vector<CyclicLinearAction> actions = {act(3, 2, {1}, 0), act(2, 2, {}, 1), act(5, 2, {1, 2}, 0),
                                                   act(2, 4, {1}, 0), act(7, 3, {3}, 0)};
  for (const auto& a : actions) {
    std::vector<std::unique_ptr<EquivariantPlanner>> planners;
    planners.push_back(make_planner(a, PlannerKind::Three));
    planners.push_back(make_planner(a, PlannerKind::Hemisphere));
    if (select_planner_kind(a) == PlannerKind::Two) planners.push_back(make_planner(a, PlannerKind::Two));
    const auto d = static_cast<std::size_t>(a.ambient_dim());
    for (const auto& pl : planners)
      for (DomainId id : pl->domains())
        for (int i = 0, done = 0; i < 2000 && done < 30; ++i) {
          auto x = SpherePoint::trusted(s.point(d)), y = SpherePoint::trusted(s.point(d));
          if (id == DomainId::U2 || id == DomainId::D2 || id == DomainId::D3) x = -y;
          if (!pl->membership(x, y).contains(id)) continue;
          ++done;
          EXPECT_LE(path_equivariance(a, *pl, id, x, y, 200), 1e-9) << to_string(id);
        }
  }
}

TEST(Planners, MembershipIsInvariant) {
  SphereSampler s(25);
  const auto a = act(5, 2, {1, 2}, 0);
  for (PlannerKind kind : {PlannerKind::Three, PlannerKind::Hemisphere}) {
    const auto pl = make_planner(a, kind);
    for (int i = 0; i < 500; ++i) {
      const auto x = SpherePoint::trusted(s.point(6));
      const auto y = i % 2 ? -x : SpherePoint::trusted(s.point(6));
      const auto m = pl->membership(x, y);
      for (int g = 1; g < 5; ++g)
        EXPECT_EQ(pl->membership(a.apply(GroupElement{g}, x), a.apply(GroupElement{g}, y)).domains, m.domains);
    }
  }
}

TEST(Planners, SelectedKind) {
  for (int p : {2, 3, 5})
    for (int n = 1; n <= 8; ++n)
      for (int k = -1; k <= n; ++k) {
        if (p != 2 && (n - k) % 2 != 0) continue;
        const auto a = CyclicLinearAction::linear_sphere(n, k, p);
        if (k < 1) {
          EXPECT_EQ(code_of([&] { select_planner_kind(a); }), Errc::NoFixedCircle);
          continue;
        }
        const auto kind = select_planner_kind(a);
        EXPECT_EQ(kind == PlannerKind::Two, n % 2 == 1 && k % 2 == 1);
        EXPECT_EQ(make_planner(a, kind)->domains().size(), kind == PlannerKind::Two ? 2u : 3u);
      }
}

TEST(Planners, ContinuityInsideDomains) {
  SphereSampler s(26);
  const auto a = act(3, 2, {1}, 0);
  const TwoDomainPlanner pl(a);
  for (int i = 0; i < 50; ++i) {
    const auto y = SpherePoint::trusted(s.point(4));
    const auto x = -y;
    Vec dx = s.point(4);
    Vec x2 = x.vec();
    for (std::size_t j = 0; j < 4; ++j) x2[j] += 1e-7 * dx[j];
    const auto xp = SpherePoint::normalize(x2);
    const auto p = pl.plan_in(DomainId::U2, x, y), q = pl.plan_in(DomainId::U2, xp, y);
    double sup = 0.0;
    for (int j = 0; j <= 100; ++j) sup = std::max(sup, linalg::distance(p.evaluate(j / 100.0).coords(), q.evaluate(j / 100.0).coords()));
    EXPECT_LE(sup / linalg::distance(x.coords(), xp.coords()), 10.0);
  }
}

TEST(Hemisphere, Track) {
  const auto a = act(2, 2, {}, 1);
  const auto pole = pt({1, 0, 0});
  const auto track = hemisphere_cover(a, pole, 1);
  for (double t : {0.0, 0.4, 1.0}) EXPECT_EQ(track.evaluate(t), pole);

  const auto x = pt({0, 1, 0});
  const auto mid = hemisphere_cover(a, x, 1).evaluate(0.5);
  EXPECT_NEAR(mid[0], std::sqrt(0.5), 1e-15);
  EXPECT_NEAR(mid[1], std::sqrt(0.5), 1e-15);
  EXPECT_EQ(mid[2], 0.0);

  EXPECT_EQ(code_of([&] { hemisphere_cover(a, pt({-1, 0, 0}), 1); }), Errc::OutsideCollar);
  EXPECT_EQ(code_of([&] { hemisphere_cover(act(2, 0, {}, 3), pt({1, 0, 0}), 1); }), Errc::NoFixedPoint);
  EXPECT_NO_THROW(hemisphere_cover(a, pt({-1, 0, 0}), -1));
}

TEST(Hemisphere, DenominatorBound) {
  // |(1-t)x + t e|^2 = (1-t)^2 + t^2 + 2t(1-t)c is smallest at t = 1/2, where
  // it equals (1+c)/2; with c > -1/2 the norm stays above 1/2.
  const auto a = act(2, 2, {1}, 1);
  SphereSampler s(27);
  double worst = 1.0;
  int used = 0;
  while (used < 10000) {
    const auto x = SpherePoint::trusted(s.point(5));
    if (!in_collar(a, x, 1)) continue;
    ++used;
    const auto tr = hemisphere_cover(a, x, 1);
    for (int j = 0; j <= 64; ++j) worst = std::min(worst, tr.denominator(j / 64.0));
  }
  EXPECT_GE(worst, 0.5);
  EXPECT_GE(worst, 0.5 * (1.0 - 0.5));
}

TEST(Hemisphere, FourDomainsCoverEverything) {
  const auto a = act(3, 2, {1}, 0);
  const HemispherePlanner pl(a);
  SphereSampler s(28);
  std::set<DomainId> seen;
  for (int i = 0; i < 5000; ++i) {
    const auto x = SpherePoint::trusted(s.point(4)), y = SpherePoint::trusted(s.point(4));
    const auto m = pl.membership(x, y);
    ASSERT_FALSE(m.domains.empty());
    seen.insert(m.domains.begin(), m.domains.end());
    const auto path = pl.plan(x, y);
    EXPECT_LE(linalg::distance(path.evaluate(0).coords(), x.coords()), 1e-12);
    EXPECT_LE(linalg::distance(path.evaluate(1).coords(), y.coords()), 1e-12);
  }
  EXPECT_EQ(seen.size(), 4u);
}

TEST(Membership, FreeFunction) {
  const auto a = act(2, 2, {}, 1);
  const auto e = a.fixed_basis(0);
  EXPECT_EQ(domain_membership(a, -e, e, PlannerKind::Three).domains, (std::vector<DomainId>{DomainId::D3}));
  const auto x = pt({0, 0, 1});
  EXPECT_TRUE(domain_membership(a, x, x, PlannerKind::Three).contains(DomainId::U1));
}
