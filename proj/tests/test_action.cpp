#include <cmath>
#include <complex>
#include <numbers>

#include <gtest/gtest.h>

#include "eqtc/action.hpp"
#include "eqtc/rng.hpp"

using namespace eqtc;

namespace {

ActionParams params(int p, int f, std::vector<int> w, int s) { return ActionParams{p, f, std::move(w), s}; }

Errc code_of(const ActionParams& raw) {
  try {
    CyclicLinearAction::validate(raw);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an error";
  return Errc::ParseError;
}

// Reference matrix built independently from std::polar in long double.
Vec reference_matrix(const ActionParams& a, int g) {
  const std::size_t d = static_cast<std::size_t>(a.fixed_dim + 2 * static_cast<int>(a.weights.size()) + a.sign_dim);
  Vec m(d * d, 0.0);
  std::size_t i = 0;
  for (; i < static_cast<std::size_t>(a.fixed_dim); ++i) m[i * d + i] = 1.0;
  std::vector<int> w = a.weights;
  std::sort(w.begin(), w.end());
  for (int q : w) {
    const auto z = std::polar(1.0L, 2.0L * std::numbers::pi_v<long double> * q * g / a.p);
    m[i * d + i] = static_cast<double>(z.real());
    m[i * d + i + 1] = static_cast<double>(-z.imag());
    m[(i + 1) * d + i] = static_cast<double>(z.imag());
    m[(i + 1) * d + i + 1] = static_cast<double>(z.real());
    i += 2;
  }
  for (; i < d; ++i) m[i * d + i] = g % 2 == 0 ? 1.0 : -1.0;
  return m;
}

Vec transpose(const Vec& m, std::size_t d) {
  Vec t(d * d);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c) t[c * d + r] = m[r * d + c];
  return t;
}

const std::vector<ActionParams>& suite() {
  static const std::vector<ActionParams> s = {
      params(2, 1, {}, 1),     params(2, 2, {}, 1),        params(2, 0, {}, 2),   params(2, 3, {1}, 1),
      params(3, 2, {1}, 0),    params(3, 0, {1}, 0),       params(3, 1, {2, 1}, 0), params(5, 1, {1, 2}, 0),
      params(5, 3, {4}, 0),    params(7, 2, {3, 1, 5}, 0), params(2, 4, {}, 0),   params(11, 0, {10, 1, 4}, 0),
  };
  return s;
}

}  // namespace

TEST(Validate, DimensionCount) {
  const auto a = CyclicLinearAction::validate(params(3, 2, {1}, 0));
  EXPECT_EQ(a.sphere_dim(), 3);
  EXPECT_EQ(a.fixed_sphere_dim(), 1);
  const auto b = CyclicLinearAction::validate(params(5, 1, {1, 2}, 0));
  EXPECT_EQ(b.sphere_dim(), 4);
  EXPECT_EQ(b.fixed_sphere_dim(), 0);
}

TEST(Validate, Errors) {
  EXPECT_EQ(code_of(params(3, 1, {}, 1)), Errc::SignBlockWithOddP);
  EXPECT_EQ(code_of(params(4, 2, {1}, 0)), Errc::NonPrime);
  EXPECT_EQ(code_of(params(1, 2, {}, 0)), Errc::NonPrime);
  EXPECT_EQ(code_of(params(5, 1, {5}, 0)), Errc::WeightOutOfRange);
  EXPECT_EQ(code_of(params(5, 1, {0}, 0)), Errc::WeightOutOfRange);
  EXPECT_EQ(code_of(params(2, 1, {}, 0)), Errc::AmbientTooSmall);
  EXPECT_EQ(code_of(params(2, -1, {}, 3)), Errc::NegativeDimension);
  EXPECT_EQ(code_of(params(2, 1, {}, -1)), Errc::NegativeDimension);
}

TEST(Validate, WeightsAreSorted) {
  const auto a = CyclicLinearAction::validate(params(7, 0, {5, 1, 3}, 0));
  EXPECT_EQ(std::vector<int>(a.weights().begin(), a.weights().end()), (std::vector<int>{1, 3, 5}));
}

TEST(Validate, LinearSphereFactory) {
  for (int p : {2, 3, 5})
    for (int n = 1; n <= 8; ++n)
      for (int k = -1; k <= n; ++k) {
        if (p != 2 && (n - k) % 2 != 0) {
          EXPECT_THROW(CyclicLinearAction::linear_sphere(n, k, p), Error);
          continue;
        }
        const auto a = CyclicLinearAction::linear_sphere(n, k, p);
        EXPECT_EQ(a.sphere_dim(), n);
        EXPECT_EQ(a.fixed_sphere_dim(), k);
        EXPECT_EQ(a.order(), p);
      }
}

TEST(Apply, SignBlock) {
  const auto a = CyclicLinearAction::validate(params(2, 1, {}, 1));
  const auto y = a.apply(GroupElement{1}, SpherePoint::from_unit({0.0, 1.0}));
  EXPECT_EQ(y.vec(), (Vec{0.0, -1.0}));
}

TEST(Apply, RotationBlock) {
  const auto a = CyclicLinearAction::validate(params(3, 0, {1}, 0));
  const auto y = a.apply(GroupElement{1}, SpherePoint::from_unit({1.0, 0.0}));
  EXPECT_NEAR(y[0], std::cos(2.0 * std::numbers::pi / 3.0), 1e-15);
  EXPECT_NEAR(y[1], std::sin(2.0 * std::numbers::pi / 3.0), 1e-15);
}

TEST(Apply, IdentityIsExact) {
  SphereSampler s(1);
  for (const auto& raw : suite()) {
    const auto a = CyclicLinearAction::validate(raw);
    const auto x = SpherePoint::trusted(s.point(static_cast<std::size_t>(a.ambient_dim())));
    EXPECT_EQ(a.apply(GroupElement{0}, x), x);
    EXPECT_EQ(a.apply(GroupElement{a.order()}, x), x);
  }
}

TEST(Apply, NegativeExponentIsInverse) {
  SphereSampler s(2);
  for (const auto& raw : suite()) {
    const auto a = CyclicLinearAction::validate(raw);
    const auto x = SpherePoint::trusted(s.point(static_cast<std::size_t>(a.ambient_dim())));
    for (int g = 1; g < a.order(); ++g) {
      const auto back = a.apply(GroupElement{-g}, a.apply(GroupElement{g}, x));
      EXPECT_LE(linalg::distance(back.coords(), x.coords()), 1e-15);
    }
  }
}

TEST(Apply, DimensionMismatch) {
  const auto a = CyclicLinearAction::validate(params(3, 2, {1}, 0));
  try {
    a.apply(GroupElement{1}, SpherePoint::from_unit({1.0, 0.0, 0.0}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::DimensionMismatch);
  }
}

TEST(Matrix, MatchesReference) {
  for (const auto& raw : suite()) {
    const auto a = CyclicLinearAction::validate(raw);
    for (int g = 0; g < a.order(); ++g)
      EXPECT_LE(linalg::max_abs_diff(a.matrix(GroupElement{g}), reference_matrix(raw, g)), 1e-15)
          << "p=" << raw.p << " g=" << g;
  }
}

TEST(Matrix, OrthogonalAndOrderDividesP) {
  for (const auto& raw : suite()) {
    const auto a = CyclicLinearAction::validate(raw);
    const auto d = static_cast<std::size_t>(a.ambient_dim());
    const Vec id = linalg::identity(d);
    for (int g = 0; g < a.order(); ++g) {
      const Vec m = a.matrix(GroupElement{g});
      EXPECT_LE(linalg::max_abs_diff(linalg::matmul(m, transpose(m, d), d), id), 1e-15);
    }
    Vec power = id;
    const Vec gen = a.matrix(GroupElement{1});
    for (int i = 0; i < a.order(); ++i) power = linalg::matmul(power, gen, d);
    EXPECT_LE(linalg::max_abs_diff(power, id), 1e-13);
  }
}

TEST(Matrix, InverseIsExactTranspose) {
  for (const auto& raw : suite()) {
    const auto a = CyclicLinearAction::validate(raw);
    const auto d = static_cast<std::size_t>(a.ambient_dim());
    for (int g = 1; g < a.order(); ++g)
      EXPECT_EQ(a.matrix(GroupElement{a.order() - g}), transpose(a.matrix(GroupElement{g}), d));
  }
}

TEST(Matrix, ApplyAgreesWithMatrix) {
  SphereSampler s(3);
  for (const auto& raw : suite()) {
    const auto a = CyclicLinearAction::validate(raw);
    const auto d = static_cast<std::size_t>(a.ambient_dim());
    const Vec x = s.point(d);
    for (int g = 0; g < a.order(); ++g) {
      const Vec m = a.matrix(GroupElement{g});
      Vec mx(d, 0.0);
      for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c) mx[r] += m[r * d + c] * x[c];
      EXPECT_LE(linalg::distance(a.apply(GroupElement{g}, SpherePoint::trusted(x)).coords(), mx), 1e-15);
    }
  }
}

TEST(Fixed, Examples) {
  const auto a = CyclicLinearAction::validate(params(3, 2, {1}, 0));
  EXPECT_TRUE(a.is_fixed(SpherePoint::from_unit({1, 0, 0, 0})));
  EXPECT_FALSE(a.is_fixed(SpherePoint::from_unit({0, 0, 1, 0})));
  EXPECT_EQ(CyclicLinearAction::validate(params(2, 0, {}, 2)).fixed_sphere_dim(), -1);
}

TEST(Fixed, FixedSetIsTheFirstCoordinates) {
  SphereSampler s(4);
  for (const auto& raw : suite()) {
    const auto a = CyclicLinearAction::validate(raw);
    const auto d = static_cast<std::size_t>(a.ambient_dim());
    const Vec gen = a.matrix(GroupElement{1});
    for (int trial = 0; trial < 50; ++trial) {
      Vec x = s.point(d);
      // Independent test: x is fixed iff M(1) x = x.
      Vec mx(d, 0.0);
      for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c) mx[r] += gen[r * d + c] * x[c];
      EXPECT_EQ(a.is_fixed(x), linalg::distance(mx, x) <= 1e-9);
      if (a.fixed_dim() > 0) {
        for (std::size_t i = static_cast<std::size_t>(a.fixed_dim()); i < d; ++i) x[i] = 0.0;
        const auto fx = SpherePoint::normalize(x);
        EXPECT_TRUE(a.is_fixed(fx));
        for (int g = 0; g < a.order(); ++g) EXPECT_EQ(a.apply(GroupElement{g}, fx), fx);
      }
    }
  }
}

TEST(Orbit, Examples) {
  const auto a = CyclicLinearAction::validate(params(2, 1, {}, 1));
  const auto orb = a.orbit(SpherePoint::from_unit({0.0, 1.0}));
  ASSERT_EQ(orb.size(), 2u);
  EXPECT_EQ(orb[0].vec(), (Vec{0.0, 1.0}));
  EXPECT_EQ(orb[1].vec(), (Vec{0.0, -1.0}));

  const auto b = CyclicLinearAction::validate(params(3, 0, {1}, 0));
  const auto circle = b.orbit(SpherePoint::from_unit({1.0, 0.0}));
  ASSERT_EQ(circle.size(), 3u);
  for (int j = 0; j < 3; ++j) {
    EXPECT_NEAR(circle[static_cast<std::size_t>(j)][0], std::cos(2.0 * std::numbers::pi * j / 3.0), 1e-15);
    EXPECT_NEAR(circle[static_cast<std::size_t>(j)][1], std::sin(2.0 * std::numbers::pi * j / 3.0), 1e-15);
  }

  const auto c = CyclicLinearAction::validate(params(5, 2, {1}, 0));
  const auto e = SpherePoint::from_unit({0.6, 0.8, 0.0, 0.0});
  const auto fixed_orbit = c.orbit(e);
  ASSERT_EQ(fixed_orbit.size(), 5u);
  for (const auto& pt : fixed_orbit) EXPECT_EQ(pt, e);
}

TEST(SpherePoint, Construction) {
  EXPECT_THROW(SpherePoint::from_unit({1.0, 1.0}), Error);
  EXPECT_THROW(SpherePoint::from_unit({1.0}), Error);
  EXPECT_NO_THROW(SpherePoint::from_unit({1.0, 0.0}));
  const auto p = SpherePoint::normalize({3.0, 4.0});
  EXPECT_DOUBLE_EQ(p[0], 0.6);
  EXPECT_DOUBLE_EQ(p[1], 0.8);
  try {
    SpherePoint::from_unit({1.0 + 1e-9, 0.0});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotOnSphere);
  }
}

TEST(FixedBasis, Range) {
  const auto a = CyclicLinearAction::validate(params(3, 2, {1}, 0));
  EXPECT_EQ(a.fixed_basis(1).vec(), (Vec{0, 1, 0, 0}));
  EXPECT_THROW(a.fixed_basis(2), Error);
}
