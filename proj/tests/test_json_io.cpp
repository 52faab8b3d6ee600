#include <gtest/gtest.h>

#include "eqtc/json_io.hpp"
#include "eqtc/planner.hpp"

using namespace eqtc;
using eqtc::io::json;

TEST(ActionJson, RoundTrip) {
  for (const ActionParams& a : {ActionParams{3, 2, {1}, 0}, ActionParams{2, 1, {}, 2}, ActionParams{7, 0, {1, 3, 6}, 0}}) {
    const json j = io::to_json(a);
    EXPECT_EQ(io::action_from_json(j), a);
    EXPECT_EQ(io::action_from_json(io::parse(j.dump())), a);
  }
}

TEST(ActionJson, DefaultsAndErrors) {
  const auto a = io::action_from_json(io::parse(R"({"p": 2, "fixed_dim": 3})"));
  EXPECT_TRUE(a.weights.empty());
  EXPECT_EQ(a.sign_dim, 0);
  auto code = [](const std::string& text) {
    try {
      io::action_from_json(io::parse(text));
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::InvalidQuery;
  };
  EXPECT_EQ(code(R"({"fixed_dim": 3})"), Errc::ParseError);
  EXPECT_EQ(code(R"({"p": "two", "fixed_dim": 3})"), Errc::ParseError);
  EXPECT_EQ(code(R"([1, 2])"), Errc::ParseError);
  EXPECT_EQ(code(R"({"p": 2,)"), Errc::ParseError);
}

TEST(ComplexJson, RoundTrip) {
  const euler::GCWComplex c{6, euler::GroupKind::Cyclic, {{0, 6, 2}, {1, 2, 3}, {3, 1, 1}}};
  EXPECT_EQ(io::complex_from_json(io::parse(io::to_json(c).dump())), c);
  const euler::GCWComplex other{4, euler::GroupKind::Other, {{0, 4, 1}}};
  const json j = io::to_json(other);
  EXPECT_EQ(j.at("group"), "other");
  EXPECT_EQ(io::complex_from_json(j), other);
  EXPECT_THROW(io::complex_from_json(io::parse(R"({"group_order": 4, "cells": [{"dim": 0, "isotropy": 3, "count": 1}]})")),
               Error);
  EXPECT_THROW(io::complex_from_json(io::parse(R"({"group_order": 4, "group": "dihedral"})")), Error);
}

TEST(OracleJson, Value) {
  const json j = io::to_json(tc::tc_invariant({5, 3, 2}));
  EXPECT_EQ(j.at("lower"), 2);
  EXPECT_EQ(j.at("upper"), 3);
  EXPECT_EQ(j.at("status"), "unsettled");
  EXPECT_EQ(j.at("value"), "2..3");
  EXPECT_FALSE(j.at("provenance").empty());
  EXPECT_EQ(io::to_json(tc::tc_equivariant({4, 0, 2})).at("upper"), "inf");
}

TEST(PathJson, Samples) {
  const auto a = CyclicLinearAction::validate(ActionParams{3, 2, {1}, 0});
  const auto path = make_planner(a, PlannerKind::Two)->plan(SpherePoint::from_unit({1, 0, 0, 0}),
                                                           SpherePoint::from_unit({-1, 0, 0, 0}));
  const json j = io::path_samples(path, 5);
  EXPECT_EQ(j.at("domain"), "U2");
  ASSERT_EQ(j.at("samples").size(), 5u);
  EXPECT_EQ(j.at("samples")[4].at("point"), json({-1.0, 0.0, 0.0, 0.0}));
  EXPECT_EQ(j.at("segments").size(), 2u);
  const std::string csv = io::path_csv(path, 3);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "t,x0,x1,x2,x3");
}

TEST(ReportJson, TimingsCanBeDropped) {
  verify::VerifyConfig cfg;
  cfg.samples = 200;
  cfg.path_samples = 20;
  cfg.continuity_samples = 10;
  cfg.t_grid = 11;
  const auto r = verify::run_verify(ActionParams{2, 2, {}, 1}, PlannerKind::Three, cfg);
  const json with = io::to_json(r);
  const json without = io::to_json(r, false);
  EXPECT_TRUE(with.at("checks")[0].contains("elapsed_ms"));
  EXPECT_FALSE(without.at("checks")[0].contains("elapsed_ms"));
  EXPECT_EQ(without.at("verdict"), "pass");
  EXPECT_EQ(without.at("action"), io::to_json(ActionParams{2, 2, {}, 1}));
  EXPECT_TRUE(without.at("error").is_null());
}
