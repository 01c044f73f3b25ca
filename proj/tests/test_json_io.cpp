// Copyright 2026 The clonesig Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "clonesig/errors.hpp"
#include "clonesig/json_io.hpp"

#include <gtest/gtest.h>

#include <functional>

namespace clonesig {
namespace {

void expect_config_error(const std::function<void()>& f, const std::string& field) {
  try {
    f();
    FAIL() << "expected a ConfigError mentioning " << field;
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ConfigError);
    EXPECT_NE(std::string(e.what()).find(field), std::string::npos) << e.what();
  }
}

TEST(JsonIo, StateFileRoundTrip) {
  const std::vector<PureState> s{make_state({Complex(0.6), Complex(0.0, 0.8)}),
                                 basis_state(2, 1)};
  const Json j = encode_state_file(s);
  EXPECT_EQ(j.at("dim"), 2);
  const auto back = decode_state_file(Json::parse(j.dump()));
  ASSERT_EQ(back.size(), 2u);
  for (std::size_t k = 0; k < 2; ++k) {
    EXPECT_EQ((back[k].amplitudes() - s[k].amplitudes()).norm(), 0.0);
  }
}

TEST(JsonIo, ComplexForms) {
  EXPECT_EQ(decode_complex(Json(0.5), "z"), Complex(0.5, 0.0));
  EXPECT_EQ(decode_complex(Json::parse("[1, -2]"), "z"), Complex(1.0, -2.0));
  expect_config_error([] { decode_complex(Json::parse("[1, 2, 3]"), "z"); }, "'z'");
}

TEST(JsonIo, NormalizationPolicy) {
  const Json j = Json::parse(R"({"dim": 2, "states": [[[3, 0], [4, 0]]]})");
  expect_config_error([&] { decode_state_file(j); }, "states[0]");
  EXPECT_NEAR(std::abs(decode_state_file(j, true)[0][0]), 0.6, 1e-15);
  const Json slightly = Json::parse(R"({"states": [[[0.6, 0], [0.8000000001, 0]]]})");
  EXPECT_NO_THROW(decode_state_file(slightly));
}

TEST(JsonIo, StateFileErrors) {
  expect_config_error([] { decode_state_file(Json::parse("[]")); }, "<root>");
  expect_config_error([] { decode_state_file(Json::parse("{}")); }, "states");
  expect_config_error(
      [] { decode_state_file(Json::parse(R"({"dim": 3, "states": [[[1,0],[0,0]]]})")); },
      "states[0]");
}

TEST(JsonIo, AuditConfigDecoding) {
  const Json j = Json::parse(R"({
    "alpha": [0.7071067811865476, 0.7071067811865476],
    "messages": [{"phases": [0, 0]}, [0, 2.0943951023931953], {"phases": [0, 4.1887902047863905]}],
    "trials": 10, "seed": 4, "cloner_mode": "none", "gamma": 0.5,
    "decoder_objective": "average"})");
  const AuditConfig cfg = decode_audit_config(j);
  EXPECT_EQ(cfg.dim(), 2);
  EXPECT_EQ(cfg.messages.size(), 3u);
  EXPECT_EQ(cfg.trials, 10u);
  EXPECT_EQ(cfg.seed, 4u);
  EXPECT_EQ(cfg.cloner_mode, ClonerMode::None);
  EXPECT_EQ(cfg.decoder_objective, UsdObjective::Average);
  ASSERT_TRUE(cfg.gamma.has_value());
  EXPECT_EQ(*cfg.gamma, 0.5);
}

TEST(JsonIo, AuditConfigErrors) {
  const std::string base = R"("alpha": [0.6, 0.8], "messages": [[0,0],[0,1],[0,2]])";
  expect_config_error([&] { decode_audit_config(Json::parse("{" + base + "}")); }, "trials");
  expect_config_error(
      [&] { decode_audit_config(Json::parse("{" + base + R"(, "trials": -1})")); }, "trials");
  expect_config_error(
      [&] {
        decode_audit_config(Json::parse("{" + base + R"(, "trials": 5, "cloner_mode": "x"})"));
      },
      "cloner_mode");
  expect_config_error(
      [] { decode_audit_config(Json::parse(R"({"alpha": [0.6, 0.7], "messages": [], "trials": 1})")); },
      "alpha");
  expect_config_error([] { decode_audit_config(Json::parse(R"({"trials": 1})")); }, "alpha");
}

TEST(JsonIo, TrialsCsv) {
  std::vector<TrialRecord> recs(3);
  recs[0] = {1, 0, true, 1};
  recs[1] = {2, 1, true, kDecodeInconclusive};
  recs[2] = {0, 1, false, kDecodeCloneFailed};
  const std::string csv = trials_csv(recs);
  EXPECT_EQ(csv,
            "trial,message,rsp_outcome,clone_flag,decode_outcome\n"
            "0,1,0,1,1\n"
            "1,2,1,1,inconclusive\n"
            "2,0,1,0,clone_failed\n");
}

TEST(JsonIo, PovmRoundTrip) {
  EXPECT_THROW(decode_povm(Json::parse("[[[1]]]")), Error);
  const Json e = Json::parse(R"([[[[1,0],[0,0]],[[0,0],[0,0]]], [[[0,0],[0,0]],[[0,0],[1,0]]]])");
  const Povm p = decode_povm(e);
  EXPECT_EQ(p.elements.size(), 2u);
  EXPECT_LT(p.completeness_error(), 1e-15);
}

}  // namespace
}  // namespace clonesig
