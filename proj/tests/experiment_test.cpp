// Copyright 2026 The semuav Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "semuav/experiment.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <sstream>
#include <string>

namespace semuav {
namespace {

std::string config_error(const std::string& yaml) {
  try {
    parse_config(yaml);
  } catch (const ConfigError& e) {
    return e.what();
  }
  return "";
}

bool same_params(const SystemParams& a, const SystemParams& b) {
  return a.target.x == b.target.x && a.target.y == b.target.y &&
         a.sensing_decay == b.sensing_decay && a.qos_min == b.qos_min &&
         a.data_bits == b.data_bits && a.rho_min == b.rho_min &&
         a.compress_cycles_per_bit == b.compress_cycles_per_bit &&
         a.recover_cycles_per_bit == b.recover_cycles_per_bit &&
         a.inference_cycles_per_bit == b.inference_cycles_per_bit &&
         a.cpu_uav_hz == b.cpu_uav_hz && a.cpu_bs_hz == b.cpu_bs_hz &&
         a.capacitance_uav == b.capacitance_uav && a.capacitance_bs == b.capacitance_bs &&
         a.ref_gain == b.ref_gain && a.pathloss_exp == b.pathloss_exp &&
         a.bw_uav_hz == b.bw_uav_hz && a.bw_bs_hz == b.bw_bs_hz && a.noise_psd == b.noise_psd &&
         a.gain_bs_server == b.gain_bs_server && a.p_uav_max == b.p_uav_max &&
         a.p_bs_max == b.p_bs_max && a.h_min == b.h_min && a.h_max == b.h_max &&
         a.latency_budget == b.latency_budget;
}

TEST(Config, DefaultsMatchScenario) {
  const SystemParams p = ScenarioConfig{}.to_params();
  EXPECT_EQ(p.target.x, 300.0);
  EXPECT_EQ(p.target.y, 100.0);
  EXPECT_EQ(p.h_min, 40.0);
  EXPECT_EQ(p.h_max, 400.0);
  EXPECT_EQ(p.p_uav_max, 1.0);
  EXPECT_EQ(p.p_bs_max, 1.0);
  EXPECT_EQ(p.bw_bs_hz, 0.5e6);
  EXPECT_EQ(p.data_bits, 1e6);
  EXPECT_EQ(p.latency_budget, 0.7);
  EXPECT_TRUE(same_params(p, SystemParams{}));
}

TEST(Config, EmptyDocumentGivesDefaults) {
  EXPECT_TRUE(same_params(parse_config("").to_params(), SystemParams{}));
}

TEST(Config, EmitParseRoundTrip) {
  const ScenarioConfig defaults;
  const ScenarioConfig back = parse_config(emit_config(defaults));
  EXPECT_TRUE(same_params(back.to_params(), defaults.to_params()));
  EXPECT_EQ(emit_config(back), emit_config(defaults));

  ScenarioConfig odd;
  odd.data_bits = 1234567.891;
  odd.ref_gain_db = -93.123456789012345;
  odd.grid.n_pu = 17;
  odd.grid.spacing = Spacing::kLinear;
  odd.bcd.tol = 3e-7;
  odd.schemes = {Scheme::kBcd, Scheme::kProposed};
  const ScenarioConfig odd_back = parse_config(emit_config(odd));
  EXPECT_TRUE(same_params(odd_back.to_params(), odd.to_params()));
  EXPECT_EQ(odd_back.grid.n_pu, 17u);
  EXPECT_EQ(odd_back.grid.spacing, Spacing::kLinear);
  EXPECT_EQ(odd_back.bcd.tol, 3e-7);
  EXPECT_EQ(odd_back.schemes, odd.schemes);
}

TEST(Config, PartialOverride) {
  const ScenarioConfig c = parse_config(
      "scenario:\n  channel:\n    bw_bs_hz: 1.5e6\n  power:\n    p_uav_max_dbm: 20\n");
  const SystemParams p = c.to_params();
  EXPECT_EQ(p.bw_bs_hz, 1.5e6);
  EXPECT_NEAR(p.p_uav_max, 0.1, 1e-15);
  EXPECT_EQ(p.data_bits, 1e6);
}

TEST(Config, RejectsOutOfRangeQos) {
  const std::string err = config_error("scenario:\n  sensing:\n    qos_min: 1.5\n");
  EXPECT_NE(err.find("qos_min"), std::string::npos) << err;
}

TEST(Config, RejectsUnknownKeysWithLocation) {
  std::string err = config_error("scenario:\n  channel:\n    bandwidth: 3\n");
  EXPECT_NE(err.find("scenario.channel.bandwidth"), std::string::npos) << err;
  EXPECT_NE(err.find("line 3"), std::string::npos) << err;
  EXPECT_NE(config_error("scenari:\n  x: 1\n").find("scenari"), std::string::npos);
  EXPECT_NE(config_error("grid:\n  n: 3\n").find("grid.n"), std::string::npos);
  EXPECT_NE(config_error("schemes: [proposed, magic]\n").find("magic"), std::string::npos);
}

TEST(Config, RejectsMalformedValues) {
  std::string err = config_error("scenario:\n  data:\n    size_bits: lots\n");
  EXPECT_NE(err.find("size_bits"), std::string::npos) << err;
  EXPECT_NE(err.find("line 3"), std::string::npos) << err;
  EXPECT_FALSE(config_error("scenario: [1, 2\n").empty());
  EXPECT_FALSE(config_error("grid:\n  n_pu: 1\n").empty());
  EXPECT_FALSE(config_error("grid:\n  spacing: cubic\n").empty());
}

TEST(Config, LoadMissingFile) {
  EXPECT_THROW(load_config("/nonexistent/semuav.yaml"), ConfigError);
}

TEST(Axes, SetAndGet) {
  SystemParams p;
  for (const std::string& axis : sweep_axes()) {
    const double v = get_axis(p, axis);
    set_axis(p, axis, v * 1.5 + 1.0);
    EXPECT_EQ(get_axis(p, axis), v * 1.5 + 1.0) << axis;
  }
  EXPECT_THROW(set_axis(p, "nope", 1.0), ConfigError);
  SystemParams q;
  set_axis(q, "B_B", 2e6);
  EXPECT_EQ(q.bw_bs_hz, 2e6);
}

TEST(Sweep, DefaultRanges) {
  const SweepSpec b = default_sweep("B_B");
  ASSERT_EQ(b.values.size(), 11u);
  EXPECT_EQ(b.values.front(), 0.1e6);
  EXPECT_EQ(b.values.back(), 2e6);
  EXPECT_EQ(default_sweep("D").values.size(), 10u);
  EXPECT_EQ(default_sweep("T_th").values.front(), 0.3);
  EXPECT_EQ(default_sweep("T_th").values.back(), 1.2);
  EXPECT_THROW(default_sweep("alpha"), ConfigError);
}

TEST(Sweep, SpecValidation) {
  SweepSpec s{"D", {1e6, 1e6}, {Scheme::kProposed}};
  EXPECT_THROW(s.validate(), ConfigError);
  s.values = {};
  EXPECT_THROW(s.validate(), ConfigError);
  s.values = {1e6};
  s.schemes = {};
  EXPECT_THROW(s.validate(), ConfigError);
}

TEST(Sweep, OrderedRecordsAndInvalidPoints) {
  ScenarioConfig cfg;
  cfg.grid.n_pu = cfg.grid.n_pb = 40;
  const SweepSpec s{"q_th", {0.05, 0.5, 0.999}, {Scheme::kProposed, Scheme::kNonSemantic}};
  const std::vector<ResultRecord> r = run_sweep(cfg, s, 2);
  ASSERT_EQ(r.size(), 6u);
  EXPECT_EQ(r[0].value, 0.05);
  EXPECT_EQ(r[0].scheme, Scheme::kProposed);
  EXPECT_EQ(r[1].scheme, Scheme::kNonSemantic);
  EXPECT_EQ(r[5].value, 0.999);
  // q_th = 0.999 puts h_min outside the service distance.
  EXPECT_FALSE(r[4].solution.feasible);
  EXPECT_FALSE(r[5].solution.feasible);
}

TEST(Csv, HeaderAndInfeasibleRows) {
  ScenarioConfig cfg;
  cfg.grid.n_pu = cfg.grid.n_pb = 40;
  const SweepSpec s{"D", {1e6, 2e6}, {Scheme::kProposed, Scheme::kNonSemantic}};
  std::ostringstream os;
  write_csv(run_sweep(cfg, s), os);
  std::istringstream in(os.str());
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, kCsvHeader);
  int rows = 0;
  while (std::getline(in, line)) {
    ++rows;
    EXPECT_EQ(std::count(line.begin(), line.end(), ','), 17) << line;
    if (line.find("2000000,non_semantic") != std::string::npos) {
      EXPECT_EQ(line, "D,2000000,non_semantic,,false,,,,,,,,,,,,,");
    }
  }
  EXPECT_EQ(rows, 4);
}

TEST(Csv, PlotDataOneColumnPerScheme) {
  ScenarioConfig cfg;
  cfg.grid.n_pu = cfg.grid.n_pb = 40;
  const SweepSpec s{"D", {1e6, 2e6}, {Scheme::kProposed, Scheme::kNonSemantic}};
  std::ostringstream os;
  write_plot_data(run_sweep(cfg, s), os);
  std::istringstream in(os.str());
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "D,proposed,non_semantic");
  std::getline(in, line);
  EXPECT_EQ(line.rfind("1000000,", 0), 0u);
  std::getline(in, line);
  EXPECT_EQ(line.back(), ',');
}

TEST(Csv, FormatExactRoundTrips) {
  for (double v : {0.1, 1.0 / 3.0, 1e-300, 123456789.123, 0.0894761683457}) {
    EXPECT_EQ(std::stod(format_exact(v)), v);
  }
}

TEST(Describe, MentionsKeyQuantities) {
  const std::string text = describe(solve(SystemParams{}));
  EXPECT_NE(text.find("total energy"), std::string::npos);
  EXPECT_NE(text.find("rho"), std::string::npos);
  Solution none;
  EXPECT_NE(describe(none).find("feasible:      no"), std::string::npos);
}

}  // namespace
}  // namespace semuav
