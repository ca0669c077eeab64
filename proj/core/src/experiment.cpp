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

#include <yaml-cpp/yaml.h>

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>

#include "semuav/parallel.hpp"

namespace semuav {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct ScalarField {
  std::string_view section;
  std::string_view key;
  double ScenarioConfig::*member;
};

// Order here is the order emit_config writes.
constexpr std::array kScenarioFields = {
    ScalarField{"target", "x_m", &ScenarioConfig::target_x_m},
    ScalarField{"target", "y_m", &ScenarioConfig::target_y_m},
    ScalarField{"sensing", "decay_per_m", &ScenarioConfig::sensing_decay_per_m},
    ScalarField{"sensing", "qos_min", &ScenarioConfig::qos_min},
    ScalarField{"data", "size_bits", &ScenarioConfig::data_bits},
    ScalarField{"data", "rho_min", &ScenarioConfig::rho_min},
    ScalarField{"compute", "compress_cycles_per_bit", &ScenarioConfig::compress_cycles_per_bit},
    ScalarField{"compute", "recover_cycles_per_bit", &ScenarioConfig::recover_cycles_per_bit},
    ScalarField{"compute", "inference_cycles_per_bit", &ScenarioConfig::inference_cycles_per_bit},
    ScalarField{"compute", "cpu_uav_hz", &ScenarioConfig::cpu_uav_hz},
    ScalarField{"compute", "cpu_bs_hz", &ScenarioConfig::cpu_bs_hz},
    ScalarField{"compute", "capacitance_uav", &ScenarioConfig::capacitance_uav},
    ScalarField{"compute", "capacitance_bs", &ScenarioConfig::capacitance_bs},
    ScalarField{"channel", "ref_gain_db", &ScenarioConfig::ref_gain_db},
    ScalarField{"channel", "pathloss_exp", &ScenarioConfig::pathloss_exp},
    ScalarField{"channel", "bw_uav_hz", &ScenarioConfig::bw_uav_hz},
    ScalarField{"channel", "bw_bs_hz", &ScenarioConfig::bw_bs_hz},
    ScalarField{"channel", "noise_dbm_per_hz", &ScenarioConfig::noise_dbm_per_hz},
    ScalarField{"channel", "gain_bs_server_db", &ScenarioConfig::gain_bs_server_db},
    ScalarField{"power", "p_uav_max_dbm", &ScenarioConfig::p_uav_max_dbm},
    ScalarField{"power", "p_bs_max_dbm", &ScenarioConfig::p_bs_max_dbm},
    ScalarField{"altitude", "h_min_m", &ScenarioConfig::h_min_m},
    ScalarField{"altitude", "h_max_m", &ScenarioConfig::h_max_m},
    ScalarField{"latency", "budget_s", &ScenarioConfig::latency_budget_s},
};

struct AxisDef {
  std::string_view name;
  double& (*ref)(SystemParams&);
};

#define SEMUAV_AXIS(name, field) \
  AxisDef { name, [](SystemParams& p) -> double& { return p.field; } }

const std::array kAxes = {
    SEMUAV_AXIS("B_B", bw_bs_hz),
    SEMUAV_AXIS("D", data_bits),
    SEMUAV_AXIS("T_th", latency_budget),
    SEMUAV_AXIS("B_U", bw_uav_hz),
    SEMUAV_AXIS("x_T", target.x),
    SEMUAV_AXIS("y_T", target.y),
    SEMUAV_AXIS("xi", sensing_decay),
    SEMUAV_AXIS("q_th", qos_min),
    SEMUAV_AXIS("rho_th", rho_min),
    SEMUAV_AXIS("kappa1", compress_cycles_per_bit),
    SEMUAV_AXIS("kappa2", recover_cycles_per_bit),
    SEMUAV_AXIS("kappa3", inference_cycles_per_bit),
    SEMUAV_AXIS("f_U", cpu_uav_hz),
    SEMUAV_AXIS("f_B", cpu_bs_hz),
    SEMUAV_AXIS("tau_U", capacitance_uav),
    SEMUAV_AXIS("tau_B", capacitance_bs),
    SEMUAV_AXIS("G0", ref_gain),
    SEMUAV_AXIS("alpha", pathloss_exp),
    SEMUAV_AXIS("N0", noise_psd),
    SEMUAV_AXIS("G_BS", gain_bs_server),
    SEMUAV_AXIS("p_U_max", p_uav_max),
    SEMUAV_AXIS("p_B_max", p_bs_max),
    SEMUAV_AXIS("H_min", h_min),
    SEMUAV_AXIS("H_max", h_max),
};

#undef SEMUAV_AXIS

const AxisDef& find_axis(std::string_view axis) {
  for (const AxisDef& a : kAxes) {
    if (a.name == axis) return a;
  }
  throw ConfigError("unknown sweep axis '" + std::string(axis) + "'");
}

[[noreturn]] void fail_at(const YAML::Mark& mark, const std::string& what) {
  std::ostringstream os;
  if (!mark.is_null()) os << "line " << mark.line + 1 << ", column " << mark.column + 1 << ": ";
  os << what;
  throw ConfigError(os.str());
}

template <typename T>
T read_scalar(const YAML::Node& node, const std::string& key) {
  if (!node.IsScalar()) fail_at(node.Mark(), "'" + key + "' must be a scalar");
  try {
    return node.as<T>();
  } catch (const YAML::Exception&) {
    fail_at(node.Mark(), "'" + key + "' has malformed value '" + node.Scalar() + "'");
  }
}

void require_map(const YAML::Node& node, const std::string& key) {
  if (!node.IsMap()) fail_at(node.Mark(), "'" + key + "' must be a mapping");
}

void parse_scenario(const YAML::Node& scenario, ScenarioConfig& cfg) {
  require_map(scenario, "scenario");
  for (const auto& section_kv : scenario) {
    const std::string section = section_kv.first.as<std::string>();
    const YAML::Node& body = section_kv.second;
    bool known_section = false;
    for (const ScalarField& f : kScenarioFields) known_section |= f.section == section;
    if (!known_section) {
      fail_at(section_kv.first.Mark(), "unknown key 'scenario." + section + "'");
    }
    require_map(body, "scenario." + section);
    for (const auto& kv : body) {
      const std::string key = kv.first.as<std::string>();
      const std::string path = "scenario." + section + "." + key;
      const ScalarField* field = nullptr;
      for (const ScalarField& f : kScenarioFields) {
        if (f.section == section && f.key == key) field = &f;
      }
      if (field == nullptr) fail_at(kv.first.Mark(), "unknown key '" + path + "'");
      cfg.*(field->member) = read_scalar<double>(kv.second, path);
    }
  }
}

void parse_grid(const YAML::Node& node, GridSpec& grid) {
  require_map(node, "grid");
  for (const auto& kv : node) {
    const std::string key = kv.first.as<std::string>();
    const std::string path = "grid." + key;
    if (key == "n_pu") {
      grid.n_pu = read_scalar<std::size_t>(kv.second, path);
    } else if (key == "n_pb") {
      grid.n_pb = read_scalar<std::size_t>(kv.second, path);
    } else if (key == "spacing") {
      const std::string v = read_scalar<std::string>(kv.second, path);
      if (v == "log") {
        grid.spacing = Spacing::kLog;
      } else if (v == "linear") {
        grid.spacing = Spacing::kLinear;
      } else {
        fail_at(kv.second.Mark(), "'grid.spacing' must be 'log' or 'linear'");
      }
    } else if (key == "floor_ratio") {
      grid.floor_ratio = read_scalar<double>(kv.second, path);
    } else if (key == "refine_rounds") {
      grid.refine_rounds = read_scalar<int>(kv.second, path);
    } else if (key == "refine_shrink") {
      grid.refine_shrink = read_scalar<double>(kv.second, path);
    } else {
      fail_at(kv.first.Mark(), "unknown key '" + path + "'");
    }
  }
}

void parse_bcd(const YAML::Node& node, BcdOptions& bcd) {
  require_map(node, "bcd");
  for (const auto& kv : node) {
    const std::string key = kv.first.as<std::string>();
    const std::string path = "bcd." + key;
    if (key == "max_iters") {
      bcd.max_iters = read_scalar<int>(kv.second, path);
    } else if (key == "tol") {
      bcd.tol = read_scalar<double>(kv.second, path);
    } else {
      fail_at(kv.first.Mark(), "unknown key '" + path + "'");
    }
  }
}

std::vector<Scheme> parse_schemes(const YAML::Node& node) {
  if (!node.IsSequence() || node.size() == 0) {
    fail_at(node.Mark(), "'schemes' must be a non-empty list");
  }
  std::vector<Scheme> out;
  for (const auto& item : node) {
    const std::string name = read_scalar<std::string>(item, "schemes");
    try {
      out.push_back(parse_scheme(name));
    } catch (const ConfigError& e) {
      fail_at(item.Mark(), e.what());
    }
  }
  return out;
}

std::string format_sig9(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

}  // namespace

SystemParams ScenarioConfig::to_params() const {
  SystemParams p;
  p.target = {target_x_m, target_y_m, 0.0};
  p.sensing_decay = sensing_decay_per_m;
  p.qos_min = qos_min;
  p.data_bits = data_bits;
  p.rho_min = rho_min;
  p.compress_cycles_per_bit = compress_cycles_per_bit;
  p.recover_cycles_per_bit = recover_cycles_per_bit;
  p.inference_cycles_per_bit = inference_cycles_per_bit;
  p.cpu_uav_hz = cpu_uav_hz;
  p.cpu_bs_hz = cpu_bs_hz;
  p.capacitance_uav = capacitance_uav;
  p.capacitance_bs = capacitance_bs;
  p.ref_gain = db_to_linear(ref_gain_db);
  p.pathloss_exp = pathloss_exp;
  p.bw_uav_hz = bw_uav_hz;
  p.bw_bs_hz = bw_bs_hz;
  p.noise_psd = dbm_per_hz_to_watt_per_hz(noise_dbm_per_hz);
  p.gain_bs_server = db_to_linear(gain_bs_server_db);
  p.p_uav_max = dbm_to_watt(p_uav_max_dbm);
  p.p_bs_max = dbm_to_watt(p_bs_max_dbm);
  p.h_min = h_min_m;
  p.h_max = h_max_m;
  p.latency_budget = latency_budget_s;
  p.validate();
  return p;
}

ScenarioConfig parse_config(std::string_view yaml_text) {
  YAML::Node root;
  try {
    root = YAML::Load(std::string(yaml_text));
  } catch (const YAML::Exception& e) {
    fail_at(e.mark, "YAML parse error: " + e.msg);
  }
  ScenarioConfig cfg;
  if (root.IsNull()) {
    cfg.to_params();
    return cfg;
  }
  require_map(root, "<document>");
  for (const auto& kv : root) {
    const std::string key = kv.first.as<std::string>();
    if (key == "scenario") {
      parse_scenario(kv.second, cfg);
    } else if (key == "grid") {
      parse_grid(kv.second, cfg.grid);
    } else if (key == "bcd") {
      parse_bcd(kv.second, cfg.bcd);
    } else if (key == "schemes") {
      cfg.schemes = parse_schemes(kv.second);
    } else {
      fail_at(kv.first.Mark(), "unknown key '" + key + "'");
    }
  }
  cfg.to_params();
  cfg.grid.validate();
  cfg.bcd.validate();
  return cfg;
}

ScenarioConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path.string() + "'");
  std::ostringstream text;
  text << in.rdbuf();
  try {
    return parse_config(text.str());
  } catch (const ConfigError& e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
}

std::string emit_config(const ScenarioConfig& config) {
  std::ostringstream os;
  os << "# semuav scenario. Powers in dBm, noise in dBm/Hz, gains in dB, otherwise SI.\n";
  os << "scenario:\n";
  std::string_view section;
  for (const ScalarField& f : kScenarioFields) {
    if (f.section != section) {
      section = f.section;
      os << "  " << section << ":\n";
    }
    os << "    " << f.key << ": " << format_exact(config.*(f.member)) << "\n";
  }
  os << "grid:\n";
  os << "  n_pu: " << config.grid.n_pu << "\n";
  os << "  n_pb: " << config.grid.n_pb << "\n";
  os << "  spacing: " << (config.grid.spacing == Spacing::kLog ? "log" : "linear") << "\n";
  os << "  floor_ratio: " << format_exact(config.grid.floor_ratio) << "\n";
  os << "  refine_rounds: " << config.grid.refine_rounds << "\n";
  os << "  refine_shrink: " << format_exact(config.grid.refine_shrink) << "\n";
  os << "bcd:\n";
  os << "  max_iters: " << config.bcd.max_iters << "\n";
  os << "  tol: " << format_exact(config.bcd.tol) << "\n";
  os << "schemes: [";
  for (std::size_t i = 0; i < config.schemes.size(); ++i) {
    os << (i ? ", " : "") << to_string(config.schemes[i]);
  }
  os << "]\n";
  return os.str();
}

std::vector<std::string> sweep_axes() {
  std::vector<std::string> out;
  for (const AxisDef& a : kAxes) out.emplace_back(a.name);
  return out;
}

void set_axis(SystemParams& params, std::string_view axis, double value) {
  find_axis(axis).ref(params) = value;
}

double get_axis(const SystemParams& params, std::string_view axis) {
  SystemParams copy = params;
  return find_axis(axis).ref(copy);
}

void SweepSpec::validate() const {
  find_axis(axis);
  if (values.empty()) throw ConfigError("sweep: no values");
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!std::isfinite(values[i])) throw ConfigError("sweep: non-finite value");
    if (i > 0 && !(values[i] > values[i - 1])) {
      throw ConfigError("sweep: values must be strictly increasing");
    }
  }
  if (schemes.empty()) throw ConfigError("sweep: no schemes");
}

std::vector<double> linspace(double lo, double hi, std::size_t n) {
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = n == 1 ? lo
                    : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
  }
  if (n > 1) out.back() = hi;
  return out;
}

SweepSpec default_sweep(std::string_view axis, std::vector<Scheme> schemes) {
  SweepSpec s;
  s.axis = std::string(axis);
  s.schemes = std::move(schemes);
  if (axis == "B_B") {
    s.values = linspace(0.1e6, 2e6, 11);
  } else if (axis == "D") {
    s.values = linspace(0.2e6, 2e6, 10);
  } else if (axis == "T_th") {
    s.values = linspace(0.3, 1.2, 10);
  } else {
    throw ConfigError("no default range for axis '" + std::string(axis) +
                      "'; pass explicit values");
  }
  return s;
}

std::vector<ResultRecord> run_sweep(const ScenarioConfig& config, const SweepSpec& sweep,
                                    unsigned workers) {
  sweep.validate();
  const SystemParams base = config.to_params();
  const std::size_t n_schemes = sweep.schemes.size();
  std::vector<ResultRecord> records(sweep.values.size() * n_schemes);
  parallel_for(records.size(), workers, [&](std::size_t idx) {
    ResultRecord& r = records[idx];
    r.axis = sweep.axis;
    r.value = sweep.values[idx / n_schemes];
    r.scheme = sweep.schemes[idx % n_schemes];
    SystemParams params = base;
    set_axis(params, sweep.axis, r.value);
    try {
      params.validate();
    } catch (const ConfigError&) {
      r.solution.scheme = r.scheme;
      r.solution.v_server = kInf;
      r.solution.v_bs = kInf;
      return;
    }
    r.solution = run_scheme(params, r.scheme, config.grid, config.bcd, 1);
  });
  return records;
}

std::string format_exact(double v) {
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), res.ptr);
}

void write_csv(const std::vector<ResultRecord>& records, std::ostream& out) {
  out << kCsvHeader << "\n";
  for (const ResultRecord& r : records) {
    out << r.axis << "," << format_exact(r.value) << "," << to_string(r.scheme) << ",";
    const Solution& s = r.solution;
    if (!s.feasible) {
      out << ",false" << std::string(13, ',') << "\n";
      continue;
    }
    const Decision& d = s.decision;
    const StageMetrics& m = s.metrics;
    out << format_exact(m.e_total) << ",true," << indicator(d.offload) << ","
        << format_exact(d.rho) << "," << format_exact(d.p_uav) << "," << format_exact(d.p_bs) << ","
        << format_exact(d.uav.x) << "," << format_exact(d.uav.y) << "," << format_exact(d.uav.h)
        << "," << format_exact(m.t_total) << "," << format_exact(m.e_compress) << ","
        << format_exact(m.e_uplink) << "," << format_exact(m.e_recover) << ","
        << format_exact(m.e_infer) << "," << format_exact(m.e_offload) << "\n";
  }
}

void write_plot_data(const std::vector<ResultRecord>& records, std::ostream& out) {
  if (records.empty()) return;
  std::vector<Scheme> schemes;
  std::vector<double> values;
  for (const ResultRecord& r : records) {
    if (std::find(schemes.begin(), schemes.end(), r.scheme) == schemes.end()) {
      schemes.push_back(r.scheme);
    }
    if (values.empty() || values.back() != r.value) values.push_back(r.value);
  }
  out << records.front().axis;
  for (Scheme s : schemes) out << "," << to_string(s);
  out << "\n";
  for (double v : values) {
    out << format_sig9(v);
    for (Scheme s : schemes) {
      out << ",";
      for (const ResultRecord& r : records) {
        if (r.value == v && r.scheme == s && r.solution.feasible) {
          out << format_sig9(r.solution.metrics.e_total);
        }
      }
    }
    out << "\n";
  }
}

void emit_csv(const std::vector<ResultRecord>& records, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  write_csv(records, out);
  if (!out) throw std::runtime_error("write to '" + path.string() + "' failed");
}

void emit_plot_data(const std::vector<ResultRecord>& records, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  write_plot_data(records, out);
  if (!out) throw std::runtime_error("write to '" + path.string() + "' failed");
}

std::string describe(const Solution& s) {
  std::ostringstream os;
  os.precision(9);
  os << "scheme:        " << to_string(s.scheme) << "\n";
  if (!s.feasible) {
    os << "feasible:      no\n";
    return os.str();
  }
  const Decision& d = s.decision;
  const StageMetrics& m = s.metrics;
  os << "feasible:      yes\n";
  os << "total energy:  " << m.e_total << " J\n";
  os << "offload:       "
     << (d.offload == Offload::kBaseStation ? "a=1 (inference at base station)"
                                            : "a=0 (inference on server)")
     << "\n";
  os << "  V(a=0):      " << s.v_server << " J\n";
  os << "  V(a=1):      " << s.v_bs << " J\n";
  os << "UAV location:  (" << d.uav.x << ", " << d.uav.y << ", " << d.uav.h << ") m";
  switch (s.placement.case_tag) {
    case PlacementCase::kAboveBase: os << "  [above base station]\n"; break;
    case PlacementCase::kTowardTarget: os << "  [toward target, service edge]\n"; break;
    case PlacementCase::kPinned: os << "  [pinned]\n"; break;
  }
  os << "rho:           " << d.rho << "  [" << to_string(s.rho_clamp) << "]\n";
  os << "p_U:           " << d.p_uav << " W (" << watt_to_dbm(d.p_uav) << " dBm)\n";
  os << "p_B:           " << d.p_bs << " W (" << watt_to_dbm(d.p_bs) << " dBm)\n";
  os << "latency:       " << m.t_total << " s (slack " << m.slack_latency << " s)\n";
  os << "sensing QoS:   " << m.qos << " (slack " << m.slack_qos << ")\n";
  os << "stages [s / J]:\n";
  os << "  compress     " << m.t_compress << " / " << m.e_compress << "\n";
  os << "  uplink       " << m.t_uplink << " / " << m.e_uplink << "\n";
  os << "  recover      " << m.t_recover << " / " << m.e_recover << "\n";
  const bool at_bs = d.offload == Offload::kBaseStation;
  os << "  infer @BS    " << m.t_infer << " / " << m.e_infer << (at_bs ? "" : "  (not counted)")
     << "\n";
  os << "  BS->server   " << m.t_offload << " / " << m.e_offload << (at_bs ? "  (not counted)" : "")
     << "\n";
  os << "grid points:   " << s.stats.evaluated << " evaluated, " << s.stats.feasible
     << " feasible\n";
  if (s.scheme == Scheme::kBcd) os << "bcd iterations: " << s.bcd_iterations << "\n";
  return os.str();
}

}  // namespace semuav
