#include "rlnc/scenario.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "rlnc/analysis.hpp"

namespace rlnc {

namespace {

using nlohmann::json;

const json& require_object(const json& j, const std::string& key) {
  if (!j.contains(key)) throw ConfigError("missing section '" + key + "'");
  if (!j.at(key).is_object()) {
    throw ConfigError("section '" + key + "' must be an object");
  }
  return j.at(key);
}

double require_number(const json& j, const std::string& section,
                      const std::string& key) {
  const std::string qualified = section.empty() ? key : section + "." + key;
  if (!j.contains(key)) throw ConfigError("missing field '" + qualified + "'");
  if (!j.at(key).is_number()) {
    throw ConfigError("field '" + qualified + "' must be a number");
  }
  return j.at(key).get<double>();
}

std::int64_t require_count(const json& j, const std::string& section,
                           const std::string& key) {
  const double v = require_number(j, section, key);
  if (!(v >= 0) || v != std::floor(v) || v > 9.0e18) {
    throw ConfigError("field '" + section + "." + key +
                      "' must be a non-negative integer");
  }
  return static_cast<std::int64_t>(v);
}

}  // namespace

ScenarioConfig ScenarioConfig::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open config file: " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return from_json_text(buf.str());
}

ScenarioConfig ScenarioConfig::from_json_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }

  const json& jl = require_object(j, "link");
  const json& jc = require_object(j, "coding");

  const double data_rate = require_number(jl, "link", "data_rate");
  const double prop = require_number(jl, "link", "propagation_delay");
  const double power = require_number(jl, "link", "transmit_power");

  std::optional<double> ber;
  if (jl.contains("bit_error_rate")) {
    ber = require_number(jl, "link", "bit_error_rate");
  }
  double pe = 0.0, pe_ack = 0.0;
  if (!ber) {
    pe = require_number(jl, "link", "pkt_erasure");
    pe_ack = require_number(jl, "link", "ack_erasure");
  } else {
    // Erasures are derived from the BER per point; explicit values would
    // be silently ignored, so reject the ambiguity.
    if (jl.contains("pkt_erasure") || jl.contains("ack_erasure")) {
      throw ConfigError(
          "give either link.bit_error_rate or link.pkt_erasure/ack_erasure, "
          "not both");
    }
  }

  CodingParameters coding(
      static_cast<int>(require_count(jc, "coding", "block_size")),
      require_count(jc, "coding", "payload_bits"),
      require_count(jc, "coding", "header_bits"),
      static_cast<int>(require_count(jc, "coding", "coeff_bits")),
      require_count(jc, "coding", "ack_bits"));
  LinkParameters link(data_rate, prop, power, pe, pe_ack, ber);

  ScenarioConfig config(link, coding);

  if (j.contains("objective")) {
    const std::string obj = j.at("objective").get<std::string>();
    if (obj == "energy") {
      config.objective_ = ObjectiveChoice::Energy;
    } else if (obj == "time") {
      config.objective_ = ObjectiveChoice::Time;
    } else if (obj == "both") {
      config.objective_ = ObjectiveChoice::Both;
    } else {
      throw ConfigError("field 'objective' must be energy, time or both");
    }
  }

  if (j.contains("sweep")) {
    const json& js = require_object(j, "sweep");
    if (!js.contains("variable")) {
      throw ConfigError("missing field 'sweep.variable'");
    }
    SweepSpec sweep;
    const std::string var = js.at("variable").get<std::string>();
    if (var == "Pe") {
      sweep.variable = SweepVariable::PacketErasure;
      if (ber) {
        throw ConfigError(
            "sweep.variable 'Pe' conflicts with link.bit_error_rate (erasures "
            "are derived from the BER)");
      }
    } else if (var == "n") {
      sweep.variable = SweepVariable::PayloadBits;
    } else {
      throw ConfigError("field 'sweep.variable' must be \"Pe\" or \"n\"");
    }
    if (!js.contains("values") || !js.at("values").is_array() ||
        js.at("values").empty()) {
      throw ConfigError("field 'sweep.values' must be a non-empty array");
    }
    for (const auto& v : js.at("values")) {
      if (!v.is_number()) {
        throw ConfigError("field 'sweep.values' must contain numbers only");
      }
      sweep.values.push_back(v.get<double>());
    }
    config.sweep_ = std::move(sweep);
  }

  if (j.contains("simulation")) {
    const json& js = require_object(j, "simulation");
    SimulationConfig sim;
    sim.trials = require_count(js, "simulation", "trials");
    if (sim.trials < 1) throw ConfigError("field 'simulation.trials' must be >= 1");
    sim.seed = static_cast<std::uint64_t>(
        require_count(js, "simulation", "seed"));
    if (js.contains("mode")) {
      sim.mode = mode_from_name(js.at("mode").get<std::string>());
    }
    config.simulation_ = sim;
  }

  // Validate sweep values against their domain up front so errors name the
  // config rather than surfacing later mid-run.
  if (config.sweep_) {
    for (double v : config.sweep_->values) {
      if (config.sweep_->variable == SweepVariable::PacketErasure) {
        if (!(v >= 0.0 && v < 1.0)) {
          throw ConfigError("sweep.values for 'Pe' must lie in [0, 1)");
        }
      } else if (!(v >= 1.0) || v != std::floor(v)) {
        throw ConfigError("sweep.values for 'n' must be positive integers");
      }
    }
  }
  return config;
}

ScenarioPoint ScenarioConfig::resolve(const LinkParameters& link,
                                      const CodingParameters& coding) const {
  if (link.bit_error_rate()) {
    const auto [pe, pe_ack] = erasures_from_ber(*link.bit_error_rate(), coding);
    return ScenarioPoint{link.with_erasures(pe, pe_ack), coding};
  }
  return ScenarioPoint{link, coding};
}

ScenarioPoint ScenarioConfig::base() const { return resolve(link_, coding_); }

std::vector<ScenarioPoint> ScenarioConfig::points() const {
  if (!sweep_) return {base()};
  std::vector<ScenarioPoint> out;
  out.reserve(sweep_->values.size());
  for (double v : sweep_->values) {
    if (sweep_->variable == SweepVariable::PacketErasure) {
      out.push_back(resolve(link_.with_pkt_erasure(v), coding_));
    } else {
      out.push_back(resolve(
          link_, coding_.with_payload_bits(static_cast<std::int64_t>(v))));
    }
  }
  return out;
}

}  // namespace rlnc
