#include "rlnc/simulator.hpp"

#include <cmath>
#include <optional>

#include "rlnc/codec.hpp"
#include "rlnc/gf.hpp"
#include "rlnc/rng.hpp"

namespace rlnc {

const char* mode_name(SimulationMode mode) {
  switch (mode) {
    case SimulationMode::ModelFaithful: return "model-faithful";
    case SimulationMode::PersistentDof: return "persistent-dof";
    case SimulationMode::SymbolLevel: return "symbol-level";
  }
  return "?";
}

SimulationMode mode_from_name(const std::string& name) {
  if (name == "model-faithful") return SimulationMode::ModelFaithful;
  if (name == "persistent-dof") return SimulationMode::PersistentDof;
  if (name == "symbol-level") return SimulationMode::SymbolLevel;
  throw ConfigError("unknown simulation mode \"" + name +
                    "\" (expected model-faithful, persistent-dof or "
                    "symbol-level)");
}

namespace {

struct TrialCost {
  double energy;
  double time;
};

TrialCost one_trial(const Policy& policy, int m, double pe, double pe_ack,
                    const DerivedTiming& t, SimulationMode mode,
                    const FieldSpec* field, std::uint64_t seed,
                    std::uint64_t trial) {
  SplitMix64 erasures = trial_stream(seed, trial, 0);
  SplitMix64 coding = trial_stream(seed, trial, 1);

  std::optional<DecoderState> decoder;
  if (mode == SimulationMode::SymbolLevel) {
    decoder.emplace(*field, m, 0);  // coefficients only; cost is payload-free
  }

  int believed = m;   // transmitter's view, updated by ACKs only
  int missing = m;    // receiver's true deficit (PersistentDof/SymbolLevel)
  TrialCost cost{0.0, 0.0};

  while (believed > 0) {
    const int n_i = policy.packets_for_state(believed);
    cost.energy += n_i * t.packet_energy + t.ack_energy;
    cost.time += n_i * t.packet_time + t.wait_time;

    int delivered = 0;
    for (int k = 0; k < n_i; ++k) {
      if (erasures.bernoulli(pe)) continue;
      ++delivered;
      switch (mode) {
        case SimulationMode::ModelFaithful:
          break;
        case SimulationMode::PersistentDof:
          if (missing > 0) --missing;
          break;
        case SimulationMode::SymbolLevel: {
          CodedPacket pkt;
          pkt.coefficients.resize(static_cast<std::size_t>(m));
          for (auto& c : pkt.coefficients) {
            c = static_cast<Symbol>(coding.next_bits(field->symbol_bits()));
          }
          decoder->receive(pkt);
          missing = m - decoder->rank();
          break;
        }
      }
    }
    const bool ack_lost = erasures.bernoulli(pe_ack);
    if (!ack_lost) {
      believed = mode == SimulationMode::ModelFaithful
                     ? std::max(0, believed - delivered)
                     : missing;
    }
  }
  return cost;
}

}  // namespace

SimulationResult run_trials(const Policy& policy, const LinkParameters& link,
                            const CodingParameters& coding,
                            const SimulationConfig& config) {
  if (policy.block_size() != coding.block_size()) {
    throw PolicyError("policy covers " + std::to_string(policy.block_size()) +
                      " states but block_size is " +
                      std::to_string(coding.block_size()));
  }
  if (config.trials < 1) throw ConfigError("trials must be >= 1");

  const int m = coding.block_size();
  const DerivedTiming t = derive_timing(link, coding);
  std::optional<FieldSpec> field;
  if (config.mode == SimulationMode::SymbolLevel) {
    field.emplace(FieldSpec::standard(coding.coeff_bits()));
  }

  // Welford reduction in trial order: deterministic, and exact (zero
  // variance) when every trial costs the same.
  double mean_e = 0.0, m2_e = 0.0, mean_t = 0.0, m2_t = 0.0;
  for (std::int64_t trial = 0; trial < config.trials; ++trial) {
    const TrialCost c =
        one_trial(policy, m, link.pkt_erasure(), link.ack_erasure(), t,
                  config.mode, field ? &*field : nullptr, config.seed,
                  static_cast<std::uint64_t>(trial));
    const double k = static_cast<double>(trial + 1);
    const double de = c.energy - mean_e;
    mean_e += de / k;
    m2_e += de * (c.energy - mean_e);
    const double dt = c.time - mean_t;
    mean_t += dt / k;
    m2_t += dt * (c.time - mean_t);
  }

  SimulationResult r;
  r.trials_used = config.trials;
  r.mean_energy = mean_e;
  r.mean_time = mean_t;
  const double denom =
      config.trials > 1 ? static_cast<double>(config.trials - 1) : 1.0;
  r.std_energy = std::sqrt(std::max(0.0, m2_e / denom));
  r.std_time = std::sqrt(std::max(0.0, m2_t / denom));
  const double root_n = std::sqrt(static_cast<double>(config.trials));
  r.ci95_energy = 1.96 * r.std_energy / root_n;
  r.ci95_time = 1.96 * r.std_time / root_n;
  return r;
}

}  // namespace rlnc
