#ifndef RLNC_SIMULATOR_HPP
#define RLNC_SIMULATOR_HPP

#include <cstdint>
#include <string>

#include "rlnc/params.hpp"

namespace rlnc {

// How faithfully a trial mirrors the analytical chain.
//
// ModelFaithful reproduces the chain exactly: an erased ACK throws the
// whole round away. PersistentDof keeps decoded degrees of freedom at the
// receiver across erased ACKs (a real receiver never forgets), so its
// mean cost is a lower bound on ModelFaithful. SymbolLevel additionally
// runs real random coefficients through Gaussian elimination, so packets
// that are delivered but linearly dependent do not count — this measures
// the cost of assuming every delivered packet is innovative.
enum class SimulationMode { ModelFaithful, PersistentDof, SymbolLevel };

const char* mode_name(SimulationMode mode);
SimulationMode mode_from_name(const std::string& name);

struct SimulationConfig {
  std::int64_t trials = 10000;
  std::uint64_t seed = 1;
  SimulationMode mode = SimulationMode::ModelFaithful;
};

struct SimulationResult {
  double mean_energy;  // [J]
  double mean_time;    // [s]
  double std_energy;   // sample std (n-1)
  double std_time;
  double ci95_energy;  // 1.96 * std / sqrt(trials)
  double ci95_time;
  std::int64_t trials_used;
};

// Seeded Monte Carlo of the transmit/listen loop. Deterministic for a
// given (policy, link, coding, config): trials draw from per-trial
// SplitMix64 streams and are reduced in trial order.
SimulationResult run_trials(const Policy& policy, const LinkParameters& link,
                            const CodingParameters& coding,
                            const SimulationConfig& config);

}  // namespace rlnc

#endif  // RLNC_SIMULATOR_HPP
