#ifndef RLNC_SCENARIO_HPP
#define RLNC_SCENARIO_HPP

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "rlnc/params.hpp"
#include "rlnc/simulator.hpp"

namespace rlnc {

enum class SweepVariable { PacketErasure, PayloadBits };

struct SweepSpec {
  SweepVariable variable;
  std::vector<double> values;
};

enum class ObjectiveChoice { Energy, Time, Both };

// One fully-resolved evaluation point. When the scenario carries a bit
// error rate, both erasure probabilities are already derived from it for
// this point's packet geometry.
struct ScenarioPoint {
  LinkParameters link;
  CodingParameters coding;
};

// A scenario file: link, packet geometry, optional sweep axis, objective
// selection and optional simulation settings. All quantities in SI base
// units (bits, seconds, watts); see the bundled fig4/fig5/fig6 files.
class ScenarioConfig {
 public:
  static ScenarioConfig from_json_text(const std::string& text);
  static ScenarioConfig load(const std::filesystem::path& path);

  // Base point, with BER-derived erasures applied when configured.
  ScenarioPoint base() const;
  // Sweep expansion in file order; a single base point if no sweep.
  std::vector<ScenarioPoint> points() const;

  ObjectiveChoice objective() const { return objective_; }
  const std::optional<SweepSpec>& sweep() const { return sweep_; }
  const std::optional<SimulationConfig>& simulation() const {
    return simulation_;
  }

 private:
  ScenarioConfig(LinkParameters link, CodingParameters coding)
      : link_(link), coding_(coding) {}

  ScenarioPoint resolve(const LinkParameters& link,
                        const CodingParameters& coding) const;

  LinkParameters link_;
  CodingParameters coding_;
  std::optional<SweepSpec> sweep_;
  ObjectiveChoice objective_ = ObjectiveChoice::Both;
  std::optional<SimulationConfig> simulation_;
};

}  // namespace rlnc

#endif  // RLNC_SCENARIO_HPP
