#ifndef RLNC_COMMANDS_HPP
#define RLNC_COMMANDS_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace rlnc {

// Process exit codes shared by all subcommands.
inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;          // config validation failure
inline constexpr int kExitPolicyMismatch = 3;  // policy table vs scenario
inline constexpr int kExitNumerical = 4;       // numerical failure

struct CommandOptions {
  std::string config_path;
  std::optional<std::string> policy_path;
  std::optional<std::string> out_path;           // default: stdout / policy.json
  std::optional<std::uint64_t> seed;             // simulate override
  std::optional<std::int64_t> trials;            // simulate override
  std::optional<std::string> mode;               // simulate override
};

// Compute the optimal burst-size table for the scenario's base point and
// write it as JSON (--out, default "policy.json"); prints the objective
// value. Consults/updates the RLNC_TDD_CACHE directory when set.
int run_optimize(const CommandOptions& opts, std::ostream& out,
                 std::ostream& err);

// Emit one CSV row per scheme (TDD-E, TDD-T, FD) per scenario point, or
// one row per point for an explicit --policy table.
int run_evaluate(const CommandOptions& opts, std::ostream& out,
                 std::ostream& err);

// Run the Monte Carlo simulator on the scenario's base point and emit one
// CSV row comparing it against the analytical values.
int run_simulate(const CommandOptions& opts, std::ostream& out,
                 std::ostream& err);

}  // namespace rlnc

#endif  // RLNC_COMMANDS_HPP
