#include "rlnc/commands.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include "rlnc/analysis.hpp"
#include "rlnc/optimizer.hpp"
#include "rlnc/policy_io.hpp"
#include "rlnc/scenario.hpp"
#include "rlnc/simulator.hpp"

namespace rlnc {

namespace {

std::string sci(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.16e", v);
  return buf;
}

std::optional<std::filesystem::path> cache_dir() {
  if (const char* dir = std::getenv("RLNC_TDD_CACHE"); dir && *dir) {
    return std::filesystem::path(dir);
  }
  return std::nullopt;
}

// Optimize with look-up-table reuse: policies depend only on the
// parameters, so they are stored under their parameter hash and reused
// across invocations when RLNC_TDD_CACHE is set.
PolicyTable optimize_cached(const ScenarioPoint& point, Objective objective,
                            std::ostream& err) {
  const std::string hash = params_hash(point.link, point.coding, objective);
  const auto dir = cache_dir();
  if (dir) {
    const auto path = *dir / (hash + ".json");
    if (std::filesystem::exists(path)) {
      try {
        PolicyTable cached = load_policy_table(path);
        if (cached.params_hash == hash &&
            cached.policy.block_size() == point.coding.block_size() &&
            cached.objective == objective) {
          return cached;
        }
      } catch (const std::exception&) {
        // fall through and recompute
      }
      err << "warning: ignoring stale cache entry " << path.string() << "\n";
    }
  }
  const OptimizationResult result =
      objective == Objective::Energy
          ? optimize_energy(point.link, point.coding)
          : optimize_time(point.link, point.coding);
  PolicyTable table{result.policy, objective, hash};
  if (dir) {
    std::error_code ec;
    std::filesystem::create_directories(*dir, ec);
    if (!ec) {
      try {
        save_policy_table(table, *dir / (hash + ".json"));
      } catch (const std::exception& e) {
        err << "warning: cannot write policy cache: " << e.what() << "\n";
      }
    } else {
      err << "warning: cannot create cache directory " << dir->string() << "\n";
    }
  }
  return table;
}

int guarded(std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const PolicyError& e) {
    err << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const PolicyMismatchError& e) {
    err << "error: " << e.what() << "\n";
    return kExitPolicyMismatch;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitNumerical;
  }
}

// Stream to --out when given, stdout otherwise.
int with_output(const CommandOptions& opts, std::ostream& out,
                const std::function<void(std::ostream&)>& emit) {
  if (opts.out_path) {
    std::ofstream file(*opts.out_path, std::ios::binary);
    if (!file) {
      throw ConfigError("cannot open output file: " + *opts.out_path);
    }
    emit(file);
  } else {
    emit(out);
  }
  return kExitOk;
}

Objective single_objective(ObjectiveChoice choice) {
  // "both" resolves to the energy table; see README.
  return choice == ObjectiveChoice::Time ? Objective::Time : Objective::Energy;
}

}  // namespace

int run_optimize(const CommandOptions& opts, std::ostream& out,
                 std::ostream& err) {
  return guarded(err, [&]() -> int {
    const ScenarioConfig config = ScenarioConfig::load(opts.config_path);
    const ScenarioPoint point = config.base();
    const Objective objective = single_objective(config.objective());
    const PolicyTable table = optimize_cached(point, objective, err);

    const std::vector<double> per_state =
        objective == Objective::Energy
            ? expected_energy(table.policy, point.link, point.coding)
            : expected_time(table.policy, point.link, point.coding);

    const std::string path = opts.out_path.value_or("policy.json");
    save_policy_table(table, path);
    out << objective_name(objective) << " objective = " << sci(per_state.back())
        << (objective == Objective::Energy ? " J" : " s") << "\n";
    out << "policy table written to " << path << "\n";
    return kExitOk;
  });
}

int run_evaluate(const CommandOptions& opts, std::ostream& out,
                 std::ostream& err) {
  return guarded(err, [&]() -> int {
    const ScenarioConfig config = ScenarioConfig::load(opts.config_path);

    std::optional<PolicyTable> fixed;
    if (opts.policy_path) {
      fixed = load_policy_table(*opts.policy_path);
    }

    std::ostringstream csv;
    csv << "scheme,Pe,Pe_ack,M,n,E_M_joules,T_M_seconds,energy_per_bit\n";
    for (const ScenarioPoint& point : config.points()) {
      const double block_bits =
          static_cast<double>(point.coding.block_size()) *
          static_cast<double>(point.coding.payload_bits());
      auto emit_row = [&](const std::string& scheme, double e, double t) {
        csv << scheme << ',' << sci(point.link.pkt_erasure()) << ','
            << sci(point.link.ack_erasure()) << ','
            << point.coding.block_size() << ',' << point.coding.payload_bits()
            << ',' << sci(e) << ',' << sci(t) << ',' << sci(e / block_bits)
            << "\n";
      };

      if (fixed) {
        if (fixed->policy.block_size() != point.coding.block_size()) {
          throw PolicyMismatchError(
              "policy table covers M=" +
              std::to_string(fixed->policy.block_size()) +
              " but the scenario uses M=" +
              std::to_string(point.coding.block_size()));
        }
        if (fixed->params_hash !=
            params_hash(point.link, point.coding, fixed->objective)) {
          err << "warning: policy table was optimized for different "
                 "parameters; evaluating it as-is\n";
        }
        const auto report =
            evaluate_policy(fixed->policy, point.link, point.coding);
        emit_row(fixed->objective == Objective::Energy ? "TDD-E" : "TDD-T",
                 report.total_energy, report.total_time);
        continue;
      }

      const PolicyTable tdd_e = optimize_cached(point, Objective::Energy, err);
      const PolicyTable tdd_t = optimize_cached(point, Objective::Time, err);
      const auto report_e =
          evaluate_policy(tdd_e.policy, point.link, point.coding);
      const auto report_t =
          evaluate_policy(tdd_t.policy, point.link, point.coding);
      emit_row("TDD-E", report_e.total_energy, report_e.total_time);
      emit_row("TDD-T", report_t.total_energy, report_t.total_time);
      emit_row("FD", full_duplex_energy(point.link, point.coding),
               full_duplex_time(point.link, point.coding));
    }
    return with_output(opts, out, [&](std::ostream& o) { o << csv.str(); });
  });
}

int run_simulate(const CommandOptions& opts, std::ostream& out,
                 std::ostream& err) {
  return guarded(err, [&]() -> int {
    const ScenarioConfig config = ScenarioConfig::load(opts.config_path);
    const ScenarioPoint point = config.base();

    if (!config.simulation() && !opts.trials && !opts.seed) {
      throw ConfigError(
          "missing section 'simulation' (or pass --trials/--seed)");
    }
    SimulationConfig sim = config.simulation().value_or(SimulationConfig{});
    if (opts.trials) sim.trials = *opts.trials;
    if (opts.seed) sim.seed = *opts.seed;
    if (opts.mode) sim.mode = mode_from_name(*opts.mode);

    Policy policy = [&] {
      if (opts.policy_path) {
        PolicyTable table = load_policy_table(*opts.policy_path);
        if (table.policy.block_size() != point.coding.block_size()) {
          throw PolicyMismatchError(
              "policy table covers M=" +
              std::to_string(table.policy.block_size()) +
              " but the scenario uses M=" +
              std::to_string(point.coding.block_size()));
        }
        return table.policy;
      }
      const Objective objective = single_objective(config.objective());
      return optimize_cached(point, objective, err).policy;
    }();

    const SimulationResult r = run_trials(policy, point.link, point.coding, sim);
    const double analytic_e =
        expected_energy(policy, point.link, point.coding).back();
    const double analytic_t =
        expected_time(policy, point.link, point.coding).back();

    const double root_n = std::sqrt(static_cast<double>(r.trials_used));
    auto within = [&](double mean, double stddev, double analytic) {
      const double guard = 1e-9 * std::max(1.0, std::fabs(analytic));
      return std::fabs(mean - analytic) <= 3.0 * stddev / root_n + guard;
    };
    const bool ok = within(r.mean_energy, r.std_energy, analytic_e) &&
                    within(r.mean_time, r.std_time, analytic_t);

    std::ostringstream csv;
    csv << "mode,trials,seed,mean_E,ci95_E,mean_T,ci95_T,analytic_E,"
           "analytic_T,within_3se\n";
    csv << mode_name(sim.mode) << ',' << sim.trials << ',' << sim.seed << ','
        << sci(r.mean_energy) << ',' << sci(r.ci95_energy) << ','
        << sci(r.mean_time) << ',' << sci(r.ci95_time) << ','
        << sci(analytic_e) << ',' << sci(analytic_t) << ','
        << (ok ? "true" : "false") << "\n";
    return with_output(opts, out, [&](std::ostream& o) { o << csv.str(); });
  });
}

}  // namespace rlnc
