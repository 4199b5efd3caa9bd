#include "rlnc/analysis.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "rlnc/markov.hpp"

namespace rlnc {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

double log_pow(double base, double exponent) {
  if (exponent == 0.0) return 0.0;
  return exponent * std::log(base);
}

// 1 - pe^n without cancellation when pe^n is close to 1.
double one_minus_pow(double pe, int n) {
  if (pe == 0.0) return 1.0;
  return -std::expm1(static_cast<double>(n) * std::log(pe));
}

void check_erasures(double pe, double pe_ack) {
  if (!(pe >= 0.0 && pe < 1.0) || !(pe_ack >= 0.0 && pe_ack < 1.0)) {
    throw ConfigError("erasure probabilities must be in [0, 1)");
  }
}

}  // namespace

double state_absorption_cost(int i, int n_i, double pe, double pe_ack,
                             double per_packet_cost, double per_round_overhead,
                             std::span<const double> prev) {
  if (i < 1 || n_i < i) {
    throw PolicyError("state_absorption_cost requires N_i >= i >= 1");
  }
  check_erasures(pe, pe_ack);
  const double per_round = n_i * per_packet_cost + per_round_overhead;
  const double escape = one_minus_pow(pe, n_i);  // 1 - pe^{N_i}
  const double direct = per_round / ((1.0 - pe_ack) * escape);
  if (i == 1 || pe == 0.0) return direct;

  // Downstream contribution: rounds that leave 0 < j < i dofs missing.
  // Each term is C(N_i, i-j) (1-pe)^{i-j} pe^{N_i-i+j} * cost_j; summed in
  // log space with a max shift.
  const double log_pe = std::log(pe);
  const double log_qe = std::log1p(-pe);
  std::vector<double> log_terms;
  log_terms.reserve(static_cast<std::size_t>(i) - 1);
  double max_log = kNegInf;
  for (int j = 1; j < i; ++j) {
    const double cost_j = prev[static_cast<std::size_t>(j) - 1];
    const double lt = log_binomial(n_i, i - j) + (i - j) * log_qe +
                      log_pow(pe, n_i - i + j) + std::log(cost_j);
    log_terms.push_back(lt);
    max_log = std::max(max_log, lt);
  }
  if (max_log == kNegInf) return direct;
  double acc = 0.0;
  for (double lt : log_terms) acc += std::exp(lt - max_log);
  const double downstream = std::exp(max_log) * acc / escape;
  return direct + downstream;
}

std::vector<double> absorption_cost(const Policy& policy, double pe,
                                    double pe_ack, double per_packet_cost,
                                    double per_round_overhead) {
  const int m = policy.block_size();
  std::vector<double> cost;
  cost.reserve(static_cast<std::size_t>(m));
  for (int i = 1; i <= m; ++i) {
    cost.push_back(state_absorption_cost(i, policy.packets_for_state(i), pe,
                                         pe_ack, per_packet_cost,
                                         per_round_overhead, cost));
  }
  return cost;
}

std::vector<double> expected_energy(const Policy& policy,
                                    const LinkParameters& link,
                                    const CodingParameters& coding) {
  if (policy.block_size() != coding.block_size()) {
    throw PolicyError("policy covers " + std::to_string(policy.block_size()) +
                      " states but block_size is " +
                      std::to_string(coding.block_size()));
  }
  const DerivedTiming t = derive_timing(link, coding);
  return absorption_cost(policy, link.pkt_erasure(), link.ack_erasure(),
                         t.packet_energy, t.ack_energy);
}

std::vector<double> expected_time(const Policy& policy,
                                  const LinkParameters& link,
                                  const CodingParameters& coding) {
  if (policy.block_size() != coding.block_size()) {
    throw PolicyError("policy covers " + std::to_string(policy.block_size()) +
                      " states but block_size is " +
                      std::to_string(coding.block_size()));
  }
  const DerivedTiming t = derive_timing(link, coding);
  return absorption_cost(policy, link.pkt_erasure(), link.ack_erasure(),
                         t.packet_time, t.wait_time);
}

PerformanceReport evaluate_policy(const Policy& policy,
                                  const LinkParameters& link,
                                  const CodingParameters& coding) {
  PerformanceReport report;
  report.per_state_energy = expected_energy(policy, link, coding);
  report.per_state_time = expected_time(policy, link, coding);
  report.total_energy = report.per_state_energy.back();
  report.total_time = report.per_state_time.back();
  report.energy_per_bit =
      report.total_energy /
      (static_cast<double>(coding.block_size()) * coding.payload_bits());
  return report;
}

double full_duplex_energy(const LinkParameters& link,
                          const CodingParameters& coding) {
  const DerivedTiming t = derive_timing(link, coding);
  return t.round_trip_time * t.packet_energy / t.packet_time +
         t.round_trip_time * t.ack_energy / (2.0 * t.ack_time) +
         coding.block_size() * t.packet_energy / (1.0 - link.pkt_erasure()) +
         t.ack_energy / (1.0 - link.ack_erasure());
}

double full_duplex_time(const LinkParameters& link,
                        const CodingParameters& coding) {
  const DerivedTiming t = derive_timing(link, coding);
  return coding.block_size() * t.packet_time / (1.0 - link.pkt_erasure()) +
         t.round_trip_time + t.ack_time / (1.0 - link.ack_erasure());
}

std::pair<double, double> erasures_from_ber(double ber,
                                            const CodingParameters& coding) {
  if (!(ber >= 0.0 && ber < 1.0)) {
    throw ConfigError("bit_error_rate must be in [0, 1)");
  }
  const double log_ok = std::log1p(-ber);
  const double pe =
      -std::expm1(static_cast<double>(coding.packet_bits()) * log_ok);
  const double pe_ack =
      -std::expm1(static_cast<double>(coding.ack_bits()) * log_ok);
  return {pe, pe_ack};
}

}  // namespace rlnc
