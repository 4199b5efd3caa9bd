#ifndef RLNC_ANALYSIS_HPP
#define RLNC_ANALYSIS_HPP

#include <span>
#include <utility>
#include <vector>

#include "rlnc/params.hpp"

namespace rlnc {

// Mean cost (energy and time) of completing one block under a given
// policy, with the per-state breakdown used by the recursive optimizer.
struct PerformanceReport {
  std::vector<double> per_state_energy;  // E_1..E_M [J]
  std::vector<double> per_state_time;    // T_1..T_M [s]
  double total_energy;                   // E_M [J]
  double total_time;                     // T_M [s]
  double energy_per_bit;                 // E_M / (M*n) [J/bit]
};

// Mean crossing cost of one state of the dof-countdown chain: the cost to
// absorb from state i, given the already-known costs of states 1..i-1
// (prev[j-1] = cost of state j) and a per-round cost of
// n_i * per_packet_cost + per_round_overhead.
//
// Downstream terms are accumulated in log space with a max shift, so
// bursts large enough that pe^n underflows in direct arithmetic are still
// evaluated correctly.
double state_absorption_cost(int i, int n_i, double pe, double pe_ack,
                             double per_packet_cost, double per_round_overhead,
                             std::span<const double> prev);

// Mean absorption cost of every state 1..M under a policy; entry i-1 is
// the expected cost to complete from state i. The chain is lower
// triangular (a round never increases the deficit), so one sweep in
// increasing state order suffices.
std::vector<double> absorption_cost(const Policy& policy, double pe,
                                    double pe_ack, double per_packet_cost,
                                    double per_round_overhead);

// Mean energy to complete the block from each state, E_1..E_M.
// Per-round energy is N_i*E_p + E_ack: transmission energy dominates and
// the ACK is charged once per listening window.
std::vector<double> expected_energy(const Policy& policy,
                                    const LinkParameters& link,
                                    const CodingParameters& coding);

// Mean completion time from each state, T_1..T_M. A round occupies the
// burst itself plus the listening window: N_i*T_p + T_w.
std::vector<double> expected_time(const Policy& policy,
                                  const LinkParameters& link,
                                  const CodingParameters& coding);

PerformanceReport evaluate_policy(const Policy& policy,
                                  const LinkParameters& link,
                                  const CodingParameters& coding);

// Mean energy of the full-duplex comparison scheme: the sender streams
// coded packets until the decode ACK arrives, so it keeps transmitting
// for one round trip past completion, the receiver streams ACKs for half
// a round trip, and delivering M degrees of freedom takes M/(1-Pe)
// packets on average.
double full_duplex_energy(const LinkParameters& link,
                          const CodingParameters& coding);

// Mean completion time of the full-duplex scheme: M/(1-Pe) packet slots
// of streaming, one round trip, and ACK delivery.
double full_duplex_time(const LinkParameters& link,
                        const CodingParameters& coding);

// Packet and ACK erasure probabilities induced by independent bit errors:
// a packet is erased when any of its bits is flipped.
// Returns {Pe, Pe_ack}.
std::pair<double, double> erasures_from_ber(double ber,
                                            const CodingParameters& coding);

}  // namespace rlnc

#endif  // RLNC_ANALYSIS_HPP
