#ifndef RLNC_PARAMS_HPP
#define RLNC_PARAMS_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "rlnc/errors.hpp"

namespace rlnc {

// Channel and radio description of one half-duplex erasure link.
//
// Data packets are erased independently with probability pkt_erasure, the
// acknowledgment with probability ack_erasure. An optional bit error rate
// can be carried along; it is only used to derive the two erasure
// probabilities for a given packet geometry (see erasures_from_ber).
class LinkParameters {
 public:
  LinkParameters(double data_rate_bps, double propagation_delay_s,
                 double transmit_power_w, double pkt_erasure,
                 double ack_erasure,
                 std::optional<double> bit_error_rate = std::nullopt);

  double data_rate() const { return data_rate_; }            // R [bit/s]
  double propagation_delay() const { return propagation_delay_; }  // one-way [s]
  double transmit_power() const { return transmit_power_; }  // P [W]
  double pkt_erasure() const { return pkt_erasure_; }        // Pe
  double ack_erasure() const { return ack_erasure_; }        // Pe_ack
  const std::optional<double>& bit_error_rate() const { return bit_error_rate_; }

  // Same link with a different data-packet erasure probability.
  LinkParameters with_pkt_erasure(double pe) const;
  // Same link with both erasure probabilities replaced.
  LinkParameters with_erasures(double pe, double pe_ack) const;

 private:
  double data_rate_;
  double propagation_delay_;
  double transmit_power_;
  double pkt_erasure_;
  double ack_erasure_;
  std::optional<double> bit_error_rate_;
};

// Block and packet geometry. A coded packet carries a header of
// header_bits, payload_bits of data and block_size coefficients of
// coeff_bits each, so packet_bits() = h + n + g*M. The acknowledgment is
// ack_bits long.
class CodingParameters {
 public:
  CodingParameters(int block_size, std::int64_t payload_bits,
                   std::int64_t header_bits, int coeff_bits,
                   std::int64_t ack_bits);

  int block_size() const { return block_size_; }          // M
  std::int64_t payload_bits() const { return payload_bits_; }  // n
  std::int64_t header_bits() const { return header_bits_; }    // h
  int coeff_bits() const { return coeff_bits_; }          // g, field size q = 2^g
  std::int64_t ack_bits() const { return ack_bits_; }     // n_ack

  std::int64_t packet_bits() const {
    return header_bits_ + payload_bits_ +
           static_cast<std::int64_t>(coeff_bits_) * block_size_;
  }
  // Payload symbol count at g bits per symbol, ceil(n/g).
  std::int64_t payload_symbols() const {
    return (payload_bits_ + coeff_bits_ - 1) / coeff_bits_;
  }

  CodingParameters with_payload_bits(std::int64_t n) const;

 private:
  int block_size_;
  std::int64_t payload_bits_;
  std::int64_t header_bits_;
  int coeff_bits_;
  std::int64_t ack_bits_;
};

// Per-round durations and energies derived from a link/geometry pair.
//
// packet_time is the on-air time of one coded packet, ack_time of one
// acknowledgment. round_trip_time is twice the one-way propagation delay,
// and wait_time is the listening window appended to each burst: one round
// trip plus the time to receive the ACK.
struct DerivedTiming {
  double packet_time;      // T_p [s]
  double ack_time;         // T_ack [s]
  double packet_energy;    // E_p [J]
  double ack_energy;       // E_ack [J]
  double wait_time;        // T_w = T_rt + T_ack [s]
  double round_trip_time;  // T_rt [s]
};

DerivedTiming derive_timing(const LinkParameters& link,
                            const CodingParameters& coding);

// Number of coded packets sent back-to-back per state. Entry i-1 holds
// N_i, the burst size used when the transmitter believes i degrees of
// freedom are still missing. Feasibility requires N_i >= i: a shorter
// burst can never supply the i missing degrees of freedom, state i would
// be absorbing and expected cost infinite.
class Policy {
 public:
  explicit Policy(std::vector<int> n_per_state);

  int block_size() const { return static_cast<int>(n_per_state_.size()); }
  int packets_for_state(int i) const { return n_per_state_[i - 1]; }  // 1-indexed
  const std::vector<int>& n_per_state() const { return n_per_state_; }

 private:
  std::vector<int> n_per_state_;
};

}  // namespace rlnc

#endif  // RLNC_PARAMS_HPP
