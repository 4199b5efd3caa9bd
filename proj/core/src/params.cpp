#include "rlnc/params.hpp"

#include <cmath>
#include <string>

namespace rlnc {

namespace {

void check_probability(double value, const char* field) {
  // Probabilities of 1 are rejected: a never-delivered packet or ACK makes
  // every transient state absorbing.
  if (!(value >= 0.0) || !(value < 1.0)) {
    throw ConfigError(std::string(field) + " must be in [0, 1)");
  }
}

}  // namespace

LinkParameters::LinkParameters(double data_rate_bps, double propagation_delay_s,
                               double transmit_power_w, double pkt_erasure,
                               double ack_erasure,
                               std::optional<double> bit_error_rate)
    : data_rate_(data_rate_bps),
      propagation_delay_(propagation_delay_s),
      transmit_power_(transmit_power_w),
      pkt_erasure_(pkt_erasure),
      ack_erasure_(ack_erasure),
      bit_error_rate_(bit_error_rate) {
  if (!(data_rate_ > 0.0) || !std::isfinite(data_rate_)) {
    throw ConfigError("data_rate must be a positive finite number");
  }
  if (!(propagation_delay_ >= 0.0) || !std::isfinite(propagation_delay_)) {
    throw ConfigError("propagation_delay must be non-negative and finite");
  }
  if (!(transmit_power_ > 0.0) || !std::isfinite(transmit_power_)) {
    throw ConfigError("transmit_power must be a positive finite number");
  }
  check_probability(pkt_erasure_, "pkt_erasure");
  check_probability(ack_erasure_, "ack_erasure");
  if (bit_error_rate_) {
    check_probability(*bit_error_rate_, "bit_error_rate");
  }
}

LinkParameters LinkParameters::with_pkt_erasure(double pe) const {
  return LinkParameters(data_rate_, propagation_delay_, transmit_power_, pe,
                        ack_erasure_, bit_error_rate_);
}

LinkParameters LinkParameters::with_erasures(double pe, double pe_ack) const {
  return LinkParameters(data_rate_, propagation_delay_, transmit_power_, pe,
                        pe_ack, bit_error_rate_);
}

CodingParameters::CodingParameters(int block_size, std::int64_t payload_bits,
                                   std::int64_t header_bits, int coeff_bits,
                                   std::int64_t ack_bits)
    : block_size_(block_size),
      payload_bits_(payload_bits),
      header_bits_(header_bits),
      coeff_bits_(coeff_bits),
      ack_bits_(ack_bits) {
  if (block_size_ < 1) throw ConfigError("block_size must be >= 1");
  if (payload_bits_ < 1) throw ConfigError("payload_bits must be >= 1");
  if (header_bits_ < 1) throw ConfigError("header_bits must be >= 1");
  if (coeff_bits_ < 1) throw ConfigError("coeff_bits must be >= 1");
  if (ack_bits_ < 1) throw ConfigError("ack_bits must be >= 1");
}

CodingParameters CodingParameters::with_payload_bits(std::int64_t n) const {
  return CodingParameters(block_size_, n, header_bits_, coeff_bits_, ack_bits_);
}

DerivedTiming derive_timing(const LinkParameters& link,
                            const CodingParameters& coding) {
  DerivedTiming t;
  t.packet_time = static_cast<double>(coding.packet_bits()) / link.data_rate();
  t.ack_time = static_cast<double>(coding.ack_bits()) / link.data_rate();
  t.packet_energy = link.transmit_power() * t.packet_time;
  t.ack_energy = link.transmit_power() * t.ack_time;
  t.round_trip_time = 2.0 * link.propagation_delay();
  t.wait_time = t.round_trip_time + t.ack_time;
  return t;
}

Policy::Policy(std::vector<int> n_per_state) : n_per_state_(std::move(n_per_state)) {
  if (n_per_state_.empty()) {
    throw PolicyError("policy must cover at least one state");
  }
  for (std::size_t idx = 0; idx < n_per_state_.size(); ++idx) {
    const int i = static_cast<int>(idx) + 1;
    if (n_per_state_[idx] < i) {
      throw PolicyError("infeasible policy: N_" + std::to_string(i) + " = " +
                        std::to_string(n_per_state_[idx]) + " < " +
                        std::to_string(i));
    }
  }
}

}  // namespace rlnc
