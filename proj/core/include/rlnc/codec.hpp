#ifndef RLNC_CODEC_HPP
#define RLNC_CODEC_HPP

#include <cstdint>
#include <vector>

#include "rlnc/gf.hpp"
#include "rlnc/rng.hpp"

namespace rlnc {

// One coded packet: the combination coefficients (length M) and the
// combined payload (ceil(n/g) symbols; may be empty when only rank
// dynamics matter, as in the simulator's symbol-level mode).
struct CodedPacket {
  std::vector<Symbol> coefficients;
  std::vector<Symbol> payload;
};

// Random linear combination of the source payloads with coefficients
// drawn uniformly from GF(2^g).
CodedPacket encode(const std::vector<std::vector<Symbol>>& sources,
                   const FieldSpec& field, SplitMix64& rng);

// Deterministic variant with caller-supplied coefficients; encode() is
// this plus a uniform coefficient draw.
CodedPacket encode_with_coefficients(
    const std::vector<std::vector<Symbol>>& sources,
    const std::vector<Symbol>& coefficients, const FieldSpec& field);

// Incremental Gaussian elimination over received packets.
//
// Keeps the coefficient matrix in reduced row echelon form with the
// payloads carried along, so rank queries are O(1) and decoding at full
// rank is a read-out. Single writer; share between threads only after the
// last receive().
class DecoderState {
 public:
  DecoderState(const FieldSpec& field, int block_size, int payload_symbols);

  // Eliminates the packet against the basis. Returns true iff the packet
  // was innovative (rank grew by one).
  bool receive(const CodedPacket& packet);

  int rank() const { return rank_; }
  int block_size() const { return block_size_; }
  bool complete() const { return rank_ == block_size_; }

  // The original source payloads, in order. Requires complete().
  std::vector<std::vector<Symbol>> decode() const;

 private:
  const FieldSpec* field_;
  int block_size_;
  int payload_symbols_;
  int rank_ = 0;
  std::vector<int> pivot_row_;  // column -> row index, -1 if no pivot yet
  std::vector<std::vector<Symbol>> coeff_rows_;
  std::vector<std::vector<Symbol>> payload_rows_;
};

// Wire form: header (opaque, header_bits), then M coefficients of g bits,
// then the payload symbols, all MSB-first bit-packed.
std::vector<std::uint8_t> pack_packet(const std::vector<std::uint8_t>& header,
                                      std::int64_t header_bits,
                                      const CodedPacket& packet,
                                      const FieldSpec& field);

struct UnpackedPacket {
  std::vector<std::uint8_t> header;
  CodedPacket packet;
};

UnpackedPacket unpack_packet(const std::vector<std::uint8_t>& bytes,
                             std::int64_t header_bits, int block_size,
                             std::int64_t payload_symbols,
                             const FieldSpec& field);

}  // namespace rlnc

#endif  // RLNC_CODEC_HPP
