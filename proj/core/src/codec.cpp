#include "rlnc/codec.hpp"

#include <string>

namespace rlnc {

namespace {

class BitWriter {
 public:
  void put(std::uint32_t value, int bits) {
    for (int b = bits - 1; b >= 0; --b) {
      if (offset_ == 0) bytes_.push_back(0);
      bytes_.back() |= ((value >> b) & 1u) << (7 - offset_);
      offset_ = (offset_ + 1) & 7;
    }
  }
  std::vector<std::uint8_t> take() { return std::move(bytes_); }

 private:
  std::vector<std::uint8_t> bytes_;
  int offset_ = 0;
};

class BitReader {
 public:
  explicit BitReader(const std::vector<std::uint8_t>& bytes) : bytes_(bytes) {}
  std::uint32_t get(int bits) {
    std::uint32_t value = 0;
    for (int b = 0; b < bits; ++b) {
      if (pos_ >= 8 * static_cast<std::int64_t>(bytes_.size())) {
        throw ConfigError("packet truncated while unpacking");
      }
      const std::uint8_t byte = bytes_[static_cast<std::size_t>(pos_ >> 3)];
      value = (value << 1) | ((byte >> (7 - (pos_ & 7))) & 1u);
      ++pos_;
    }
    return value;
  }

 private:
  const std::vector<std::uint8_t>& bytes_;
  std::int64_t pos_ = 0;
};

}  // namespace

CodedPacket encode_with_coefficients(
    const std::vector<std::vector<Symbol>>& sources,
    const std::vector<Symbol>& coefficients, const FieldSpec& field) {
  if (sources.empty()) throw ConfigError("encode requires at least one source");
  if (coefficients.size() != sources.size()) {
    throw ConfigError("coefficient count must equal the number of sources");
  }
  const std::size_t len = sources.front().size();
  for (const auto& s : sources) {
    if (s.size() != len) {
      throw ConfigError("source payloads must all have the same length");
    }
  }
  CodedPacket pkt;
  pkt.coefficients = coefficients;
  pkt.payload.assign(len, 0);
  for (std::size_t k = 0; k < sources.size(); ++k) {
    const Symbol c = coefficients[k];
    if (c == 0) continue;
    const auto& src = sources[k];
    for (std::size_t t = 0; t < len; ++t) {
      pkt.payload[t] ^= field.mul(c, src[t]);
    }
  }
  return pkt;
}

CodedPacket encode(const std::vector<std::vector<Symbol>>& sources,
                   const FieldSpec& field, SplitMix64& rng) {
  std::vector<Symbol> coeffs(sources.size());
  for (auto& c : coeffs) {
    c = static_cast<Symbol>(rng.next_bits(field.symbol_bits()));
  }
  return encode_with_coefficients(sources, coeffs, field);
}

DecoderState::DecoderState(const FieldSpec& field, int block_size,
                           int payload_symbols)
    : field_(&field), block_size_(block_size), payload_symbols_(payload_symbols) {
  if (block_size < 1) throw ConfigError("block_size must be >= 1");
  if (payload_symbols < 0) throw ConfigError("payload_symbols must be >= 0");
  pivot_row_.assign(static_cast<std::size_t>(block_size), -1);
}

bool DecoderState::receive(const CodedPacket& packet) {
  if (static_cast<int>(packet.coefficients.size()) != block_size_ ||
      static_cast<int>(packet.payload.size()) != payload_symbols_) {
    throw ConfigError("packet shape does not match decoder (coefficients " +
                      std::to_string(packet.coefficients.size()) +
                      ", payload " + std::to_string(packet.payload.size()) +
                      ")");
  }
  std::vector<Symbol> coeff = packet.coefficients;
  std::vector<Symbol> payload = packet.payload;

  // Reduce against every stored pivot first (ascending columns: a pivot
  // row is itself reduced, so elimination never reintroduces entries at
  // columns already passed). Only then is the leading column meaningful.
  int lead = -1;
  for (int col = 0; col < block_size_; ++col) {
    if (coeff[static_cast<std::size_t>(col)] == 0) continue;
    const int row = pivot_row_[static_cast<std::size_t>(col)];
    if (row < 0) {
      if (lead < 0) lead = col;
      continue;
    }
    const Symbol f = coeff[static_cast<std::size_t>(col)];
    const auto& rc = coeff_rows_[static_cast<std::size_t>(row)];
    const auto& rp = payload_rows_[static_cast<std::size_t>(row)];
    for (int t = col; t < block_size_; ++t) {
      coeff[static_cast<std::size_t>(t)] ^=
          field_->mul(f, rc[static_cast<std::size_t>(t)]);
    }
    for (int t = 0; t < payload_symbols_; ++t) {
      payload[static_cast<std::size_t>(t)] ^=
          field_->mul(f, rp[static_cast<std::size_t>(t)]);
    }
  }
  if (lead < 0) return false;  // reduced to zero: linearly dependent

  // Normalize the new pivot and clear its column from the stored rows so
  // the basis stays in reduced form.
  const Symbol scale = field_->inv(coeff[static_cast<std::size_t>(lead)]);
  for (auto& c : coeff) c = field_->mul(c, scale);
  for (auto& p : payload) p = field_->mul(p, scale);
  for (int r = 0; r < rank_; ++r) {
    auto& rc = coeff_rows_[static_cast<std::size_t>(r)];
    const Symbol f = rc[static_cast<std::size_t>(lead)];
    if (f == 0) continue;
    auto& rp = payload_rows_[static_cast<std::size_t>(r)];
    for (int t = 0; t < block_size_; ++t) {
      rc[static_cast<std::size_t>(t)] ^=
          field_->mul(f, coeff[static_cast<std::size_t>(t)]);
    }
    for (int t = 0; t < payload_symbols_; ++t) {
      rp[static_cast<std::size_t>(t)] ^=
          field_->mul(f, payload[static_cast<std::size_t>(t)]);
    }
  }
  pivot_row_[static_cast<std::size_t>(lead)] = rank_;
  coeff_rows_.push_back(std::move(coeff));
  payload_rows_.push_back(std::move(payload));
  ++rank_;
  return true;
}

std::vector<std::vector<Symbol>> DecoderState::decode() const {
  if (!complete()) {
    throw ConfigError("decode requires full rank (" + std::to_string(rank_) +
                      "/" + std::to_string(block_size_) + " received)");
  }
  // Basis is in reduced form with every pivot present, so row k of the
  // basis (via the pivot map) is exactly source k.
  std::vector<std::vector<Symbol>> out;
  out.reserve(static_cast<std::size_t>(block_size_));
  for (int col = 0; col < block_size_; ++col) {
    out.push_back(payload_rows_[static_cast<std::size_t>(
        pivot_row_[static_cast<std::size_t>(col)])]);
  }
  return out;
}

std::vector<std::uint8_t> pack_packet(const std::vector<std::uint8_t>& header,
                                      std::int64_t header_bits,
                                      const CodedPacket& packet,
                                      const FieldSpec& field) {
  if (8 * static_cast<std::int64_t>(header.size()) < header_bits) {
    throw ConfigError("header buffer shorter than header_bits");
  }
  BitWriter w;
  for (std::int64_t b = 0; b < header_bits; ++b) {
    w.put((header[static_cast<std::size_t>(b >> 3)] >> (7 - (b & 7))) & 1u, 1);
  }
  const int g = field.symbol_bits();
  for (Symbol c : packet.coefficients) w.put(c, g);
  for (Symbol p : packet.payload) w.put(p, g);
  return w.take();
}

UnpackedPacket unpack_packet(const std::vector<std::uint8_t>& bytes,
                             std::int64_t header_bits, int block_size,
                             std::int64_t payload_symbols,
                             const FieldSpec& field) {
  BitReader r(bytes);
  UnpackedPacket out;
  out.header.assign(static_cast<std::size_t>((header_bits + 7) / 8), 0);
  for (std::int64_t b = 0; b < header_bits; ++b) {
    out.header[static_cast<std::size_t>(b >> 3)] |=
        static_cast<std::uint8_t>(r.get(1) << (7 - (b & 7)));
  }
  const int g = field.symbol_bits();
  out.packet.coefficients.resize(static_cast<std::size_t>(block_size));
  for (auto& c : out.packet.coefficients) c = static_cast<Symbol>(r.get(g));
  out.packet.payload.resize(static_cast<std::size_t>(payload_symbols));
  for (auto& p : out.packet.payload) p = static_cast<Symbol>(r.get(g));
  return out;
}

}  // namespace rlnc
