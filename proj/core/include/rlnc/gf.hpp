#ifndef RLNC_GF_HPP
#define RLNC_GF_HPP

#include <cstdint>
#include <vector>

#include "rlnc/errors.hpp"

namespace rlnc {

using Symbol = std::uint16_t;  // holds one GF(2^g) element, g <= 16

// Binary extension field GF(2^g) with a fixed reduction polynomial.
//
// The polynomial is verified irreducible at construction (brute-force
// trial division, cheap for g <= 16). Multiplication goes through
// log/antilog tables built from a generator found at construction; the
// carry-less reference product is kept available for cross-checking.
//
// Immutable after construction and safe to share across threads.
class FieldSpec {
 public:
  // Fixed per-g polynomials so the wire format is deterministic:
  // g=1: x+1, g=2: x^2+x+1, g=4: x^4+x+1, g=8: x^8+x^4+x^3+x+1 (0x11B),
  // g=10: x^10+x^3+1 (0x409), g=16: x^16+x^12+x^3+x+1 (0x1100B).
  static FieldSpec standard(int g);
  static bool supported(int g);

  FieldSpec(int g, std::uint32_t reduction_polynomial);

  int symbol_bits() const { return g_; }
  std::uint32_t order() const { return order_; }  // q = 2^g
  std::uint32_t reduction_polynomial() const { return poly_; }

  Symbol add(Symbol a, Symbol b) const { return a ^ b; }

  Symbol mul(Symbol a, Symbol b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }

  // Multiplicative inverse; a must be nonzero.
  Symbol inv(Symbol a) const {
    if (a == 0) throw ConfigError("zero has no multiplicative inverse");
    return exp_[order_ - 1 - log_[a]];
  }

  // Carry-less polynomial product reduced by the field polynomial.
  // Reference path for the table-driven mul().
  Symbol mul_ref(Symbol a, Symbol b) const;

 private:
  void build_tables();

  int g_;
  std::uint32_t poly_;
  std::uint32_t order_;
  std::vector<Symbol> exp_;        // exp_[k] = gen^k, doubled to skip the mod
  std::vector<std::uint32_t> log_;
};

// Free-function spelling used throughout the codec.
inline Symbol field_mul(Symbol a, Symbol b, const FieldSpec& field) {
  return field.mul(a, b);
}

}  // namespace rlnc

#endif  // RLNC_GF_HPP
