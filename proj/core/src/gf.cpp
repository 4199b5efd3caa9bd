#include "rlnc/gf.hpp"

#include <bit>
#include <cstdio>
#include <string>

namespace rlnc {

namespace {

int degree(std::uint32_t poly) { return std::bit_width(poly) - 1; }

// Remainder of polynomial division over GF(2).
std::uint32_t poly_mod(std::uint64_t value, std::uint32_t divisor) {
  const int d = degree(divisor);
  while (value != 0 && static_cast<int>(std::bit_width(value)) - 1 >= d) {
    value ^= static_cast<std::uint64_t>(divisor)
             << (static_cast<int>(std::bit_width(value)) - 1 - d);
  }
  return static_cast<std::uint32_t>(value);
}

bool is_irreducible(std::uint32_t poly, int g) {
  if (degree(poly) != g) return false;
  if ((poly & 1u) == 0) return g == 1 && poly == 0x2u;  // only x itself
  // Trial division by every monic polynomial of degree 1..g/2.
  for (int d = 1; 2 * d <= g; ++d) {
    for (std::uint32_t low = 0; low < (1u << d); ++low) {
      const std::uint32_t candidate = (1u << d) | low;
      if (poly_mod(poly, candidate) == 0) return false;
    }
  }
  return true;
}

std::uint32_t fixed_polynomial(int g) {
  switch (g) {
    case 1: return 0x3;        // x + 1
    case 2: return 0x7;        // x^2 + x + 1
    case 4: return 0x13;       // x^4 + x + 1
    case 8: return 0x11B;      // x^8 + x^4 + x^3 + x + 1
    case 10: return 0x409;     // x^10 + x^3 + 1
    case 16: return 0x1100B;   // x^16 + x^12 + x^3 + x + 1
    default:
      throw ConfigError("unsupported coeff_bits for field arithmetic: " +
                        std::to_string(g) + " (supported: 1,2,4,8,10,16)");
  }
}

}  // namespace

bool FieldSpec::supported(int g) {
  return g == 1 || g == 2 || g == 4 || g == 8 || g == 10 || g == 16;
}

FieldSpec FieldSpec::standard(int g) { return FieldSpec(g, fixed_polynomial(g)); }

FieldSpec::FieldSpec(int g, std::uint32_t reduction_polynomial)
    : g_(g), poly_(reduction_polynomial), order_(1u << g) {
  if (!supported(g)) {
    throw ConfigError("unsupported coeff_bits for field arithmetic: " +
                      std::to_string(g) + " (supported: 1,2,4,8,10,16)");
  }
  if (!is_irreducible(poly_, g_)) {
    char buf[64];
    std::snprintf(buf, sizeof buf,
                  "reduction polynomial 0x%X is reducible over GF(2)", poly_);
    throw ConfigError(buf);
  }
  build_tables();
}

Symbol FieldSpec::mul_ref(Symbol a, Symbol b) const {
  std::uint64_t acc = 0;
  std::uint64_t aa = a;
  std::uint32_t bb = b;
  while (bb != 0) {
    if (bb & 1u) acc ^= aa;
    aa <<= 1;
    bb >>= 1;
  }
  return static_cast<Symbol>(poly_mod(acc, poly_));
}

void FieldSpec::build_tables() {
  const std::uint32_t group = order_ - 1;
  log_.assign(order_, 0);
  exp_.assign(2 * group + 1, 1);
  if (order_ == 2) {
    // GF(2): the multiplicative group is trivial.
    exp_[0] = 1;
    log_[1] = 0;
    return;
  }
  // Find a generator: an element whose powers walk the whole group.
  for (std::uint32_t candidate = 2; candidate < order_; ++candidate) {
    Symbol value = 1;
    std::uint32_t steps = 0;
    do {
      value = mul_ref(value, static_cast<Symbol>(candidate));
      ++steps;
    } while (value != 1 && steps <= group);
    if (steps == group) {
      Symbol v = 1;
      for (std::uint32_t k = 0; k < group; ++k) {
        exp_[k] = v;
        exp_[k + group] = v;
        log_[v] = k;
        v = mul_ref(v, static_cast<Symbol>(candidate));
      }
      return;
    }
  }
  throw NumericalError("no generator found; reduction polynomial broken");
}

}  // namespace rlnc
