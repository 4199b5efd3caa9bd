#ifndef RLNC_OPTIMIZER_HPP
#define RLNC_OPTIMIZER_HPP

#include <vector>

#include "rlnc/params.hpp"

namespace rlnc {

enum class Objective { Energy, Time };

struct OptimizationResult {
  Policy policy;
  std::vector<double> objective_per_state;  // optimal E_i or T_i, i = 1..M
  double objective;                         // optimal E_M or T_M
  // True for states whose initial search window had to be widened before
  // the minimum detached from the upper bound.
  std::vector<bool> search_bound_hit;
};

// Burst sizes minimizing the mean energy to complete the block. The
// chain's lower-triangular structure turns the M-dimensional problem into
// M one-dimensional integer searches in increasing state order. Each
// state scans N_i over [i, N_max(i)] with N_max(i) = max(4*ceil(i/(1-Pe)),
// i+64), doubling the window (up to 2^20) while the minimum sits on the
// bound; ties break toward the smaller burst. Throws NumericalError if
// the window cap is reached with the minimum still on the bound.
OptimizationResult optimize_energy(const LinkParameters& link,
                                   const CodingParameters& coding);

// Same search with the mean-completion-time objective (round cost
// N_i*T_p + T_w instead of N_i*E_p + E_ack).
OptimizationResult optimize_time(const LinkParameters& link,
                                 const CodingParameters& coding);

// Lower real branch W_-1 of the Lambert W function: the solution w <= -1
// of w*e^w = x for x in [-1/e, 0). Safeguarded Newton iteration on the
// log form ln(-w) + w = ln(-x), bracketed on [-760, -1]; residual
// |w*e^w - x| <= 1e-12*|x|.
double lambert_w_minus1(double x);

// Continuous relaxation of the optimal burst size for a single missing
// degree of freedom, via W_-1. Values below the feasible minimum of 1 are
// clamped with the flag set; the integer search remains authoritative.
struct ClosedFormN1 {
  double value;      // max(raw, 1.0)
  double raw;        // unclamped stationary point
  bool clamped;      // raw < 1
};

ClosedFormN1 n1_closed_form(const LinkParameters& link,
                            const CodingParameters& coding);

}  // namespace rlnc

#endif  // RLNC_OPTIMIZER_HPP
