#ifndef RLNC_MARKOV_HPP
#define RLNC_MARKOV_HPP

#include <cstdint>
#include <vector>

#include "rlnc/params.hpp"

namespace rlnc {

// Natural log of the binomial coefficient C(n, k).
//
// Computed as a compensated sum of log ratios, which stays below 1e-12
// relative error for n up to 1e6. Throws ConfigError for k > n or
// negative arguments.
double log_binomial(std::int64_t n, std::int64_t k);

// One-step transition probability of the dof-countdown chain.
//
// State i is the number of degrees of freedom the receiver still needs; a
// round sends n_i coded packets and listens for one ACK. For 0 < j < i the
// receiver decoded exactly i-j new packets and the ACK got through; j = i
// covers both an erased ACK and a fully erased burst; j = 0 (done) takes
// the complement so the row stays stochastic, since any burst delivering
// at least i packets completes the block.
//
// Terms are evaluated in log space and exponentiated, with 0^0 = 1, so
// large bursts and Pe -> 0 behave. A burst shorter than the deficit
// (n_i < i) cannot finish the block: those entries are 0 by the pivot
// gate on the success count.
double transition_prob(int i, int j, int n_i, const LinkParameters& link);

// Full transition row [P(i->0), P(i->1), ..., P(i->i)]; sums to 1 within
// 1e-12.
std::vector<double> transition_row(int i, int n_i, const LinkParameters& link);

}  // namespace rlnc

#endif  // RLNC_MARKOV_HPP
