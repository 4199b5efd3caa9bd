#include "rlnc/markov.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace rlnc {

namespace {

// exponent * log(base) with the 0^0 = 1 convention: a zero exponent
// contributes nothing even when log(base) is -inf.
double log_pow(double base, double exponent) {
  if (exponent == 0.0) return 0.0;
  return exponent * std::log(base);
}

}  // namespace

double log_binomial(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) {
    throw ConfigError("log_binomial requires 0 <= k <= n, got n=" +
                      std::to_string(n) + " k=" + std::to_string(k));
  }
  std::int64_t kk = std::min(k, n - k);
  if (kk == 0) return 0.0;
  // Neumaier-compensated sum of ln(n-j) - ln(j+1).
  double sum = 0.0;
  double comp = 0.0;
  for (std::int64_t j = 0; j < kk; ++j) {
    for (double term : {std::log(static_cast<double>(n - j)),
                        -std::log(static_cast<double>(j + 1))}) {
      double t = sum + term;
      if (std::fabs(sum) >= std::fabs(term)) {
        comp += (sum - t) + term;
      } else {
        comp += (term - t) + sum;
      }
      sum = t;
    }
  }
  return sum + comp;
}

double transition_prob(int i, int j, int n_i, const LinkParameters& link) {
  if (i < 1 || j < 0 || j > i || n_i < 1) {
    throw ConfigError("transition_prob requires i >= 1, 0 <= j <= i, N_i >= 1");
  }
  const double pe = link.pkt_erasure();
  const double pe_ack = link.ack_erasure();

  if (j == i) {
    // Erased ACK, or a burst with no survivor.
    return (1.0 - pe_ack) * std::exp(log_pow(pe, n_i)) + pe_ack;
  }
  if (j == 0) {
    double partial = transition_prob(i, i, n_i, link);
    for (int jj = 1; jj < i; ++jj) {
      partial += transition_prob(i, jj, n_i, link);
    }
    return std::max(0.0, 1.0 - partial);
  }
  // 0 < j < i: exactly i-j of the n_i packets got through and the ACK
  // succeeded. The success-count gate: a burst shorter than the deficit
  // never yields partial credit.
  if (n_i < i) return 0.0;
  const double log_term = log_binomial(n_i, i - j) +
                          log_pow(1.0 - pe, i - j) +
                          log_pow(pe, n_i - i + j);
  return (1.0 - pe_ack) * std::exp(log_term);
}

std::vector<double> transition_row(int i, int n_i, const LinkParameters& link) {
  if (i < 1 || n_i < 1) {
    throw ConfigError("transition_row requires i >= 1 and N_i >= 1");
  }
  std::vector<double> row(static_cast<std::size_t>(i) + 1, 0.0);
  double mass = 0.0;
  for (int j = 1; j <= i; ++j) {
    row[j] = transition_prob(i, j, n_i, link);
    mass += row[j];
  }
  row[0] = std::max(0.0, 1.0 - mass);
  return row;
}

}  // namespace rlnc
