#include "rlnc/optimizer.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "rlnc/analysis.hpp"

namespace rlnc {

namespace {

constexpr int kSearchCap = 1 << 20;

OptimizationResult optimize_impl(const LinkParameters& link,
                                 const CodingParameters& coding,
                                 Objective objective) {
  const DerivedTiming t = derive_timing(link, coding);
  const double per_packet =
      objective == Objective::Energy ? t.packet_energy : t.packet_time;
  const double per_round =
      objective == Objective::Energy ? t.ack_energy : t.wait_time;
  const double pe = link.pkt_erasure();
  const double pe_ack = link.ack_erasure();
  const int m = coding.block_size();

  std::vector<int> best_n;
  std::vector<double> best_cost;
  std::vector<bool> bound_hit;
  best_n.reserve(m);
  best_cost.reserve(m);
  bound_hit.reserve(m);

  for (int i = 1; i <= m; ++i) {
    const double raw_bound = 4.0 * std::ceil(i / (1.0 - pe));
    int bound = std::max(
        static_cast<int>(std::min<double>(raw_bound, kSearchCap)), i + 64);
    int arg_min = -1;
    double min_cost = std::numeric_limits<double>::infinity();
    bool widened = false;
    int n = i;
    while (true) {
      const double cost = state_absorption_cost(i, n, pe, pe_ack, per_packet,
                                                per_round, best_cost);
      if (cost < min_cost) {  // strict: ties keep the smaller burst
        min_cost = cost;
        arg_min = n;
      }
      if (n >= bound) {
        if (arg_min < bound) break;
        if (bound >= kSearchCap) {
          throw NumericalError(
              "burst-size search for state " + std::to_string(i) +
              " still improving at N=" + std::to_string(bound) +
              "; parameters look pathological");
        }
        bound = std::min(2 * bound, kSearchCap);
        widened = true;
      }
      ++n;
    }
    best_n.push_back(arg_min);
    best_cost.push_back(min_cost);
    bound_hit.push_back(widened);
  }

  OptimizationResult result{Policy(best_n), best_cost, best_cost.back(),
                            bound_hit};
  return result;
}

}  // namespace

OptimizationResult optimize_energy(const LinkParameters& link,
                                   const CodingParameters& coding) {
  return optimize_impl(link, coding, Objective::Energy);
}

OptimizationResult optimize_time(const LinkParameters& link,
                                 const CodingParameters& coding) {
  return optimize_impl(link, coding, Objective::Time);
}

double lambert_w_minus1(double x) {
  const double branch_point = -std::exp(-1.0);
  if (!(x < 0.0) || x < branch_point) {
    throw ConfigError("lambert_w_minus1 requires x in [-1/e, 0)");
  }
  const double log_abs_x = std::log(-x);
  // h(w) = ln(-w) + w - ln(-x) is strictly increasing on (-inf, -1] with
  // its root at W_-1(x). h(-1) < 0 only when x sits past the branch point
  // by rounding; the root is then -1 itself.
  auto h = [&](double w) { return std::log(-w) + w - log_abs_x; };
  double hi = -1.0;
  if (h(hi) <= 0.0) return -1.0;
  double lo = -760.0;  // below the root for every representable |x|
  double w = std::min(-1.5, log_abs_x);  // crude seed near ln(-x) for small x
  if (w <= lo || w >= hi) w = 0.5 * (lo + hi);
  for (int iter = 0; iter < 200; ++iter) {
    const double hw = h(w);
    if (hw < 0.0) {
      lo = w;
    } else {
      hi = w;
    }
    const double step = hw / (1.0 + 1.0 / w);  // Newton on h
    double next = w - step;
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (std::fabs(next - w) <= 1e-16 * std::fabs(next)) {
      w = next;
      break;
    }
    w = next;
  }
  return w;
}

ClosedFormN1 n1_closed_form(const LinkParameters& link,
                            const CodingParameters& coding) {
  const double pe = link.pkt_erasure();
  if (!(pe > 0.0 && pe < 1.0)) {
    throw ConfigError(
        "n1_closed_form requires 0 < pkt_erasure < 1 (error-free links have "
        "no stationary point)");
  }
  const DerivedTiming t = derive_timing(link, coding);
  const double ratio = t.ack_energy / t.packet_energy;  // E_ack / E_p
  const double log_pe = std::log(pe);
  const double arg = -std::exp(-1.0 + log_pe * ratio);
  const double w = lambert_w_minus1(arg);
  const double raw = (1.0 + w) / log_pe - ratio;
  ClosedFormN1 out;
  out.raw = raw;
  out.clamped = raw < 1.0;
  out.value = out.clamped ? 1.0 : raw;
  return out;
}

}  // namespace rlnc
