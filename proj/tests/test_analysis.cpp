#include <doctest.h>

#include <cmath>
#include <random>

#include "rlnc/analysis.hpp"
#include "oracles.hpp"

using namespace rlnc;
using namespace rlnc_test;

namespace {

// Geometry with unit packet energy/time: R = packet_bits, P = 1, so
// T_p = 1 s and E_p = 1 J; the ACK costs ack_bits / packet_bits of that.
struct UnitCostSetup {
  LinkParameters link;
  CodingParameters coding;
};

UnitCostSetup unit_cost(int m, double pe, double pe_ack, std::int64_t n,
                        std::int64_t h, std::int64_t ack_bits) {
  CodingParameters coding(m, n, h, 1, ack_bits);
  LinkParameters link(static_cast<double>(coding.packet_bits()), 0.0, 1.0, pe,
                      pe_ack);
  return {link, coding};
}

}  // namespace

TEST_CASE("derived timing fields") {
  const auto link = geo_link(0.1);
  const auto coding = geo_coding();
  const DerivedTiming t = derive_timing(link, coding);
  CHECK(coding.packet_bits() == 10280);
  CHECK(t.packet_time == doctest::Approx(10280.0 / 1.5e6).epsilon(1e-15));
  CHECK(t.ack_time == doctest::Approx(100.0 / 1.5e6).epsilon(1e-15));
  CHECK(t.packet_energy == t.packet_time);  // P = 1 W
  CHECK(t.round_trip_time == 0.25);
  CHECK(t.wait_time == doctest::Approx(0.25 + 100.0 / 1.5e6).epsilon(1e-15));
}

TEST_CASE("single error-free round costs exactly the burst plus one ACK") {
  // M=3, N=(1,2,3), E_p=1 J, E_ack=0.1 J
  const auto setup = unit_cost(3, 0.0, 0.0, 5, 2, 1);
  // packet_bits = 2+5+3 = 10, ack = 1 bit -> E_ack = 0.1 J
  REQUIRE(setup.coding.packet_bits() == 10);
  const auto e = expected_energy(Policy({1, 2, 3}), setup.link, setup.coding);
  CHECK(e[0] == doctest::Approx(1.1).epsilon(1e-15));
  CHECK(e[1] == doctest::Approx(2.1).epsilon(1e-15));
  CHECK(e[2] == doctest::Approx(3.1).epsilon(1e-15));
}

TEST_CASE("geometric retry at M=1") {
  // E_p = E_ack = 1 J, Pe = 0.5: (1+1)/(1*(1-0.5)) = 4 J
  const auto setup = unit_cost(1, 0.5, 0.0, 2, 1, 4);
  REQUIRE(setup.coding.packet_bits() == 4);
  const auto e = expected_energy(Policy({1}), setup.link, setup.coding);
  CHECK(e[0] == doctest::Approx(4.0).epsilon(1e-14));
}

TEST_CASE("energy recursion matches an independent Monte Carlo") {
  // M=2, N=(2,3), Pe=0.3, Pe_ack=0.1, E_p=1 J, E_ack=0.2 J
  const auto setup = unit_cost(2, 0.3, 0.1, 5, 3, 2);
  REQUIRE(setup.coding.packet_bits() == 10);
  const DerivedTiming t = derive_timing(setup.link, setup.coding);
  REQUIRE(t.packet_energy == doctest::Approx(1.0));
  REQUIRE(t.ack_energy == doctest::Approx(0.2));

  const Policy policy({2, 3});
  const auto est = mc_absorption(policy, 0.3, 0.1, t.packet_energy,
                                 t.ack_energy, t.packet_time, t.wait_time,
                                 1000000, 0xBEEF);
  const auto e = expected_energy(policy, setup.link, setup.coding);
  const auto tt = expected_time(policy, setup.link, setup.coding);
  CHECK(std::fabs(e.back() - est.mean_energy) < 3.0 * est.se_energy);
  CHECK(std::fabs(tt.back() - est.mean_time) < 3.0 * est.se_time);
}

TEST_CASE("completion time in the degenerate cases") {
  const auto link = geo_link(0.0);
  const auto coding = geo_coding(1);
  const DerivedTiming t = derive_timing(link, coding);
  const auto t1 = expected_time(Policy({1}), link, coding);
  CHECK(t1[0] == doctest::Approx(t.packet_time + t.wait_time).epsilon(1e-15));

  const auto t_half = expected_time(Policy({1}), geo_link(0.5), coding);
  CHECK(t_half[0] ==
        doctest::Approx(2.0 * (t.packet_time + t.wait_time)).epsilon(1e-14));
}

TEST_CASE("recursion equals first-step analysis on the transition rows") {
  std::mt19937 rng(2025);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int it = 0; it < 40; ++it) {
    const int m = static_cast<int>(rng() % 4) + 1;
    const double pe = unit(rng) * 0.9;
    const double pe_ack = unit(rng) * 0.5;
    std::vector<int> ns;
    for (int i = 1; i <= m; ++i) {
      ns.push_back(i + static_cast<int>(rng() % static_cast<unsigned>(9 - i)));
    }
    const Policy policy(ns);
    const auto link = geo_link(pe, pe_ack);
    const auto coding = geo_coding(m);
    const DerivedTiming t = derive_timing(link, coding);

    const auto direct = expected_energy(policy, link, coding);
    const auto oracle =
        first_step_costs(policy, link, t.packet_energy, t.ack_energy);
    for (int i = 0; i < m; ++i) {
      CHECK(rel_err(direct[static_cast<std::size_t>(i)],
                    oracle[static_cast<std::size_t>(i)]) < 1e-10);
    }
  }
}

TEST_CASE("degenerate exactness of totals") {
  const auto link = geo_link(0.0, 0.0);
  const auto coding = geo_coding();
  const DerivedTiming t = derive_timing(link, coding);
  const Policy identity({1, 2, 3, 4, 5, 6, 7, 8, 9, 10});
  const auto report = evaluate_policy(identity, link, coding);
  CHECK(report.total_energy ==
        doctest::Approx(10.0 * t.packet_energy + t.ack_energy).epsilon(1e-15));
  CHECK(report.total_time ==
        doctest::Approx(10.0 * t.packet_time + t.wait_time).epsilon(1e-15));
  CHECK(report.energy_per_bit ==
        doctest::Approx(report.total_energy / 1e5).epsilon(1e-15));
  CHECK(report.per_state_energy.size() == 10);
  CHECK(report.per_state_time.size() == 10);
  CHECK(report.total_energy == report.per_state_energy.back());
}

TEST_CASE("single-state energy grows at least linearly in the burst size") {
  const auto link = geo_link(0.4, 0.1);
  const auto coding = geo_coding(1);
  const DerivedTiming t = derive_timing(link, coding);
  double prev = 0.0;
  bool increasing_tail = true;
  for (int n = 1; n <= 200; ++n) {
    const double e = expected_energy(Policy({n}), link, coding)[0];
    CHECK(e >= n * t.packet_energy);
    if (n > 20 && e <= prev) increasing_tail = false;
    prev = e;
  }
  CHECK(increasing_tail);
}

TEST_CASE("full-duplex mean energy at the long-delay reference point") {
  const auto coding = geo_coding();
  CHECK(full_duplex_energy(geo_link(0.0), coding) ==
        doctest::Approx(0.25 + 0.125 + 10.0 * (10280.0 / 1.5e6) +
                        100.0 / 1.5e6)
            .epsilon(1e-14));
  // first two terms are erasure-independent; the data term scales 1/(1-Pe)
  const double e0 = full_duplex_energy(geo_link(0.0), coding);
  const double e8 = full_duplex_energy(geo_link(0.8), coding);
  const double data0 = 10.0 * (10280.0 / 1.5e6);
  CHECK(e8 - (e0 - data0) == doctest::Approx(5.0 * data0).epsilon(1e-12));
  // divergence as Pe -> 1
  CHECK(full_duplex_energy(geo_link(0.999999), coding) > 1e5 * data0);
}

TEST_CASE("full-duplex mean time") {
  const auto coding = geo_coding();
  const double t0 = full_duplex_time(geo_link(0.0), coding);
  CHECK(t0 == doctest::Approx(10.0 * 10280.0 / 1.5e6 + 0.25 + 100.0 / 1.5e6)
                  .epsilon(1e-14));
  // Pe = 0.5 doubles the data term
  const double data0 = 10.0 * 10280.0 / 1.5e6;
  CHECK(full_duplex_time(geo_link(0.5), coding) - t0 ==
        doctest::Approx(data0).epsilon(1e-12));
  // the no-data limit: subtracting the data term leaves T_rt + T_ack/(1-Pe_ack)
  const auto link = geo_link(0.25, 0.125);
  const auto coding1 = geo_coding(1);
  const DerivedTiming t = derive_timing(link, coding1);
  const double without_data =
      full_duplex_time(link, coding1) - t.packet_time / (1.0 - 0.25);
  CHECK(without_data ==
        doctest::Approx(t.round_trip_time + t.ack_time / (1.0 - 0.125))
            .epsilon(1e-12));
}

TEST_CASE("erasure probabilities from a bit error rate") {
  const auto coding = geo_coding();
  const auto [pe0, pea0] = erasures_from_ber(0.0, coding);
  CHECK(pe0 == 0.0);
  CHECK(pea0 == 0.0);

  const auto [pe, pea] = erasures_from_ber(2e-5, coding);
  CHECK(pe == doctest::Approx(1.0 - std::pow(1.0 - 2e-5, 10280)).epsilon(1e-12));
  CHECK(pe == doctest::Approx(0.1858).epsilon(1e-3));
  CHECK(pea == doctest::Approx(1.0 - std::pow(1.0 - 2e-5, 100)).epsilon(1e-12));
  CHECK(pea == doctest::Approx(1.998e-3).epsilon(1e-3));
}

TEST_CASE("infeasible policies are rejected at construction") {
  CHECK_THROWS_AS(Policy({1, 1}), PolicyError);
  CHECK_THROWS_AS(Policy({0}), PolicyError);
  CHECK_THROWS_AS(Policy(std::vector<int>{}), PolicyError);
}

TEST_CASE("block-size mismatch between policy and geometry") {
  const auto link = geo_link(0.1);
  CHECK_THROWS_AS(expected_energy(Policy({1, 2}), link, geo_coding(3)),
                  PolicyError);
}
