// Copyright 2026 The anticonc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cmath>

#include "anticonc/errors.hpp"
#include "anticonc/exact.hpp"
#include "anticonc/theory.hpp"
#include "oracles.hpp"

namespace anticonc {
namespace {

double z_of(const CollisionEstimate& e) { return std::exp(e.log_z); }

std::vector<GatePair> pairs(std::initializer_list<std::pair<int, int>> xs) {
  std::vector<GatePair> out;
  for (auto [a, b] : xs) out.push_back(GatePair::make(a, b));
  return out;
}

CircuitDiagram random_diagram(QuditParams p, long s, std::uint64_t seed) { return generate_complete_graph(p, s, seed); }

TEST(HammingDp, EmptyCircuit) {
  for (int q : {2, 3}) {
    for (int n = 2; n <= 30; n += 7) {
      const auto e = z_complete_graph_exact({n, q}, 0);
      EXPECT_NEAR(e.log_z, n * std::log(2.0 / (q + 1)), 1e-12);
    }
  }
}

TEST(HammingDp, TwoQuditsOneGateIsHaar) {
  const auto e = z_complete_graph_exact({2, 2}, 1);
  EXPECT_NEAR(e.ratio_to_haar, 1.0, 1e-15);
  EXPECT_EQ(*e.log_excess, -INFINITY);
}

// Values from an independent 50-digit evaluation of the recursion.
TEST(HammingDp, HighPrecisionReference) {
  struct Case {
    int n, q;
    long s;
    double ratio;
  };
  const Case cases[] = {
      {60, 2, 213, 2.0247151851272597675}, {60, 2, 214, 1.9953095959826635426}, {8, 2, 100, 1.0000140090229551237},
      {8, 2, 10, 2.0972297750186984089},   {8, 2, 0, 5.0138698369151044048},    {6, 2, 60, 1.0001043678458028372},
      {10, 3, 30, 1.0799509200492906519},
  };
  for (const auto& c : cases) {
    const auto e = z_complete_graph_exact({c.n, c.q}, c.s);
    EXPECT_NEAR(e.ratio_to_haar, c.ratio, 1e-12 * c.ratio) << c.n << " " << c.q << " " << c.s;
    EXPECT_NEAR(std::exp(*e.log_excess), c.ratio - 1, 1e-10 * (c.ratio - 1));
  }
}

TEST(HammingDp, MatchesExhaustiveDiagramAverage) {
  const double via_twirl = oracle_ref::complete_graph_average({4, 2}, 3, oracle_ref::twirl_z);
  EXPECT_NEAR(via_twirl, 0.15180246913580247, 1e-15);
  EXPECT_NEAR(z_of(z_complete_graph_exact({4, 2}, 3)), via_twirl, 1e-14);
  const double via_paths = oracle_ref::complete_graph_average({5, 2}, 4, oracle_ref::brute_force_z);
  EXPECT_NEAR(via_paths, 0.092105007407407407, 1e-15);
  EXPECT_NEAR(z_of(z_complete_graph_exact({5, 2}, 4)), via_paths, 1e-14);
  const double q3 = oracle_ref::complete_graph_average({3, 3}, 4, oracle_ref::twirl_z);
  EXPECT_NEAR(z_of(z_complete_graph_exact({3, 3}, 4)), q3, 1e-13);
}

TEST(HammingDp, MonotoneAndAboveHaar) {
  for (int q : {2, 3}) {
    for (int n : {2, 3, 7, 16, 30}) {
      const auto series = z_complete_graph_series({n, q}, 60 * n);
      for (std::size_t s = 1; s < series.size(); ++s) {
        EXPECT_LE(series[s].ratio_to_haar, series[s - 1].ratio_to_haar * (1 + 1e-14)) << n << " " << s;
        EXPECT_GE(series[s].ratio_to_haar, 1.0);
      }
    }
  }
}

TEST(HammingDp, HaarLimit) {
  for (int q : {2, 3})
    for (int n = 2; n <= 12; ++n) EXPECT_NEAR(z_complete_graph_exact({n, q}, 50L * n).ratio_to_haar, 1.0, 1e-9);
  EXPECT_NEAR(z_complete_graph_exact({8, 2}, 10000).ratio_to_haar, 1.0, 1e-12);
}

TEST(HammingDp, StateStaysFiniteAtGuard) {
  auto st = hamming_initial({kMaxHammingQudits, 2});
  for (int i = 0; i < 50; ++i) hamming_step(st);
  for (double w : st.weights) {
    ASSERT_TRUE(std::isfinite(w));
    ASSERT_GE(w, 0.0);
  }
  EXPECT_EQ(st.weights.front(), 0.0);
  EXPECT_EQ(st.weights.back(), 0.0);
  const auto e = hamming_estimate(st);
  EXPECT_TRUE(std::isfinite(e.log_z));
  EXPECT_GT(e.ratio_to_haar, 1.0);
}

TEST(HammingDp, Guards) {
  EXPECT_THROW(hamming_initial({kMaxHammingQudits + 1, 2}), GuardError);
  EXPECT_THROW(hamming_initial({1, 2}), PreconditionError);
  EXPECT_THROW(z_complete_graph_exact({4, 2}, -1), PreconditionError);
}

TEST(TransferMatrix, SingleGate) {
  const CircuitDiagram d{{2, 2}, pairs({{0, 1}})};
  EXPECT_NEAR(z_of(z_transfer_matrix(d)), 0.4, 1e-15);
}

TEST(TransferMatrix, EmptyCircuit) {
  for (int n = 1; n <= 10; ++n) {
    const auto e = z_transfer_matrix(CircuitDiagram{{n, 3}, {}});
    EXPECT_NEAR(e.log_z, n * std::log(0.5), 1e-12);
  }
}

TEST(TransferMatrix, FrozenSmallDiagrams) {
  const CircuitDiagram fig{{4, 2}, pairs({{0, 1}, {1, 2}, {0, 1}, {2, 3}, {1, 2}})};
  EXPECT_NEAR(z_of(z_transfer_matrix(fig)), 0.13006222222222222, 1e-15);
  EXPECT_NEAR(z_of(z_transfer_matrix(generate_1d({4, 2}, 4))), 0.1312, 1e-15);
  const CircuitDiagram q3{{3, 3}, pairs({{0, 1}, {1, 2}, {0, 2}, {0, 1}})};
  EXPECT_NEAR(z_of(z_transfer_matrix(q3)), 0.0722, 1e-15);
}

TEST(TransferMatrix, MatchesTwirlAndPathEnumeration) {
  for (std::uint64_t seed = 0; seed < 24; ++seed) {
    const int n = 2 + static_cast<int>(seed % 3);
    const int q = 2 + static_cast<int>(seed % 2);
    const auto d = random_diagram({n, q}, static_cast<long>(seed % 6), seed);
    const double z = z_of(z_transfer_matrix(d));
    EXPECT_NEAR(z, oracle_ref::twirl_z(d), 1e-12 * z) << seed;
    EXPECT_NEAR(z, oracle_ref::brute_force_z(d), 1e-12 * z) << seed;
  }
}

TEST(TransferMatrix, SeriesMonotone) {
  const auto d = random_diagram({9, 2}, 150, 3);
  const auto series = z_transfer_matrix_series(d);
  ASSERT_EQ(series.size(), 151u);
  for (std::size_t s = 1; s < series.size(); ++s) {
    EXPECT_LE(series[s].log_z, series[s - 1].log_z + 1e-13);
    EXPECT_GE(series[s].ratio_to_haar, 1.0 - 1e-12);
  }
  EXPECT_NEAR(series.back().log_z, z_transfer_matrix(d).log_z, 1e-13);
}

TEST(TransferMatrix, HaarLimit) {
  for (int n = 2; n <= 12; n += 2) {
    EXPECT_NEAR(z_transfer_matrix(generate_1d({n, 2}, 50L * n)).ratio_to_haar, 1.0, 1e-9) << n;
    EXPECT_NEAR(z_transfer_matrix(random_diagram({n, 3}, 50L * n, n)).ratio_to_haar, 1.0, 1e-9) << n;
  }
}

TEST(TransferMatrix, Guard) { EXPECT_THROW(z_transfer_matrix(CircuitDiagram{{kMaxTransferQudits + 1, 2}, {}}), GuardError); }

TEST(DomainWalls, SingleGateCount) {
  // 7 wall sets; those with a wall on bond 0 branch into two moves of weight 2/5.
  const CircuitDiagram d{{4, 2}, pairs({{0, 1}})};
  EXPECT_NEAR(z_of(z_domain_walls(d)), 2 * (4 + 8 * 0.4) / 81, 1e-15);
}

TEST(DomainWalls, EmptyCircuit) {
  for (int q : {2, 3}) EXPECT_NEAR(z_of(z_domain_walls(CircuitDiagram{{6, q}, {}})), std::pow(2.0 / (q + 1), 6), 1e-15);
}

TEST(DomainWalls, MatchesTransferMatrix) {
  for (int q : {2, 3}) {
    for (int n : {4, 6, 8}) {
      for (int layers = 1; layers <= 4; ++layers) {
        const auto d = generate_1d({n, q}, static_cast<long>(layers) * n / 2);
        const double tm = z_of(z_transfer_matrix(d));
        EXPECT_NEAR(z_of(z_domain_walls(d)), tm, 1e-12 * tm) << q << " " << n << " " << layers;
      }
    }
  }
}

TEST(DomainWalls, RejectsNonRingGatesAndHonoursGuard) {
  EXPECT_THROW(z_domain_walls(CircuitDiagram{{6, 2}, pairs({{0, 2}})}), PreconditionError);
  EXPECT_THROW(z_domain_walls(generate_1d({12, 2}, 60), 1000), GuardError);
}

TEST(Sac, CompleteGraphSixty) {
  const auto r = find_s_ac(QuditParams{60, 2}, 2000);
  ASSERT_TRUE(r.reached);
  EXPECT_EQ(r.s_ac, 214);
  EXPECT_LE(r.ratio_at_s_ac, 2.0);
  ASSERT_TRUE(r.ratio_before.has_value());
  EXPECT_GT(*r.ratio_before, 2.0);
}

TEST(Sac, ThresholdOneNeverReached) {
  const auto r = find_s_ac(QuditParams{10, 2}, 3000, 1.0);
  EXPECT_FALSE(r.reached);
  const auto d = find_s_ac(generate_1d({8, 2}, 400), 1.0);
  EXPECT_FALSE(d.reached);
}

TEST(Sac, InclusiveThreshold) {
  const double at10 = z_complete_graph_exact({8, 2}, 10).ratio_to_haar;
  EXPECT_EQ(find_s_ac(QuditParams{8, 2}, 100, at10 * (1 + 1e-12)).s_ac, 10);
  EXPECT_EQ(find_s_ac(QuditParams{8, 2}, 100, at10 * (1 - 1e-9)).s_ac, 11);
}

TEST(Sac, OneDMatchesDirectScan) {
  const auto d = generate_1d({12, 2}, 6 * 40);
  const auto r = find_s_ac(d);
  const auto series = z_transfer_matrix_series(d);
  long expected = -1;
  for (const auto& e : series) {
    if (e.ratio_to_haar <= 2.0) {
      expected = e.s;
      break;
    }
  }
  EXPECT_EQ(r.s_ac, expected);
  EXPECT_EQ(r.s_ac, 26);
  EXPECT_EQ(r.depth_ac, 5);
  EXPECT_EQ(find_s_ac(d, 2.0, Exec::Serial).s_ac, 26);
}

}  // namespace
}  // namespace anticonc
