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

#include <algorithm>
#include <cmath>

#include "anticonc/errors.hpp"
#include "anticonc/exact.hpp"
#include "anticonc/theory.hpp"
#include "anticonc/walk.hpp"

namespace anticonc {
namespace {

double binom(int n, int k) { return std::exp(std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0)); }

Configuration config(std::initializer_list<int> bits) {
  Configuration c;
  for (int b : bits) {
    c.bits.push_back(static_cast<std::uint8_t>(b));
    c.weight += b;
  }
  return c;
}

TEST(Steps, AgreeingPairUnchanged) {
  Rng rng(1, 0);
  for (auto bits : {config({0, 0, 1}), config({1, 1, 0})}) {
    auto c = bits;
    EXPECT_FALSE(step_unbiased(c, {0, 1}, rng));
    EXPECT_FALSE(step_biased(c, {0, 1}, 2, rng));
    EXPECT_EQ(c.bits, bits.bits);
  }
}

TEST(Steps, UnbiasedSplitsEvenly) {
  Rng rng(2, 0);
  const int trials = 100000;
  int to_ii = 0;
  for (int i = 0; i < trials; ++i) {
    auto c = config({0, 1});
    ASSERT_TRUE(step_unbiased(c, {0, 1}, rng));
    ASSERT_EQ(c.bits[0], c.bits[1]);
    ASSERT_EQ(c.weight, c.bits[0] + c.bits[1]);
    to_ii += c.weight == 0;
  }
  EXPECT_NEAR(to_ii, trials * 0.5, 5 * std::sqrt(trials * 0.25));
}

TEST(Steps, BiasedFavoursIdentity) {
  Rng rng(3, 0);
  const int trials = 100000;
  int to_ii = 0;
  for (int i = 0; i < trials; ++i) {
    auto c = config({1, 0, 1});
    ASSERT_TRUE(step_biased(c, {0, 1}, 2, rng));
    ASSERT_EQ(c.bits[2], 1);
    to_ii += c.weight == 1;
  }
  EXPECT_NEAR(to_ii, trials * 0.8, 5 * std::sqrt(trials * 0.16));
}

TEST(InitialState, BiasedWeightIsBinomial) {
  const QuditParams p{12, 2};
  Rng rng(4, 0);
  const int trials = 100000;
  std::vector<int> counts(13, 0);
  for (int i = 0; i < trials; ++i) ++counts[sample_initial(p, Walk::Biased, rng).weight];
  double chi2 = 0;
  for (int x = 0; x <= 12; ++x) {
    const double expect = trials * binom(12, x) * std::pow(1.0 / 3, x) * std::pow(2.0 / 3, 12 - x);
    chi2 += (counts[x] - expect) * (counts[x] - expect) / expect;
  }
  EXPECT_LT(chi2, 12 + 5 * std::sqrt(24.0));
}

TEST(InitialState, UnbiasedBitsAreFair) {
  const QuditParams p{8, 3};
  Rng rng(5, 0);
  const int trials = 50000;
  std::vector<int> ones(8, 0);
  for (int i = 0; i < trials; ++i) {
    const auto c = sample_initial(p, Walk::Unbiased, rng);
    for (int k = 0; k < 8; ++k) ones[k] += c.bits[k];
  }
  for (int k = 0; k < 8; ++k) EXPECT_NEAR(ones[k], trials / 2.0, 5 * std::sqrt(trials * 0.25));
  EXPECT_THROW(sample_initial({0, 2}, Walk::Unbiased, rng), PreconditionError);
}

TEST(Steps, FullStatesAreAbsorbing) {
  const auto src = GateSource::complete_graph({7, 2}, 300);
  Rng rng(6, 0);
  for (int bit : {0, 1}) {
    Configuration c;
    c.bits.assign(7, static_cast<std::uint8_t>(bit));
    c.weight = 7 * bit;
    for (long t = 0; t < src.size(); ++t) {
      const auto g = src.gate(t, rng);
      EXPECT_FALSE(step_unbiased(c, g, rng));
      EXPECT_FALSE(step_biased(c, g, 2, rng));
    }
    EXPECT_EQ(c.weight, 7 * bit);
  }
}

TEST(Trace, MovesAreLegal) {
  const auto d = generate_complete_graph({6, 3}, 40, 12);
  const auto src = GateSource::fixed(d);
  for (Walk walk : {Walk::Unbiased, Walk::Biased}) {
    for (std::uint64_t i = 0; i < 200; ++i) {
      Rng rng(7, i);
      const auto tr = trace_walk(src, walk, rng);
      ASSERT_EQ(tr.steps.size(), 41u);
      long flips = 0;
      for (std::size_t t = 1; t < tr.steps.size(); ++t) {
        const auto& before = tr.steps[t - 1].bits;
        const auto& after = tr.steps[t].bits;
        const auto g = d.gates[t - 1];
        int changed = 0;
        for (int k = 0; k < 6; ++k) {
          if (before[k] == after[k]) continue;
          ++changed;
          ASSERT_TRUE(k == g.a || k == g.b);
        }
        ASSERT_LE(changed, 1);
        if (changed) {
          ASSERT_NE(before[g.a], before[g.b]);
          ASSERT_EQ(after[g.a], after[g.b]);
        }
        flips += changed;
      }
      EXPECT_EQ(flips, tr.flips);
    }
  }
}

TEST(Estimators, SingleGatePair) {
  const auto src = GateSource::fixed(CircuitDiagram{{2, 2}, {{0, 1}}});
  for (const auto& e : {estimate_z_unbiased(src, 1000000, 1), estimate_z_biased(src, 1000000, 1)}) {
    EXPECT_NEAR(e.ratio_to_haar, 1.0, 3 * *e.stderr_ratio) << e.method;
    EXPECT_EQ(*e.samples, 1000000u);
  }
}

TEST(Estimators, EmptyCircuitUnbiasedIsExact) {
  const auto src = GateSource::fixed(CircuitDiagram{{9, 2}, {}});
  const auto e = estimate_z_unbiased(src, 1000, 3);
  EXPECT_NEAR(e.log_z, 9 * std::log(2.0 / 3), 1e-12);
  EXPECT_EQ(*e.stderr_ratio, 0.0);
  const auto b = estimate_z_biased(src, 200000, 3);
  EXPECT_NEAR(b.log_z, 9 * std::log(2.0 / 3), 3 * *b.stderr_ratio / b.ratio_to_haar);
}

TEST(Estimators, CompleteGraphMatchesDp) {
  const QuditParams p{6, 2};
  const double exact = z_complete_graph_exact(p, 60).ratio_to_haar;
  const auto src = GateSource::complete_graph(p, 60);
  for (const auto& e : {estimate_z_unbiased(src, 200000, 5), estimate_z_biased(src, 200000, 5)})
    EXPECT_NEAR(e.ratio_to_haar, exact, 3 * *e.stderr_ratio) << e.method;
}

TEST(Estimators, FixedDiagramMatchesTransferMatrix) {
  const auto d = generate_complete_graph({6, 3}, 20, 8);
  const double exact = z_transfer_matrix(d).ratio_to_haar;
  const auto src = GateSource::fixed(d);
  for (const auto& e : {estimate_z_unbiased(src, 200000, 6), estimate_z_biased(src, 200000, 6)})
    EXPECT_NEAR(e.ratio_to_haar, exact, 3 * *e.stderr_ratio) << e.method;
}

TEST(Estimators, RejectZeroSamples) {
  const auto src = GateSource::complete_graph({4, 2}, 3);
  EXPECT_THROW(estimate_z_unbiased(src, 0, 1), PreconditionError);
  EXPECT_THROW(estimate_z_biased(src, 0, 1), PreconditionError);
}

TEST(Estimators, IndependentOfThreadCount) {
  const auto src = GateSource::complete_graph({10, 2}, 80);
  const int saved = thread_count();
  set_thread_count(1);
  const auto serial = estimate_z_biased(src, 20000, 9, Exec::Serial);
  for (int threads : {1, 3, 8}) {
    set_thread_count(threads);
    const auto par = estimate_z_biased(src, 20000, 9, Exec::Parallel);
    EXPECT_EQ(par.log_z, serial.log_z) << threads;
    EXPECT_EQ(*par.stderr_ratio, *serial.stderr_ratio) << threads;
    EXPECT_EQ(estimate_z_unbiased(src, 20000, 9).log_z, estimate_z_unbiased(src, 20000, 9, Exec::Serial).log_z);
  }
  set_thread_count(saved);
}

TEST(Absorption, FrequenciesMatchRuinProbability) {
  const QuditParams p{10, 2};
  const int trials = 20000;
  for (int x0 : {5, 9}) {
    int at_i = 0;
    for (int i = 0; i < trials; ++i) {
      Rng rng(10 + x0, static_cast<std::uint64_t>(i));
      const auto a = run_to_absorption(p, x0, 1000000, rng);
      ASSERT_TRUE(a.absorbed);
      at_i += a.endpoint == 0;
    }
    const double pi = absorption_probabilities(p, x0).p_i;
    EXPECT_NEAR(at_i, trials * pi, 5 * std::sqrt(trials * pi * (1 - pi)) + 1) << x0;
  }
}

TEST(Absorption, EndpointBalancedSplit) {
  const int count = 4000;
  const auto trs = sample_absorption_trajectories({20, 2}, count, 20000, Conditioning::EndpointBalanced, 11);
  int at_s = 0;
  for (const auto& tr : trs) {
    ASSERT_TRUE(tr.absorbed);
    ASSERT_TRUE(tr.endpoint == 0 || tr.endpoint == 20);
    at_s += tr.endpoint == 20;
  }
  EXPECT_NEAR(at_s, count / 2.0, 5 * std::sqrt(count / 4.0));
}

TEST(Absorption, ConditionedStartMean) {
  // Start weight of walks ending at I^n: binom(n,x) q^-x P_I(x), normalised.
  const QuditParams p{20, 2};
  double norm = 0, mean = 0, second = 0;
  for (int x = 0; x <= 20; ++x) {
    const double w = binom(20, x) * std::pow(0.5, x) * absorption_probabilities(p, x).p_i;
    norm += w;
    mean += w * x;
    second += w * x * x;
  }
  mean /= norm;
  const double sd = std::sqrt(second / norm - mean * mean);
  const auto trs = sample_absorption_trajectories(p, 8000, 20000, Conditioning::EndpointBalanced, 12);
  double sum = 0;
  int k = 0;
  for (const auto& tr : trs) {
    if (tr.endpoint != 0) continue;
    sum += tr.weights.front();
    ++k;
  }
  EXPECT_NEAR(sum / k, mean, 5 * sd / std::sqrt(k));
}

TEST(Absorption, SeriesShapeAndZeroStart) {
  const auto trs = sample_absorption_trajectories({12, 2}, 5, 40, Conditioning::None, 13, 0);
  for (const auto& tr : trs) {
    ASSERT_EQ(tr.weights.size(), 41u);
    for (int w : tr.weights) EXPECT_EQ(w, 0);
    EXPECT_EQ(tr.absorption_time, 0);
  }
  EXPECT_TRUE(sample_absorption_trajectories({12, 2}, 0, 40, Conditioning::None, 13).empty());
  EXPECT_THROW(sample_absorption_trajectories({12, 2}, 3, 40, Conditioning::EndpointBalanced, 13, 0), PreconditionError);
}

TEST(Absorption, StaysPutAfterAbsorbing) {
  const auto trs = sample_absorption_trajectories({16, 2}, 50, 2000, Conditioning::EndpointBalanced, 14);
  for (const auto& tr : trs) {
    if (!tr.absorbed) continue;
    for (std::size_t t = static_cast<std::size_t>(tr.absorption_time); t < tr.weights.size(); ++t)
      ASSERT_EQ(tr.weights[t], tr.endpoint);
    for (std::size_t t = 1; t < tr.weights.size(); ++t) ASSERT_LE(std::abs(tr.weights[t] - tr.weights[t - 1]), 1);
  }
}

TEST(Absorption, SixtyQuditPicture) {
  const auto trs = sample_absorption_trajectories({60, 2}, 30, 300, Conditioning::EndpointBalanced, 1);
  int at_i = 0, at_s = 0, absorbed = 0;
  for (const auto& tr : trs) {
    EXPECT_EQ(tr.weights.size(), 301u);
    absorbed += tr.absorbed;
    at_i += tr.endpoint == 0;
    at_s += tr.endpoint == 60;
  }
  EXPECT_GT(at_i, 0);
  EXPECT_GT(at_s, 0);
  EXPECT_LT(absorbed, 30);
}

TEST(Absorption, MedianTimeGrowsWithN) {
  std::vector<double> medians;
  for (int n : {20, 40, 60}) {
    std::vector<long> times;
    for (int i = 0; i < 2000; ++i) {
      Rng rng(15, static_cast<std::uint64_t>(i));
      times.push_back(run_to_absorption({n, 2}, n / 3, 10000000, rng).steps);
    }
    std::nth_element(times.begin(), times.begin() + 1000, times.end());
    medians.push_back(static_cast<double>(times[1000]));
  }
  EXPECT_LT(medians[0], medians[1]);
  EXPECT_LT(medians[1], medians[2]);
}

}  // namespace
}  // namespace anticonc
