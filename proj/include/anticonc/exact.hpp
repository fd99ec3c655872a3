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

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "anticonc/arch.hpp"
#include "anticonc/estimate.hpp"
#include "anticonc/stats.hpp"

namespace anticonc {

inline constexpr int kMaxHammingQudits = 2000;
inline constexpr int kMaxTransferQudits = 24;
inline constexpr std::uint64_t kMaxDomainWallTrajectories = 10'000'000;

/// Complete-graph weights by Hamming weight. Only interior entries are kept:
/// mass reaching weight 0 or n has reached its fixed point and contributes
/// exactly Z_H. Entry x is exp(log_scale) * weights[x].
struct HammingState {
  QuditParams params;
  long s = 0;
  std::vector<double> weights;  // size n + 1, boundary entries zero
  double log_scale = 0.0;
};

HammingState hamming_initial(QuditParams p);
void hamming_step(HammingState& state);
CollisionEstimate hamming_estimate(const HammingState& state);

/// Architecture-averaged Z for the complete graph after s gates.
CollisionEstimate z_complete_graph_exact(QuditParams p, long s);
/// Entries s = 0..s_max.
std::vector<CollisionEstimate> z_complete_graph_series(QuditParams p, long s_max);

namespace kernels {
/// One gate on the {I,S}^n weight vector, in place.
void apply_gate_serial(std::span<double> v, int a, int b, double w);
void apply_gate_parallel(std::span<double> v, int a, int b, double w);
/// Sum of v[i] * f[popcount(i)] in blocks of 4096, blocks combined pairwise.
double weighted_sum_serial(std::span<const double> v, std::span<const double> f);
double weighted_sum_parallel(std::span<const double> v, std::span<const double> f);
}  // namespace kernels

/// Exact Z for a fixed diagram by sweeping all 2^n configurations.
CollisionEstimate z_transfer_matrix(const CircuitDiagram& diagram, Exec exec = Exec::Parallel);
/// Calls visit for prefixes s = 0, 1, ... until it returns false or the
/// diagram ends.
void scan_transfer_matrix(const CircuitDiagram& diagram, Exec exec,
                          const std::function<bool(const CollisionEstimate&)>& visit);
/// Entries for every prefix s = 0..size.
std::vector<CollisionEstimate> z_transfer_matrix_series(const CircuitDiagram& diagram,
                                                        Exec exec = Exec::Parallel);

/// Exact Z for a ring nearest-neighbour diagram by listing every domain wall
/// trajectory.
CollisionEstimate z_domain_walls(const CircuitDiagram& diagram,
                                 std::uint64_t max_trajectories = kMaxDomainWallTrajectories);

struct SacResult {
  bool reached = false;
  long s_ac = -1;
  int depth_ac = -1;  // only for fixed diagrams
  double ratio_at_s_ac = 0.0;
  std::optional<double> ratio_before;  // at s_ac - 1
  long s_max = 0;
  double threshold = 2.0;
};

/// Smallest s with Z(s) / Z_H <= threshold on the complete graph.
SacResult find_s_ac(QuditParams p, long s_max, double threshold = 2.0);
/// Smallest prefix of a fixed diagram with Z / Z_H <= threshold.
SacResult find_s_ac(const CircuitDiagram& diagram, double threshold = 2.0, Exec exec = Exec::Parallel);

}  // namespace anticonc
