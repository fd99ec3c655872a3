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
#include <optional>
#include <vector>

#include "anticonc/arch.hpp"
#include "anticonc/estimate.hpp"
#include "anticonc/stats.hpp"

namespace anticonc {

enum class Walk { Unbiased, Biased };

/// Point of {I,S}^n, S = 1.
struct Configuration {
  std::vector<std::uint8_t> bits;
  int weight = 0;
};

Configuration sample_initial(QuditParams p, Walk walk, Rng& rng);

/// Disagreeing pair: one of the two bits flips, each with probability 1/2.
/// Returns true if the configuration changed.
bool step_unbiased(Configuration& c, GatePair gate, Rng& rng);
/// Disagreeing pair: becomes II with probability q^2 / (q^2 + 1), else SS.
bool step_biased(Configuration& c, GatePair gate, int q, Rng& rng);

struct Trajectory {
  std::vector<Configuration> steps;  // s + 1 entries
  long flips = 0;
};

/// Same draws as run_walk, keeping every intermediate configuration.
Trajectory trace_walk(const GateSource& source, Walk walk, Rng& rng);

struct WalkOutcome {
  Configuration final;
  long flips = 0;
};

/// One trajectory through all gates of the source.
WalkOutcome run_walk(const GateSource& source, Walk walk, Rng& rng);

/// Z from trajectories weighted by (2q / (q^2 + 1))^flips.
CollisionEstimate estimate_z_unbiased(const GateSource& source, std::uint64_t samples, std::uint64_t seed,
                                      Exec exec = Exec::Parallel);
/// Z from the final Hamming weight of the biased walk.
CollisionEstimate estimate_z_biased(const GateSource& source, std::uint64_t samples, std::uint64_t seed,
                                    Exec exec = Exec::Parallel);

enum class Conditioning { None, EndpointBalanced };

/// Biased walk on the complete graph projected to Hamming weight.
struct HammingTrajectory {
  std::vector<int> weights;  // t = 0..max_steps, constant after absorption
  bool absorbed = false;
  long absorption_time = -1;
  int endpoint = -1;  // 0, n or -1
};

/// Trajectories start from the thermal initial weight, or from start_weight
/// if given. EndpointBalanced picks I^n or S^n with probability 1/2 and
/// conditions the walk to end there.
std::vector<HammingTrajectory> sample_absorption_trajectories(QuditParams p, int count, long max_steps,
                                                              Conditioning conditioning, std::uint64_t seed,
                                                              std::optional<int> start_weight = std::nullopt);

struct Absorption {
  bool absorbed = false;
  int endpoint = -1;
  long steps = 0;
};
/// Unconditioned walk from weight x0 until absorption or max_steps.
Absorption run_to_absorption(QuditParams p, int x0, long max_steps, Rng& rng);

}  // namespace anticonc
