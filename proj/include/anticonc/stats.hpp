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

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "anticonc/rng.hpp"

namespace anticonc {

/// Serial or OpenMP execution for the data-parallel kernels.
enum class Exec { Serial, Parallel };

/// Running sums for a block of samples.
struct Moments {
  double sum = 0.0;
  double sum_sq = 0.0;
  std::uint64_t count = 0;

  void add(double v) {
    sum += v;
    sum_sq += v * v;
    ++count;
  }
};

struct MeanStderr {
  double mean = 0.0;
  double std_error = 0.0;
};

/// Pairwise (tree) summation with a fixed split, so the result only depends on
/// the input order.
double pairwise_sum(std::span<const double> xs);

/// Combines per-block moments in block order.
MeanStderr combine_blocks(std::span<const Moments> blocks);

/// Samples per block in the Monte Carlo drivers. Each block is processed by a
/// single thread in index order.
inline constexpr std::uint64_t kSampleBlock = 4096;

/// Runs value(rng) for samples 0..samples-1, sample i drawing from
/// Rng(seed, i), and reduces in block order. The result does not depend on
/// the thread count.
template <typename Value>
MeanStderr sample_blocks(std::uint64_t samples, std::uint64_t seed, Exec exec, Value value) {
  const std::uint64_t nblocks = (samples + kSampleBlock - 1) / kSampleBlock;
  std::vector<Moments> blocks(nblocks);
  auto do_block = [&](std::uint64_t blk) {
    Moments m;
    const std::uint64_t hi = std::min(samples, (blk + 1) * kSampleBlock);
    for (std::uint64_t i = blk * kSampleBlock; i < hi; ++i) {
      Rng rng(seed, i);
      m.add(value(rng));
    }
    blocks[blk] = m;
  };
  if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t blk = 0; blk < static_cast<std::int64_t>(nblocks); ++blk)
      do_block(static_cast<std::uint64_t>(blk));
  } else {
    for (std::uint64_t blk = 0; blk < nblocks; ++blk) do_block(blk);
  }
  return combine_blocks(blocks);
}

/// Worker count used by Exec::Parallel (0 leaves the OpenMP default).
void set_thread_count(int threads);
int thread_count();

}  // namespace anticonc
