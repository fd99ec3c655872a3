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

#include "anticonc/stats.hpp"

#include <cmath>

#include <omp.h>

namespace anticonc {

double pairwise_sum(std::span<const double> xs) {
  if (xs.size() <= 8) {
    double s = 0.0;
    for (double x : xs) s += x;
    return s;
  }
  const std::size_t half = xs.size() / 2;
  return pairwise_sum(xs.first(half)) + pairwise_sum(xs.subspan(half));
}

MeanStderr combine_blocks(std::span<const Moments> blocks) {
  std::vector<double> sums, sqs;
  std::uint64_t count = 0;
  sums.reserve(blocks.size());
  sqs.reserve(blocks.size());
  for (const auto& b : blocks) {
    sums.push_back(b.sum);
    sqs.push_back(b.sum_sq);
    count += b.count;
  }
  MeanStderr out;
  if (count == 0) return out;
  const double n = static_cast<double>(count);
  out.mean = pairwise_sum(sums) / n;
  if (count > 1) {
    const double var = std::max(0.0, (pairwise_sum(sqs) - n * out.mean * out.mean) / (n - 1.0));
    out.std_error = std::sqrt(var / n);
  }
  return out;
}

namespace {
int g_threads = 0;
}

void set_thread_count(int threads) {
  g_threads = threads > 0 ? threads : 0;
  if (g_threads > 0) omp_set_num_threads(g_threads);
}

int thread_count() { return g_threads > 0 ? g_threads : omp_get_max_threads(); }

}  // namespace anticonc
