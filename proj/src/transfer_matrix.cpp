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

#include <bit>
#include <cmath>
#include <limits>
#include <numbers>

#include "anticonc/errors.hpp"
#include "anticonc/exact.hpp"
#include "anticonc/theory.hpp"

namespace anticonc {

namespace kernels {

namespace {

constexpr std::size_t kBlock = 4096;

// k-th index with bits a < b cleared.
inline std::size_t spread(std::size_t k, int a, int b) {
  const std::size_t lo = k & ((std::size_t{1} << a) - 1);
  const std::size_t rest = k >> a;
  const std::size_t mid = rest & ((std::size_t{1} << (b - 1 - a)) - 1);
  const std::size_t hi = rest >> (b - 1 - a);
  return lo | (mid << (a + 1)) | (hi << (b + 1));
}

inline void update(double* v, std::size_t base, std::size_t ia, std::size_t ib, double w) {
  const double cross = w * (v[base | ia] + v[base | ib]);
  v[base] += cross;
  v[base | ia | ib] += cross;
  v[base | ia] = 0.0;
  v[base | ib] = 0.0;
}

inline double block_sum(std::span<const double> v, std::span<const double> f, std::size_t blk) {
  const std::size_t lo = blk * kBlock;
  const std::size_t hi = std::min(v.size(), lo + kBlock);
  double acc = 0.0;
  for (std::size_t i = lo; i < hi; ++i) acc += v[i] * f[static_cast<std::size_t>(std::popcount(i))];
  return acc;
}

}  // namespace

void apply_gate_serial(std::span<double> v, int a, int b, double w) {
  const std::size_t quads = v.size() >> 2;
  const std::size_t ia = std::size_t{1} << a, ib = std::size_t{1} << b;
  for (std::size_t k = 0; k < quads; ++k) update(v.data(), spread(k, a, b), ia, ib, w);
}

void apply_gate_parallel(std::span<double> v, int a, int b, double w) {
  const auto quads = static_cast<std::int64_t>(v.size() >> 2);
  const std::size_t ia = std::size_t{1} << a, ib = std::size_t{1} << b;
  double* data = v.data();
#pragma omp parallel for schedule(static)
  for (std::int64_t k = 0; k < quads; ++k) update(data, spread(static_cast<std::size_t>(k), a, b), ia, ib, w);
}

double weighted_sum_serial(std::span<const double> v, std::span<const double> f) {
  const std::size_t blocks = (v.size() + kBlock - 1) / kBlock;
  std::vector<double> partial(blocks);
  for (std::size_t blk = 0; blk < blocks; ++blk) partial[blk] = block_sum(v, f, blk);
  return pairwise_sum(partial);
}

double weighted_sum_parallel(std::span<const double> v, std::span<const double> f) {
  const auto blocks = static_cast<std::int64_t>((v.size() + kBlock - 1) / kBlock);
  std::vector<double> partial(static_cast<std::size_t>(blocks));
#pragma omp parallel for schedule(static)
  for (std::int64_t blk = 0; blk < blocks; ++blk)
    partial[static_cast<std::size_t>(blk)] = block_sum(v, f, static_cast<std::size_t>(blk));
  return pairwise_sum(partial);
}

}  // namespace kernels

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// Per-weight factor turning sum_v v(nu) f(|nu|) into Z / Z_H - 1.
std::vector<double> excess_factors(QuditParams p) {
  std::vector<double> f(static_cast<std::size_t>(p.n + 1), 0.0);
  const double shift = -log_z_haar(p) - p.n * std::log(p.q + 1.0);
  for (int x = 1; x < p.n; ++x) f[x] = std::exp(log_one_minus_q(p, x) + shift);
  return f;
}

CollisionEstimate make_estimate(QuditParams p, long s, double excess) {
  CollisionEstimate e;
  e.method = "transfer-matrix";
  e.s = s;
  e.log_excess = excess > 0.0 ? std::log(excess) : kNegInf;
  e.ratio_to_haar = 1.0 + excess;
  e.log_z = log_z_haar(p) + std::log1p(excess);
  return e;
}

std::vector<double> initial_vector(const CircuitDiagram& d) {
  d.validate();
  detail::guard(d.params.n <= kMaxTransferQudits,
                "transfer matrix is limited to n <= " + std::to_string(kMaxTransferQudits));
  return std::vector<double>(std::size_t{1} << d.params.n, 1.0);
}

}  // namespace

void scan_transfer_matrix(const CircuitDiagram& d, Exec exec,
                          const std::function<bool(const CollisionEstimate&)>& visit) {
  std::vector<double> v = initial_vector(d);
  const auto f = excess_factors(d.params);
  const double q = d.params.q;
  const double w = q / (q * q + 1);
  const bool par = exec == Exec::Parallel;
  auto excess = [&] { return par ? kernels::weighted_sum_parallel(v, f) : kernels::weighted_sum_serial(v, f); };
  if (!visit(make_estimate(d.params, 0, excess()))) return;
  for (std::size_t t = 0; t < d.gates.size(); ++t) {
    const auto g = d.gates[t];
    if (par) {
      kernels::apply_gate_parallel(v, g.a, g.b, w);
    } else {
      kernels::apply_gate_serial(v, g.a, g.b, w);
    }
    if (!visit(make_estimate(d.params, static_cast<long>(t + 1), excess()))) return;
  }
}

std::vector<CollisionEstimate> z_transfer_matrix_series(const CircuitDiagram& d, Exec exec) {
  std::vector<CollisionEstimate> out;
  out.reserve(d.gates.size() + 1);
  scan_transfer_matrix(d, exec, [&](const CollisionEstimate& e) {
    out.push_back(e);
    return true;
  });
  return out;
}

CollisionEstimate z_transfer_matrix(const CircuitDiagram& d, Exec exec) {
  std::vector<double> v = initial_vector(d);
  const auto f = excess_factors(d.params);
  const double q = d.params.q;
  const double w = q / (q * q + 1);
  for (const auto& g : d.gates) {
    if (exec == Exec::Parallel) {
      kernels::apply_gate_parallel(v, g.a, g.b, w);
    } else {
      kernels::apply_gate_serial(v, g.a, g.b, w);
    }
  }
  const double ex = exec == Exec::Parallel ? kernels::weighted_sum_parallel(v, f) : kernels::weighted_sum_serial(v, f);
  return make_estimate(d.params, d.size(), ex);
}

}  // namespace anticonc
