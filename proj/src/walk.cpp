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

#include "anticonc/walk.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "anticonc/errors.hpp"
#include "anticonc/theory.hpp"

namespace anticonc {

using detail::require;

Configuration sample_initial(QuditParams p, Walk walk, Rng& rng) {
  p.validate();
  Configuration c;
  c.bits.resize(static_cast<std::size_t>(p.n));
  const double p_s = walk == Walk::Biased ? 1.0 / (p.q + 1.0) : 0.5;
  for (auto& b : c.bits) {
    b = rng.bernoulli(p_s) ? 1 : 0;
    c.weight += b;
  }
  return c;
}

bool step_unbiased(Configuration& c, GatePair gate, Rng& rng) {
  if (c.bits[gate.a] == c.bits[gate.b]) return false;
  const int site = (rng() >> 63) ? gate.a : gate.b;
  c.bits[site] ^= 1;
  c.weight += c.bits[site] ? 1 : -1;
  return true;
}

bool step_biased(Configuration& c, GatePair gate, int q, Rng& rng) {
  if (c.bits[gate.a] == c.bits[gate.b]) return false;
  const double qq = static_cast<double>(q) * q;
  if (rng.bernoulli(qq / (qq + 1))) {
    c.bits[gate.a] = c.bits[gate.b] = 0;
    --c.weight;
  } else {
    c.bits[gate.a] = c.bits[gate.b] = 1;
    ++c.weight;
  }
  return true;
}

namespace {

template <typename Visit>
long walk_gates(const GateSource& source, Walk walk, Rng& rng, Configuration& c, Visit visit) {
  long flips = 0;
  const int q = source.params().q;
  for (long t = 0; t < source.size(); ++t) {
    const GatePair g = source.gate(t, rng);
    const bool moved = walk == Walk::Unbiased ? step_unbiased(c, g, rng) : step_biased(c, g, q, rng);
    flips += moved ? 1 : 0;
    visit(c);
  }
  return flips;
}

}  // namespace

WalkOutcome run_walk(const GateSource& source, Walk walk, Rng& rng) {
  WalkOutcome out;
  out.final = sample_initial(source.params(), walk, rng);
  out.flips = walk_gates(source, walk, rng, out.final, [](const Configuration&) {});
  return out;
}

Trajectory trace_walk(const GateSource& source, Walk walk, Rng& rng) {
  Trajectory tr;
  Configuration c = sample_initial(source.params(), walk, rng);
  tr.steps.reserve(static_cast<std::size_t>(source.size() + 1));
  tr.steps.push_back(c);
  tr.flips = walk_gates(source, walk, rng, c, [&](const Configuration& now) { tr.steps.push_back(now); });
  return tr;
}

namespace {

CollisionEstimate finish(const GateSource& src, const char* method, const MeanStderr& ms, double log_prefactor,
                         std::uint64_t samples, std::uint64_t seed) {
  const double lzh = log_z_haar(src.params());
  CollisionEstimate e;
  e.method = method;
  e.s = src.size();
  e.log_z = log_prefactor + std::log(ms.mean);
  e.ratio_to_haar = std::exp(e.log_z - lzh);
  e.stderr_ratio = ms.std_error * std::exp(log_prefactor - lzh);
  e.samples = samples;
  e.seed = seed;
  return e;
}

}  // namespace

CollisionEstimate estimate_z_unbiased(const GateSource& source, std::uint64_t samples, std::uint64_t seed,
                                      Exec exec) {
  require(samples > 0, "need at least one sample");
  const QuditParams p = source.params();
  const double q = p.q;
  const double log_c = std::log(2 * q / (q * q + 1));
  const auto ms = sample_blocks(samples, seed, exec, [&](Rng& rng) {
    return std::exp(log_c * static_cast<double>(run_walk(source, Walk::Unbiased, rng).flips));
  });
  return finish(source, "mc-unbiased", ms, p.n * std::log(2.0 / (q + 1)), samples, seed);
}

CollisionEstimate estimate_z_biased(const GateSource& source, std::uint64_t samples, std::uint64_t seed, Exec exec) {
  require(samples > 0, "need at least one sample");
  const QuditParams p = source.params();
  const double lq = std::log(static_cast<double>(p.q));
  const auto ms = sample_blocks(samples, seed, exec, [&](Rng& rng) {
    return std::exp(lq * (run_walk(source, Walk::Biased, rng).final.weight - p.n));
  });
  return finish(source, "mc-biased", ms, 0.0, samples, seed);
}

namespace {

struct Chain {
  QuditParams p;
  double p_down = 0.0;  // unconditioned
  std::vector<double> log_h_i, log_h_s;

  explicit Chain(QuditParams params) : p(params) {
    const double q = p.q;
    p_down = q * q / (q * q + 1);
    log_h_i.resize(static_cast<std::size_t>(p.n + 1));
    log_h_s.resize(static_cast<std::size_t>(p.n + 1));
    for (int x = 0; x <= p.n; ++x) {
      log_h_i[x] = log_absorb_i(p, x);
      log_h_s[x] = log_absorb_s(p, x);
    }
  }

  bool moves(int x, Rng& rng) const {
    const double pairs = static_cast<double>(p.n) * (p.n - 1);
    return rng.uniform() < 2.0 * x * (p.n - x) / pairs;
  }

  // One step; h is null for the unconditioned walk.
  int step(int x, const std::vector<double>* h, Rng& rng) const {
    if (x == 0 || x == p.n || !moves(x, rng)) return x;
    double down = p_down;
    if (h != nullptr) {
      const double lq2 = 2.0 * std::log(static_cast<double>(p.q));
      down = 1.0 / (1.0 + std::exp((*h)[x + 1] - (*h)[x - 1] - lq2));
    }
    return rng.bernoulli(down) ? x - 1 : x + 1;
  }
};

// Start weight of trajectories conditioned to end at I^n, from
// binom(n, x) q^-x P_I(x); the S^n case is its mirror image.
std::vector<double> endpoint_i_start_cdf(const Chain& ch) {
  const QuditParams& p = ch.p;
  std::vector<double> logw(static_cast<std::size_t>(p.n + 1));
  double top = -std::numeric_limits<double>::infinity();
  for (int x = 0; x <= p.n; ++x) {
    logw[x] = std::lgamma(p.n + 1.0) - std::lgamma(x + 1.0) - std::lgamma(p.n - x + 1.0) -
              x * std::log(static_cast<double>(p.q)) + ch.log_h_i[x];
    top = std::max(top, logw[x]);
  }
  std::vector<double> cdf(logw.size());
  double acc = 0.0;
  for (std::size_t x = 0; x < logw.size(); ++x) cdf[x] = acc += std::exp(logw[x] - top);
  for (double& c : cdf) c /= acc;
  return cdf;
}

int draw(const std::vector<double>& cdf, Rng& rng) {
  const double u = rng.uniform();
  const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
  return static_cast<int>(std::min<std::ptrdiff_t>(it - cdf.begin(), static_cast<std::ptrdiff_t>(cdf.size()) - 1));
}

}  // namespace

std::vector<HammingTrajectory> sample_absorption_trajectories(QuditParams p, int count, long max_steps,
                                                              Conditioning conditioning, std::uint64_t seed,
                                                              std::optional<int> start_weight) {
  p.validate();
  require(count >= 0, "count must be non-negative");
  require(max_steps >= 0, "max_steps must be non-negative");
  if (start_weight) require(*start_weight >= 0 && *start_weight <= p.n, "start weight out of range");
  if (start_weight && conditioning == Conditioning::EndpointBalanced)
    require(*start_weight > 0 && *start_weight < p.n, "conditioned trajectories need an interior start weight");
  const Chain ch(p);
  const std::vector<double> cdf = endpoint_i_start_cdf(ch);
  std::vector<HammingTrajectory> out(static_cast<std::size_t>(count));

#pragma omp parallel for schedule(dynamic, 1)
  for (int i = 0; i < count; ++i) {
    Rng rng(seed, static_cast<std::uint64_t>(i));
    const std::vector<double>* h = nullptr;
    int x = 0;
    if (conditioning == Conditioning::EndpointBalanced) {
      const bool to_s = rng.bernoulli(0.5);
      h = to_s ? &ch.log_h_s : &ch.log_h_i;
      if (start_weight) {
        x = *start_weight;
      } else {
        x = to_s ? p.n - draw(cdf, rng) : draw(cdf, rng);
      }
    } else {
      x = start_weight ? *start_weight : rng.binomial(p.n, 1.0 / (p.q + 1.0));
    }
    HammingTrajectory& tr = out[static_cast<std::size_t>(i)];
    tr.weights.reserve(static_cast<std::size_t>(max_steps + 1));
    tr.weights.push_back(x);
    auto absorbed = [&](long t) {
      if (!tr.absorbed && (x == 0 || x == p.n)) {
        tr.absorbed = true;
        tr.absorption_time = t;
        tr.endpoint = x;
      }
    };
    absorbed(0);
    for (long t = 1; t <= max_steps; ++t) {
      x = ch.step(x, h, rng);
      tr.weights.push_back(x);
      absorbed(t);
    }
  }
  return out;
}

Absorption run_to_absorption(QuditParams p, int x0, long max_steps, Rng& rng) {
  p.validate();
  require(x0 >= 0 && x0 <= p.n, "start weight out of range");
  const Chain ch(p);
  Absorption a;
  int x = x0;
  while (x != 0 && x != p.n && a.steps < max_steps) {
    x = ch.step(x, nullptr, rng);
    ++a.steps;
  }
  a.absorbed = x == 0 || x == p.n;
  a.endpoint = a.absorbed ? x : -1;
  return a;
}

}  // namespace anticonc
