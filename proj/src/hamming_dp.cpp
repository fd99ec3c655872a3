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

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "anticonc/errors.hpp"
#include "anticonc/exact.hpp"
#include "anticonc/theory.hpp"

namespace anticonc {

using detail::guard;
using detail::require;

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

void renormalise(HammingState& st) {
  const double top = *std::max_element(st.weights.begin(), st.weights.end());
  if (top == 0.0 || (top > 1e-150 && top < 1e150)) return;
  for (double& w : st.weights) w /= top;
  st.log_scale += std::log(top);
}

// log(sum_x w_x exp(f_x)) over interior x.
double log_weighted(const HammingState& st) {
  const int n = st.params.n;
  double best = kNegInf;
  std::vector<double> terms(static_cast<std::size_t>(n + 1), kNegInf);
  for (int x = 1; x < n; ++x) {
    if (st.weights[x] <= 0.0) continue;
    terms[x] = std::log(st.weights[x]) + log_one_minus_q(st.params, x);
    best = std::max(best, terms[x]);
  }
  if (best == kNegInf) return kNegInf;
  double acc = 0.0;
  for (int x = 1; x < n; ++x) acc += std::exp(terms[x] - best);
  return best + std::log(acc);
}

}  // namespace

HammingState hamming_initial(QuditParams p) {
  p.validate();
  require(p.n >= 2, "Hamming-weight DP needs n >= 2");
  guard(p.n <= kMaxHammingQudits, "Hamming-weight DP is limited to n <= " + std::to_string(kMaxHammingQudits));
  HammingState st;
  st.params = p;
  st.weights.assign(static_cast<std::size_t>(p.n + 1), 0.0);
  // binom(n, x) (q^n + 1) / (2 (q+1)^n): its total is Z / Z_H at s = 0.
  const double base = log_z_haar(p) * -1.0 - p.n * std::log(p.q + 1.0);
  std::vector<double> logs(static_cast<std::size_t>(p.n + 1), kNegInf);
  double top = kNegInf;
  for (int x = 1; x < p.n; ++x) {
    logs[x] = std::lgamma(p.n + 1.0) - std::lgamma(x + 1.0) - std::lgamma(p.n - x + 1.0) + base;
    top = std::max(top, logs[x]);
  }
  for (int x = 1; x < p.n; ++x) st.weights[x] = std::exp(logs[x] - top);
  st.log_scale = top;
  return st;
}

void hamming_step(HammingState& st) {
  const int n = st.params.n;
  const double q = st.params.q;
  const double c = 2 * q / (q * q + 1);
  const double pairs = static_cast<double>(n) * (n - 1);
  auto& u = st.weights;
  std::vector<double> next(u.size(), 0.0);
  for (int y = 1; y < n; ++y) {
    const double stay = 1.0 - 2.0 * y * (n - y) / pairs;
    double in = 0.0;
    if (y - 1 >= 1) in += u[y - 1] * (y - 1) * (n - y + 1) / pairs;
    if (y + 1 <= n - 1) in += u[y + 1] * (y + 1) * (n - y - 1) / pairs;
    next[y] = u[y] * stay + c * in;
  }
  u.swap(next);
  ++st.s;
  renormalise(st);
}

CollisionEstimate hamming_estimate(const HammingState& st) {
  CollisionEstimate e;
  e.method = "hamming-dp";
  e.s = st.s;
  const double lw = log_weighted(st);
  e.log_excess = lw == kNegInf ? kNegInf : lw + st.log_scale;
  const double le = *e.log_excess;
  // log Z_H was folded into the initial weights.
  e.log_z = log_z_haar(st.params) + (le == kNegInf ? 0.0 : (le > 0 ? le + std::log1p(std::exp(-le)) : std::log1p(std::exp(le))));
  e.ratio_to_haar = 1.0 + std::exp(le);
  return e;
}

std::vector<CollisionEstimate> z_complete_graph_series(QuditParams p, long s_max) {
  require(s_max >= 0, "s must be non-negative");
  HammingState st = hamming_initial(p);
  std::vector<CollisionEstimate> out;
  out.reserve(static_cast<std::size_t>(s_max + 1));
  out.push_back(hamming_estimate(st));
  for (long s = 1; s <= s_max; ++s) {
    hamming_step(st);
    out.push_back(hamming_estimate(st));
  }
  return out;
}

CollisionEstimate z_complete_graph_exact(QuditParams p, long s) {
  require(s >= 0, "s must be non-negative");
  HammingState st = hamming_initial(p);
  for (long t = 0; t < s; ++t) hamming_step(st);
  return hamming_estimate(st);
}

namespace {

bool below_threshold(const CollisionEstimate& e, double threshold) {
  const double le = e.log_excess.value_or(std::log(std::max(0.0, e.ratio_to_haar - 1.0)));
  if (threshold > 1.0) return le <= std::log(threshold - 1.0);
  return threshold == 1.0 && le == kNegInf;
}

}  // namespace

SacResult find_s_ac(QuditParams p, long s_max, double threshold) {
  require(s_max >= 0, "s_max must be non-negative");
  require(threshold > 0.0, "threshold must be positive");
  SacResult r;
  r.s_max = s_max;
  r.threshold = threshold;
  HammingState st = hamming_initial(p);
  for (long s = 0;; ++s) {
    const CollisionEstimate e = hamming_estimate(st);
    if (below_threshold(e, threshold)) {
      r.reached = true;
      r.s_ac = s;
      r.ratio_at_s_ac = e.ratio_to_haar;
      return r;
    }
    r.ratio_before = e.ratio_to_haar;
    if (s == s_max) {
      r.ratio_before.reset();
      return r;
    }
    hamming_step(st);
  }
}

SacResult find_s_ac(const CircuitDiagram& diagram, double threshold, Exec exec) {
  require(threshold > 0.0, "threshold must be positive");
  SacResult r;
  r.s_max = diagram.size();
  r.threshold = threshold;
  scan_transfer_matrix(diagram, exec, [&](const CollisionEstimate& e) {
    if (below_threshold(e, threshold)) {
      r.reached = true;
      r.s_ac = e.s;
      r.depth_ac = depth(diagram.prefix(e.s));
      r.ratio_at_s_ac = e.ratio_to_haar;
      return false;
    }
    r.ratio_before = e.ratio_to_haar;
    return true;
  });
  if (!r.reached) r.ratio_before.reset();
  return r;
}

}  // namespace anticonc
