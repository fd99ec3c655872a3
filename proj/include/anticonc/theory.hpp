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

#include <map>
#include <optional>
#include <string>

#include "anticonc/arch.hpp"

namespace anticonc {

/// log of the Haar collision probability 2 / (q^n + 1).
double log_z_haar(QuditParams p);
double z_haar(QuditParams p);

/// Weight of all infinite trajectories leaving Hamming weight x, normalised
/// so that Q(0) = Q(n) = 1: (q^x + q^(n-x)) / (q^n + 1).
double q_fixed_point(QuditParams p, int x);
/// log(1 - Q(x)); -inf at the boundary.
double log_one_minus_q(QuditParams p, int x);

/// Sum over one-dimensional walks x -> y that stay inside (y - m, y + m),
/// each weighted by (q / (q^2 + 1)) per step. Needs y <= x < y + m.
double trajectory_sum(int q, int x, int y, int m);
/// Probability that the biased walk from x hits y before y + m.
double reach_probability(int q, int x, int y, int m);

struct AbsorptionProbabilities {
  double p_i = 0.0;  // ends at weight 0
  double p_s = 0.0;  // ends at weight n
};
AbsorptionProbabilities absorption_probabilities(QuditParams p, int x);
/// log P_I(x) and log P_S(x), accurate when either is tiny.
double log_absorb_i(QuditParams p, int x);
double log_absorb_s(QuditParams p, int x);

/// n (n - 1) / (2 x (n - x)), the mean waiting time at weight x.
double lambda_x(int n, int x);

struct QBar {
  double qbar = 0.0;
  double qbar_inv = 0.0;
};
/// Largest e^a admissible for qbar at weight x.
double qbar_max_exp_a(QuditParams p, int x);
/// Effective dimension after absorbing the waiting time at weight x into a
/// per-step factor e^a. Needs 1 <= e^a <= qbar_max_exp_a.
QBar qbar(QuditParams p, int x, double a);

struct LemmaSums {
  double lambda_sum = 0.0;  // walks leaving [v, n - v]
  double xi_sum = 0.0;      // walks (and prefixes) staying in [v, n - v]
};
LemmaSums lemma_sums(QuditParams p, int v, double a);

enum class Theorem { OneDUpper, OneDLower, GeneralUpper, GeneralLower, CompleteUpper, CompleteLower };
Theorem parse_theorem(const std::string& name);
std::string to_string(Theorem t);

struct BoundQuery {
  Theorem theorem = Theorem::CompleteUpper;
  QuditParams params;
  double s = 0.0;
  std::optional<double> r;  // connectivity constant for the general upper bound
  double slack = 0.0;       // added to s* (in units of n) for the general upper bound
};

struct BoundReport {
  Theorem theorem = Theorem::CompleteUpper;
  bool upper = true;
  bool applicable = false;
  double log_bound = 0.0;        // log of the bound on Z
  double log_ratio_bound = 0.0;  // log of the bound on Z / Z_H
  std::optional<double> s_star;
  std::map<std::string, double> constants;

  double ratio_bound() const;
  double value() const;
};

BoundReport bound(const BoundQuery& query);

/// Leading coefficients of s_AC / (n log n). general_lower comes from the
/// general lower bound; the general upper bound is O(n^2).
struct ScalingCoefficients {
  int q = 2;
  double one_d = 0.0;
  double complete_graph = 0.0;
  double general_lower = 0.0;
};
ScalingCoefficients scaling_coefficients(int q);

/// Paley-Zygmund lower bound alpha (1 - beta)^2 on a probability.
double paley_zygmund_fraction(double alpha, double beta);

}  // namespace anticonc
