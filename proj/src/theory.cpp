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

#include "anticonc/theory.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "anticonc/errors.hpp"

namespace anticonc {

using detail::require;

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// log(e^y - 1) for y > 0.
double log_expm1(double y) { return y > 1.0 ? y + std::log1p(-std::exp(-y)) : std::log(std::expm1(y)); }

// log(1 + e^y)
double softplus(double y) { return y > 0.0 ? y + std::log1p(std::exp(-y)) : std::log1p(std::exp(y)); }

// log(q^n + 1)
double log_qn_plus_one(QuditParams p) {
  const double lq = std::log(static_cast<double>(p.q));
  return p.n * lq + std::log1p(std::exp(-p.n * lq));
}

// log(1 - q^{-2k}) for k >= 1
double log_one_minus_q_neg2(int q, long k) { return std::log(-std::expm1(-2.0 * k * std::log(static_cast<double>(q)))); }

void check_weight(QuditParams p, int x) {
  p.validate();
  require(x >= 0 && x <= p.n, "Hamming weight out of range [0, n]");
}

}  // namespace

double log_z_haar(QuditParams p) {
  p.validate();
  return std::numbers::ln2 - log_qn_plus_one(p);
}

double z_haar(QuditParams p) { return std::exp(log_z_haar(p)); }

double q_fixed_point(QuditParams p, int x) {
  check_weight(p, x);
  const double lq = std::log(static_cast<double>(p.q));
  const double hi = std::max(x, p.n - x) * lq;
  const double lo = std::min(x, p.n - x) * lq;
  return std::exp(hi + std::log1p(std::exp(lo - hi)) - log_qn_plus_one(p));
}

double log_one_minus_q(QuditParams p, int x) {
  check_weight(p, x);
  if (x == 0 || x == p.n) return kNegInf;
  const double lq = std::log(static_cast<double>(p.q));
  return log_expm1(x * lq) + log_expm1((p.n - x) * lq) - log_qn_plus_one(p);
}

double trajectory_sum(int q, int x, int y, int m) {
  require(q >= 2, "need q >= 2");
  require(m >= 1, "need m >= 1");
  require(y <= x && x < y + m, "trajectory_sum needs y <= x < y + m");
  const double qd = q;
  const int k = x - y;
  return (std::pow(qd, -k) - std::pow(qd, -2.0 * m + k)) / (-std::expm1(-2.0 * m * std::log(qd)));
}

double reach_probability(int q, int x, int y, int m) {
  require(q >= 2, "need q >= 2");
  require(m >= 1, "need m >= 1");
  require(y <= x && x < y + m, "reach_probability needs y <= x < y + m");
  return std::exp(log_one_minus_q_neg2(q, m - (x - y)) - log_one_minus_q_neg2(q, m));
}

double log_absorb_i(QuditParams p, int x) {
  check_weight(p, x);
  if (x == p.n) return kNegInf;
  return log_one_minus_q_neg2(p.q, p.n - x) - log_one_minus_q_neg2(p.q, p.n);
}

double log_absorb_s(QuditParams p, int x) {
  check_weight(p, x);
  if (x == 0) return kNegInf;
  const double lq = std::log(static_cast<double>(p.q));
  return -2.0 * (p.n - x) * lq + log_one_minus_q_neg2(p.q, x) - log_one_minus_q_neg2(p.q, p.n);
}

AbsorptionProbabilities absorption_probabilities(QuditParams p, int x) {
  AbsorptionProbabilities out;
  out.p_i = std::exp(log_absorb_i(p, x));
  out.p_s = std::exp(log_absorb_s(p, x));
  return out;
}

double lambda_x(int n, int x) {
  require(n >= 2, "need n >= 2");
  require(x > 0 && x < n, "lambda_x needs 0 < x < n");
  return static_cast<double>(n) * (n - 1) / (2.0 * x * (n - x));
}

double qbar_max_exp_a(QuditParams p, int x) {
  p.validate();
  const double q = p.q;
  return 1.0 / (1.0 - (q - 1) * (q - 1) / ((q * q + 1) * lambda_x(p.n, x)));
}

QBar qbar(QuditParams p, int x, double a) {
  p.validate();
  const double lam = lambda_x(p.n, x);
  require(a >= 0.0, "qbar needs e^a >= 1");
  require(a <= std::log(qbar_max_exp_a(p, x)) * (1.0 + 1e-12), "qbar: e^a above the admissible range");
  const double q = p.q;
  const double d = 1.0 - lam * (-std::expm1(-a));
  const double pre = (q * q + 1) / (2 * q) * d;
  const double disc = std::max(0.0, 1.0 - 4 * q * q / ((q * q + 1) * (q * q + 1) * d * d));
  const double root = std::sqrt(disc);
  return {pre * (1.0 + root), pre * (1.0 - root)};
}

LemmaSums lemma_sums(QuditParams p, int v, double a) {
  p.validate();
  require(v >= 1 && 2 * v <= p.n, "lemma_sums needs 1 <= v <= n/2");
  const QBar qb = qbar(p, v, a);
  require(qb.qbar > 1.0, "lemma_sums needs qbar > 1");
  const double lq = std::log(qb.qbar);
  const double e0 = (-p.n + 2.0 * v) * lq;
  LemmaSums out;
  out.lambda_sum = qb.qbar_inv * std::exp(softplus(e0) - softplus(e0 - 2.0 * lq));
  out.xi_sum = (qb.qbar * qb.qbar + 1) / ((qb.qbar - 1) * (qb.qbar - 1)) * (1.0 - out.lambda_sum);
  return out;
}

Theorem parse_theorem(const std::string& name) {
  if (name == "1d-ub") return Theorem::OneDUpper;
  if (name == "1d-lb") return Theorem::OneDLower;
  if (name == "gen-ub") return Theorem::GeneralUpper;
  if (name == "gen-lb") return Theorem::GeneralLower;
  if (name == "cg-ub") return Theorem::CompleteUpper;
  if (name == "cg-lb") return Theorem::CompleteLower;
  throw PreconditionError("unknown theorem '" + name + "'");
}

std::string to_string(Theorem t) {
  switch (t) {
    case Theorem::OneDUpper: return "1d-ub";
    case Theorem::OneDLower: return "1d-lb";
    case Theorem::GeneralUpper: return "gen-ub";
    case Theorem::GeneralLower: return "gen-lb";
    case Theorem::CompleteUpper: return "cg-ub";
    case Theorem::CompleteLower: return "cg-lb";
  }
  return "?";
}

double BoundReport::ratio_bound() const { return std::exp(log_ratio_bound); }
double BoundReport::value() const { return std::exp(log_bound); }

namespace {

double one_d_a(double q) { return std::log((q * q + 1) / (2 * q)); }

double one_d_s_star(double n, double a) {
  return n * std::log(n) / (2 * a) + n * (std::log(std::numbers::e - 1) / (2 * a) + 0.5);
}

}  // namespace

BoundReport bound(const BoundQuery& query) {
  const QuditParams p = query.params;
  p.validate();
  require(query.s >= 0.0, "s must be non-negative");
  const double n = p.n;
  const double q = p.q;
  const double s = query.s;
  const double lq = std::log(q);

  BoundReport r;
  r.theorem = query.theorem;
  auto upper_form = [&](double a, double s_star) {
    r.upper = true;
    r.s_star = s_star;
    r.constants["a"] = a;
    r.log_ratio_bound = softplus(-2.0 * a / n * (s - s_star));
  };
  // (Z_H / 2) exp(g): ratio bound exp(g) / 2.
  auto lower_form = [&](double g) {
    r.upper = false;
    r.log_ratio_bound = g - std::numbers::ln2;
  };

  switch (query.theorem) {
    case Theorem::OneDUpper: {
      const double a = one_d_a(q);
      const double s_star = one_d_s_star(n, a);
      upper_form(a, s_star);
      r.constants["d_star"] = 2 * s_star / n;
      r.applicable = s >= s_star;
      break;
    }
    case Theorem::OneDLower: {
      const double a = one_d_a(q);
      const double s_star = one_d_s_star(n, a);
      const double c = 3.0 * std::exp(10.0);
      const double big_a = 1.0 / (8 * c * std::numbers::e);
      const double a_prime = std::log(8 * c * std::numbers::e * (std::numbers::e - 1)) / (2 * a) + 0.5;
      lower_form(big_a * std::exp(std::log(n) - 2 * a * s / n));
      r.s_star = s_star;
      r.constants["a"] = a;
      r.constants["c"] = c;
      r.constants["A"] = big_a;
      r.constants["A_prime"] = a_prime;
      r.applicable = s_star - s >= a_prime * n;
      break;
    }
    case Theorem::GeneralUpper: {
      require(query.r.has_value() && *query.r > 0.0, "gen-ub needs a positive connectivity constant r");
      const double a = std::log(2 * (q * q + 1) / ((q + 1) * (q + 1))) / (2 * *query.r);
      const double s_star = std::log(2 * q / (q + 1)) * n * n / (2 * a) + query.slack * n;
      upper_form(a, s_star);
      r.constants["r"] = *query.r;
      r.constants["slack"] = query.slack;
      r.applicable = true;
      break;
    }
    case Theorem::GeneralLower: {
      lower_form(lq / (q + 1) * std::exp(std::log(n) - 2 * s / n * std::log(q * q + 1)));
      r.applicable = true;
      break;
    }
    case Theorem::CompleteUpper: {
      const double a = (q - 1) * (q - 1) / (2 * (q * q + 1));
      const double qn_ratio = std::exp(std::log1p(std::exp(-n * lq)));  // (q^n + 1) / q^n
      const double c = (q * q + 1) / (2 * (q * q - 1)) +
                       std::pow(q * q + 1, 3) * (q - 1) * (q - 1) / std::pow(q * q - 1, 3) * std::numbers::pi *
                           std::numbers::pi / 6 +
                       (q * q + 1) / ((q - 1) * (q - 1)) *
                           (std::log(320 * (q - 1) * qn_ratio / 9) + q * q / (q * q - 1) + 4 * lq);
      const double s_star = (q * q + 1) / (2 * (q * q - 1)) * n * std::log(n) + c * n;
      upper_form(a, s_star);
      r.constants["c"] = c;
      r.applicable = s >= s_star;
      break;
    }
    case Theorem::CompleteLower: {
      const double step = std::log1p(-2 * (q * q - 1) / (n * (q * q + 1)));
      lower_form(lq / (q + 1) * std::exp(std::log(n) + s * step));
      r.applicable = true;
      break;
    }
  }
  if (r.s_star) r.constants["s_star"] = *r.s_star;
  r.log_bound = r.log_ratio_bound + log_z_haar(p);
  return r;
}

ScalingCoefficients scaling_coefficients(int q) {
  require(q >= 2, "need q >= 2");
  const double qd = q;
  ScalingCoefficients c;
  c.q = q;
  c.one_d = 1.0 / (2 * one_d_a(qd));
  c.complete_graph = (qd * qd + 1) / (2 * (qd * qd - 1));
  c.general_lower = 1.0 / (2 * std::log(qd * qd + 1));
  return c;
}

double paley_zygmund_fraction(double alpha, double beta) {
  require(alpha >= 0.0 && alpha <= 1.0, "alpha must lie in [0, 1]");
  require(beta >= 0.0 && beta <= 1.0, "beta must lie in [0, 1]");
  return alpha * (1 - beta) * (1 - beta);
}

}  // namespace anticonc
