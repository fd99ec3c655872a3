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

#include "anticonc/oracle.hpp"

#include <cmath>

#include "anticonc/errors.hpp"
#include "anticonc/theory.hpp"

namespace anticonc {

Eigen::MatrixXcd sample_haar_unitary(int dim, Rng& rng) {
  detail::require(dim >= 1, "unitary dimension must be positive");
  Eigen::MatrixXcd z(dim, dim);
  const double scale = std::sqrt(0.5);
  for (int j = 0; j < dim; ++j)
    for (int i = 0; i < dim; ++i) {
      const double re = rng.normal();
      const double im = rng.normal();
      z(i, j) = std::complex<double>(re, im) * scale;
    }
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(z);
  Eigen::MatrixXcd u = qr.householderQ() * Eigen::MatrixXcd::Identity(dim, dim);
  const auto& r = qr.matrixQR();
  for (int j = 0; j < dim; ++j) {
    const std::complex<double> d = r(j, j);
    const double mag = std::abs(d);
    if (mag > 0.0) u.col(j) *= d / mag;
  }
  return u;
}

namespace {

std::size_t ipow(int q, int k) {
  std::size_t r = 1;
  for (int i = 0; i < k; ++i) r *= static_cast<std::size_t>(q);
  return r;
}

}  // namespace

void apply_single(StateVector& psi, int n, int q, int site, const Eigen::MatrixXcd& u) {
  const std::size_t stride = ipow(q, site);
  const std::size_t dim = ipow(q, n);
  std::vector<std::complex<double>> in(static_cast<std::size_t>(q));
  for (std::size_t idx = 0; idx < dim; ++idx) {
    if ((idx / stride) % static_cast<std::size_t>(q) != 0) continue;
    for (int d = 0; d < q; ++d) in[d] = psi[idx + d * stride];
    for (int r = 0; r < q; ++r) {
      std::complex<double> acc = 0.0;
      for (int c = 0; c < q; ++c) acc += u(r, c) * in[c];
      psi[idx + r * stride] = acc;
    }
  }
}

void apply_pair(StateVector& psi, int n, int q, GatePair gate, const Eigen::MatrixXcd& u) {
  const std::size_t sa = ipow(q, gate.a);
  const std::size_t sb = ipow(q, gate.b);
  const std::size_t dim = ipow(q, n);
  const auto uq = static_cast<std::size_t>(q);
  const int qq = q * q;
  std::vector<std::complex<double>> in(static_cast<std::size_t>(qq));
  std::vector<std::size_t> off(static_cast<std::size_t>(qq));
  for (int da = 0; da < q; ++da)
    for (int db = 0; db < q; ++db) off[da * q + db] = da * sa + db * sb;
  for (std::size_t idx = 0; idx < dim; ++idx) {
    if ((idx / sa) % uq != 0 || (idx / sb) % uq != 0) continue;
    for (int k = 0; k < qq; ++k) in[k] = psi[idx + off[k]];
    for (int r = 0; r < qq; ++r) {
      std::complex<double> acc = 0.0;
      for (int c = 0; c < qq; ++c) acc += u(r, c) * in[c];
      psi[idx + off[r]] = acc;
    }
  }
}

double haar_instance_value(const CircuitDiagram& diagram, Rng& rng) {
  const int n = diagram.params.n;
  const int q = diagram.params.q;
  StateVector psi(ipow(q, n), 0.0);
  psi[0] = 1.0;
  for (int k = 0; k < n; ++k) apply_single(psi, n, q, k, sample_haar_unitary(q, rng));
  for (const auto& g : diagram.gates) apply_pair(psi, n, q, g, sample_haar_gate(q, rng));
  const double p = std::norm(psi[0]);
  return static_cast<double>(ipow(q, n)) * p * p;
}

CollisionEstimate estimate_z_haar_mc(const GateSource& source, std::uint64_t instances, std::uint64_t seed,
                                     Exec exec) {
  detail::require(instances > 0, "need at least one instance");
  const QuditParams p = source.params();
  const double log_dim = p.n * std::log(static_cast<double>(p.q));
  detail::guard(log_dim <= std::log(static_cast<double>(kMaxOracleDimension)) + 1e-9,
                "Haar oracle is limited to q^n <= 2^26");
  const auto ms = sample_blocks(instances, seed, exec, [&](Rng& rng) {
    if (!source.redraws()) return haar_instance_value(source.diagram(), rng);
    CircuitDiagram d{p, {}};
    d.gates.reserve(static_cast<std::size_t>(source.size()));
    for (long t = 0; t < source.size(); ++t) d.gates.push_back(source.gate(t, rng));
    return haar_instance_value(d, rng);
  });
  const double lzh = log_z_haar(p);
  CollisionEstimate e;
  e.method = "oracle-haar";
  e.s = source.size();
  e.log_z = std::log(ms.mean);
  e.ratio_to_haar = std::exp(e.log_z - lzh);
  e.stderr_ratio = ms.std_error * std::exp(-lzh);
  e.samples = instances;
  e.seed = seed;
  return e;
}

}  // namespace anticonc
