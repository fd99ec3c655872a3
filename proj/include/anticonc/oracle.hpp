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

#include <complex>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "anticonc/arch.hpp"
#include "anticonc/estimate.hpp"
#include "anticonc/stats.hpp"

namespace anticonc {

inline constexpr std::uint64_t kMaxOracleDimension = std::uint64_t{1} << 26;

using StateVector = std::vector<std::complex<double>>;

/// Haar unitary of the given dimension (Ginibre + QR with R's diagonal phases).
Eigen::MatrixXcd sample_haar_unitary(int dim, Rng& rng);
/// Two-qudit gate, rows indexed by d_a * q + d_b.
inline Eigen::MatrixXcd sample_haar_gate(int q, Rng& rng) { return sample_haar_unitary(q * q, rng); }

/// Basis index = sum_k d_k q^k.
void apply_single(StateVector& psi, int n, int q, int site, const Eigen::MatrixXcd& u);
void apply_pair(StateVector& psi, int n, int q, GatePair gate, const Eigen::MatrixXcd& u);

/// q^n |<0^n| U |0^n>|^4 for one instance: Haar single-qudit layer then the
/// diagram's gates.
double haar_instance_value(const CircuitDiagram& diagram, Rng& rng);

/// Mean of q^n |<0^n|U|0^n>|^4 over Haar instances.
CollisionEstimate estimate_z_haar_mc(const GateSource& source, std::uint64_t instances, std::uint64_t seed,
                                     Exec exec = Exec::Parallel);

}  // namespace anticonc
