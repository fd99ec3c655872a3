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
#include <functional>

#include "anticonc/errors.hpp"
#include "anticonc/exact.hpp"
#include "anticonc/theory.hpp"

namespace anticonc {

CollisionEstimate z_domain_walls(const CircuitDiagram& d, std::uint64_t max_trajectories) {
  d.validate();
  const int n = d.params.n;
  detail::require(n >= 3, "domain walls need a ring of at least 3 qudits");
  detail::guard(n <= 40, "domain-wall enumeration is limited to n <= 40");
  std::vector<int> bonds;
  bonds.reserve(d.gates.size());
  for (const auto& g : d.gates) {
    const int e = ring_bond(g, n);
    detail::require(e >= 0, "domain-wall enumeration needs nearest-neighbour gates on a ring");
    bonds.push_back(e);
  }
  const double q = d.params.q;
  const double w = q / (q * q + 1);
  const std::size_t s = bonds.size();
  std::uint64_t leaves = 0;

  // Sum of weights of all wall trajectories from `walls` through gates t..s-1.
  std::function<double(std::size_t, std::uint64_t)> walk = [&](std::size_t t, std::uint64_t walls) -> double {
    for (; t < s; ++t) {
      const int e = bonds[t];
      if ((walls >> e) & 1U) {
        const std::uint64_t here = walls ^ (std::uint64_t{1} << e);
        const std::uint64_t left = here ^ (std::uint64_t{1} << ((e + n - 1) % n));
        const std::uint64_t right = here ^ (std::uint64_t{1} << ((e + 1) % n));
        return w * (walk(t + 1, left) + walk(t + 1, right));
      }
    }
    if (++leaves > max_trajectories)
      throw GuardError("domain-wall enumeration exceeded " + std::to_string(max_trajectories) + " trajectories");
    return 1.0;
  };

  double total = 0.0;
  const std::uint64_t sets = std::uint64_t{1} << n;
  for (std::uint64_t walls = 0; walls < sets; ++walls) {
    if (std::popcount(walls) % 2 != 0) continue;
    total += walk(0, walls);
  }

  // Each wall set comes from two complementary configurations.
  CollisionEstimate e;
  e.method = "dw-enum";
  e.s = d.size();
  e.log_z = std::log(2.0 * total) - n * std::log(q + 1);
  e.ratio_to_haar = std::exp(e.log_z - log_z_haar(d.params));
  return e;
}

}  // namespace anticonc
