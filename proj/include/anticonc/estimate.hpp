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

#include <cstdint>
#include <optional>
#include <string>

namespace anticonc {

/// Z at one circuit size, from an exact method or a sampler.
struct CollisionEstimate {
  std::string method;
  long s = 0;
  double log_z = 0.0;
  double ratio_to_haar = 0.0;
  /// log(Z / Z_H - 1); exact methods only, -inf when Z equals Z_H.
  std::optional<double> log_excess;
  std::optional<double> stderr_ratio;
  std::optional<std::uint64_t> samples;
  std::optional<std::uint64_t> seed;
};

}  // namespace anticonc
