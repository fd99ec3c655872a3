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
#include <filesystem>
#include <string>
#include <vector>

#include "anticonc/rng.hpp"

namespace anticonc {

struct QuditParams {
  int n = 0;  // number of qudits
  int q = 2;  // local dimension

  /// Throws PreconditionError unless n >= 1 and q >= 2.
  void validate() const;
  friend bool operator==(const QuditParams&, const QuditParams&) = default;
};

/// Unordered pair of distinct qudits, stored with a < b.
struct GatePair {
  int a = 0;
  int b = 1;

  static GatePair make(int i, int j);
  friend bool operator==(const GatePair&, const GatePair&) = default;
};

struct CircuitDiagram {
  QuditParams params;
  std::vector<GatePair> gates;

  long size() const { return static_cast<long>(gates.size()); }
  /// First s gates.
  CircuitDiagram prefix(long s) const;
  void validate() const;
  friend bool operator==(const CircuitDiagram&, const CircuitDiagram&) = default;
};

enum class Architecture { OneD, CompleteGraph };

Architecture parse_architecture(const std::string& name);
std::string to_string(Architecture arch);

/// Periodic brickwork: even layers pair (0,1),(2,3),..., odd layers
/// (1,2),...,(n-1,0). Requires even n and s a multiple of n/2.
CircuitDiagram generate_1d(QuditParams params, long s);

/// s gates, each an independent uniform pair.
CircuitDiagram generate_complete_graph(QuditParams params, long s, std::uint64_t seed);

/// Uniform pair drawn from rng.
GatePair draw_complete_graph_gate(int n, Rng& rng);

/// Fewest layers of consecutive gates acting on disjoint qudits (greedy cut).
int depth(const CircuitDiagram& diagram);

/// Ring bond index e (between qudits e and e+1 mod n) of a nearest-neighbour
/// gate, or -1. Needs n >= 3.
int ring_bond(GatePair gate, int n);

/// Serialises {"n", "q", "gates": [[a, b], ...]}.
std::string diagram_to_json(const CircuitDiagram& diagram);
CircuitDiagram diagram_from_json(const std::string& text);
void save_diagram(const CircuitDiagram& diagram, const std::filesystem::path& path);
CircuitDiagram load_diagram(const std::filesystem::path& path);

/// Where the gates of a sampled trajectory come from: a fixed diagram, or a
/// fresh complete-graph diagram per trajectory (architecture average).
class GateSource {
 public:
  static GateSource fixed(CircuitDiagram diagram);
  static GateSource complete_graph(QuditParams params, long s);

  const QuditParams& params() const { return params_; }
  long size() const { return s_; }
  bool redraws() const { return redraw_; }
  const CircuitDiagram& diagram() const { return diagram_; }

  /// Gate t. Random sources consume rng; fixed ones ignore it.
  GatePair gate(long t, Rng& rng) const {
    return redraw_ ? draw_complete_graph_gate(params_.n, rng) : diagram_.gates[static_cast<std::size_t>(t)];
  }

 private:
  QuditParams params_;
  long s_ = 0;
  bool redraw_ = false;
  CircuitDiagram diagram_;
};

}  // namespace anticonc
