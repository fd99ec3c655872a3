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

#include "anticonc/arch.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "anticonc/errors.hpp"

namespace anticonc {

using detail::require;

void QuditParams::validate() const {
  require(n >= 1, "need at least one qudit, got n=" + std::to_string(n));
  require(q >= 2, "need local dimension q >= 2, got " + std::to_string(q));
}

GatePair GatePair::make(int i, int j) {
  require(i != j, "gate acts on the same qudit twice");
  return i < j ? GatePair{i, j} : GatePair{j, i};
}

CircuitDiagram CircuitDiagram::prefix(long s) const {
  require(s >= 0 && s <= size(), "prefix length out of range");
  return {params, {gates.begin(), gates.begin() + s}};
}

void CircuitDiagram::validate() const {
  params.validate();
  for (const auto& g : gates) {
    require(g.a >= 0 && g.b < params.n && g.a < g.b,
            "gate {" + std::to_string(g.a) + "," + std::to_string(g.b) + "} invalid for n=" + std::to_string(params.n));
  }
}

Architecture parse_architecture(const std::string& name) {
  if (name == "1d") return Architecture::OneD;
  if (name == "complete-graph") return Architecture::CompleteGraph;
  throw PreconditionError("unknown architecture '" + name + "' (expected 1d or complete-graph)");
}

std::string to_string(Architecture arch) { return arch == Architecture::OneD ? "1d" : "complete-graph"; }

CircuitDiagram generate_1d(QuditParams params, long s) {
  params.validate();
  require(params.n % 2 == 0, "1d architecture needs even n");
  const long half = params.n / 2;
  require(s >= 0 && s % half == 0, "1d architecture needs s to be a multiple of n/2");
  CircuitDiagram d{params, {}};
  d.gates.reserve(static_cast<std::size_t>(s));
  for (long layer = 0; layer < s / half; ++layer) {
    for (int t = 1; t <= half; ++t) {
      if (layer % 2 == 0) {
        d.gates.push_back(GatePair::make(2 * t - 2, 2 * t - 1));
      } else {
        d.gates.push_back(GatePair::make(2 * t - 1, (2 * t) % params.n));
      }
    }
  }
  return d;
}

GatePair draw_complete_graph_gate(int n, Rng& rng) {
  const int a = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
  int b = static_cast<int>(rng.below(static_cast<std::uint64_t>(n - 1)));
  if (b >= a) ++b;
  return GatePair::make(a, b);
}

CircuitDiagram generate_complete_graph(QuditParams params, long s, std::uint64_t seed) {
  params.validate();
  require(params.n >= 2, "complete graph needs n >= 2");
  require(s >= 0, "s must be non-negative");
  Rng rng(seed, 0);
  CircuitDiagram d{params, {}};
  d.gates.reserve(static_cast<std::size_t>(s));
  for (long t = 0; t < s; ++t) d.gates.push_back(draw_complete_graph_gate(params.n, rng));
  return d;
}

int depth(const CircuitDiagram& diagram) {
  int layers = 0;
  std::vector<char> busy(static_cast<std::size_t>(diagram.params.n), 0);
  bool open = false;
  for (const auto& g : diagram.gates) {
    if (!open || busy[g.a] || busy[g.b]) {
      std::fill(busy.begin(), busy.end(), 0);
      ++layers;
      open = true;
    }
    busy[g.a] = busy[g.b] = 1;
  }
  return layers;
}

int ring_bond(GatePair gate, int n) {
  if (n < 3) return -1;
  if (gate.b == gate.a + 1) return gate.a;
  if (gate.a == 0 && gate.b == n - 1) return n - 1;
  return -1;
}

std::string diagram_to_json(const CircuitDiagram& diagram) {
  nlohmann::json j;
  j["n"] = diagram.params.n;
  j["q"] = diagram.params.q;
  auto gates = nlohmann::json::array();
  for (const auto& g : diagram.gates) gates.push_back({g.a, g.b});
  j["gates"] = gates;
  return j.dump();
}

CircuitDiagram diagram_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw PreconditionError(std::string("diagram is not valid JSON: ") + e.what());
  }
  require(j.is_object() && j.contains("n") && j.contains("q") && j.contains("gates"),
          "diagram JSON needs fields n, q and gates");
  CircuitDiagram d;
  try {
    d.params.n = j.at("n").get<int>();
    d.params.q = j.at("q").get<int>();
    for (const auto& g : j.at("gates")) {
      require(g.is_array() && g.size() == 2, "each gate must be a pair [a, b]");
      const int a = g[0].get<int>();
      const int b = g[1].get<int>();
      require(a >= 0 && b >= 0 && a < d.params.n && b < d.params.n,
              "gate index out of range for n=" + std::to_string(d.params.n));
      d.gates.push_back(GatePair::make(a, b));
    }
  } catch (const nlohmann::json::exception& e) {
    throw PreconditionError(std::string("malformed diagram: ") + e.what());
  }
  if (j.contains("s")) require(j["s"].get<long>() == d.size(), "declared s does not match the gate count");
  d.validate();
  return d;
}

void save_diagram(const CircuitDiagram& diagram, const std::filesystem::path& path) {
  std::ofstream out(path);
  require(static_cast<bool>(out), "cannot write " + path.string());
  out << diagram_to_json(diagram) << '\n';
}

CircuitDiagram load_diagram(const std::filesystem::path& path) {
  std::ifstream in(path);
  require(static_cast<bool>(in), "cannot read " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return diagram_from_json(ss.str());
}

GateSource GateSource::fixed(CircuitDiagram diagram) {
  diagram.validate();
  GateSource g;
  g.params_ = diagram.params;
  g.s_ = diagram.size();
  g.diagram_ = std::move(diagram);
  return g;
}

GateSource GateSource::complete_graph(QuditParams params, long s) {
  params.validate();
  require(params.n >= 2, "complete graph needs n >= 2");
  require(s >= 0, "s must be non-negative");
  GateSource g;
  g.params_ = params;
  g.s_ = s;
  g.redraw_ = true;
  g.diagram_.params = params;
  return g;
}

}  // namespace anticonc
