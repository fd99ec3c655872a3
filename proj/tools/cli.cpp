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

#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <tuple>

#include <CLI11.hpp>
#include <json.hpp>

#include "anticonc/arch.hpp"
#include "anticonc/errors.hpp"
#include "anticonc/exact.hpp"
#include "anticonc/oracle.hpp"
#include "anticonc/stats.hpp"
#include "anticonc/theory.hpp"
#include "anticonc/version.hpp"
#include "anticonc/walk.hpp"

namespace anticonc::cli {

namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Shortest round-trip form, independent of the locale.
std::string fmt(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto r = std::to_chars(buf, buf + sizeof buf, v);
  return {buf, r.ptr};
}

json finite_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

json to_json(const CollisionEstimate& e) {
  json j;
  j["method"] = e.method;
  j["s"] = e.s;
  j["log_Z"] = finite_or_null(e.log_z);
  j["ratio_to_haar"] = finite_or_null(e.ratio_to_haar);
  if (e.log_excess) j["log_excess"] = finite_or_null(*e.log_excess);
  if (e.stderr_ratio) j["stderr_ratio"] = *e.stderr_ratio;
  if (e.samples) j["samples"] = *e.samples;
  if (e.seed) j["seed"] = *e.seed;
  return j;
}

json to_json(const BoundReport& b) {
  json j;
  j["theorem"] = to_string(b.theorem);
  j["kind"] = b.upper ? "upper" : "lower";
  j["applicable"] = b.applicable;
  j["constants"] = b.constants;
  j["log_bound"] = finite_or_null(b.log_bound);
  j["value"] = finite_or_null(b.value());
  j["log_ratio_to_haar_bound"] = finite_or_null(b.log_ratio_bound);
  j["ratio_to_haar_bound"] = finite_or_null(b.ratio_bound());
  return j;
}

json to_json(const SacResult& r) {
  json j;
  j["status"] = r.reached ? "reached" : "not-reached";
  j["threshold"] = r.threshold;
  j["s_max"] = r.s_max;
  if (r.reached) {
    j["s_ac"] = r.s_ac;
    j["ratio_at_s_ac"] = r.ratio_at_s_ac;
    j["ratio_before"] = r.ratio_before ? json(*r.ratio_before) : json(nullptr);
    if (r.depth_ac >= 0) j["depth_ac"] = r.depth_ac;
  }
  return j;
}

json typed(const std::string& text) {
  long long i = 0;
  auto ri = std::from_chars(text.data(), text.data() + text.size(), i);
  if (ri.ec == std::errc() && ri.ptr == text.data() + text.size()) return i;
  double d = 0;
  auto rd = std::from_chars(text.data(), text.data() + text.size(), d);
  if (rd.ec == std::errc() && rd.ptr == text.data() + text.size()) return d;
  return text;
}

// Every option of the subcommand with its resolved value; enough to replay it.
// Unset options whose default is the -1 sentinel are left out.
json collect_parameters(const CLI::App& sub) {
  static const std::set<std::string> skip{"help", "out", "threads"};
  json p = json::object();
  for (const CLI::Option* opt : sub.get_options()) {
    const std::string name = opt->get_single_name();
    if (name.empty() || skip.count(name) != 0) continue;
    if (opt->get_expected_min() == 0) {
      p[name] = opt->count() > 0;
      continue;
    }
    if (opt->count() > 0) {
      p[name] = typed(opt->results().front());
    } else if (!opt->get_default_str().empty() && opt->get_default_str() != "-1") {
      p[name] = typed(opt->get_default_str());
    }
  }
  return p;
}

std::vector<std::string> replay_args(const json& record) {
  std::vector<std::string> args{record.at("command").get<std::string>()};
  for (const auto& [k, v] : record.at("parameters").items()) {
    if (v.is_boolean()) {
      if (v.get<bool>()) args.push_back("--" + k);
      continue;
    }
    if (v.is_null()) continue;
    args.push_back("--" + k);
    if (v.is_string()) {
      args.push_back(v.get<std::string>());
    } else if (v.is_number_integer()) {
      args.push_back(std::to_string(v.get<long long>()));
    } else {
      args.push_back(fmt(v.get<double>()));
    }
  }
  return args;
}

struct Context {
  std::ostream& out;
  std::ostream& err;
  bool verbose = false;
  Clock::time_point start = Clock::now();

  void log(const std::string& msg) const {
    if (verbose) err << "anticonc: " << msg << '\n';
  }
};

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw PreconditionError("cannot write " + path);
  f << text;
}

void emit(const Context& ctx, const std::string& command, const json& params, const json& result,
          const std::string& out_path) {
  json rec;
  rec["command"] = command;
  rec["parameters"] = params;
  rec["result"] = result;
  rec["wall_time"] = std::chrono::duration<double>(Clock::now() - ctx.start).count();
  rec["toolkit_version"] = kVersion;
  const std::string text = rec.dump(2) + "\n";
  if (out_path.empty()) {
    ctx.out << text;
  } else {
    write_file(out_path, text);
    ctx.log("wrote " + out_path);
  }
}

std::string series_csv(const std::vector<CollisionEstimate>& series) {
  std::string csv = "s,ratio_to_haar,log_Z\n";
  for (const auto& e : series) csv += std::to_string(e.s) + "," + fmt(e.ratio_to_haar) + "," + fmt(e.log_z) + "\n";
  return csv;
}

// Default search horizon: well past the complete-graph upper bound size.
long default_s_max_complete(int n) {
  return static_cast<long>(std::ceil(10.0 * n * (std::log(static_cast<double>(n)) + 10.0)));
}

// Default 1D horizon in layers.
long default_layers_1d(QuditParams p) {
  const double a = std::log((p.q * p.q + 1.0) / (2.0 * p.q));
  return static_cast<long>(std::ceil(2.0 * (std::log(static_cast<double>(p.n)) + 2.0) / a)) + 4;
}

struct Options {
  // shared
  std::string out;
  int n = -1;
  int q = 2;
  long s = -1;
  std::uint64_t seed = 1;
  std::string arch;
  // gen
  // collision
  std::string method;
  std::string diagram;
  std::uint64_t samples = 100000;
  std::string series;
  // sac
  double threshold = 2.0;
  long s_max = -1;
  // bounds
  std::string theorem;
  double r = -1.0;
  double slack = 0.0;
  bool table = false;
  // trajectories
  int count = 30;
  long max_steps = 300;
  std::string conditioning = "endpoint-balanced";
  int start_weight = -1;
  bool zseries = false;
  // sweep
  std::string quantity = "sac";
  int n_from = 0, n_to = -1, n_step = 1;
  std::string q_list;
  bool append = false;
  // replay
  std::string record;
};

QuditParams need_params(const Options& o, const CLI::App& sub) {
  if (sub.get_option("--n")->count() == 0) throw UsageError(sub.get_name() + ": --n is required");
  return {o.n, o.q};
}

int cmd_gen(const Context& ctx, const Options& o, const CLI::App& sub) {
  const Architecture arch = parse_architecture(o.arch);
  const QuditParams p{o.n, o.q};
  const CircuitDiagram d = arch == Architecture::OneD ? generate_1d(p, o.s) : generate_complete_graph(p, o.s, o.seed);
  if (o.out.empty()) {
    ctx.out << diagram_to_json(d) << '\n';
    return kOk;
  }
  save_diagram(d, o.out);
  json result{{"path", o.out}, {"gates", d.size()}, {"depth", depth(d)}};
  emit(ctx, "gen", collect_parameters(sub), result, "");
  return kOk;
}

int cmd_collision(const Context& ctx, const Options& o, const CLI::App& sub) {
  const bool has_diagram = !o.diagram.empty();
  const bool has_arch = !o.arch.empty();
  if (has_diagram && has_arch) throw UsageError("collision: give either --diagram or --arch, not both");
  const bool want_series = !o.series.empty();

  auto need_s = [&] {
    if (sub.get_option("--s")->count() == 0) throw UsageError("collision: --s is required with --arch");
    return o.s;
  };

  CollisionEstimate est;
  std::vector<CollisionEstimate> series;
  if (o.method == "hamming-dp") {
    if (has_diagram) throw UsageError("collision: hamming-dp averages over the complete graph and takes no --diagram");
    if (has_arch && parse_architecture(o.arch) != Architecture::CompleteGraph)
      throw UsageError("collision: hamming-dp only supports --arch complete-graph");
    const QuditParams p = need_params(o, sub);
    const long s = need_s();
    if (want_series) {
      series = z_complete_graph_series(p, s);
      est = series.back();
    } else {
      est = z_complete_graph_exact(p, s);
    }
  } else {
    if (!has_diagram && !has_arch) throw UsageError("collision: " + o.method + " needs --diagram or --arch");
    std::optional<CircuitDiagram> diagram;
    std::optional<GateSource> source;
    if (has_diagram) {
      diagram = load_diagram(o.diagram);
    } else {
      const Architecture arch = parse_architecture(o.arch);
      const QuditParams p = need_params(o, sub);
      const long s = need_s();
      if (arch == Architecture::OneD) {
        diagram = generate_1d(p, s);
      } else if (o.method == "transfer-matrix" || o.method == "dw-enum") {
        diagram = generate_complete_graph(p, s, o.seed);
      } else {
        source = GateSource::complete_graph(p, s);
      }
    }
    if (!source) source = GateSource::fixed(*diagram);

    const bool exact = o.method == "transfer-matrix";
    if (want_series && !exact) throw UsageError("collision: --series needs an exact method with a prefix series");
    if (o.method == "transfer-matrix") {
      if (want_series) {
        series = z_transfer_matrix_series(*diagram);
        est = series.back();
      } else {
        est = z_transfer_matrix(*diagram);
      }
    } else if (o.method == "dw-enum") {
      if (!diagram || (has_arch && parse_architecture(o.arch) != Architecture::OneD))
        throw UsageError("collision: dw-enum needs a 1d diagram");
      est = z_domain_walls(*diagram);
    } else if (o.method == "mc-unbiased") {
      est = estimate_z_unbiased(*source, o.samples, o.seed);
    } else if (o.method == "mc-biased") {
      est = estimate_z_biased(*source, o.samples, o.seed);
    } else if (o.method == "oracle-haar") {
      est = estimate_z_haar_mc(*source, o.samples, o.seed);
    } else {
      throw UsageError("collision: unknown method '" + o.method + "'");
    }
  }
  if (want_series) write_file(o.series, series_csv(series));
  emit(ctx, "collision", collect_parameters(sub), to_json(est), o.out);
  return kOk;
}

int cmd_sac(const Context& ctx, const Options& o, const CLI::App& sub) {
  const Architecture arch = parse_architecture(o.arch);
  const QuditParams p = need_params(o, sub);
  SacResult r;
  if (arch == Architecture::CompleteGraph) {
    const long s_max = o.s_max >= 0 ? o.s_max : default_s_max_complete(p.n);
    r = find_s_ac(p, s_max, o.threshold);
  } else {
    const long half = p.n / 2;
    const long s_max = o.s_max >= 0 ? (o.s_max + half - 1) / std::max(half, 1L) * half : default_layers_1d(p) * half;
    r = find_s_ac(generate_1d(p, s_max), o.threshold);
  }
  json result = to_json(r);
  result["arch"] = to_string(arch);
  emit(ctx, "sac", collect_parameters(sub), result, o.out);
  if (!r.reached) {
    ctx.err << "anticonc: Z/Z_H did not reach " << fmt(o.threshold) << " within s_max=" << r.s_max << '\n';
    return kNotReached;
  }
  return kOk;
}

int cmd_bounds(const Context& ctx, const Options& o, const CLI::App& sub) {
  if (o.table) {
    const ScalingCoefficients c = scaling_coefficients(o.q);
    json result{{"q", o.q},
                {"one_d", c.one_d},
                {"complete_graph", c.complete_graph},
                {"general_lower", c.general_lower},
                {"general_upper", "O(n^2)"}};
    emit(ctx, "bounds", collect_parameters(sub), result, o.out);
    return kOk;
  }
  if (o.theorem.empty()) throw UsageError("bounds: --theorem or --table is required");
  const Theorem th = parse_theorem(o.theorem);
  if (th == Theorem::GeneralUpper && sub.get_option("--r")->count() == 0)
    throw UsageError("bounds: gen-ub needs --r (the regular-connectivity constant)");
  if (sub.get_option("--s")->count() == 0) throw UsageError("bounds: --s is required");
  BoundQuery query;
  query.theorem = th;
  query.params = need_params(o, sub);
  query.s = static_cast<double>(o.s);
  if (sub.get_option("--r")->count() > 0) query.r = o.r;
  query.slack = o.slack;
  emit(ctx, "bounds", collect_parameters(sub), to_json(bound(query)), o.out);
  return kOk;
}

int cmd_trajectories(const Context& ctx, const Options& o, const CLI::App& sub) {
  const QuditParams p = need_params(o, sub);
  Conditioning cond = Conditioning::None;
  if (o.conditioning == "endpoint-balanced") {
    cond = Conditioning::EndpointBalanced;
  } else if (o.conditioning != "none") {
    throw UsageError("trajectories: --conditioning must be none or endpoint-balanced");
  }
  std::optional<int> start;
  if (o.start_weight >= 0) start = o.start_weight;
  const auto trs = sample_absorption_trajectories(p, o.count, o.max_steps, cond, o.seed, start);
  std::vector<double> ratio;
  if (o.zseries) {
    for (const auto& e : z_complete_graph_series(p, o.max_steps)) ratio.push_back(e.ratio_to_haar);
  }
  std::ostringstream csv;
  csv << "trajectory_id,t,hamming_weight" << (o.zseries ? ",ratio_to_haar" : "") << '\n';
  int absorbed = 0, to_i = 0, to_s = 0;
  for (std::size_t i = 0; i < trs.size(); ++i) {
    const auto& tr = trs[i];
    absorbed += tr.absorbed ? 1 : 0;
    to_i += tr.endpoint == 0 ? 1 : 0;
    to_s += tr.endpoint == p.n ? 1 : 0;
    for (std::size_t t = 0; t < tr.weights.size(); ++t) {
      csv << i << ',' << t << ',' << tr.weights[t];
      if (o.zseries) csv << ',' << fmt(ratio[t]);
      csv << '\n';
    }
  }
  if (o.out.empty()) {
    ctx.out << csv.str();
    return kOk;
  }
  write_file(o.out, csv.str());
  json result{{"path", o.out},       {"trajectories", trs.size()}, {"absorbed", absorbed},
              {"endpoint_i", to_i}, {"endpoint_s", to_s}};
  emit(ctx, "trajectories", collect_parameters(sub), result, "");
  return kOk;
}

std::vector<int> parse_q_list(const Options& o) {
  if (o.q_list.empty()) return {o.q};
  std::vector<int> qs;
  std::stringstream ss(o.q_list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    int v = 0;
    const auto r = std::from_chars(item.data(), item.data() + item.size(), v);
    if (r.ec != std::errc() || r.ptr != item.data() + item.size()) throw UsageError("sweep: bad --q-list entry '" + item + "'");
    qs.push_back(v);
  }
  return qs;
}

int cmd_sweep(const Context& ctx, const Options& o, const CLI::App& sub) {
  const Architecture arch = parse_architecture(o.arch);
  if (o.n_step <= 0) throw UsageError("sweep: --n-step must be positive");
  const bool sac = o.quantity == "sac";
  if (!sac && o.quantity != "z") throw UsageError("sweep: --quantity must be sac or z");
  if (!sac && sub.get_option("--s")->count() == 0) throw UsageError("sweep: --quantity z needs --s");
  const std::vector<int> qs = parse_q_list(o);

  const std::string header = sac ? "arch,n,q,threshold,s_ac,d_ac,s_ac_over_n_ln_n,ratio_at_s_ac"
                                 : "arch,n,q,s,method,ratio_to_haar,log_Z";
  // Points already in the file are skipped when appending.
  std::set<std::string> done;
  bool have_header = false;
  if (o.append && !o.out.empty() && std::filesystem::exists(o.out)) {
    std::ifstream in(o.out);
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      if (line == header) {
        have_header = true;
        continue;
      }
      std::stringstream ls(line);
      std::string a, n, q;
      std::getline(ls, a, ',');
      std::getline(ls, n, ',');
      std::getline(ls, q, ',');
      done.insert(a + "," + n + "," + q);
    }
  }
  std::ostringstream csv;
  if (!have_header) csv << header << '\n';
  int rows = 0, skipped = 0;
  for (int q : qs) {
    for (int n = o.n_from; n <= o.n_to; n += o.n_step) {
      const QuditParams p{n, q};
      const std::string key = to_string(arch) + "," + std::to_string(n) + "," + std::to_string(q);
      if (done.count(key) != 0) {
        ++skipped;
        continue;
      }
      ctx.log("sweep point " + key);
      if (sac) {
        SacResult r;
        if (arch == Architecture::CompleteGraph) {
          r = find_s_ac(p, o.s_max >= 0 ? o.s_max : default_s_max_complete(n), o.threshold);
        } else {
          r = find_s_ac(generate_1d(p, default_layers_1d(p) * (n / 2)), o.threshold);
        }
        csv << key << ',' << fmt(o.threshold) << ',';
        if (r.reached) {
          const double nlogn = n * std::log(static_cast<double>(n));
          csv << r.s_ac << ',' << (arch == Architecture::OneD ? fmt(2.0 * r.s_ac / n) : "") << ','
              << fmt(r.s_ac / nlogn) << ',' << fmt(r.ratio_at_s_ac) << '\n';
        } else {
          csv << ",,,\n";
        }
      } else {
        CollisionEstimate e;
        if (arch == Architecture::CompleteGraph) {
          e = z_complete_graph_exact(p, o.s);
        } else {
          e = z_transfer_matrix(generate_1d(p, o.s));
        }
        csv << key << ',' << o.s << ',' << e.method << ',' << fmt(e.ratio_to_haar) << ',' << fmt(e.log_z) << '\n';
      }
      ++rows;
    }
  }
  if (o.out.empty()) {
    ctx.out << csv.str();
    return kOk;
  }
  {
    std::ofstream f(o.out, o.append ? std::ios::app : std::ios::trunc);
    if (!f) throw PreconditionError("cannot write " + o.out);
    f << csv.str();
  }
  json result{{"path", o.out}, {"rows", rows}, {"skipped", skipped}};
  emit(ctx, "sweep", collect_parameters(sub), result, "");
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Collision probability and anti-concentration of random quantum circuits", "anticonc"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);
  app.option_defaults()->always_capture_default();

  Options o;
  int threads = 0;
  bool verbose = false;
  app.add_option("--threads", threads, "Worker cap (results do not depend on it)")->envname("ANTICONC_THREADS");
  app.add_flag("-v,--verbose", verbose, "Log progress to stderr");

  auto add_params = [&](CLI::App* sub, bool n_required) {
    auto* n = sub->add_option("--n", o.n, "Number of qudits");
    if (n_required) n->required();
    sub->add_option("--q", o.q, "Local dimension")->check(CLI::Range(2, 1 << 20));
  };

  auto* gen = app.add_subcommand("gen", "Write a circuit diagram as JSON");
  gen->add_option("--arch", o.arch, "1d or complete-graph")->required();
  add_params(gen, true);
  gen->add_option("--s", o.s, "Number of gates")->required();
  gen->add_option("--seed", o.seed, "Seed for complete-graph gates");
  gen->add_option("--out", o.out, "Diagram path (stdout if absent)");

  auto* col = app.add_subcommand("collision", "Collision probability Z by one method");
  col->add_option("--method", o.method, "hamming-dp|transfer-matrix|dw-enum|mc-unbiased|mc-biased|oracle-haar")
      ->required()
      ->check(CLI::IsMember({"hamming-dp", "transfer-matrix", "dw-enum", "mc-unbiased", "mc-biased", "oracle-haar"}));
  col->add_option("--diagram", o.diagram, "Diagram JSON");
  col->add_option("--arch", o.arch, "1d or complete-graph");
  add_params(col, false);
  col->add_option("--s", o.s, "Number of gates");
  col->add_option("--samples", o.samples, "Samples or oracle instances")->check(CLI::PositiveNumber);
  col->add_option("--seed", o.seed, "Master seed");
  col->add_option("--series", o.series, "Also write the exact prefix series CSV here");
  col->add_option("--out", o.out, "Record path (stdout if absent)");

  auto* sac = app.add_subcommand("sac", "Smallest size with Z <= threshold * Z_H");
  sac->add_option("--arch", o.arch, "1d or complete-graph")->required();
  add_params(sac, true);
  sac->add_option("--threshold", o.threshold, "Ratio threshold")->check(CLI::PositiveNumber);
  sac->add_option("--s-max", o.s_max, "Largest size scanned");
  sac->add_option("--out", o.out, "Record path (stdout if absent)");

  auto* bnd = app.add_subcommand("bounds", "Evaluate a theorem bound");
  bnd->add_option("--theorem", o.theorem, "gen-ub|gen-lb|1d-ub|1d-lb|cg-ub|cg-lb")
      ->check(CLI::IsMember({"gen-ub", "gen-lb", "1d-ub", "1d-lb", "cg-ub", "cg-lb"}));
  add_params(bnd, false);
  bnd->add_option("--s", o.s, "Circuit size");
  bnd->add_option("--r", o.r, "Regular-connectivity constant (gen-ub)");
  bnd->add_option("--slack", o.slack, "Extra s* / n for gen-ub");
  bnd->add_flag("--table", o.table, "Leading s_AC / (n log n) coefficients for --q");
  bnd->add_option("--out", o.out, "Record path (stdout if absent)");

  auto* trj = app.add_subcommand("trajectories", "Hamming-weight trajectories on the complete graph as CSV");
  add_params(trj, true);
  trj->add_option("--count", o.count, "Number of trajectories")->check(CLI::NonNegativeNumber);
  trj->add_option("--max-steps", o.max_steps, "Steps per trajectory")->check(CLI::NonNegativeNumber);
  trj->add_option("--seed", o.seed, "Master seed");
  trj->add_option("--conditioning", o.conditioning, "none or endpoint-balanced");
  trj->add_option("--start-weight", o.start_weight, "Fixed initial Hamming weight");
  trj->add_flag("--zseries", o.zseries, "Add the exact Z/Z_H at s = t as a last column");
  trj->add_option("--out", o.out, "CSV path (stdout if absent)");

  auto* swp = app.add_subcommand("sweep", "s_AC or Z over a range of n as CSV");
  swp->add_option("--arch", o.arch, "1d or complete-graph")->required();
  swp->add_option("--quantity", o.quantity, "sac or z");
  swp->add_option("--n-from", o.n_from, "First n")->required();
  swp->add_option("--n-to", o.n_to, "Last n (inclusive)")->required();
  swp->add_option("--n-step", o.n_step, "Step in n");
  swp->add_option("--q", o.q, "Local dimension")->check(CLI::Range(2, 1 << 20));
  swp->add_option("--q-list", o.q_list, "Comma-separated local dimensions");
  swp->add_option("--s", o.s, "Circuit size for --quantity z");
  swp->add_option("--threshold", o.threshold, "Ratio threshold")->check(CLI::PositiveNumber);
  swp->add_option("--s-max", o.s_max, "Largest size scanned (complete graph)");
  swp->add_flag("--append", o.append, "Append to --out, skipping points already present");
  swp->add_option("--out", o.out, "CSV path (stdout if absent)");

  auto* rep = app.add_subcommand("replay", "Re-run the command stored in a record");
  rep->add_option("record", o.record, "RunRecord JSON")->required();
  rep->add_option("--out", o.out, "Record path (stdout if absent)");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  set_thread_count(threads);
  Context ctx{out, err, verbose};
  try {
    if (*gen) return cmd_gen(ctx, o, *gen);
    if (*col) return cmd_collision(ctx, o, *col);
    if (*sac) return cmd_sac(ctx, o, *sac);
    if (*bnd) return cmd_bounds(ctx, o, *bnd);
    if (*trj) return cmd_trajectories(ctx, o, *trj);
    if (*swp) return cmd_sweep(ctx, o, *swp);
    if (*rep) {
      std::ifstream in(o.record);
      if (!in) throw PreconditionError("cannot read " + o.record);
      const json record = json::parse(in);
      std::vector<std::string> again = replay_args(record);
      if (!o.out.empty()) {
        again.push_back("--out");
        again.push_back(o.out);
      }
      return run(again, out, err);
    }
  } catch (const UsageError& e) {
    err << "anticonc: usage: " << e.what() << '\n';
    return kUsage;
  } catch (const PreconditionError& e) {
    err << "anticonc: " << e.what() << '\n';
    return kPrecondition;
  } catch (const GuardError& e) {
    err << "anticonc: " << e.what() << '\n';
    return kPrecondition;
  } catch (const json::exception& e) {
    err << "anticonc: " << e.what() << '\n';
    return kPrecondition;
  } catch (const std::exception& e) {
    err << "anticonc: " << e.what() << '\n';
    return kFailure;
  }
  return kUsage;
}

}  // namespace anticonc::cli
