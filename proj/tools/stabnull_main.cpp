// Copyright 2026 The stabnull Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include "stabnull/circuit.hpp"
#include "stabnull/nullity.hpp"
#include "stabnull/random_circuits.hpp"
#include "stabnull/report_json.hpp"
#include "stabnull/stabilizer_enum.hpp"
#include "stabnull/theorem_suite.hpp"

namespace {

using namespace stabnull;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitParseError = 2;
constexpr int kExitResource = 3;

struct CommonOpts {
  std::string file;
  std::string backend = "auto";
  std::string format = "table";
  uint64_t seed = 1;
  int threads = 1;
  int max_qubits = kDefaultWidthCap;
};

void add_common(CLI::App* cmd, CommonOpts& opts, bool needs_file) {
  if (needs_file) {
    cmd->add_option("--file", opts.file, "circuit file")
        ->envname("STABNULL_FILE")
        ->required();
    cmd->add_option("--backend", opts.backend,
                    "scalar backend: exact|float|auto")
        ->envname("STABNULL_BACKEND")
        ->check(CLI::IsMember({"exact", "float", "auto"}));
    cmd->add_option("--max-qubits", opts.max_qubits, "dense width cap override")
        ->envname("STABNULL_MAX_QUBITS");
  }
  cmd->add_option("--format", opts.format, "output format: table|json")
      ->envname("STABNULL_FORMAT")
      ->check(CLI::IsMember({"table", "json"}));
  cmd->add_option("--seed", opts.seed, "RNG seed")->envname("STABNULL_SEED");
  cmd->add_option("--threads", opts.threads, "worker thread count")
      ->envname("STABNULL_THREADS");
}

Circuit load_circuit(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw CircuitParseError(0, 0, "cannot open file '" + path + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  Circuit c = parse_circuit(buf.str());
  c.name = path;
  return c;
}

/// auto backend: exact whenever every gate is representable in the ring.
bool use_exact(const CommonOpts& opts, const Circuit& c) {
  if (opts.backend == "exact") {
    if (!c.exact_compatible()) {
      throw std::invalid_argument(
          "circuit contains gates the exact backend cannot represent");
    }
    return true;
  }
  if (opts.backend == "float") return false;
  return c.exact_compatible();
}

void print_report_table(const NullityReport& rep, std::ostream& os) {
  os << "n:          " << rep.n << "\n";
  os << "backend:    " << rep.backend << "\n";
  os << "s:          " << rep.s_value << "\n";
  os << "nullity:    " << rep.nullity << "\n";
  size_t shown = 0;
  if (rep.is_state) {
    for (const auto& e : rep.state_entries) {
      if (shown++ >= 32) {
        os << "  ... (" << rep.state_entries.size() - 32 << " more)\n";
        break;
      }
      os << "  " << (e.sign > 0 ? "+" : "-") << e.u.str() << "\n";
    }
  } else {
    for (const auto& e : rep.entries) {
      if (shown++ >= 32) {
        os << "  ... (" << rep.entries.size() - 32 << " more)\n";
        break;
      }
      os << "  " << e.v.str() << " -> " << (e.sign > 0 ? "+" : "-")
         << e.u.str() << "\n";
    }
  }
  os << "elapsed_ms: " << rep.elapsed_ms << "\n";
}

int cmd_gate(const CommonOpts& opts) {
  Circuit c = load_circuit(opts.file);
  bool exact = use_exact(opts, c);
  TCountBound bound =
      exact ? t_count_lower_bound<ExactScalar>(c, opts.max_qubits, opts.threads)
            : t_count_lower_bound<std::complex<double>>(c, opts.max_qubits,
                                                        opts.threads);
  bool clifford =
      bound.report.s_value == (uint64_t{1} << (2 * bound.report.n));
  if (opts.format == "json") {
    json j = report_to_json(bound.report);
    j["t_count_lower_bound"] = bound.bound;
    j["t_gates_in_circuit"] = bound.t_gates_used;
    j["clifford"] = clifford;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "circuit:    " << c.name << " (" << c.gates.size()
              << " gates)\n";
    print_report_table(bound.report, std::cout);
    std::cout << "t_count_lower_bound >= " << bound.bound << "\n";
    std::cout << "t_gates_in_circuit:  " << bound.t_gates_used << "\n";
    std::cout << "clifford:   " << (clifford ? "yes" : "no") << "\n";
  }
  return kExitOk;
}

StateVector<std::complex<double>> parse_init_state_f(const std::string& init,
                                                     int width) {
  if (static_cast<int>(init.size()) != width) {
    throw std::invalid_argument("--init length must equal circuit width");
  }
  StateF state(width);
  state.at(0) = {1.0, 0.0};
  // Product state over {0,1,+,-} per qubit, built by amplitude assembly.
  size_t dim = state.dim();
  std::vector<std::complex<double>> amps(dim, {1.0, 0.0});
  double inv_sqrt2 = 0.7071067811865475244008443621048490393;
  for (size_t x = 0; x < dim; ++x) {
    std::complex<double> a = {1.0, 0.0};
    for (int q = 0; q < width; ++q) {
      int bit = (x >> (width - 1 - q)) & 1;
      switch (init[q]) {
        case '0':
          if (bit) a = 0.0;
          break;
        case '1':
          if (!bit) a = 0.0;
          break;
        case '+':
          a *= inv_sqrt2;
          break;
        case '-':
          a *= bit ? -inv_sqrt2 : inv_sqrt2;
          break;
        default:
          throw std::invalid_argument(
              "--init characters must be from {0,1,+,-}");
      }
    }
    amps[x] = a;
  }
  for (size_t x = 0; x < dim; ++x) state.at(x) = amps[x];
  return state;
}

StateVector<ExactScalar> parse_init_state_x(const std::string& init,
                                            int width) {
  if (static_cast<int>(init.size()) != width) {
    throw std::invalid_argument("--init length must equal circuit width");
  }
  StateX state(width);
  size_t dim = state.dim();
  for (size_t x = 0; x < dim; ++x) {
    ExactScalar a(1);
    for (int q = 0; q < width; ++q) {
      int bit = (x >> (width - 1 - q)) & 1;
      switch (init[q]) {
        case '0':
          if (bit) a = ExactScalar();
          break;
        case '1':
          if (!bit) a = ExactScalar();
          break;
        case '+':
          a = a * ExactScalar::inv_sqrt2_pow(1);
          break;
        case '-':
          a = a * (bit ? -ExactScalar::inv_sqrt2_pow(1)
                       : ExactScalar::inv_sqrt2_pow(1));
          break;
        default:
          throw std::invalid_argument(
              "--init characters must be from {0,1,+,-}");
      }
    }
    state.at(x) = a;
  }
  return state;
}

/// Minimal generating set of a stab group: greedily extend a GF(2) span.
std::vector<PhasedPauli> stab_generators(const std::vector<PhasedPauli>& group) {
  std::vector<PhasedPauli> gens;
  if (group.empty()) return gens;
  int n = group.front().num_qubits();
  LabelSubgroup span(n);
  for (const auto& p : group) {
    if (p.label().is_identity()) continue;
    if (!span.contains(p.label())) {
      gens.push_back(p);
      std::vector<PauliLabel> labels;
      for (const auto& g : gens) labels.push_back(g.label());
      span = LabelSubgroup::span(n, labels);
    }
  }
  return gens;
}

int cmd_state(const CommonOpts& opts, const std::string& init) {
  Circuit c = load_circuit(opts.file);
  if (c.width > opts.max_qubits) {
    throw ResourceCapError("circuit width exceeds cap");
  }
  bool exact = use_exact(opts, c);
  std::string init_str =
      init.empty() ? std::string(static_cast<size_t>(c.width), '0') : init;
  NullityReport rep;
  std::vector<PhasedPauli> stab;
  if (exact) {
    StateX psi = run_circuit(c, parse_init_state_x(init_str, c.width));
    rep = compute_s_state(psi);
    stab = stab_group(psi);
  } else {
    StateF psi = run_circuit(c, parse_init_state_f(init_str, c.width));
    rep = compute_s_state(psi);
    stab = stab_group(psi);
  }
  auto gens = stab_generators(stab);
  if (opts.format == "json") {
    json j = report_to_json(rep);
    json jg = json::array();
    for (const auto& g : gens) jg.push_back(g.str());
    j["stab_generators"] = jg;
    j["init"] = init_str;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "circuit:    " << c.name << "\n";
    std::cout << "init:       |" << init_str << ">\n";
    print_report_table(rep, std::cout);
    std::cout << "stab_generators:";
    if (gens.empty()) std::cout << " (identity only)";
    for (const auto& g : gens) std::cout << " " << g.str();
    std::cout << "\n";
  }
  return kExitOk;
}

int cmd_compare(const CommonOpts& opts) {
  Circuit c = load_circuit(opts.file);
  if (c.width > opts.max_qubits || 2 * c.width > 2 * kDefaultWidthCap) {
    throw ResourceCapError("compare needs width and 2*width within caps");
  }
  MatrixF U = build_unitary<std::complex<double>>(c, opts.max_qubits);
  int v = compute_s_unitary(U, opts.threads).nullity;

  bool enumerated = c.width <= 3;
  int state_max = -1;
  if (enumerated) {
    StabilizerStateSet set = enumerate_stabilizer_states(c.width);
    state_max = max_state_nullity(U, set).max_nullity;
  } else {
    std::mt19937_64 rng(opts.seed);
    for (int j = 0; j < 200; ++j) {
      Circuit prep = random_clifford_circuit(c.width, 8 * c.width, rng);
      StateF psi = run_circuit(prep, StateF::basis(c.width, 0));
      state_max = std::max(state_max,
                           compute_s_state(U * psi).nullity);
    }
  }
  int aux = aux_nullity(U, maximally_entangled<std::complex<double>>(c.width));
  bool strict = v > state_max;
  if (opts.format == "json") {
    json j{{"n", c.width},
           {"nullity", v},
           {"state_max", state_max},
           {"state_max_enumerated", enumerated},
           {"aux_nullity_max_entangled", aux},
           {"strict_separation", strict}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "circuit:              " << c.name << "\n";
    std::cout << "v(U):                 " << v << "\n";
    std::cout << "state nullity max:    " << state_max
              << (enumerated ? " (full enumeration)" : " (sampled)") << "\n";
    std::cout << "aux nullity with Phi: " << aux << "\n";
    std::cout << "strict separation:    " << (strict ? "yes" : "no") << "\n";
  }
  return kExitOk;
}

int cmd_verify(const CommonOpts& opts, const std::string& scale_str,
               bool inject_failure) {
  Scale scale = scale_from_string(scale_str);
  auto results = run_all(opts.seed, scale, opts.threads);
  if (inject_failure) {
    CheckResult canary;
    canary.name = "injected_canary";
    canary.passed = false;
    canary.seed = opts.seed;
    canary.witness = "intentional failure injected via --inject-failure";
    results.push_back(canary);
  }
  size_t passed = 0;
  for (const auto& r : results) passed += r.passed ? 1 : 0;
  if (opts.format == "json") {
    std::cout << check_results_to_json(results).dump(2) << "\n";
  } else {
    for (const auto& r : results) {
      std::cout << (r.passed ? "pass  " : "FAIL  ") << r.name;
      if (!r.passed) std::cout << "\n      witness: " << r.witness
                               << "\n      seed: " << r.seed;
      std::cout << "\n";
    }
    std::cout << "summary: " << passed << "/" << results.size()
              << " passed (seed " << opts.seed << ", scale " << scale_str
              << ")\n";
  }
  return passed == results.size() ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"stabilizer nullity and T-count lower bounds for Clifford+T "
               "circuits"};
  app.require_subcommand(1);

  CommonOpts gate_opts, state_opts, compare_opts, verify_opts;
  std::string init_state;
  std::string scale_str = "standard";
  bool inject_failure = false;

  CLI::App* gate = app.add_subcommand(
      "gate", "unitary stabilizer nullity and T-count lower bound");
  add_common(gate, gate_opts, true);

  CLI::App* state = app.add_subcommand(
      "state", "state stabilizer nullity of a circuit output state");
  add_common(state, state_opts, true);
  state->add_option("--init", init_state,
                    "initial product state over {0,1,+,-}, default all 0");

  CLI::App* compare = app.add_subcommand(
      "compare", "unitary vs state nullity, with ancilla attainment");
  add_common(compare, compare_opts, true);

  CLI::App* verify =
      app.add_subcommand("verify", "run the theorem/property battery");
  add_common(verify, verify_opts, false);
  verify->add_option("--scale", scale_str, "smoke|standard|deep")
      ->envname("STABNULL_SCALE")
      ->check(CLI::IsMember({"smoke", "standard", "deep"}));
  verify->add_flag("--inject-failure", inject_failure,
                   "append an always-failing canary check (for testing the "
                   "failure path)")
      ->group("");  // hidden

  CLI11_PARSE(app, argc, argv);

  try {
    if (gate->parsed()) return cmd_gate(gate_opts);
    if (state->parsed()) return cmd_state(state_opts, init_state);
    if (compare->parsed()) return cmd_compare(compare_opts);
    if (verify->parsed())
      return cmd_verify(verify_opts, scale_str, inject_failure);
  } catch (const CircuitParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParseError;
  } catch (const ResourceCapError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kExitResource;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCheckFailed;
  }
  return kExitOk;
}
