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

#include "stabnull/circuit.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <set>
#include <sstream>

namespace stabnull {

namespace {

struct Token {
  std::string text;
  int column;  // 1-based
};

std::vector<Token> tokenize(const std::string& line) {
  std::vector<Token> out;
  size_t i = 0;
  while (i < line.size()) {
    if (line[i] == '#') break;
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])) &&
           line[i] != '#') {
      ++i;
    }
    out.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
  }
  return out;
}

int parse_int(const Token& tok, int line_no, const char* what) {
  try {
    size_t pos = 0;
    int v = std::stoi(tok.text, &pos);
    if (pos != tok.text.size()) throw std::invalid_argument("");
    return v;
  } catch (...) {
    throw CircuitParseError(line_no, tok.column,
                            std::string("expected ") + what + ", got '" +
                                tok.text + "'");
  }
}

void check_qubits(const std::vector<int>& qs, int width, int line_no,
                  const std::vector<Token>& toks, size_t first_tok) {
  std::set<int> seen;
  for (size_t j = 0; j < qs.size(); ++j) {
    const Token& tok = toks[first_tok + j];
    if (qs[j] < 0 || qs[j] >= width) {
      throw CircuitParseError(line_no, tok.column,
                              "qubit index " + std::to_string(qs[j]) +
                                  " out of range for width " +
                                  std::to_string(width));
    }
    if (!seen.insert(qs[j]).second) {
      throw CircuitParseError(line_no, tok.column,
                              "repeated qubit index " + std::to_string(qs[j]));
    }
  }
}

struct GateSpec {
  GateKind kind;
  int arity;  // fixed qubit count, or -1 for variable
};

std::optional<GateSpec> lookup_gate(const std::string& name) {
  if (name == "i") return GateSpec{GateKind::I, 1};
  if (name == "x") return GateSpec{GateKind::X, 1};
  if (name == "y") return GateSpec{GateKind::Y, 1};
  if (name == "z") return GateSpec{GateKind::Z, 1};
  if (name == "h") return GateSpec{GateKind::H, 1};
  if (name == "s") return GateSpec{GateKind::S, 1};
  if (name == "sdg") return GateSpec{GateKind::Sdg, 1};
  if (name == "t") return GateSpec{GateKind::T, 1};
  if (name == "tdg") return GateSpec{GateKind::Tdg, 1};
  if (name == "cnot") return GateSpec{GateKind::Cnot, 2};
  if (name == "cz") return GateSpec{GateKind::Cz, 2};
  if (name == "swap") return GateSpec{GateKind::Swap, 2};
  if (name == "ccz") return GateSpec{GateKind::Ckz, 3};
  if (name == "ckz") return GateSpec{GateKind::Ckz, -1};
  if (name == "diag") return GateSpec{GateKind::Diag, -1};
  return std::nullopt;
}

std::complex<double> parse_phase_pair(const Token& tok, int line_no) {
  size_t comma = tok.text.find(',');
  if (comma == std::string::npos) {
    throw CircuitParseError(line_no, tok.column,
                            "expected re,im pair, got '" + tok.text + "'");
  }
  try {
    size_t p1 = 0, p2 = 0;
    std::string res = tok.text.substr(0, comma);
    std::string ims = tok.text.substr(comma + 1);
    double re = std::stod(res, &p1);
    double im = std::stod(ims, &p2);
    if (p1 != res.size() || p2 != ims.size()) throw std::invalid_argument("");
    return {re, im};
  } catch (...) {
    throw CircuitParseError(line_no, tok.column,
                            "malformed re,im pair '" + tok.text + "'");
  }
}

}  // namespace

const char* gate_kind_name(GateKind kind) {
  switch (kind) {
    case GateKind::I: return "i";
    case GateKind::X: return "x";
    case GateKind::Y: return "y";
    case GateKind::Z: return "z";
    case GateKind::H: return "h";
    case GateKind::S: return "s";
    case GateKind::Sdg: return "sdg";
    case GateKind::T: return "t";
    case GateKind::Tdg: return "tdg";
    case GateKind::Cnot: return "cnot";
    case GateKind::Cz: return "cz";
    case GateKind::Swap: return "swap";
    case GateKind::Ckz: return "ckz";
    case GateKind::Diag: return "diag";
    case GateKind::Custom: return "custom";
  }
  return "?";
}

bool Gate::operator==(const Gate& o) const {
  if (kind != o.kind || qubits != o.qubits || control_count != o.control_count ||
      phases != o.phases) {
    return false;
  }
  if ((custom == nullptr) != (o.custom == nullptr)) return false;
  if (custom && !approx_equal(*custom, *o.custom, 0.0)) return false;
  return true;
}

Gate diag_from_phases(const std::vector<std::complex<double>>& phases,
                      const std::vector<int>& qubits) {
  size_t expect = size_t{1} << qubits.size();
  if (phases.size() != expect) {
    throw std::invalid_argument("diag_from_phases: need 2^k phases");
  }
  for (auto p : phases) {
    if (std::abs(std::abs(p) - 1.0) > 1e-10) {
      throw std::invalid_argument("diag_from_phases: non-unit phase");
    }
  }
  Gate g;
  g.kind = GateKind::Diag;
  g.qubits = qubits;
  g.phases = phases;
  return g;
}

Gate custom_gate(const MatrixF& matrix, const std::vector<int>& qubits) {
  if (matrix.dim() != (size_t{1} << qubits.size())) {
    throw std::invalid_argument("custom_gate: matrix/qubit size mismatch");
  }
  if (!is_unitary(matrix, 1e-10)) {
    throw std::invalid_argument("custom_gate: matrix is not unitary");
  }
  Gate g;
  g.kind = GateKind::Custom;
  g.qubits = qubits;
  g.custom = std::make_shared<MatrixF>(matrix);
  return g;
}

Gate exp_ix_gate(int qubit) {
  MatrixF m(1);
  double c = std::cos(1.0), s = std::sin(1.0);
  m.at(0, 0) = {c, 0.0};
  m.at(0, 1) = {0.0, s};
  m.at(1, 0) = {0.0, s};
  m.at(1, 1) = {c, 0.0};
  return custom_gate(m, {qubit});
}

Circuit& Circuit::append(Gate g) {
  gates.push_back(std::move(g));
  return *this;
}

Circuit Circuit::then(const Circuit& later) const {
  if (later.width != width) {
    throw std::invalid_argument("Circuit::then: width mismatch");
  }
  Circuit out = *this;
  out.gates.insert(out.gates.end(), later.gates.begin(), later.gates.end());
  return out;
}

bool Circuit::is_clifford_plus_t() const {
  for (const Gate& g : gates) {
    switch (g.kind) {
      case GateKind::T:
      case GateKind::Tdg:
      case GateKind::I:
      case GateKind::X:
      case GateKind::Y:
      case GateKind::Z:
      case GateKind::H:
      case GateKind::S:
      case GateKind::Sdg:
      case GateKind::Cnot:
      case GateKind::Cz:
      case GateKind::Swap:
        break;
      case GateKind::Ckz:
        if (g.control_count > 1) return false;
        break;
      default:
        return false;
    }
  }
  return true;
}

bool Circuit::exact_compatible() const {
  for (const Gate& g : gates) {
    if (g.kind == GateKind::Custom) return false;
    if (g.kind == GateKind::Diag) {
      for (auto p : g.phases) {
        if (!detail::snap_to_omega_grid(p)) return false;
      }
    }
  }
  return true;
}

namespace detail {

std::optional<int> snap_to_omega_grid(std::complex<double> phase) {
  constexpr double pi = std::numbers::pi;
  for (int e = 0; e < 8; ++e) {
    std::complex<double> w = std::polar(1.0, pi * e / 4.0);
    if (std::abs(phase - w) <= 1e-10) return e;
  }
  return std::nullopt;
}

}  // namespace detail

Circuit parse_circuit(const std::string& text) {
  Circuit c;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  bool have_header = false;
  while (std::getline(in, line)) {
    ++line_no;
    auto toks = tokenize(line);
    if (toks.empty()) continue;
    if (!have_header) {
      if (toks[0].text != "qubits") {
        throw CircuitParseError(line_no, toks[0].column,
                                "missing 'qubits <n>' header");
      }
      if (toks.size() != 2) {
        throw CircuitParseError(line_no, toks[0].column,
                                "header must be exactly 'qubits <n>'");
      }
      int n = parse_int(toks[1], line_no, "qubit count");
      if (n <= 0) {
        throw CircuitParseError(line_no, toks[1].column,
                                "qubit count must be positive");
      }
      if (n > kMaxDenseQubits) {
        throw CircuitParseError(line_no, toks[1].column,
                                "qubit count exceeds supported maximum " +
                                    std::to_string(kMaxDenseQubits));
      }
      c.width = n;
      have_header = true;
      continue;
    }
    auto spec = lookup_gate(toks[0].text);
    if (!spec) {
      throw CircuitParseError(line_no, toks[0].column,
                              "unknown gate name '" + toks[0].text + "'");
    }
    Gate g;
    g.kind = spec->kind;
    if (toks[0].text == "ccz") {
      g.control_count = 2;
    }
    if (spec->kind == GateKind::Diag) {
      size_t expect = size_t{1} << c.width;
      if (toks.size() != 1 + expect) {
        throw CircuitParseError(line_no, toks[0].column,
                                "diag needs " + std::to_string(expect) +
                                    " re,im pairs for width " +
                                    std::to_string(c.width));
      }
      for (size_t j = 1; j < toks.size(); ++j) {
        auto p = parse_phase_pair(toks[j], line_no);
        if (std::abs(std::abs(p) - 1.0) > 1e-10) {
          throw CircuitParseError(line_no, toks[j].column,
                                  "non-unit diag phase '" + toks[j].text + "'");
        }
        g.phases.push_back(p);
      }
      for (int q = 0; q < c.width; ++q) g.qubits.push_back(q);
      c.gates.push_back(std::move(g));
      continue;
    }
    size_t first_q = 1;
    int arity = spec->arity;
    if (toks[0].text == "ckz") {
      if (toks.size() < 2) {
        throw CircuitParseError(line_no, toks[0].column,
                                "ckz needs a control count");
      }
      g.control_count = parse_int(toks[1], line_no, "control count");
      if (g.control_count < 0 || g.control_count >= c.width) {
        throw CircuitParseError(line_no, toks[1].column,
                                "control count out of range");
      }
      arity = g.control_count + 1;
      first_q = 2;
    }
    if (toks.size() != first_q + static_cast<size_t>(arity)) {
      throw CircuitParseError(line_no, toks[0].column,
                              std::string("gate '") + toks[0].text +
                                  "' expects " + std::to_string(arity) +
                                  " qubit indices");
    }
    for (size_t j = first_q; j < toks.size(); ++j) {
      g.qubits.push_back(parse_int(toks[j], line_no, "qubit index"));
    }
    check_qubits(g.qubits, c.width, line_no, toks, first_q);
    c.gates.push_back(std::move(g));
  }
  if (!have_header) {
    throw CircuitParseError(line_no ? line_no : 1, 1,
                            "missing 'qubits <n>' header");
  }
  return c;
}

std::string circuit_to_text(const Circuit& c) {
  std::ostringstream os;
  os << "qubits " << c.width << "\n";
  for (const Gate& g : c.gates) {
    if (g.kind == GateKind::Custom) {
      throw std::invalid_argument("circuit_to_text: custom gates have no text form");
    }
    if (g.kind == GateKind::Diag) {
      os << "diag";
      char buf[64];
      for (auto p : g.phases) {
        std::snprintf(buf, sizeof(buf), " %.17g,%.17g", p.real(), p.imag());
        os << buf;
      }
      os << "\n";
      continue;
    }
    os << gate_kind_name(g.kind);
    if (g.kind == GateKind::Ckz) os << " " << g.control_count;
    for (int q : g.qubits) os << " " << q;
    os << "\n";
  }
  return os.str();
}

int count_t_gates(const Circuit& c) {
  int count = 0;
  for (const Gate& g : c.gates) {
    if (g.kind == GateKind::T || g.kind == GateKind::Tdg) ++count;
  }
  return count;
}

Circuit special_family(int n) {
  if (n < 1) throw std::invalid_argument("special_family: n must be >= 1");
  Circuit c;
  c.width = n;
  c.name = "ckz_h_ckz_" + std::to_string(n);
  auto ckz_all = [n]() {
    Gate g;
    if (n == 1) {
      g.kind = GateKind::Z;
      g.qubits = {0};
      return g;
    }
    g.kind = GateKind::Ckz;
    g.control_count = n - 1;
    for (int q = 0; q < n; ++q) g.qubits.push_back(q);
    return g;
  };
  c.append(ckz_all());
  for (int q = 0; q < n; ++q) {
    Gate h;
    h.kind = GateKind::H;
    h.qubits = {q};
    c.append(std::move(h));
  }
  c.append(ckz_all());
  return c;
}

namespace {

Gate g1(GateKind kind, int q) {
  Gate g;
  g.kind = kind;
  g.qubits = {q};
  return g;
}

Gate g2(GateKind kind, int a, int b) {
  Gate g;
  g.kind = kind;
  g.qubits = {a, b};
  return g;
}

}  // namespace

Circuit ccz_7t() {
  Circuit c;
  c.width = 3;
  c.name = "ccz_7t";
  c.append(g2(GateKind::Cnot, 1, 2));
  c.append(g1(GateKind::Tdg, 2));
  c.append(g2(GateKind::Cnot, 0, 2));
  c.append(g1(GateKind::T, 2));
  c.append(g2(GateKind::Cnot, 1, 2));
  c.append(g1(GateKind::Tdg, 2));
  c.append(g2(GateKind::Cnot, 0, 2));
  c.append(g1(GateKind::T, 1));
  c.append(g1(GateKind::T, 2));
  c.append(g2(GateKind::Cnot, 0, 1));
  c.append(g1(GateKind::T, 0));
  c.append(g1(GateKind::Tdg, 1));
  c.append(g2(GateKind::Cnot, 0, 1));
  return c;
}

Circuit toffoli_7t() {
  Circuit c;
  c.width = 3;
  c.name = "toffoli_7t";
  c.append(g1(GateKind::H, 2));
  Circuit core = ccz_7t();
  c.gates.insert(c.gates.end(), core.gates.begin(), core.gates.end());
  c.append(g1(GateKind::H, 2));
  return c;
}

Circuit controlled_s_via_t() {
  Circuit c;
  c.width = 2;
  c.name = "cs_via_t";
  c.append(g1(GateKind::T, 0));
  c.append(g1(GateKind::T, 1));
  c.append(g2(GateKind::Cnot, 0, 1));
  c.append(g1(GateKind::Tdg, 1));
  c.append(g2(GateKind::Cnot, 0, 1));
  return c;
}

}  // namespace stabnull
