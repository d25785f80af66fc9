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

#ifndef STABNULL_CIRCUIT_HPP
#define STABNULL_CIRCUIT_HPP

#include <complex>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "stabnull/matrix.hpp"

namespace stabnull {

/// Parse failure with 1-based line/column of the offending token.
class CircuitParseError : public std::runtime_error {
 public:
  CircuitParseError(int line, int column, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ": " + message),
        line_(line), column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// Width/size cap violations; the CLI maps these to its resource exit code.
class ResourceCapError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class GateKind {
  I, X, Y, Z, H, S, Sdg, T, Tdg, Cnot, Cz, Swap, Ckz, Diag, Custom
};

const char* gate_kind_name(GateKind kind);

struct Gate {
  GateKind kind = GateKind::I;
  std::vector<int> qubits;
  /// Ckz only: number of controls; the gate acts on control_count + 1 qubits.
  int control_count = 0;
  /// Diag only: one unit-modulus phase per basis state of the touched qubits.
  std::vector<std::complex<double>> phases;
  /// Custom only: explicit unitary, float backend only.
  std::shared_ptr<const MatrixF> custom;

  bool operator==(const Gate& o) const;
};

/// Diagonal gate from per-basis-state phases (length must be a power of two;
/// each phase unit modulus within 1e-10).
Gate diag_from_phases(const std::vector<std::complex<double>>& phases,
                      const std::vector<int>& qubits);

/// Custom dense gate; must be unitary within 1e-10. Float backend only.
Gate custom_gate(const MatrixF& matrix, const std::vector<int>& qubits);

/// exp(iX) = cos(1) I + i sin(1) X on one qubit; the non-Clifford+T unitary
/// used by the state-nullity subadditivity counterexample.
Gate exp_ix_gate(int qubit);

struct Circuit {
  int width = 0;
  std::vector<Gate> gates;
  std::string name;

  bool operator==(const Circuit& o) const {
    return width == o.width && gates == o.gates;
  }

  Circuit& append(Gate g);
  /// Concatenation: this circuit followed by `later`.
  Circuit then(const Circuit& later) const;

  /// True iff every gate is a Clifford gate or T/Tdg; exactly the circuits
  /// for which the T-count soundness relation applies.
  bool is_clifford_plus_t() const;
  /// True iff the exact backend can build the unitary (no Custom gates, all
  /// Diag phases on the omega grid).
  bool exact_compatible() const;
};

/// Parses the circuit text format:
///   qubits <n>
///   <gate> <q...>
/// with gates i,x,y,z,h,s,sdg,t,tdg (1 qubit), cnot,cz,swap (2), ccz (3),
/// ckz <controls> <q...>, diag <2^n re,im pairs>. '#' starts a comment.
Circuit parse_circuit(const std::string& text);

/// Inverse of parse_circuit up to formatting. Throws on Custom gates.
std::string circuit_to_text(const Circuit& c);

/// Number of T plus Tdg gates in the listing (an upper bound on the
/// circuit's T-count).
int count_t_gates(const Circuit& c);

/// C^{n-1}Z . H^{tensor n} . C^{n-1}Z on n qubits, listed temporally.
Circuit special_family(int n);

/// The 7-T Toffoli decomposition on qubits (0,1) controls, 2 target.
Circuit toffoli_7t();
/// CCZ from 7 T gates (the Toffoli decomposition without the basis change).
Circuit ccz_7t();
/// Controlled-S = diag(1,1,1,i) from 3 T gates on 2 qubits.
Circuit controlled_s_via_t();

/// In-place application of one gate to a state vector's amplitudes.
template <class S>
void apply_gate(const Gate& g, StateVector<S>& state);

/// Builds the circuit unitary: gates act temporally (first listed acts first
/// on states), so the matrix is G_l ... G_2 G_1.
template <class S>
Matrix<S> build_unitary(const Circuit& c, int width_cap = kDefaultWidthCap);

template <class S>
StateVector<S> run_circuit(const Circuit& c, const StateVector<S>& input);

// --- implementation ---

namespace detail {

/// Dense matrix of a k-qubit primitive gate in backend S. Ckz/Diag/Custom are
/// handled separately by apply_gate.
template <class S>
Matrix<S> primitive_gate_matrix(GateKind kind) {
  using BT = backend_traits<S>;
  const S zero = BT::zero();
  const S one = BT::one();
  const S im = BT::imag_unit();
  const S r = BT::inv_sqrt2();
  const S w = BT::omega();
  auto fill = [](int n, std::initializer_list<S> vals) {
    Matrix<S> m(n);
    size_t idx = 0;
    for (const S& v : vals) m.data()[idx++] = v;
    return m;
  };
  switch (kind) {
    case GateKind::I:
      return Matrix<S>::identity(1);
    case GateKind::X:
      return fill(1, {zero, one, one, zero});
    case GateKind::Y:
      return fill(1, {zero, -(im * one), im * one, zero});
    case GateKind::Z:
      return fill(1, {one, zero, zero, -one});
    case GateKind::H:
      return fill(1, {r, r, r, -r});
    case GateKind::S:
      return fill(1, {one, zero, zero, im});
    case GateKind::Sdg:
      return fill(1, {one, zero, zero, -(im * one)});
    case GateKind::T:
      return fill(1, {one, zero, zero, w});
    case GateKind::Tdg:
      return fill(1, {one, zero, zero, BT::conj(w)});
    case GateKind::Cnot:
      return fill(2, {one, zero, zero, zero,
                      zero, one, zero, zero,
                      zero, zero, zero, one,
                      zero, zero, one, zero});
    case GateKind::Cz:
      return fill(2, {one, zero, zero, zero,
                      zero, one, zero, zero,
                      zero, zero, one, zero,
                      zero, zero, zero, -one});
    case GateKind::Swap:
      return fill(2, {one, zero, zero, zero,
                      zero, zero, one, zero,
                      zero, one, zero, zero,
                      zero, zero, zero, one});
    default:
      throw std::logic_error("primitive_gate_matrix: not a primitive gate");
  }
}

/// Snaps a unit-modulus phase to omega^e when within 1e-10; nullopt if the
/// phase is off the grid.
std::optional<int> snap_to_omega_grid(std::complex<double> phase);

template <class S>
S diag_phase_scalar(std::complex<double> phase) {
  if constexpr (backend_traits<S>::is_exact) {
    auto e = snap_to_omega_grid(phase);
    if (!e) {
      throw std::invalid_argument(
          "exact backend requires diag phases on the omega grid");
    }
    return ExactScalar::omega_power(*e);
  } else {
    return phase;
  }
}

}  // namespace detail

template <class S>
void apply_gate(const Gate& g, StateVector<S>& state) {
  int n = state.num_qubits();
  size_t dim = state.dim();
  auto bit_of = [n](int q) { return uint32_t{1} << (n - 1 - q); };

  if (g.kind == GateKind::Ckz) {
    uint32_t mask = 0;
    for (int q : g.qubits) mask |= bit_of(q);
    for (size_t x = 0; x < dim; ++x) {
      if ((x & mask) == mask) state.at(x) = -state.at(x);
    }
    return;
  }
  if (g.kind == GateKind::Diag) {
    std::vector<S> phases;
    phases.reserve(g.phases.size());
    for (auto p : g.phases) phases.push_back(detail::diag_phase_scalar<S>(p));
    int k = static_cast<int>(g.qubits.size());
    for (size_t x = 0; x < dim; ++x) {
      size_t sub = 0;
      for (int j = 0; j < k; ++j) {
        if (x & bit_of(g.qubits[j])) sub |= size_t{1} << (k - 1 - j);
      }
      state.at(x) = phases[sub] * state.at(x);
    }
    return;
  }

  Matrix<S> gm = [&]() {
    if (g.kind == GateKind::Custom) {
      if constexpr (backend_traits<S>::is_exact) {
        throw std::invalid_argument(
            "custom gates are restricted to the float backend");
      } else {
        return *g.custom;
      }
    } else {
      return detail::primitive_gate_matrix<S>(g.kind);
    }
  }();

  int k = static_cast<int>(g.qubits.size());
  size_t gdim = size_t{1} << k;
  uint32_t gate_mask = 0;
  for (int q : g.qubits) gate_mask |= bit_of(q);

  std::vector<size_t> offsets(gdim);
  for (size_t j = 0; j < gdim; ++j) {
    size_t off = 0;
    for (int i = 0; i < k; ++i) {
      if (j & (size_t{1} << (k - 1 - i))) off |= bit_of(g.qubits[i]);
    }
    offsets[j] = off;
  }

  std::vector<S> in(gdim, backend_traits<S>::zero());
  for (size_t base = 0; base < dim; ++base) {
    if (base & gate_mask) continue;
    for (size_t j = 0; j < gdim; ++j) in[j] = state.at(base | offsets[j]);
    for (size_t j = 0; j < gdim; ++j) {
      S acc = backend_traits<S>::zero();
      for (size_t m = 0; m < gdim; ++m) {
        const S& x = gm.at(j, m);
        if (backend_traits<S>::is_zero(x, 0.0)) continue;
        acc += x * in[m];
      }
      state.at(base | offsets[j]) = acc;
    }
  }
}

template <class S>
Matrix<S> build_unitary(const Circuit& c, int width_cap) {
  if (c.width > width_cap) {
    throw ResourceCapError("circuit width " + std::to_string(c.width) +
                           " exceeds cap " + std::to_string(width_cap));
  }
  Matrix<S> m = Matrix<S>::identity(c.width);
  size_t d = m.dim();
  StateVector<S> col(c.width);
  for (const Gate& g : c.gates) {
    for (size_t j = 0; j < d; ++j) {
      for (size_t r = 0; r < d; ++r) col.at(r) = m.at(r, j);
      apply_gate(g, col);
      for (size_t r = 0; r < d; ++r) m.at(r, j) = col.at(r);
    }
  }
  return m;
}

template <class S>
StateVector<S> run_circuit(const Circuit& c, const StateVector<S>& input) {
  if (input.num_qubits() != c.width) {
    throw std::invalid_argument("run_circuit: state width mismatch");
  }
  StateVector<S> state = input;
  for (const Gate& g : c.gates) apply_gate(g, state);
  return state;
}

}  // namespace stabnull

#endif  // STABNULL_CIRCUIT_HPP
