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

#include "stabnull/random_circuits.hpp"

namespace stabnull {

namespace {

Gate pick_gate(int n, std::mt19937_64& rng, bool with_t) {
  // H and S per qubit, CNOT per ordered pair, T/Tdg per qubit when enabled.
  std::uniform_int_distribution<int> qubit(0, n - 1);
  int kinds = with_t ? 5 : 3;
  std::uniform_int_distribution<int> kind(0, kinds - 1);
  Gate g;
  switch (kind(rng)) {
    case 0:
      g.kind = GateKind::H;
      g.qubits = {qubit(rng)};
      break;
    case 1:
      g.kind = GateKind::S;
      g.qubits = {qubit(rng)};
      break;
    case 2: {
      if (n == 1) {
        g.kind = GateKind::H;
        g.qubits = {0};
        break;
      }
      int c = qubit(rng);
      int t = qubit(rng);
      while (t == c) t = qubit(rng);
      g.kind = GateKind::Cnot;
      g.qubits = {c, t};
      break;
    }
    case 3:
      g.kind = GateKind::T;
      g.qubits = {qubit(rng)};
      break;
    default:
      g.kind = GateKind::Tdg;
      g.qubits = {qubit(rng)};
      break;
  }
  return g;
}

}  // namespace

Circuit random_clifford_circuit(int n, int gate_count, std::mt19937_64& rng) {
  Circuit c;
  c.width = n;
  for (int j = 0; j < gate_count; ++j) c.append(pick_gate(n, rng, false));
  return c;
}

Circuit random_clifford_t_circuit(int n, int gate_count,
                                  std::mt19937_64& rng) {
  Circuit c;
  c.width = n;
  for (int j = 0; j < gate_count; ++j) c.append(pick_gate(n, rng, true));
  return c;
}

PauliLabel random_label(int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<uint32_t> dist(
      0, (uint32_t{1} << (2 * n)) - 1);
  return PauliLabel::decode(n, dist(rng));
}

}  // namespace stabnull
