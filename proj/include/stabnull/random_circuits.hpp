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

#ifndef STABNULL_RANDOM_CIRCUITS_HPP
#define STABNULL_RANDOM_CIRCUITS_HPP

#include <random>

#include "stabnull/circuit.hpp"

namespace stabnull {

/// Uniform word over {H, S, CNOT} generators; its unitary is a (generally
/// non-uniform) random Clifford, which is all the checks need.
Circuit random_clifford_circuit(int n, int gate_count, std::mt19937_64& rng);

/// Like random_clifford_circuit but mixing in T/Tdg gates.
Circuit random_clifford_t_circuit(int n, int gate_count, std::mt19937_64& rng);

/// Random label drawn uniformly from the 4^n quotient group.
PauliLabel random_label(int n, std::mt19937_64& rng);

}  // namespace stabnull

#endif  // STABNULL_RANDOM_CIRCUITS_HPP
