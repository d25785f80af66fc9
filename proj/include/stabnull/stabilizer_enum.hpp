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

#ifndef STABNULL_STABILIZER_ENUM_HPP
#define STABNULL_STABILIZER_ENUM_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "stabnull/matrix.hpp"
#include "stabnull/nullity.hpp"

namespace stabnull {

/// All n-qubit stabilizer states up to global phase, from the breadth-first
/// orbit of |0...0> under {H_i, S_i, CNOT_ij}.
struct StabilizerStateSet {
  int n = 0;
  std::vector<StateF> states;
  /// BFS depth at which the orbit closed.
  int orbit_depth = 0;
};

/// Enumerates the orbit; capped at n <= 4 (36720 states). States are
/// deduplicated by rotating the first nonzero amplitude to positive real and
/// rounding to the 2^-20 grid, which is collision-free for stabilizer
/// amplitudes at these sizes.
StabilizerStateSet enumerate_stabilizer_states(int n);

struct StateMaxResult {
  int max_nullity = 0;
  size_t argmax_index = 0;
};

/// max over the set of v_s(U |psi>), with an attaining state.
StateMaxResult max_state_nullity(const MatrixF& U,
                                 const StabilizerStateSet& set);

/// |Phi> = 2^{-n/2} sum_x |x>|x> on 2n qubits.
template <class S>
StateVector<S> maximally_entangled(int n) {
  if (2 * n > 2 * kMaxDenseQubits) {
    throw ResourceCapError("maximally_entangled: 2n exceeds cap");
  }
  StateVector<S> v(2 * n);
  S amp = backend_traits<S>::one();
  for (int j = 0; j < n; ++j) amp = amp * backend_traits<S>::inv_sqrt2();
  size_t d = size_t{1} << n;
  for (size_t x = 0; x < d; ++x) v.at(x * d + x) = amp;
  return v;
}

/// (I_{2^d} tensor U) |ancilla>, applied blockwise on the trailing n qubits.
template <class S>
StateVector<S> apply_on_lower_qubits(const Matrix<S>& U,
                                     const StateVector<S>& state) {
  int n = U.num_qubits();
  int total = state.num_qubits();
  if (total < n) {
    throw std::invalid_argument("apply_on_lower_qubits: state too small");
  }
  size_t block = size_t{1} << n;
  StateVector<S> out(total);
  for (size_t base = 0; base < state.dim(); base += block) {
    for (size_t r = 0; r < block; ++r) {
      S acc = backend_traits<S>::zero();
      for (size_t c = 0; c < block; ++c) {
        const S& x = U.at(r, c);
        if (backend_traits<S>::is_zero(x, 0.0)) continue;
        acc += x * state.at(base + c);
      }
      out.at(base + r) = acc;
    }
  }
  return out;
}

/// v_s((I_{2^d} tensor U) |ancilla>) for a (d+n)-qubit ancilla state.
template <class S>
int aux_nullity(const Matrix<S>& U, const StateVector<S>& ancilla) {
  if (ancilla.num_qubits() < U.num_qubits()) {
    throw std::invalid_argument("aux_nullity: ancilla smaller than U");
  }
  if (ancilla.num_qubits() > 2 * kDefaultWidthCap) {
    throw ResourceCapError("aux_nullity: ancilla exceeds cap");
  }
  return compute_s_state(apply_on_lower_qubits(U, ancilla)).nullity;
}

/// Samples stabilizer ancillas on d and d2 auxiliary qubits (d >= d2) and
/// checks that the best d-qubit value dominates the best d2-qubit value;
/// also checks the padding identity v_s(|0...0> tensor phi) == v_s(phi) on
/// each sample. Exhaustive over the enumerated set when d + n <= 4,
/// otherwise `samples` seeded random Clifford preparations.
bool padding_monotonicity_check(const MatrixF& U, int d, int d2,
                                uint64_t seed, int samples = 200);

}  // namespace stabnull

#endif  // STABNULL_STABILIZER_ENUM_HPP
