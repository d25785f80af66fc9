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

#include "stabnull/stabilizer_enum.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <deque>
#include <unordered_set>

#include "stabnull/random_circuits.hpp"

namespace stabnull {

namespace {

constexpr double kAmpEps = 1e-9;
constexpr double kGrid = 1048576.0;  // 2^20

/// Global-phase canonical form: rotate the first nonzero amplitude to
/// positive real, then quantize to the 2^-20 grid.
std::string canonical_key(const StateF& v) {
  size_t first = v.dim();
  for (size_t x = 0; x < v.dim(); ++x) {
    if (std::abs(v.at(x)) > kAmpEps) {
      first = x;
      break;
    }
  }
  std::complex<double> rot(1.0, 0.0);
  if (first != v.dim()) {
    rot = std::conj(v.at(first)) / std::abs(v.at(first));
  }
  std::string key;
  key.reserve(v.dim() * 8);
  for (size_t x = 0; x < v.dim(); ++x) {
    std::complex<double> a = v.at(x) * rot;
    int32_t re = static_cast<int32_t>(std::lround(a.real() * kGrid));
    int32_t im = static_cast<int32_t>(std::lround(a.imag() * kGrid));
    char buf[8];
    std::memcpy(buf, &re, 4);
    std::memcpy(buf + 4, &im, 4);
    key.append(buf, 8);
  }
  return key;
}

std::vector<Gate> orbit_generators(int n) {
  std::vector<Gate> gens;
  for (int q = 0; q < n; ++q) {
    Gate h;
    h.kind = GateKind::H;
    h.qubits = {q};
    gens.push_back(h);
    Gate s;
    s.kind = GateKind::S;
    s.qubits = {q};
    gens.push_back(s);
  }
  for (int c = 0; c < n; ++c) {
    for (int t = 0; t < n; ++t) {
      if (c == t) continue;
      Gate g;
      g.kind = GateKind::Cnot;
      g.qubits = {c, t};
      gens.push_back(g);
    }
  }
  return gens;
}

}  // namespace

StabilizerStateSet enumerate_stabilizer_states(int n) {
  if (n < 1 || n > 4) {
    throw ResourceCapError(
        "enumerate_stabilizer_states: supported range is 1 <= n <= 4");
  }
  StabilizerStateSet set;
  set.n = n;
  auto gens = orbit_generators(n);

  std::unordered_set<std::string> seen;
  std::deque<std::pair<StateF, int>> frontier;
  StateF zero = StateF::basis(n, 0);
  seen.insert(canonical_key(zero));
  set.states.push_back(zero);
  frontier.emplace_back(zero, 0);

  while (!frontier.empty()) {
    auto [state, depth] = frontier.front();
    frontier.pop_front();
    set.orbit_depth = std::max(set.orbit_depth, depth);
    for (const Gate& g : gens) {
      StateF next = state;
      apply_gate(g, next);
      std::string key = canonical_key(next);
      if (seen.insert(key).second) {
        set.states.push_back(next);
        frontier.emplace_back(next, depth + 1);
      }
    }
  }
  return set;
}

StateMaxResult max_state_nullity(const MatrixF& U,
                                 const StabilizerStateSet& set) {
  if (U.num_qubits() != set.n) {
    throw std::invalid_argument("max_state_nullity: qubit count mismatch");
  }
  StateMaxResult best;
  best.max_nullity = -1;
  for (size_t idx = 0; idx < set.states.size(); ++idx) {
    StateF mapped = U * set.states[idx];
    int nullity = compute_s_state(mapped).nullity;
    if (nullity > best.max_nullity) {
      best.max_nullity = nullity;
      best.argmax_index = idx;
    }
  }
  return best;
}

bool padding_monotonicity_check(const MatrixF& U, int d, int d2,
                                uint64_t seed, int samples) {
  if (d < d2 || d2 < 0) {
    throw std::invalid_argument("padding_monotonicity_check: need d >= d2 >= 0");
  }
  int n = U.num_qubits();

  auto best_over_ancillas = [&](int aux) {
    int total = aux + n;
    int best = -1;
    if (total <= 4) {
      StabilizerStateSet set = enumerate_stabilizer_states(total);
      for (const auto& psi : set.states) {
        best = std::max(best, aux_nullity(U, psi));
        // Padding construction: prepending |0> qubits must not change the
        // state nullity.
        if (total + 1 <= 2 * kDefaultWidthCap) {
          StateF padded(total + 1);
          for (size_t x = 0; x < psi.dim(); ++x) padded.at(x) = psi.at(x);
          if (compute_s_state(padded).nullity !=
              compute_s_state(psi).nullity) {
            return -2;  // padding identity violated
          }
        }
      }
    } else {
      std::mt19937_64 rng(seed + static_cast<uint64_t>(aux));
      for (int j = 0; j < samples; ++j) {
        Circuit prep = random_clifford_circuit(total, 8 * total, rng);
        StateF psi = run_circuit(prep, StateF::basis(total, 0));
        best = std::max(best, aux_nullity(U, psi));
      }
    }
    return best;
  };

  int best_d = best_over_ancillas(d);
  int best_d2 = best_over_ancillas(d2);
  if (best_d == -2 || best_d2 == -2) return false;
  return best_d >= best_d2;
}

}  // namespace stabnull
