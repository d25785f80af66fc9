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

#ifndef STABNULL_THEOREM_SUITE_HPP
#define STABNULL_THEOREM_SUITE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "stabnull/matrix.hpp"

namespace stabnull {

/// Outcome of one named check. Failing checks always carry a witness that
/// replays from (name, seed) alone.
struct CheckResult {
  std::string name;
  bool passed = false;
  std::string witness;
  double elapsed_ms = 0.0;
  uint64_t seed = 0;
};

enum class Scale { Smoke, Standard, Deep };

Scale scale_from_string(const std::string& s);
const char* scale_name(Scale s);

/// Closed form of f(q, s, p) = sum_y (-1)^{(q^s).y} (-1)^{all_ones(y) +
/// all_ones(y^p)}; masks must fit in n bits.
long long f_closed_form(uint32_t q, uint32_t s, uint32_t p, int n);

/// The literal 2^n-term sum; the independent oracle for f_closed_form.
long long f_brute(uint32_t q, uint32_t s, uint32_t p, int n);

/// The 2n-nullity family: builds C^{n-1}Z H^n C^{n-1}Z, asserts s(U) == 1 and
/// v(U) == 2n, and checks the trace factorization
/// tr(X^s Z^t U X^p Z^q U^dag) == 2^-n (-1)^{s.p + s.t} f(p,t,s) f(q,s,p)
/// against directly computed traces on random (u, v) pairs.
CheckResult theorem_2n_check(int n, uint64_t seed, int factorization_pairs = 50);

/// State-nullity subadditivity counterexample: with psi = C|0>,
/// U = e^{iX} H C^-1 and V = C H C^-1, the triple (v_s(U psi), v_s(V psi),
/// v_s(UV psi)) is (0, 0, 1) while v(UV) <= v(U) + v(V) still holds.
CheckResult state_subadditivity_counterexample();

/// (M tensor I)|Phi> == (I tensor M^T)|Phi>.
CheckResult transpose_trick_check(const MatrixF& m);

/// Runs the whole battery. Deterministic for a fixed (seed, scale); checks
/// carry independent seed streams so the thread count cannot reorder
/// outcomes.
std::vector<CheckResult> run_all(uint64_t seed, Scale scale, int threads = 1);

/// Runs only the named checks (run_all order). Unknown names throw.
std::vector<CheckResult> run_selected(uint64_t seed, Scale scale,
                                      const std::vector<std::string>& names,
                                      int threads = 1);

}  // namespace stabnull

#endif  // STABNULL_THEOREM_SUITE_HPP
