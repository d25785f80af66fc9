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

#ifndef STABNULL_PAULI_HPP
#define STABNULL_PAULI_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace stabnull {

/// Maximum qubit count accepted by dense materialization.
inline constexpr int kMaxDenseQubits = 14;

/// Element of the quotient Pauli group (Pauli group modulo global phases),
/// stored as a symplectic pair of bit masks.
///
/// Qubit 0 is the most significant position: the text form "XZI" puts X on
/// qubit 0, and qubit q maps to bit (n-1-q) of each mask. Composition modulo
/// phase is XOR of both masks.
class PauliLabel {
 public:
  PauliLabel() = default;
  PauliLabel(int n, uint32_t x_mask, uint32_t z_mask);

  /// Parses the text form, e.g. "XZI" (most significant qubit first).
  static PauliLabel from_str(const std::string& text);
  static PauliLabel identity(int n) { return PauliLabel(n, 0, 0); }

  int num_qubits() const { return n_; }
  uint32_t x_mask() const { return x_; }
  uint32_t z_mask() const { return z_; }
  bool is_identity() const { return x_ == 0 && z_ == 0; }

  /// Single-qubit code in {0=I,1=X,2=Y,3=Z} for qubit q.
  int code_at(int q) const;

  std::string str() const;

  bool operator==(const PauliLabel& o) const {
    return n_ == o.n_ && x_ == o.x_ && z_ == o.z_;
  }
  bool operator!=(const PauliLabel& o) const { return !(*this == o); }

  /// Packs the label into a 2n-bit integer, (x_mask << n) | z_mask.
  uint32_t encode() const { return (x_ << n_) | z_; }
  static PauliLabel decode(int n, uint32_t code);

 private:
  int n_ = 0;
  uint32_t x_ = 0;
  uint32_t z_ = 0;
};

/// Composition in the quotient group: XOR of both masks. Abelian; every
/// label is an involution.
PauliLabel compose(const PauliLabel& a, const PauliLabel& b);

/// Element of the full Pauli group: a label together with a global phase
/// i^phase_exp, phase_exp in {0,1,2,3}.
class PhasedPauli {
 public:
  PhasedPauli() = default;
  PhasedPauli(PauliLabel label, int phase_exp);
  explicit PhasedPauli(PauliLabel label) : PhasedPauli(label, 0) {}

  static PhasedPauli from_str(const std::string& text);
  static PhasedPauli identity(int n) {
    return PhasedPauli(PauliLabel::identity(n), 0);
  }

  const PauliLabel& label() const { return label_; }
  int phase_exp() const { return phase_; }
  int num_qubits() const { return label_.num_qubits(); }

  std::string str() const;

  bool operator==(const PhasedPauli& o) const {
    return label_ == o.label_ && phase_ == o.phase_;
  }
  bool operator!=(const PhasedPauli& o) const { return !(*this == o); }

 private:
  PauliLabel label_;
  int phase_ = 0;
};

/// Exact product in the full Pauli group. The phase exponent is fixed by the
/// requirement that dense(a)*dense(b) == dense(result) entrywise.
PhasedPauli phased_compose(const PhasedPauli& a, const PhasedPauli& b);

/// Phase exponent e such that <y ^ x_mask| sigma_u |y> = i^e, i.e. the phase
/// picked up by basis state |y> under sigma_u. Used by all sparse
/// Pauli-application loops.
int pauli_entry_phase_exp(const PauliLabel& u, uint32_t y);

}  // namespace stabnull

#endif  // STABNULL_PAULI_HPP
