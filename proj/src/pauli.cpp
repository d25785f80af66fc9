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

#include "stabnull/pauli.hpp"

#include <bit>
#include <stdexcept>

namespace stabnull {

namespace {

void require_same_n(int a, int b, const char* what) {
  if (a != b) {
    throw std::invalid_argument(std::string(what) + ": qubit count mismatch (" +
                                std::to_string(a) + " vs " +
                                std::to_string(b) + ")");
  }
}

}  // namespace

PauliLabel::PauliLabel(int n, uint32_t x_mask, uint32_t z_mask)
    : n_(n), x_(x_mask), z_(z_mask) {
  if (n <= 0 || n > 31) {
    throw std::invalid_argument("PauliLabel: qubit count must be in [1, 31]");
  }
  uint32_t lim = uint32_t{1} << n;
  if (x_mask >= lim || z_mask >= lim) {
    throw std::invalid_argument("PauliLabel: mask exceeds 2^n");
  }
}

PauliLabel PauliLabel::from_str(const std::string& text) {
  if (text.empty()) {
    throw std::invalid_argument("PauliLabel: empty label text");
  }
  int n = static_cast<int>(text.size());
  uint32_t x = 0, z = 0;
  for (int q = 0; q < n; ++q) {
    uint32_t bit = uint32_t{1} << (n - 1 - q);
    switch (text[q]) {
      case 'I':
        break;
      case 'X':
        x |= bit;
        break;
      case 'Y':
        x |= bit;
        z |= bit;
        break;
      case 'Z':
        z |= bit;
        break;
      default:
        throw std::invalid_argument("PauliLabel: invalid character '" +
                                    std::string(1, text[q]) + "' in label");
    }
  }
  return PauliLabel(n, x, z);
}

int PauliLabel::code_at(int q) const {
  if (q < 0 || q >= n_) {
    throw std::out_of_range("PauliLabel: qubit index out of range");
  }
  uint32_t bit = uint32_t{1} << (n_ - 1 - q);
  bool xb = x_ & bit;
  bool zb = z_ & bit;
  if (xb && zb) return 2;
  if (xb) return 1;
  if (zb) return 3;
  return 0;
}

std::string PauliLabel::str() const {
  static constexpr char kChars[4] = {'I', 'X', 'Y', 'Z'};
  std::string out(static_cast<size_t>(n_), 'I');
  for (int q = 0; q < n_; ++q) out[q] = kChars[code_at(q)];
  return out;
}

PauliLabel PauliLabel::decode(int n, uint32_t code) {
  uint32_t mask = (uint32_t{1} << n) - 1;
  return PauliLabel(n, (code >> n) & mask, code & mask);
}

PauliLabel compose(const PauliLabel& a, const PauliLabel& b) {
  require_same_n(a.num_qubits(), b.num_qubits(), "compose");
  return PauliLabel(a.num_qubits(), a.x_mask() ^ b.x_mask(),
                    a.z_mask() ^ b.z_mask());
}

PhasedPauli::PhasedPauli(PauliLabel label, int phase_exp)
    : label_(label), phase_(((phase_exp % 4) + 4) % 4) {}

PhasedPauli PhasedPauli::from_str(const std::string& text) {
  int phase = 0;
  size_t pos = 0;
  if (text.rfind("-i", 0) == 0) {
    phase = 3;
    pos = 2;
  } else if (text.rfind("-", 0) == 0) {
    phase = 2;
    pos = 1;
  } else if (text.rfind("i", 0) == 0) {
    phase = 1;
    pos = 1;
  }
  return PhasedPauli(PauliLabel::from_str(text.substr(pos)), phase);
}

std::string PhasedPauli::str() const {
  static const char* kPrefix[4] = {"", "i", "-", "-i"};
  return std::string(kPrefix[phase_]) + label_.str();
}

PhasedPauli phased_compose(const PhasedPauli& a, const PhasedPauli& b) {
  require_same_n(a.num_qubits(), b.num_qubits(), "phased_compose");
  const PauliLabel& la = a.label();
  const PauliLabel& lb = b.label();
  uint32_t x1 = la.x_mask(), z1 = la.z_mask();
  uint32_t x2 = lb.x_mask(), z2 = lb.z_mask();
  uint32_t x3 = x1 ^ x2, z3 = z1 ^ z2;
  // Per-qubit: sigma(x1,z1) sigma(x2,z2) = i^g sigma(x3,z3) with
  // g = x1 z1 + x2 z2 + 2 z1 x2 - x3 z3 (mod 4), summed over qubits.
  int g = std::popcount(x1 & z1) + std::popcount(x2 & z2) +
          2 * std::popcount(z1 & x2) - std::popcount(x3 & z3);
  int phase = a.phase_exp() + b.phase_exp() + g;
  return PhasedPauli(PauliLabel(la.num_qubits(), x3, z3), phase);
}

int pauli_entry_phase_exp(const PauliLabel& u, uint32_t y) {
  // sigma_u |y> = i^{#Y} (-1)^{popcount(y & z_mask)} |y ^ x_mask>.
  int e = std::popcount(u.x_mask() & u.z_mask()) +
          2 * std::popcount(y & u.z_mask());
  return e & 3;
}

}  // namespace stabnull
