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

#include "stabnull/subgroup.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <unordered_set>

namespace stabnull {

namespace {
constexpr int kEnumCapQubits = 6;

int leading_bit(uint32_t v) { return 31 - std::countl_zero(v); }
}  // namespace

LabelSubgroup::LabelSubgroup(int n) : n_(n) {
  if (n <= 0 || n > kMaxDenseQubits) {
    throw std::invalid_argument("LabelSubgroup: qubit count out of range");
  }
}

LabelSubgroup LabelSubgroup::span(int n, const std::vector<PauliLabel>& gens) {
  LabelSubgroup g(n);
  for (const auto& p : gens) {
    if (p.num_qubits() != n) {
      throw std::invalid_argument("span: generator qubit count mismatch");
    }
    g.insert(p.encode());
  }
  return g;
}

LabelSubgroup LabelSubgroup::full(int n) {
  LabelSubgroup g(n);
  for (int b = 0; b < 2 * n; ++b) g.insert(uint32_t{1} << b);
  return g;
}

uint32_t LabelSubgroup::reduce(uint32_t vec) const {
  for (uint32_t row : rows_) {
    if (vec == 0) break;
    if (leading_bit(vec) == leading_bit(row)) vec ^= row;
  }
  return vec;
}

void LabelSubgroup::insert(uint32_t vec) {
  vec = reduce(vec);
  if (vec == 0) return;
  // Keep reduced echelon form: clear this pivot from existing rows, then
  // insert sorted by descending pivot.
  for (uint32_t& row : rows_) {
    if (row & (uint32_t{1} << leading_bit(vec))) row ^= vec;
  }
  rows_.push_back(vec);
  std::sort(rows_.begin(), rows_.end(), std::greater<uint32_t>());
}

bool LabelSubgroup::contains(const PauliLabel& p) const {
  if (p.num_qubits() != n_) {
    throw std::invalid_argument("contains: qubit count mismatch");
  }
  return reduce(p.encode()) == 0;
}

LabelSubgroup LabelSubgroup::intersect(const LabelSubgroup& other) const {
  if (other.n_ != n_) {
    throw std::invalid_argument("intersect: qubit count mismatch");
  }
  // Zassenhaus: rows [v|v] for this, [w|0] for other; eliminate on the left
  // half; rows whose left half vanishes span the intersection on the right.
  std::vector<uint64_t> work;
  for (uint32_t v : rows_) {
    work.push_back((uint64_t{v} << 32) | v);
  }
  for (uint32_t w : other.rows_) {
    work.push_back(uint64_t{w} << 32);
  }
  LabelSubgroup result(n_);
  std::vector<uint64_t> pivots;  // rows with nonzero left half
  for (uint64_t row : work) {
    for (uint64_t p : pivots) {
      uint32_t left = static_cast<uint32_t>(row >> 32);
      if (left == 0) break;
      uint32_t pleft = static_cast<uint32_t>(p >> 32);
      if (leading_bit(left) == leading_bit(pleft)) row ^= p;
    }
    if (row == 0) continue;
    if ((row >> 32) == 0) {
      result.insert(static_cast<uint32_t>(row));
    } else {
      pivots.push_back(row);
      std::sort(pivots.begin(), pivots.end(), std::greater<uint64_t>());
    }
  }
  return result;
}

std::vector<PauliLabel> LabelSubgroup::elements() const {
  if (n_ > kEnumCapQubits) {
    throw std::invalid_argument(
        "LabelSubgroup::elements: enumeration capped at n <= 6");
  }
  std::vector<PauliLabel> out;
  out.reserve(static_cast<size_t>(size()));
  size_t count = size_t{1} << rank();
  for (size_t subset = 0; subset < count; ++subset) {
    uint32_t v = 0;
    for (size_t j = 0; j < rows_.size(); ++j) {
      if (subset & (size_t{1} << j)) v ^= rows_[j];
    }
    out.push_back(PauliLabel::decode(n_, v));
  }
  return out;
}

std::vector<PauliLabel> LabelSubgroup::basis_labels() const {
  std::vector<PauliLabel> out;
  out.reserve(rows_.size());
  for (uint32_t row : rows_) out.push_back(PauliLabel::decode(n_, row));
  return out;
}

uint64_t product_set_size(const LabelSubgroup& a, const LabelSubgroup& b) {
  if (a.num_qubits() != b.num_qubits()) {
    throw std::invalid_argument("product_set_size: qubit count mismatch");
  }
  std::unordered_set<uint32_t> products;
  for (const auto& pa : a.elements()) {
    for (const auto& pb : b.elements()) {
      products.insert(compose(pa, pb).encode());
    }
  }
  return products.size();
}

}  // namespace stabnull
