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

#ifndef STABNULL_SUBGROUP_HPP
#define STABNULL_SUBGROUP_HPP

#include <cstdint>
#include <vector>

#include "stabnull/pauli.hpp"

namespace stabnull {

/// Subgroup of the quotient Pauli group, kept as a reduced GF(2) basis over
/// the 2n-bit encoding (x_mask << n) | z_mask. Membership tests and
/// intersections are Gaussian elimination; enumeration is capped at n <= 6
/// (at most 4^6 = 4096 elements).
class LabelSubgroup {
 public:
  /// The trivial group {identity}.
  explicit LabelSubgroup(int n);

  /// XOR-closure of the generators. All generators must share n.
  static LabelSubgroup span(int n, const std::vector<PauliLabel>& gens);

  /// The full quotient group, size 4^n.
  static LabelSubgroup full(int n);

  int num_qubits() const { return n_; }
  int rank() const { return static_cast<int>(rows_.size()); }
  uint64_t size() const { return uint64_t{1} << rank(); }

  bool contains(const PauliLabel& p) const;

  /// Exact intersection, computed with the Zassenhaus construction over the
  /// 2n-bit vector space.
  LabelSubgroup intersect(const LabelSubgroup& other) const;

  /// Enumerates all members. Throws when n > 6.
  std::vector<PauliLabel> elements() const;

  /// Reduced row-echelon basis rows (2n-bit encodings, descending pivots).
  const std::vector<uint32_t>& basis_rows() const { return rows_; }
  std::vector<PauliLabel> basis_labels() const;

  bool operator==(const LabelSubgroup& o) const {
    return n_ == o.n_ && rows_ == o.rows_;
  }

 private:
  void insert(uint32_t vec);
  uint32_t reduce(uint32_t vec) const;

  int n_;
  std::vector<uint32_t> rows_;
};

/// |{a * b : a in A, b in B}| by explicit enumeration (the independent route;
/// the Lagrange identity |A||B|/|A cap B| is what tests compare against).
uint64_t product_set_size(const LabelSubgroup& a, const LabelSubgroup& b);

}  // namespace stabnull

#endif  // STABNULL_SUBGROUP_HPP
