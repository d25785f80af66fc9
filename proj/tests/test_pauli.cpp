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

#include <random>

#include "gtest/gtest.h"
#include "oracles.hpp"
#include "stabnull/matrix.hpp"

using namespace stabnull;

TEST(pauli_label, text_round_trip) {
  for (const char* text : {"I", "X", "Y", "Z", "XZI", "YIZX", "IIII"}) {
    EXPECT_EQ(PauliLabel::from_str(text).str(), text);
  }
  EXPECT_THROW(PauliLabel::from_str(""), std::invalid_argument);
  EXPECT_THROW(PauliLabel::from_str("XQ"), std::invalid_argument);
}

TEST(pauli_label, mask_convention_msb_first) {
  PauliLabel p = PauliLabel::from_str("XZI");
  EXPECT_EQ(p.num_qubits(), 3);
  // Qubit 0 is the most significant bit.
  EXPECT_EQ(p.x_mask(), 0b100u);
  EXPECT_EQ(p.z_mask(), 0b010u);
  EXPECT_EQ(p.code_at(0), 1);
  EXPECT_EQ(p.code_at(1), 3);
  EXPECT_EQ(p.code_at(2), 0);
}

TEST(pauli_label, compose_examples) {
  // X . Z = Y modulo phase.
  EXPECT_EQ(compose(PauliLabel::from_str("X"), PauliLabel::from_str("Z")),
            PauliLabel::from_str("Y"));
  // Involution.
  PauliLabel u = PauliLabel::from_str("YZX");
  EXPECT_TRUE(compose(u, u).is_identity());
  // Independent qubits.
  EXPECT_EQ(compose(PauliLabel::from_str("XI"), PauliLabel::from_str("IZ")),
            PauliLabel::from_str("XZ"));
  EXPECT_THROW(compose(PauliLabel::from_str("X"), PauliLabel::from_str("XX")),
               std::invalid_argument);
}

TEST(pauli_label, compose_abelian_property) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 1 + static_cast<int>(rng() % 4);
    uint32_t lim = uint32_t{1} << (2 * n);
    PauliLabel a = PauliLabel::decode(n, rng() % lim);
    PauliLabel b = PauliLabel::decode(n, rng() % lim);
    EXPECT_EQ(compose(a, b), compose(b, a));
  }
}

TEST(phased_pauli, text_forms) {
  EXPECT_EQ(PhasedPauli::from_str("XZ").str(), "XZ");
  EXPECT_EQ(PhasedPauli::from_str("iY").str(), "iY");
  EXPECT_EQ(PhasedPauli::from_str("-Z").str(), "-Z");
  EXPECT_EQ(PhasedPauli::from_str("-iXX").str(), "-iXX");
}

TEST(phased_pauli, compose_examples) {
  // X . Y = i Z.
  PhasedPauli xy = phased_compose(PhasedPauli::from_str("X"),
                                  PhasedPauli::from_str("Y"));
  EXPECT_EQ(xy, PhasedPauli::from_str("iZ"));
  // Identity squared.
  PhasedPauli id = PhasedPauli::identity(2);
  EXPECT_EQ(phased_compose(id, id), id);
  // (-X)(-X) = I with phase 0.
  PhasedPauli mx = PhasedPauli::from_str("-X");
  EXPECT_EQ(phased_compose(mx, mx), PhasedPauli::identity(1));
}

// The phase convention is pinned by the dense-product identity, not by
// choice: dense(a*b) == dense(a) dense(b) entrywise.
TEST(phased_pauli, compose_matches_dense_product_exhaustive_1q) {
  for (int pa = 0; pa < 4; ++pa) {
    for (int pb = 0; pb < 4; ++pb) {
      for (uint32_t ca = 0; ca < 4; ++ca) {
        for (uint32_t cb = 0; cb < 4; ++cb) {
          PhasedPauli a(PauliLabel::decode(1, ca), pa);
          PhasedPauli b(PauliLabel::decode(1, cb), pb);
          MatrixX lhs = to_dense<ExactScalar>(phased_compose(a, b));
          MatrixX rhs = mat_mul(to_dense<ExactScalar>(a),
                                to_dense<ExactScalar>(b));
          EXPECT_TRUE(approx_equal(lhs, rhs, 0.0))
              << a.str() << " * " << b.str();
        }
      }
    }
  }
}

TEST(phased_pauli, compose_matches_dense_product_random) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 2 + static_cast<int>(rng() % 2);
    uint32_t lim = uint32_t{1} << (2 * n);
    PhasedPauli a(PauliLabel::decode(n, rng() % lim),
                  static_cast<int>(rng() % 4));
    PhasedPauli b(PauliLabel::decode(n, rng() % lim),
                  static_cast<int>(rng() % 4));
    MatrixX lhs = to_dense<ExactScalar>(phased_compose(a, b));
    MatrixX rhs = mat_mul(to_dense<ExactScalar>(a), to_dense<ExactScalar>(b));
    EXPECT_TRUE(approx_equal(lhs, rhs, 0.0)) << a.str() << " * " << b.str();
  }
}

TEST(phased_pauli, compose_associative) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 1 + static_cast<int>(rng() % 3);
    uint32_t lim = uint32_t{1} << (2 * n);
    PhasedPauli a(PauliLabel::decode(n, rng() % lim), int(rng() % 4));
    PhasedPauli b(PauliLabel::decode(n, rng() % lim), int(rng() % 4));
    PhasedPauli c(PauliLabel::decode(n, rng() % lim), int(rng() % 4));
    EXPECT_EQ(phased_compose(phased_compose(a, b), c),
              phased_compose(a, phased_compose(b, c)));
  }
}

TEST(to_dense, pauli_y_display) {
  MatrixF y = to_dense<std::complex<double>>(PauliLabel::from_str("Y"));
  EXPECT_EQ(y.at(0, 0), (std::complex<double>{0, 0}));
  EXPECT_EQ(y.at(0, 1), (std::complex<double>{0, -1}));
  EXPECT_EQ(y.at(1, 0), (std::complex<double>{0, 1}));
  EXPECT_EQ(y.at(1, 1), (std::complex<double>{0, 0}));
}

TEST(to_dense, tensor_label_iz) {
  MatrixF m = to_dense<std::complex<double>>(PauliLabel::from_str("IZ"));
  for (size_t j = 0; j < 4; ++j) {
    double expect = (j % 2 == 0) ? 1.0 : -1.0;
    EXPECT_EQ(m.at(j, j), (std::complex<double>{expect, 0}));
  }
}

TEST(to_dense, phase_prefactor) {
  MatrixF m = to_dense<std::complex<double>>(PhasedPauli::from_str("iX"));
  EXPECT_EQ(m.at(0, 1), (std::complex<double>{0, 1}));
  EXPECT_EQ(m.at(1, 0), (std::complex<double>{0, 1}));
}

TEST(to_dense, matches_oracle_kron) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    int n = 1 + static_cast<int>(rng() % 3);
    uint32_t lim = uint32_t{1} << (2 * n);
    PauliLabel u = PauliLabel::decode(n, rng() % lim);
    std::vector<int> codes;
    for (int q = 0; q < n; ++q) codes.push_back(u.code_at(q));
    oracle::Mat expect = oracle::sigma(codes);
    MatrixF got = to_dense<std::complex<double>>(u);
    for (size_t r = 0; r < got.dim(); ++r) {
      for (size_t c = 0; c < got.dim(); ++c) {
        EXPECT_LT(std::abs(got.at(r, c) - expect[r][c]), 1e-14) << u.str();
      }
    }
  }
}

TEST(to_dense, guard) {
  // Labels themselves allow wide registers; dense materialization does not.
  PauliLabel wide(20, 0, 0);
  EXPECT_THROW(to_dense<std::complex<double>>(wide), std::invalid_argument);
}
