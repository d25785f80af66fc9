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

#include "stabnull/theorem_suite.hpp"

#include <random>

#include "gtest/gtest.h"
#include "stabnull/circuit.hpp"
#include "stabnull/nullity.hpp"

using namespace stabnull;

TEST(f_function, closed_form_cases) {
  // p = 0, q = s: 2^n.
  EXPECT_EQ(f_closed_form(0b101, 0b101, 0, 3), 8);
  // p = 0, q != s: 0.
  EXPECT_EQ(f_closed_form(0b101, 0b100, 0, 3), 0);
  // p != 0, q = s: 2^n - 4.
  EXPECT_EQ(f_closed_form(0b011, 0b011, 0b100, 3), 4);
  EXPECT_THROW(f_closed_form(8, 0, 0, 3), std::invalid_argument);
}

TEST(f_function, exhaustive_small_n) {
  for (int n = 1; n <= 3; ++n) {
    uint32_t lim = uint32_t{1} << n;
    for (uint32_t q = 0; q < lim; ++q) {
      for (uint32_t s = 0; s < lim; ++s) {
        for (uint32_t p = 0; p < lim; ++p) {
          EXPECT_EQ(f_closed_form(q, s, p, n), f_brute(q, s, p, n))
              << "n=" << n << " q=" << q << " s=" << s << " p=" << p;
        }
      }
    }
  }
}

TEST(f_function, random_n4_n5) {
  std::mt19937_64 rng(109);
  for (int n = 4; n <= 5; ++n) {
    uint32_t lim = uint32_t{1} << n;
    for (int trial = 0; trial < 2000; ++trial) {
      uint32_t q = rng() % lim, s = rng() % lim, p = rng() % lim;
      ASSERT_EQ(f_closed_form(q, s, p, n), f_brute(q, s, p, n));
    }
  }
}

TEST(theorem_2n, n3_passes) {
  CheckResult r = theorem_2n_check(3, 7);
  EXPECT_TRUE(r.passed) << r.witness;
}

TEST(theorem_2n, n4_passes) {
  CheckResult r = theorem_2n_check(4, 7, 20);
  EXPECT_TRUE(r.passed) << r.witness;
}

TEST(theorem_2n, rejects_out_of_range) {
  EXPECT_FALSE(theorem_2n_check(2, 7).passed);
}

TEST(counterexample, appendix_c2) {
  CheckResult r = state_subadditivity_counterexample();
  EXPECT_TRUE(r.passed) << r.witness;
}

TEST(transpose_trick, fixed_and_random) {
  EXPECT_TRUE(
      transpose_trick_check(to_dense<std::complex<double>>(
                                PauliLabel::from_str("X")))
          .passed);
  Circuit t = parse_circuit("qubits 1\nt 0\n");
  EXPECT_TRUE(
      transpose_trick_check(build_unitary<std::complex<double>>(t)).passed);
}

TEST(run_all, smoke_passes_and_is_deterministic) {
  auto r1 = run_all(7, Scale::Smoke);
  for (const auto& r : r1) EXPECT_TRUE(r.passed) << r.name << ": " << r.witness;
  auto r2 = run_all(7, Scale::Smoke, 4);
  ASSERT_EQ(r1.size(), r2.size());
  for (size_t j = 0; j < r1.size(); ++j) {
    EXPECT_EQ(r1[j].name, r2[j].name);
    EXPECT_EQ(r1[j].passed, r2[j].passed);
    EXPECT_EQ(r1[j].witness, r2[j].witness);
    EXPECT_EQ(r1[j].seed, r2[j].seed);
  }
}

TEST(scales, parse_names) {
  EXPECT_EQ(scale_from_string("smoke"), Scale::Smoke);
  EXPECT_EQ(scale_from_string("standard"), Scale::Standard);
  EXPECT_EQ(scale_from_string("deep"), Scale::Deep);
  EXPECT_THROW(scale_from_string("big"), std::invalid_argument);
  EXPECT_STREQ(scale_name(Scale::Deep), "deep");
}
