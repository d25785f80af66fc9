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

#include "stabnull/exact_scalar.hpp"

#include <cmath>
#include <random>

#include "gtest/gtest.h"

using namespace stabnull;
using cd = std::complex<double>;

namespace {

cd omega_f(int e) {
  return std::polar(1.0, 3.14159265358979323846 * e / 4.0);
}

cd value_of(long a, long b, long c, long d, unsigned k) {
  cd v = cd(a, 0) + cd(b, 0) * omega_f(1) + cd(c, 0) * omega_f(2) +
         cd(d, 0) * omega_f(3);
  return v / std::pow(std::sqrt(2.0), k);
}

}  // namespace

TEST(exact_scalar, zero_and_one) {
  EXPECT_TRUE(ExactScalar().is_zero());
  EXPECT_EQ(ExactScalar(1).to_complex(), (cd{1, 0}));
  EXPECT_EQ(ExactScalar(1) + ExactScalar(-1), ExactScalar());
}

TEST(exact_scalar, omega_powers) {
  // omega^4 = -1, omega^8 = 1.
  EXPECT_EQ(ExactScalar::omega_power(4), ExactScalar(-1));
  EXPECT_EQ(ExactScalar::omega_power(8), ExactScalar(1));
  EXPECT_EQ(ExactScalar::omega() * ExactScalar::omega(), ExactScalar::i());
  ExactScalar w = ExactScalar::omega();
  ExactScalar acc(1);
  for (int j = 0; j < 8; ++j) acc = acc * w;
  EXPECT_EQ(acc, ExactScalar(1));
}

TEST(exact_scalar, to_float_examples) {
  EXPECT_LT(std::abs(ExactScalar(1).to_complex() - cd{1, 0}), 1e-15);
  // omega = (sqrt2/2)(1 + i).
  cd w = ExactScalar::omega().to_complex();
  EXPECT_LT(std::abs(w - cd(std::sqrt(0.5), std::sqrt(0.5))), 1e-15);
  // 1/sqrt2 = sqrt2/2.
  cd half = ExactScalar::inv_sqrt2_pow(1).to_complex();
  EXPECT_LT(std::abs(half - cd(std::sqrt(0.5), 0)), 1e-15);
}

TEST(exact_scalar, canonicalization_reduces_sqrt2) {
  // sqrt2 / sqrt2^2 == 1/sqrt2, canonical at k=1.
  ExactScalar v(0, 1, 0, -1, 2);  // (omega - omega^3)/2
  EXPECT_EQ(v, ExactScalar::inv_sqrt2_pow(1));
  EXPECT_EQ(v.k(), 1u);
  // 2 / sqrt2^2 == 1, canonical at k=0.
  EXPECT_EQ(ExactScalar(2, 0, 0, 0, 2), ExactScalar(1));
  // Zero always normalizes its exponent away.
  EXPECT_EQ(ExactScalar(0, 0, 0, 0, 5).k(), 0u);
}

TEST(exact_scalar, canonicalization_idempotent_and_value_preserving) {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 500; ++trial) {
    long a = static_cast<long>(rng() % 41) - 20;
    long b = static_cast<long>(rng() % 41) - 20;
    long c = static_cast<long>(rng() % 41) - 20;
    long d = static_cast<long>(rng() % 41) - 20;
    unsigned k = rng() % 6;
    ExactScalar v(a, b, c, d, k);
    // Rebuilding from the canonical components changes nothing.
    ExactScalar w(v.a(), v.b(), v.c(), v.d(), v.k());
    EXPECT_EQ(v, w);
    EXPECT_LT(std::abs(v.to_complex() - value_of(a, b, c, d, k)), 1e-12);
  }
}

TEST(exact_scalar, arithmetic_matches_complex) {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 500; ++trial) {
    long a1 = static_cast<long>(rng() % 21) - 10;
    long b1 = static_cast<long>(rng() % 21) - 10;
    long c1 = static_cast<long>(rng() % 21) - 10;
    long d1 = static_cast<long>(rng() % 21) - 10;
    unsigned k1 = rng() % 4;
    long a2 = static_cast<long>(rng() % 21) - 10;
    long b2 = static_cast<long>(rng() % 21) - 10;
    long c2 = static_cast<long>(rng() % 21) - 10;
    long d2 = static_cast<long>(rng() % 21) - 10;
    unsigned k2 = rng() % 4;
    ExactScalar x(a1, b1, c1, d1, k1), y(a2, b2, c2, d2, k2);
    cd xf = value_of(a1, b1, c1, d1, k1), yf = value_of(a2, b2, c2, d2, k2);
    EXPECT_LT(std::abs((x + y).to_complex() - (xf + yf)), 1e-11);
    EXPECT_LT(std::abs((x - y).to_complex() - (xf - yf)), 1e-11);
    EXPECT_LT(std::abs((x * y).to_complex() - (xf * yf)), 1e-10);
    EXPECT_LT(std::abs(x.conj().to_complex() - std::conj(xf)), 1e-11);
  }
}

TEST(exact_scalar, conjugation) {
  // conj(omega) = omega^-1 = -omega^3, components (0,0,0,-1).
  ExactScalar wc = ExactScalar::omega().conj();
  EXPECT_EQ(wc, ExactScalar::omega_power(-1));
  EXPECT_EQ(wc.d(), -1);
  EXPECT_TRUE(ExactScalar(5).is_real());
  EXPECT_FALSE(ExactScalar::i().is_real());
}

TEST(exact_scalar, unit_modulus) {
  for (int e = 0; e < 8; ++e) {
    EXPECT_TRUE(ExactScalar::omega_power(e).is_unit_modulus());
  }
  EXPECT_FALSE(ExactScalar(2).is_unit_modulus());
  EXPECT_FALSE(ExactScalar::inv_sqrt2_pow(1).is_unit_modulus());
  EXPECT_FALSE(ExactScalar().is_unit_modulus());
}

TEST(exact_scalar, big_coefficients_no_overflow) {
  // Cubing a ~2^40 coefficient would overflow any fixed-width integer; the
  // sqrt2 reduction shuffles the magnitude between slots, so check the max.
  ExactScalar v(mpz_class(1) << 40, 3, -7, 2, 1);
  ExactScalar w = v * v * v;
  EXPECT_FALSE(w.is_zero());
  size_t bits = 0;
  for (const mpz_class* coeff : {&w.a(), &w.b(), &w.c(), &w.d()}) {
    bits = std::max(bits, mpz_sizeinbase(coeff->get_mpz_t(), 2));
  }
  EXPECT_GT(bits, size_t{100});
  // Associativity stays exact at this size.
  EXPECT_EQ((v * v) * v, v * (v * v));
}
