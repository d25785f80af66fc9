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
#include <sstream>
#include <utility>

namespace stabnull {

namespace {

bool is_even(const mpz_class& v) { return mpz_even_p(v.get_mpz_t()) != 0; }

// N * sqrt(2), using sqrt(2) = omega - omega^3.
void mul_sqrt2(mpz_class& a, mpz_class& b, mpz_class& c, mpz_class& d) {
  mpz_class na = b - d;
  mpz_class nb = a + c;
  mpz_class nc = b + d;
  mpz_class nd = c - a;
  a = std::move(na);
  b = std::move(nb);
  c = std::move(nc);
  d = std::move(nd);
}

}  // namespace

ExactScalar::ExactScalar(mpz_class a, mpz_class b, mpz_class c, mpz_class d,
                         unsigned k)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)),
      k_(k) {
  canonicalize();
}

void ExactScalar::canonicalize() {
  if (is_zero()) {
    k_ = 0;
    return;
  }
  while (k_ > 0) {
    // N / sqrt(2) = ((b-d) + (a+c) w + (b+d) w^2 + (c-a) w^3) / 2; the
    // reduction applies iff all four numerators are even.
    mpz_class na = b_ - d_;
    mpz_class nb = a_ + c_;
    mpz_class nc = b_ + d_;
    mpz_class nd = c_ - a_;
    if (!is_even(na) || !is_even(nb) || !is_even(nc) || !is_even(nd)) break;
    a_ = na / 2;
    b_ = nb / 2;
    c_ = nc / 2;
    d_ = nd / 2;
    --k_;
  }
}

ExactScalar ExactScalar::omega_power(int e) {
  e = ((e % 8) + 8) % 8;
  int sign = e < 4 ? 1 : -1;
  int idx = e % 4;
  mpz_class coeffs[4] = {0, 0, 0, 0};
  coeffs[idx] = sign;
  return ExactScalar(coeffs[0], coeffs[1], coeffs[2], coeffs[3], 0);
}

ExactScalar ExactScalar::inv_sqrt2_pow(unsigned k) {
  return ExactScalar(1, 0, 0, 0, k);
}

ExactScalar ExactScalar::operator+(const ExactScalar& o) const {
  mpz_class a1 = a_, b1 = b_, c1 = c_, d1 = d_;
  mpz_class a2 = o.a_, b2 = o.b_, c2 = o.c_, d2 = o.d_;
  unsigned k = std::max(k_, o.k_);
  for (unsigned j = k_; j < k; ++j) mul_sqrt2(a1, b1, c1, d1);
  for (unsigned j = o.k_; j < k; ++j) mul_sqrt2(a2, b2, c2, d2);
  return ExactScalar(a1 + a2, b1 + b2, c1 + c2, d1 + d2, k);
}

ExactScalar ExactScalar::operator-(const ExactScalar& o) const {
  return *this + (-o);
}

ExactScalar ExactScalar::operator-() const {
  return ExactScalar(-a_, -b_, -c_, -d_, k_);
}

ExactScalar ExactScalar::operator*(const ExactScalar& o) const {
  // Polynomial product with omega^4 = -1.
  const mpz_class &a1 = a_, &b1 = b_, &c1 = c_, &d1 = d_;
  const mpz_class &a2 = o.a_, &b2 = o.b_, &c2 = o.c_, &d2 = o.d_;
  mpz_class ra = a1 * a2 - b1 * d2 - c1 * c2 - d1 * b2;
  mpz_class rb = a1 * b2 + b1 * a2 - c1 * d2 - d1 * c2;
  mpz_class rc = a1 * c2 + b1 * b2 + c1 * a2 - d1 * d2;
  mpz_class rd = a1 * d2 + b1 * c2 + c1 * b2 + d1 * a2;
  return ExactScalar(std::move(ra), std::move(rb), std::move(rc),
                     std::move(rd), k_ + o.k_);
}

ExactScalar ExactScalar::conj() const {
  return ExactScalar(a_, -d_, -c_, -b_, k_);
}

bool ExactScalar::is_unit_modulus() const {
  return (*this * conj()) == ExactScalar(1);
}

std::complex<double> ExactScalar::to_complex() const {
  // omega = (1+i)/sqrt(2), omega^2 = i, omega^3 = (-1+i)/sqrt(2).
  constexpr double inv_sqrt2 = 0.7071067811865475244008443621048490393;
  double ad = a_.get_d(), bd = b_.get_d(), cd = c_.get_d(), dd = d_.get_d();
  double re = ad + (bd - dd) * inv_sqrt2;
  double im = cd + (bd + dd) * inv_sqrt2;
  double scale = std::pow(2.0, -0.5 * static_cast<double>(k_));
  return {re * scale, im * scale};
}

std::string ExactScalar::str() const {
  std::ostringstream os;
  os << "(" << a_ << "," << b_ << "," << c_ << "," << d_ << ")/sqrt2^" << k_;
  return os.str();
}

}  // namespace stabnull
