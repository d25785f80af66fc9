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

#ifndef STABNULL_EXACT_SCALAR_HPP
#define STABNULL_EXACT_SCALAR_HPP

#include <gmpxx.h>

#include <complex>
#include <string>

namespace stabnull {

/// Exact element of Z[omega]/sqrt(2)^k with omega = e^{i pi/4}:
///
///   value = (a + b*omega + c*omega^2 + d*omega^3) / sqrt(2)^k
///
/// Every Clifford+T matrix entry lives in this ring, so equality tests (in
/// particular the +-1 detection behind s(U)) carry no tolerance. Coefficients
/// are arbitrary-precision integers; they grow linearly in circuit depth in
/// bits. Values are kept canonical: k == 0, or the sqrt(2) reduction does not
/// apply.
class ExactScalar {
 public:
  ExactScalar() : a_(0), b_(0), c_(0), d_(0), k_(0) {}
  explicit ExactScalar(long v) : a_(v), b_(0), c_(0), d_(0), k_(0) {}
  ExactScalar(mpz_class a, mpz_class b, mpz_class c, mpz_class d, unsigned k);

  /// omega^e for any integer e (omega^4 = -1).
  static ExactScalar omega_power(int e);
  static ExactScalar omega() { return omega_power(1); }
  static ExactScalar i() { return omega_power(2); }
  /// 1 / sqrt(2)^k.
  static ExactScalar inv_sqrt2_pow(unsigned k);

  const mpz_class& a() const { return a_; }
  const mpz_class& b() const { return b_; }
  const mpz_class& c() const { return c_; }
  const mpz_class& d() const { return d_; }
  unsigned k() const { return k_; }

  ExactScalar operator+(const ExactScalar& o) const;
  ExactScalar operator-(const ExactScalar& o) const;
  ExactScalar operator*(const ExactScalar& o) const;
  ExactScalar operator-() const;
  ExactScalar& operator+=(const ExactScalar& o) { return *this = *this + o; }
  ExactScalar& operator-=(const ExactScalar& o) { return *this = *this - o; }
  ExactScalar& operator*=(const ExactScalar& o) { return *this = *this * o; }

  /// Complex conjugate: omega -> -omega^3, i.e. (a,b,c,d) -> (a,-d,-c,-b).
  ExactScalar conj() const;

  bool operator==(const ExactScalar& o) const {
    return k_ == o.k_ && a_ == o.a_ && b_ == o.b_ && c_ == o.c_ && d_ == o.d_;
  }
  bool operator!=(const ExactScalar& o) const { return !(*this == o); }

  bool is_zero() const { return a_ == 0 && b_ == 0 && c_ == 0 && d_ == 0; }
  bool is_real() const { return *this == conj(); }
  /// True iff |value| == 1, decided exactly via value * conj(value) == 1.
  bool is_unit_modulus() const;

  /// Floating approximation; used only for reporting.
  std::complex<double> to_complex() const;

  std::string str() const;

 private:
  void canonicalize();

  mpz_class a_, b_, c_, d_;
  unsigned k_;
};

}  // namespace stabnull

#endif  // STABNULL_EXACT_SCALAR_HPP
