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

#ifndef STABNULL_MATRIX_HPP
#define STABNULL_MATRIX_HPP

#include <array>
#include <bit>
#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "stabnull/exact_scalar.hpp"
#include "stabnull/pauli.hpp"

namespace stabnull {

/// Default dense-storage cap for circuit-built unitaries (128 x 128).
/// Callers may override where an interface documents it.
inline constexpr int kDefaultWidthCap = 7;

/// Scalar backend adaptor. The float backend compares with tolerances; for
/// the exact backend every comparison is component-wise integer equality and
/// the tolerance argument is ignored.
template <class S>
struct backend_traits;

template <>
struct backend_traits<std::complex<double>> {
  using scalar = std::complex<double>;
  static constexpr bool is_exact = false;
  static const char* name() { return "float"; }
  static scalar zero() { return {0.0, 0.0}; }
  static scalar one() { return {1.0, 0.0}; }
  static scalar imag_unit() { return {0.0, 1.0}; }
  static scalar omega() {
    constexpr double r = 0.7071067811865475244008443621048490393;
    return {r, r};
  }
  static scalar inv_sqrt2() {
    return {0.7071067811865475244008443621048490393, 0.0};
  }
  static scalar from_int(long v) { return {static_cast<double>(v), 0.0}; }
  static scalar conj(const scalar& s) { return std::conj(s); }
  static std::complex<double> to_complex(const scalar& s) { return s; }
  static bool equal(const scalar& x, const scalar& y, double tol) {
    return std::abs(x - y) <= tol;
  }
  static bool is_zero(const scalar& x, double tol) {
    return std::abs(x) <= tol;
  }
  static bool is_unit_modulus(const scalar& x, double tol) {
    return std::abs(std::abs(x) - 1.0) <= tol;
  }
};

template <>
struct backend_traits<ExactScalar> {
  using scalar = ExactScalar;
  static constexpr bool is_exact = true;
  static const char* name() { return "exact"; }
  static scalar zero() { return ExactScalar(); }
  static scalar one() { return ExactScalar(1); }
  static scalar imag_unit() { return ExactScalar::i(); }
  static scalar omega() { return ExactScalar::omega(); }
  static scalar inv_sqrt2() { return ExactScalar::inv_sqrt2_pow(1); }
  static scalar from_int(long v) { return ExactScalar(v); }
  static scalar conj(const scalar& s) { return s.conj(); }
  static std::complex<double> to_complex(const scalar& s) {
    return s.to_complex();
  }
  static bool equal(const scalar& x, const scalar& y, double) {
    return x == y;
  }
  static bool is_zero(const scalar& x, double) { return x.is_zero(); }
  static bool is_unit_modulus(const scalar& x, double) {
    return x.is_unit_modulus();
  }
};

/// Dense 2^n x 2^n matrix over one scalar backend, row-major, immutable in
/// normal use once built.
template <class S>
class Matrix {
 public:
  Matrix(int n, S fill)
      : n_(check_n(n)), dim_(size_t{1} << n),
        a_(dim_ * dim_, std::move(fill)) {}
  explicit Matrix(int n) : Matrix(n, backend_traits<S>::zero()) {}

  static Matrix identity(int n) {
    Matrix m(n);
    for (size_t r = 0; r < m.dim_; ++r) m.at(r, r) = backend_traits<S>::one();
    return m;
  }

  int num_qubits() const { return n_; }
  size_t dim() const { return dim_; }

  S& at(size_t r, size_t c) { return a_[r * dim_ + c]; }
  const S& at(size_t r, size_t c) const { return a_[r * dim_ + c]; }

  std::vector<S>& data() { return a_; }
  const std::vector<S>& data() const { return a_; }

 private:
  static int check_n(int n) {
    if (n <= 0 || n > kMaxDenseQubits) {
      throw std::invalid_argument("Matrix: qubit count out of range");
    }
    return n;
  }

  int n_;
  size_t dim_;
  std::vector<S> a_;
};

/// Normalized 2^n-amplitude state vector.
template <class S>
class StateVector {
 public:
  explicit StateVector(int n)
      : n_(n), amps_(size_t{1} << n, backend_traits<S>::zero()) {
    if (n <= 0 || n > 2 * kMaxDenseQubits) {
      throw std::invalid_argument("StateVector: qubit count out of range");
    }
  }

  /// |x> for basis index x (qubit 0 = most significant bit).
  static StateVector basis(int n, size_t x) {
    StateVector v(n);
    v.amps_.at(x) = backend_traits<S>::one();
    return v;
  }

  int num_qubits() const { return n_; }
  size_t dim() const { return amps_.size(); }
  S& at(size_t x) { return amps_[x]; }
  const S& at(size_t x) const { return amps_[x]; }
  std::vector<S>& data() { return amps_; }
  const std::vector<S>& data() const { return amps_; }

 private:
  int n_;
  std::vector<S> amps_;
};

using MatrixF = Matrix<std::complex<double>>;
using MatrixX = Matrix<ExactScalar>;
using StateF = StateVector<std::complex<double>>;
using StateX = StateVector<ExactScalar>;

template <class S>
Matrix<S> mat_mul(const Matrix<S>& lhs, const Matrix<S>& rhs) {
  if (lhs.num_qubits() != rhs.num_qubits()) {
    throw std::invalid_argument("mat_mul: dimension mismatch");
  }
  size_t d = lhs.dim();
  Matrix<S> out(lhs.num_qubits());
  for (size_t r = 0; r < d; ++r) {
    for (size_t k = 0; k < d; ++k) {
      const S& x = lhs.at(r, k);
      if (backend_traits<S>::is_zero(x, 0.0)) continue;
      for (size_t c = 0; c < d; ++c) {
        out.at(r, c) += x * rhs.at(k, c);
      }
    }
  }
  return out;
}

template <class S>
Matrix<S> operator*(const Matrix<S>& a, const Matrix<S>& b) {
  return mat_mul(a, b);
}

template <class S>
Matrix<S> tensor(const Matrix<S>& a, const Matrix<S>& b) {
  int n = a.num_qubits() + b.num_qubits();
  if (n > kMaxDenseQubits) {
    throw std::invalid_argument("tensor: result exceeds dense cap");
  }
  Matrix<S> out(n);
  size_t db = b.dim();
  for (size_t ra = 0; ra < a.dim(); ++ra) {
    for (size_t ca = 0; ca < a.dim(); ++ca) {
      const S& s = a.at(ra, ca);
      if (backend_traits<S>::is_zero(s, 0.0)) continue;
      for (size_t rb = 0; rb < db; ++rb) {
        for (size_t cb = 0; cb < db; ++cb) {
          out.at(ra * db + rb, ca * db + cb) = s * b.at(rb, cb);
        }
      }
    }
  }
  return out;
}

template <class S>
Matrix<S> transpose(const Matrix<S>& m) {
  Matrix<S> out(m.num_qubits());
  for (size_t r = 0; r < m.dim(); ++r) {
    for (size_t c = 0; c < m.dim(); ++c) {
      out.at(c, r) = m.at(r, c);
    }
  }
  return out;
}

template <class S>
Matrix<S> conj_transpose(const Matrix<S>& m) {
  Matrix<S> out(m.num_qubits());
  for (size_t r = 0; r < m.dim(); ++r) {
    for (size_t c = 0; c < m.dim(); ++c) {
      out.at(c, r) = backend_traits<S>::conj(m.at(r, c));
    }
  }
  return out;
}

template <class S>
S trace(const Matrix<S>& m) {
  S t = backend_traits<S>::zero();
  for (size_t r = 0; r < m.dim(); ++r) t += m.at(r, r);
  return t;
}

/// Matrix-vector application. Call as `m * v` or qualified
/// `stabnull::apply`; an unqualified `apply(m, v)` can collide with
/// std::apply through argument-dependent lookup.
template <class S>
StateVector<S> apply(const Matrix<S>& m, const StateVector<S>& v) {
  if (m.num_qubits() != v.num_qubits()) {
    throw std::invalid_argument("apply: dimension mismatch");
  }
  StateVector<S> out(v.num_qubits());
  for (size_t r = 0; r < m.dim(); ++r) {
    S acc = backend_traits<S>::zero();
    for (size_t c = 0; c < m.dim(); ++c) {
      const S& x = m.at(r, c);
      if (backend_traits<S>::is_zero(x, 0.0)) continue;
      acc += x * v.at(c);
    }
    out.at(r) = acc;
  }
  return out;
}

template <class S>
StateVector<S> operator*(const Matrix<S>& m, const StateVector<S>& v) {
  return stabnull::apply(m, v);
}

template <class S>
Matrix<S> scalar_mul(const S& s, const Matrix<S>& m) {
  Matrix<S> out(m.num_qubits());
  for (size_t idx = 0; idx < m.data().size(); ++idx) {
    out.data()[idx] = s * m.data()[idx];
  }
  return out;
}

template <class S>
bool approx_equal(const Matrix<S>& a, const Matrix<S>& b, double tol) {
  if (a.num_qubits() != b.num_qubits()) return false;
  for (size_t idx = 0; idx < a.data().size(); ++idx) {
    if (!backend_traits<S>::equal(a.data()[idx], b.data()[idx], tol)) {
      return false;
    }
  }
  return true;
}

template <class S>
bool approx_equal(const StateVector<S>& a, const StateVector<S>& b,
                  double tol) {
  if (a.num_qubits() != b.num_qubits()) return false;
  for (size_t idx = 0; idx < a.dim(); ++idx) {
    if (!backend_traits<S>::equal(a.at(idx), b.at(idx), tol)) return false;
  }
  return true;
}

template <class S>
bool is_unitary(const Matrix<S>& m, double tol) {
  Matrix<S> prod = mat_mul(conj_transpose(m), m);
  return approx_equal(prod, Matrix<S>::identity(m.num_qubits()), tol);
}

/// i^e as a backend scalar, e in [0, 4).
template <class S>
S imag_unit_power(int e) {
  using BT = backend_traits<S>;
  e = ((e % 4) + 4) % 4;
  S out = BT::one();
  for (int j = 0; j < e; ++j) out = out * BT::imag_unit();
  return out;
}

/// Dense materialization of a phased Pauli operator.
template <class S>
Matrix<S> to_dense(const PhasedPauli& p) {
  const PauliLabel& u = p.label();
  if (u.num_qubits() > kMaxDenseQubits) {
    throw std::invalid_argument("to_dense: qubit count exceeds dense cap");
  }
  Matrix<S> m(u.num_qubits());
  size_t d = m.dim();
  for (size_t y = 0; y < d; ++y) {
    int e = pauli_entry_phase_exp(u, static_cast<uint32_t>(y)) + p.phase_exp();
    m.at(y ^ u.x_mask(), y) = imag_unit_power<S>(e);
  }
  return m;
}

template <class S>
Matrix<S> to_dense(const PauliLabel& u) {
  return to_dense<S>(PhasedPauli(u, 0));
}

/// X^x Z^z without the Y phase convention, i.e. entry (y ^ x, y) =
/// (-1)^{y . z}. This is the representative used in closed-form transfer
/// matrix calculations.
template <class S>
Matrix<S> to_dense_xz(int n, uint32_t x_mask, uint32_t z_mask) {
  Matrix<S> m(n);
  size_t d = m.dim();
  for (size_t y = 0; y < d; ++y) {
    int par = std::popcount(static_cast<uint32_t>(y) & z_mask) & 1;
    m.at(y ^ x_mask, y) =
        par ? -backend_traits<S>::one() : backend_traits<S>::one();
  }
  return m;
}

/// sigma_u |psi>, applied sparsely.
template <class S>
StateVector<S> apply_pauli(const PhasedPauli& p, const StateVector<S>& v) {
  const PauliLabel& u = p.label();
  if (u.num_qubits() != v.num_qubits()) {
    throw std::invalid_argument("apply_pauli: dimension mismatch");
  }
  std::array<S, 4> phases = {imag_unit_power<S>(0), imag_unit_power<S>(1),
                             imag_unit_power<S>(2), imag_unit_power<S>(3)};
  StateVector<S> out(v.num_qubits());
  for (size_t y = 0; y < v.dim(); ++y) {
    int e = (pauli_entry_phase_exp(u, static_cast<uint32_t>(y)) +
             p.phase_exp()) & 3;
    out.at(y ^ u.x_mask()) = phases[e] * v.at(y);
  }
  return out;
}

template <class S>
StateVector<S> apply_pauli(const PauliLabel& u, const StateVector<S>& v) {
  return apply_pauli(PhasedPauli(u, 0), v);
}

}  // namespace stabnull

#endif  // STABNULL_MATRIX_HPP
