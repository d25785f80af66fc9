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

#ifndef STABNULL_NULLITY_HPP
#define STABNULL_NULLITY_HPP

#include <bit>
#include <chrono>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "stabnull/circuit.hpp"
#include "stabnull/matrix.hpp"
#include "stabnull/subgroup.hpp"

namespace stabnull {

/// Float-backend threshold for recognizing a +-1 transfer entry. The exact
/// backend ignores it; for Clifford+T unitaries the exact backend is
/// authoritative.
inline constexpr double kDetectTol = 1e-8;

/// Certificate that U sigma_v U^dag == sign * sigma_u.
struct TransferEntry {
  PauliLabel u;
  PauliLabel v;
  int sign = 1;

  bool operator==(const TransferEntry& o) const {
    return u == o.u && v == o.v && sign == o.sign;
  }
};

/// A label with the sign of its +-1 state Pauli function value.
struct SignedLabel {
  PauliLabel u;
  int sign = 1;

  bool operator==(const SignedLabel& o) const {
    return u == o.u && sign == o.sign;
  }
};

struct NullityReport {
  int n = 0;
  uint64_t s_value = 0;
  int nullity = 0;
  bool is_state = false;
  std::vector<TransferEntry> entries;      // unitary case
  std::vector<SignedLabel> state_entries;  // state case
  std::string backend;
  double elapsed_ms = 0.0;

  bool operator==(const NullityReport& o) const {
    return n == o.n && s_value == o.s_value && nullity == o.nullity &&
           is_state == o.is_state && entries == o.entries &&
           state_entries == o.state_entries && backend == o.backend &&
           elapsed_ms == o.elapsed_ms;
  }
};

/// Signals v(W) == 0 in gate_synthesis_lower_bound: a Clifford target gate
/// admits no finite synthesis bound.
class CliffordNoBound : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

namespace detail {

/// Row `row` of U sigma_v U^dag, in O(4^n): (U sigma_v)[row,t] is a permuted,
/// phased copy of U's row, then one inner product per column.
template <class S>
std::vector<S> conjugated_row(const Matrix<S>& U, const PauliLabel& v,
                              size_t row) {
  using BT = backend_traits<S>;
  size_t d = U.dim();
  std::array<S, 4> ip = {imag_unit_power<S>(0), imag_unit_power<S>(1),
                         imag_unit_power<S>(2), imag_unit_power<S>(3)};
  std::vector<S> left(d);
  for (size_t t = 0; t < d; ++t) {
    // sigma_v[y,t] is nonzero only at y = t ^ x_v, with phase i^e(t).
    int e = pauli_entry_phase_exp(v, static_cast<uint32_t>(t));
    left[t] = ip[e] * U.at(row, t ^ v.x_mask());
  }
  std::vector<S> out(d, BT::zero());
  for (size_t y = 0; y < d; ++y) {
    S acc = BT::zero();
    for (size_t t = 0; t < d; ++t) {
      acc += left[t] * BT::conj(U.at(y, t));
    }
    out[y] = acc;
  }
  return out;
}

/// Full W = U sigma_v U^dag in O(8^n).
template <class S>
Matrix<S> conjugate_pauli(const Matrix<S>& U, const PauliLabel& v) {
  using BT = backend_traits<S>;
  size_t d = U.dim();
  std::array<S, 4> ip = {imag_unit_power<S>(0), imag_unit_power<S>(1),
                         imag_unit_power<S>(2), imag_unit_power<S>(3)};
  Matrix<S> left(U.num_qubits());
  for (size_t r = 0; r < d; ++r) {
    for (size_t t = 0; t < d; ++t) {
      int e = pauli_entry_phase_exp(v, static_cast<uint32_t>(t));
      left.at(r, t) = ip[e] * U.at(r, t ^ v.x_mask());
    }
  }
  Matrix<S> out(U.num_qubits());
  for (size_t r = 0; r < d; ++r) {
    for (size_t y = 0; y < d; ++y) {
      S acc = BT::zero();
      for (size_t t = 0; t < d; ++t) {
        acc += left.at(r, t) * BT::conj(U.at(y, t));
      }
      out.at(r, y) = acc;
    }
  }
  return out;
}

}  // namespace detail

/// <psi| sigma_u |psi> as a backend scalar (exact where applicable).
template <class S>
S state_pauli_scalar(const StateVector<S>& psi, const PauliLabel& u) {
  using BT = backend_traits<S>;
  if (psi.num_qubits() != u.num_qubits()) {
    throw std::invalid_argument("state_pauli_function: dimension mismatch");
  }
  std::array<S, 4> ip = {imag_unit_power<S>(0), imag_unit_power<S>(1),
                         imag_unit_power<S>(2), imag_unit_power<S>(3)};
  S acc = BT::zero();
  for (size_t y = 0; y < psi.dim(); ++y) {
    int e = pauli_entry_phase_exp(u, static_cast<uint32_t>(y));
    acc += BT::conj(psi.at(y ^ u.x_mask())) * ip[e] * psi.at(y);
  }
  return acc;
}

/// The state Pauli function tr(|psi><psi| sigma_u); real in [-1, 1].
template <class S>
double state_pauli_function(const StateVector<S>& psi, const PauliLabel& u) {
  using BT = backend_traits<S>;
  S val = state_pauli_scalar(psi, u);
  std::complex<double> z = BT::to_complex(val);
  if (std::abs(z.imag()) >= 1e-10) {
    throw std::logic_error("state_pauli_function: non-real expectation");
  }
  return z.real();
}

/// The unitary Pauli function tr(sigma_u U sigma_v U^dag)/2^n; real in
/// [-1, 1]. Computed as tr((sigma_u U)(sigma_v U^dag)) in O(4^n).
template <class S>
double unitary_pauli_function(const Matrix<S>& U, const PauliLabel& u,
                              const PauliLabel& v) {
  using BT = backend_traits<S>;
  if (U.num_qubits() != u.num_qubits() || U.num_qubits() != v.num_qubits()) {
    throw std::invalid_argument("unitary_pauli_function: dimension mismatch");
  }
  size_t d = U.dim();
  std::array<S, 4> ip = {imag_unit_power<S>(0), imag_unit_power<S>(1),
                         imag_unit_power<S>(2), imag_unit_power<S>(3)};
  // tr(sigma_u U sigma_v U^dag) = sum_{x,t} sigma_u[x, x^xu] U[x^xu, t]
  //                               (sigma_v U^dag)[t, x]
  S acc = BT::zero();
  for (size_t x = 0; x < d; ++x) {
    size_t xu = x ^ u.x_mask();
    int eu = pauli_entry_phase_exp(u, static_cast<uint32_t>(xu));
    for (size_t t = 0; t < d; ++t) {
      // (sigma_v U^dag)[t, x] = i^{ev} conj(U[x, t ^ xv])
      int ev = pauli_entry_phase_exp(v, static_cast<uint32_t>(t ^ v.x_mask()));
      acc += ip[eu] * U.at(xu, t) * ip[ev] * BT::conj(U.at(x, t ^ v.x_mask()));
    }
  }
  std::complex<double> z = BT::to_complex(acc);
  double scale = 1.0 / static_cast<double>(d);
  if (std::abs(z.imag()) * scale >= 1e-10) {
    throw std::logic_error("unitary_pauli_function: non-real trace");
  }
  return z.real() * scale;
}

/// Exact-backend scalar of the Pauli transfer entry, when the division by
/// 2^n stays in the ring: tr(sigma_u U sigma_v U^dag) * (1/sqrt2)^{2n}.
inline ExactScalar ptm_entry_exact(const MatrixX& U, const PauliLabel& u,
                                   const PauliLabel& v) {
  size_t d = U.dim();
  std::array<ExactScalar, 4> ip = {
      imag_unit_power<ExactScalar>(0), imag_unit_power<ExactScalar>(1),
      imag_unit_power<ExactScalar>(2), imag_unit_power<ExactScalar>(3)};
  ExactScalar acc;
  for (size_t x = 0; x < d; ++x) {
    size_t xu = x ^ u.x_mask();
    int eu = pauli_entry_phase_exp(u, static_cast<uint32_t>(xu));
    for (size_t t = 0; t < d; ++t) {
      int ev = pauli_entry_phase_exp(v, static_cast<uint32_t>(t ^ v.x_mask()));
      acc += ip[eu] * U.at(xu, t) * ip[ev] * U.at(x, t ^ v.x_mask()).conj();
    }
  }
  return acc * ExactScalar::inv_sqrt2_pow(2 * static_cast<unsigned>(U.num_qubits()));
}

/// Decides whether U sigma_v U^dag is exactly a signed Pauli, and if so which
/// one. Screens with one O(4^n) row before paying for the O(8^n) full
/// conjugation: a signed Pauli has exactly one unit-modulus entry per row.
template <class S>
std::optional<TransferEntry> conjugate_and_detect(const Matrix<S>& U,
                                                  const PauliLabel& v) {
  using BT = backend_traits<S>;
  int n = U.num_qubits();
  size_t d = U.dim();
  std::vector<S> row0 = detail::conjugated_row(U, v, 0);
  size_t nonzero_col = d;
  for (size_t y = 0; y < d; ++y) {
    if (BT::is_zero(row0[y], kDetectTol)) continue;
    if (nonzero_col != d) return std::nullopt;  // more than one nonzero
    nonzero_col = y;
  }
  if (nonzero_col == d) return std::nullopt;
  if (!BT::is_unit_modulus(row0[nonzero_col], kDetectTol)) return std::nullopt;

  uint32_t x_u = static_cast<uint32_t>(nonzero_col);
  Matrix<S> w = detail::conjugate_pauli(U, v);

  // Bit j of z_u from the sign of row e_j relative to row 0:
  // W[x, x ^ x_u] = W[0, x_u] * (-1)^{x . z_u} for a signed Pauli.
  const S& ref = w.at(0, x_u);
  uint32_t z_u = 0;
  for (int j = 0; j < n; ++j) {
    uint32_t x = uint32_t{1} << j;
    const S& cand = w.at(x, x ^ x_u);
    if (BT::equal(cand, ref, kDetectTol)) {
      // bit stays 0
    } else if (BT::equal(cand, -ref, kDetectTol)) {
      z_u |= x;
    } else {
      return std::nullopt;
    }
  }
  PauliLabel u(n, x_u, z_u);

  // Sign from the (0, x_u) entry of sigma_u, then verify all entries.
  S expect = imag_unit_power<S>(pauli_entry_phase_exp(u, x_u));
  int sign;
  if (BT::equal(ref, expect, kDetectTol)) {
    sign = 1;
  } else if (BT::equal(ref, -expect, kDetectTol)) {
    sign = -1;
  } else {
    return std::nullopt;
  }
  std::array<S, 4> ip = {imag_unit_power<S>(0), imag_unit_power<S>(1),
                         imag_unit_power<S>(2), imag_unit_power<S>(3)};
  for (size_t y = 0; y < d; ++y) {
    int e = pauli_entry_phase_exp(u, static_cast<uint32_t>(y));
    S val = ip[e];
    if (sign < 0) val = -val;
    for (size_t x = 0; x < d; ++x) {
      const S& got = w.at(x, y);
      if (x == (y ^ x_u)) {
        if (!BT::equal(got, val, kDetectTol)) return std::nullopt;
      } else {
        if (!BT::is_zero(got, kDetectTol)) return std::nullopt;
      }
    }
  }
  return TransferEntry{u, v, sign};
}

/// s(U) and the unitary stabilizer nullity v(U) = 2n - log2 s(U), with the
/// certified transfer entries. Every report is checked against two theorems
/// (s is a power of two; the u labels close under composition); a violation
/// means a backend tolerance bug, not math, and throws.
template <class S>
NullityReport compute_s_unitary(const Matrix<S>& U, int threads = 1) {
  auto start = std::chrono::steady_clock::now();
  int n = U.num_qubits();
  size_t total = size_t{1} << (2 * n);
  std::vector<std::optional<TransferEntry>> hits(total);

  auto scan = [&](size_t begin, size_t end) {
    for (size_t code = begin; code < end; ++code) {
      PauliLabel v = PauliLabel::decode(n, static_cast<uint32_t>(code));
      hits[code] = conjugate_and_detect(U, v);
    }
  };
  if (threads <= 1 || total < 64) {
    scan(0, total);
  } else {
    size_t k = std::min<size_t>(threads, total);
    std::vector<std::thread> pool;
    size_t chunk = (total + k - 1) / k;
    for (size_t t = 0; t < k; ++t) {
      size_t begin = t * chunk;
      size_t end = std::min(total, begin + chunk);
      if (begin >= end) break;
      pool.emplace_back(scan, begin, end);
    }
    for (auto& th : pool) th.join();
  }

  NullityReport rep;
  rep.n = n;
  rep.is_state = false;
  rep.backend = backend_traits<S>::name();
  std::vector<PauliLabel> u_labels;
  for (size_t code = 0; code < total; ++code) {
    if (hits[code]) {
      rep.entries.push_back(*hits[code]);
      u_labels.push_back(hits[code]->u);
    }
  }
  rep.s_value = rep.entries.size();
  if (rep.s_value == 0 || (rep.s_value & (rep.s_value - 1)) != 0) {
    throw std::logic_error(
        "compute_s_unitary: s is not a power of two; backend tolerance bug");
  }
  LabelSubgroup closure = LabelSubgroup::span(n, u_labels);
  if (closure.size() != rep.s_value) {
    throw std::logic_error(
        "compute_s_unitary: transfer labels are not a subgroup; backend "
        "tolerance bug");
  }
  rep.nullity = 2 * n - std::countr_zero(rep.s_value);
  rep.elapsed_ms = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  return rep;
}

/// s(|psi>) and the state stabilizer nullity n - log2 s.
template <class S>
NullityReport compute_s_state(const StateVector<S>& psi) {
  using BT = backend_traits<S>;
  auto start = std::chrono::steady_clock::now();
  int n = psi.num_qubits();
  size_t total = size_t{1} << (2 * n);
  NullityReport rep;
  rep.n = n;
  rep.is_state = true;
  rep.backend = BT::name();
  const S one = BT::one();
  for (size_t code = 0; code < total; ++code) {
    PauliLabel u = PauliLabel::decode(n, static_cast<uint32_t>(code));
    S val = state_pauli_scalar(psi, u);
    if (BT::equal(val, one, kDetectTol)) {
      rep.state_entries.push_back(SignedLabel{u, 1});
    } else if (BT::equal(val, -one, kDetectTol)) {
      rep.state_entries.push_back(SignedLabel{u, -1});
    }
  }
  rep.s_value = rep.state_entries.size();
  if (rep.s_value == 0 || (rep.s_value & (rep.s_value - 1)) != 0) {
    throw std::logic_error(
        "compute_s_state: s is not a power of two; backend tolerance bug");
  }
  rep.nullity = n - std::countr_zero(rep.s_value);
  rep.elapsed_ms = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  return rep;
}

/// Stab(|psi>) = {P in the full Pauli group : P|psi> = |psi>}. Only real
/// signs can occur, so members carry phase_exp 0 or 2.
template <class S>
std::vector<PhasedPauli> stab_group(const StateVector<S>& psi) {
  int n = psi.num_qubits();
  size_t total = size_t{1} << (2 * n);
  std::vector<PhasedPauli> out;
  for (size_t code = 0; code < total; ++code) {
    PauliLabel u = PauliLabel::decode(n, static_cast<uint32_t>(code));
    StateVector<S> mapped = apply_pauli(u, psi);
    if (approx_equal(mapped, psi, kDetectTol)) {
      out.push_back(PhasedPauli(u, 0));
      continue;
    }
    for (auto& a : mapped.data()) a = -a;
    if (approx_equal(mapped, psi, kDetectTol)) {
      out.push_back(PhasedPauli(u, 2));
    }
  }
  return out;
}

/// P_U = U P_n U^dag intersect P_n, as a verified subgroup.
template <class S>
LabelSubgroup subgroup_P_U(const Matrix<S>& U, int threads = 1) {
  NullityReport rep = compute_s_unitary(U, threads);
  std::vector<PauliLabel> labels;
  labels.reserve(rep.entries.size());
  for (const auto& e : rep.entries) labels.push_back(e.u);
  return LabelSubgroup::span(U.num_qubits(), labels);
}

/// U is Clifford iff s(U) == 4^n.
template <class S>
bool is_clifford(const Matrix<S>& U, int threads = 1) {
  NullityReport rep = compute_s_unitary(U, threads);
  return rep.s_value == (uint64_t{1} << (2 * U.num_qubits()));
}

struct TCountBound {
  int bound = 0;
  int t_gates_used = 0;
  NullityReport report;
};

/// T-count lower bound: t(U) >= v(U). For Clifford+T circuit listings the
/// bound is checked against the listing's own T-gate count as a soundness
/// self-check.
template <class S>
TCountBound t_count_lower_bound(const Circuit& c,
                                int width_cap = kDefaultWidthCap,
                                int threads = 1) {
  Matrix<S> U = build_unitary<S>(c, width_cap);
  TCountBound out;
  out.report = compute_s_unitary(U, threads);
  out.bound = out.report.nullity;
  out.t_gates_used = count_t_gates(c);
  if (c.is_clifford_plus_t() && out.bound > out.t_gates_used) {
    throw std::logic_error(
        "t_count_lower_bound: bound exceeds the circuit's own T-gate count");
  }
  return out;
}

/// ceil(v(U) / v(W)): a lower bound on how many W gates any Clifford+W
/// synthesis of U needs. Throws CliffordNoBound when v(W) == 0.
template <class S>
int gate_synthesis_lower_bound(const Matrix<S>& U, const Matrix<S>& W,
                               int threads = 1) {
  int vu = compute_s_unitary(U, threads).nullity;
  int vw = compute_s_unitary(W, threads).nullity;
  if (vw == 0) {
    throw CliffordNoBound(
        "gate_synthesis_lower_bound: W is Clifford (v(W) == 0), no finite "
        "bound");
  }
  return (vu + vw - 1) / vw;
}

}  // namespace stabnull

#endif  // STABNULL_NULLITY_HPP
