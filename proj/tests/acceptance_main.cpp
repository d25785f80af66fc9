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
//
// Acceptance suite: one self-contained criterion per line, each with a
// wall-clock budget. Exit code 0 iff every criterion passes within budget.

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <sstream>
#include <vector>

#include "stabnull/circuit.hpp"
#include "stabnull/nullity.hpp"
#include "stabnull/random_circuits.hpp"
#include "stabnull/stabilizer_enum.hpp"
#include "stabnull/subgroup.hpp"
#include "stabnull/theorem_suite.hpp"

using namespace stabnull;
using cd = std::complex<double>;

namespace {

Circuit single_t() { return parse_circuit("qubits 1\nt 0\n"); }

Circuit s_after_t() { return parse_circuit("qubits 1\nt 0\ns 0\n"); }

Circuit ccz_circuit() { return parse_circuit("qubits 3\nccz 0 1 2\n"); }

StateF all_plus(int n) {
  StateF v(n);
  double amp = std::pow(2.0, -0.5 * n);
  for (size_t x = 0; x < v.dim(); ++x) v.at(x) = {amp, 0.0};
  return v;
}

// Criterion 1: exact transfer matrix of T matches the published 4x4 display
// {1, +-sqrt2/2, 0}, and v(T) = 1.
bool criterion_1(std::ostream& log) {
  MatrixX t = build_unitary<ExactScalar>(single_t());
  const ExactScalar one(1);
  const ExactScalar r = ExactScalar::inv_sqrt2_pow(1);
  const ExactScalar zero;
  const PauliLabel L[4] = {
      PauliLabel::from_str("I"), PauliLabel::from_str("X"),
      PauliLabel::from_str("Y"), PauliLabel::from_str("Z")};
  const ExactScalar expect[4][4] = {
      {one, zero, zero, zero},
      {zero, r, -r, zero},
      {zero, r, r, zero},
      {zero, zero, zero, one},
  };
  for (int iu = 0; iu < 4; ++iu) {
    for (int iv = 0; iv < 4; ++iv) {
      ExactScalar got = ptm_entry_exact(t, L[iu], L[iv]);
      if (got != expect[iu][iv]) {
        log << "PTM entry (" << L[iu].str() << "," << L[iv].str()
            << ") = " << got.str() << ", expected " << expect[iu][iv].str();
        return false;
      }
    }
  }
  NullityReport rep = compute_s_unitary(t);
  if (rep.nullity != 1 || rep.s_value != 2) {
    log << "v(T) = " << rep.nullity << ", expected 1";
    return false;
  }
  return true;
}

// Criterion 2: v(CCZ) = 3 = v_s(CCZ|+++>), maximum over all 1080 3-qubit
// stabilizer states attained at |+++>.
bool criterion_2(std::ostream& log) {
  MatrixX ccz_x = build_unitary<ExactScalar>(ccz_circuit());
  NullityReport rep = compute_s_unitary(ccz_x);
  if (rep.nullity != 3) {
    log << "v(CCZ) = " << rep.nullity << ", expected 3";
    return false;
  }
  MatrixF ccz = build_unitary<cd>(ccz_circuit());
  int at_plus = compute_s_state(ccz * all_plus(3)).nullity;
  if (at_plus != 3) {
    log << "v_s(CCZ|+++>) = " << at_plus << ", expected 3";
    return false;
  }
  StabilizerStateSet set = enumerate_stabilizer_states(3);
  if (set.states.size() != 1080) {
    log << "enumerated " << set.states.size() << " states, expected 1080";
    return false;
  }
  StateMaxResult best = max_state_nullity(ccz, set);
  if (best.max_nullity != 3) {
    log << "state max " << best.max_nullity << ", expected 3";
    return false;
  }
  return true;
}

// Criterion 3: the 2n-family at n = 3 and n = 4: s = 1, v = 2n, P_U trivial.
bool criterion_3(std::ostream& log) {
  for (int n : {3, 4}) {
    MatrixX u = build_unitary<ExactScalar>(special_family(n));
    NullityReport rep = compute_s_unitary(u);
    if (rep.s_value != 1 || rep.nullity != 2 * n) {
      log << "n=" << n << ": s=" << rep.s_value << " v=" << rep.nullity
          << ", expected s=1 v=" << 2 * n;
      return false;
    }
    LabelSubgroup pu = subgroup_P_U(u);
    if (pu.size() != 1) {
      log << "n=" << n << ": |P_U| = " << pu.size() << ", expected 1";
      return false;
    }
  }
  return true;
}

// Criterion 4: strict separation for the n = 3 family member.
bool criterion_4(std::ostream& log) {
  MatrixF u = build_unitary<cd>(special_family(3));
  int v = compute_s_unitary(u).nullity;
  StabilizerStateSet set = enumerate_stabilizer_states(3);
  StateMaxResult best = max_state_nullity(u, set);
  if (!(best.max_nullity <= 3 && 3 < v && v == 6)) {
    log << "state max = " << best.max_nullity << ", v(U) = " << v
        << "; expected max <= 3 < 6 = v";
    return false;
  }
  return true;
}

// Criterion 5: v(U) == v_s((I x U)|Phi>) over the corpus, zero failures.
bool criterion_5(std::ostream& log) {
  std::vector<std::pair<std::string, Circuit>> corpus = {
      {"T", single_t()},
      {"S.T", s_after_t()},
      {"cs_via_t", controlled_s_via_t()},
      {"special2", special_family(2)},
      {"t_tensor_t", parse_circuit("qubits 2\nt 0\nt 1\n")},
  };
  std::mt19937_64 rng(2026);
  for (int j = 0; j < 50; ++j) {
    int n = 1 + static_cast<int>(rng() % 2);
    corpus.push_back({"random" + std::to_string(j),
                      random_clifford_t_circuit(n, 10 * n + 8, rng)});
  }
  for (const auto& [name, c] : corpus) {
    MatrixF u = build_unitary<cd>(c);
    int v = compute_s_unitary(u).nullity;
    int aux = aux_nullity(u, maximally_entangled<cd>(c.width));
    if (aux != v) {
      log << name << ": aux = " << aux << " != v = " << v;
      return false;
    }
  }
  return true;
}

// Criterion 6: the property suite at five seeds, exact assertions only.
bool criterion_6(std::ostream& log) {
  const std::vector<std::string> names = {
      "faithfulness",           "clifford_invariance",
      "tensor_additivity",      "composition_subadditivity",
      "intersection_bound",     "integrality_power_of_two",
      "stab_group_equivalence", "lagrange_product",
  };
  for (uint64_t seed = 1; seed <= 5; ++seed) {
    auto results = run_selected(seed, Scale::Standard, names, 2);
    for (const auto& r : results) {
      if (!r.passed) {
        log << "seed " << seed << ", " << r.name << ": " << r.witness;
        return false;
      }
    }
  }
  return true;
}

// Criterion 7: f(q,s,p) closed form == brute sum, exhaustive n=3 plus 10^4
// random triples at n in {4, 5}.
bool criterion_7(std::ostream& log) {
  for (uint32_t q = 0; q < 8; ++q) {
    for (uint32_t s = 0; s < 8; ++s) {
      for (uint32_t p = 0; p < 8; ++p) {
        if (f_closed_form(q, s, p, 3) != f_brute(q, s, p, 3)) {
          log << "n=3 mismatch at q=" << q << " s=" << s << " p=" << p;
          return false;
        }
      }
    }
  }
  std::mt19937_64 rng(2027);
  for (int n = 4; n <= 5; ++n) {
    uint32_t lim = uint32_t{1} << n;
    for (int j = 0; j < 10000; ++j) {
      uint32_t q = rng() % lim, s = rng() % lim, p = rng() % lim;
      if (f_closed_form(q, s, p, n) != f_brute(q, s, p, n)) {
        log << "n=" << n << " mismatch at q=" << q << " s=" << s << " p=" << p;
        return false;
      }
    }
  }
  return true;
}

// Criterion 8: the state-nullity subadditivity counterexample reproduces
// (0, 0, 1) while unitary subadditivity holds for the same matrices.
bool criterion_8(std::ostream& log) {
  CheckResult r = state_subadditivity_counterexample();
  if (!r.passed) log << r.witness;
  return r.passed;
}

// Criterion 9: bound <= T gates used on every Clifford+T corpus circuit;
// the 7-T Toffoli reports bound 3 against the published exact count 7.
bool criterion_9(std::ostream& log) {
  std::vector<std::pair<std::string, Circuit>> corpus = {
      {"T", single_t()},
      {"S.T", s_after_t()},
      {"toffoli_7t", toffoli_7t()},
      {"ccz_7t", ccz_7t()},
      {"cs_via_t", controlled_s_via_t()},
  };
  std::mt19937_64 rng(2028);
  for (int j = 0; j < 20; ++j) {
    int n = 1 + static_cast<int>(rng() % 3);
    corpus.push_back({"random" + std::to_string(j),
                      random_clifford_t_circuit(n, 10 * n + 8, rng)});
  }
  for (const auto& [name, c] : corpus) {
    TCountBound b = t_count_lower_bound<cd>(c);
    if (b.bound > b.t_gates_used) {
      log << name << ": bound " << b.bound << " > used " << b.t_gates_used;
      return false;
    }
    if (name == "toffoli_7t") {
      if (b.bound != 3 || b.t_gates_used != 7) {
        log << "toffoli_7t: bound " << b.bound << " used " << b.t_gates_used
            << ", expected 3 and 7";
        return false;
      }
    }
  }
  return true;
}

// Criterion 10: exact and float backends agree on s for the whole corpus at
// n <= 4.
bool criterion_10(std::ostream& log) {
  std::vector<std::pair<std::string, Circuit>> corpus = {
      {"T", single_t()},
      {"S.T", s_after_t()},
      {"toffoli_7t", toffoli_7t()},
      {"ccz_7t", ccz_7t()},
      {"cs_via_t", controlled_s_via_t()},
      {"special3", special_family(3)},
      {"special4", special_family(4)},
      {"ccz", ccz_circuit()},
  };
  std::mt19937_64 rng(2029);
  for (int n = 1; n <= 4; ++n) {
    int count = n == 4 ? 3 : 6;
    for (int j = 0; j < count; ++j) {
      corpus.push_back({"random_n" + std::to_string(n) + "_" + std::to_string(j),
                        random_clifford_t_circuit(n, 8 * n + 6, rng)});
    }
  }
  for (const auto& [name, c] : corpus) {
    uint64_t s_float = compute_s_unitary(build_unitary<cd>(c)).s_value;
    uint64_t s_exact =
        compute_s_unitary(build_unitary<ExactScalar>(c)).s_value;
    if (s_float != s_exact) {
      log << name << ": float s = " << s_float << ", exact s = " << s_exact;
      return false;
    }
  }
  return true;
}

struct Criterion {
  int id;
  const char* what;
  double budget_ms;
  std::function<bool(std::ostream&)> fn;
};

}  // namespace

int main() {
  // First GMP/scalar use allocates; warm up outside any timed region.
  { volatile bool warm = ExactScalar::omega().is_unit_modulus(); (void)warm; }

  const std::vector<Criterion> criteria = {
      {1, "v(T)=1 and exact 4x4 transfer matrix of T", 1.0, criterion_1},
      {2, "v(CCZ)=3 attained at |+++> over all 1080 states", 5000.0,
       criterion_2},
      {3, "2n-family: v=6 (n=3) and v=8 (n=4), s=1, trivial P_U", 32000.0,
       criterion_3},
      {4, "strict separation: state max <= 3 < 6 = v(U)", 60000.0,
       criterion_4},
      {5, "ancilla attainment v(U) == v_s((I x U)|Phi>), zero failures",
       30000.0, criterion_5},
      {6, "property suite over 5 seeds, zero failures", 120000.0, criterion_6},
      {7, "f(q,s,p) closed form == brute sum", 10000.0, criterion_7},
      {8, "state subadditivity counterexample (0,0,1)", 1000.0, criterion_8},
      {9, "soundness: bound <= T gates used; Toffoli bound 3 vs exact 7",
       10000.0, criterion_9},
      {10, "backend agreement on s for all corpus circuits at n <= 4",
       120000.0, criterion_10},
  };

  bool all_ok = true;
  for (const auto& c : criteria) {
    std::ostringstream log;
    auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = c.fn(log);
    } catch (const std::exception& e) {
      log << "exception: " << e.what();
    }
    double ms = std::chrono::duration<double, std::milli>(
                    std::chrono::steady_clock::now() - start)
                    .count();
    bool in_budget = ms < c.budget_ms;
    bool pass = ok && in_budget;
    all_ok = all_ok && pass;
    std::cout << (pass ? "[PASS]" : "[FAIL]") << " criterion " << c.id << ": "
              << c.what << " (" << ms << " ms, budget " << c.budget_ms
              << " ms)";
    if (!ok) std::cout << " -- " << log.str();
    if (ok && !in_budget) std::cout << " -- exceeded runtime budget";
    std::cout << "\n";
  }
  std::cout << (all_ok ? "acceptance: all criteria passed"
                       : "acceptance: FAILURES present")
            << "\n";
  return all_ok ? 0 : 1;
}
