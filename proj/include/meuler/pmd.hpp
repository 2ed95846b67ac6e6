// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MEULER_PMD_HPP_
#define MEULER_PMD_HPP_

// Perfect matroid designs (all rank-i flats of one size n_i) and the remixed
// Eulerian numbers A_c(q) realized by projective geometries.

#include <map>
#include <string>
#include <vector>

#include "meuler/arithmetic.hpp"
#include "meuler/chow_expansion.hpp"
#include "meuler/composition.hpp"
#include "meuler/error.hpp"
#include "meuler/linear_algebra.hpp"
#include "meuler/matroid.hpp"

namespace meuler {

struct PmdProfile {
  std::vector<int> sizes;   // sizes[i] = n_i for i = 0..r+1; n_0 = 0, n_{r+1} = n+1
  std::vector<Rational> counts;  // counts[i] = N_i for i = 1..r; counts[0] unused
  Rational volume;          // V_M

  int dimension() const { return static_cast<int>(sizes.size()) - 2; }
};

inline PmdProfile pmd_profile(const Matroid& m) {
  PmdProfile out;
  const int r = m.dimension();
  out.sizes.assign(r + 2, 0);
  out.sizes[r + 1] = m.size();
  for (int i = 1; i <= r; ++i) {
    const auto& flats = m.flats_of_rank(i);
    const int size = cardinality(flats.front());
    for (ElementSet f : flats) {
      if (cardinality(f) != size) {
        fail(ErrorCode::kNotPMD, "rank-" + std::to_string(i) + " flats " +
                                     set_to_string(flats.front()) + " and " + set_to_string(f) +
                                     " differ in size");
      }
    }
    out.sizes[i] = size;
  }
  const auto& n = out.sizes;
  out.counts.assign(r + 1, Rational(0));
  out.volume = 1;
  for (int i = 1; i <= r; ++i) {
    Rational count = 1;
    for (int j = 0; j < i; ++j) count *= Rational(n[i + 1] - n[j], n[i] - n[j]);
    out.counts[i] = count;
    out.volume *= count * Rational(n[i + 1] - n[i], n[i + 1]);
  }
  return out;
}

/// Rank-indexed exponents (c_1..c_r) placed at positions n_1..n_r.
inline Composition size_composition(const PmdProfile& profile, const std::vector<int>& c) {
  const int r = profile.dimension();
  if (static_cast<int>(c.size()) != r) {
    fail(ErrorCode::kCompositionMismatch, "need r exponents");
  }
  Composition out{std::vector<int>(profile.sizes[r + 1] - 1, 0)};
  for (int i = 1; i <= r; ++i) out.entries[profile.sizes[i] - 1] += c[i - 1];
  return out;
}

inline bool is_lopsided(const std::vector<int>& c) {
  int prefix = 0;
  for (std::size_t j = 0; j < c.size(); ++j) {
    prefix += c[j];
    if (prefix < static_cast<int>(j) + 1) return false;
  }
  return true;
}

/// V_M n_1^{c_1} ... n_r^{c_r}.
inline BigInt lopsided_degree(const Matroid& m, const std::vector<int>& c) {
  const PmdProfile profile = pmd_profile(m);
  if (static_cast<int>(c.size()) != profile.dimension()) {
    fail(ErrorCode::kCompositionMismatch, "need r exponents");
  }
  int total = 0;
  for (int x : c) {
    if (x < 0) fail(ErrorCode::kNotLopsided, "negative exponent");
    total += x;
  }
  if (total != profile.dimension()) fail(ErrorCode::kCompositionMismatch, "exponents must sum to r");
  if (!is_lopsided(c)) fail(ErrorCode::kNotLopsided, to_string(c) + " is not lopsided");
  Rational value = profile.volume;
  for (std::size_t i = 0; i < c.size(); ++i) {
    value *= power(Rational(profile.sizes[i + 1]), static_cast<unsigned>(c[i]));
  }
  return to_integer(value);
}

struct Rank3Values {
  BigInt low_low;    // deg(gamma_{n_1}^2)
  BigInt low_high;   // deg(gamma_{n_1} gamma_{n_2})
  BigInt high_high;  // deg(gamma_{n_2}^2)
};

/// Closed forms for a rank 3 perfect matroid design.
inline Rank3Values rank3_closed_forms(const Matroid& m) {
  const PmdProfile profile = pmd_profile(m);
  if (profile.dimension() != 2) fail(ErrorCode::kPreconditionViolation, "rank must be 3");
  const BigInt e = m.size();
  const BigInt n1 = profile.sizes[1];
  const BigInt n2 = profile.sizes[2];
  return {to_integer(Rational((e - n1) * (e - n2) * n1) / Rational(n2)), (e - n1) * (e - n2),
          (e - n2) * (e - n2)};
}

struct RecurrenceCheck {
  BigInt lhs;  // (n_{i+1} - n_{i-1}) A_c
  BigInt rhs;
  bool holds;
};

/// (n_{i+1}-n_{i-1}) A_c = (n_i-n_{i-1}) A_{c-e_i+e_{i+1}} + (n_{i+1}-n_i) A_{c-e_i+e_{i-1}},
/// with all three numbers from the flag expansion; gamma_0 and gamma_{n+1} vanish.
inline RecurrenceCheck pmd_recurrence_check(const Matroid& m, const std::vector<int>& c, int i) {
  const PmdProfile profile = pmd_profile(m);
  const int r = profile.dimension();
  if (static_cast<int>(c.size()) != r) fail(ErrorCode::kCompositionMismatch, "need r exponents");
  if (i < 1 || i > r || c[i - 1] < 2) {
    fail(ErrorCode::kPreconditionViolation, "exponent at " + std::to_string(i) + " must be >= 2");
  }
  const auto& n = profile.sizes;
  auto degree_with = [&](int neighbour) -> BigInt {
    if (neighbour < 1 || neighbour > r) return 0;
    std::vector<int> shifted = c;
    --shifted[i - 1];
    ++shifted[neighbour - 1];
    return mixed_eulerian_degree(m, size_composition(profile, shifted));
  };
  RecurrenceCheck out;
  out.lhs = BigInt(n[i + 1] - n[i - 1]) * mixed_eulerian_degree(m, size_composition(profile, c));
  out.rhs = BigInt(n[i] - n[i - 1]) * degree_with(i + 1) +
            BigInt(n[i + 1] - n[i]) * degree_with(i - 1);
  out.holds = out.lhs == out.rhs;
  return out;
}

/// All of W_r in a fixed order.
inline std::vector<std::vector<int>> remixed_index_set(int r) {
  std::vector<std::vector<int>> out;
  for (const Composition& c : all_compositions(r, r)) out.push_back(c.entries);
  return out;
}

/// Every A_c(q), c in W_r, from A_{1..1} = (r)_q! and
/// (q+1) A_c = q A_{c-e_i+e_{i-1}} + A_{c-e_i+e_{i+1}} for c_i >= 2.
inline std::map<std::vector<int>, Rational> remixed_eulerian_table(int r, const Rational& q) {
  if (r < 1) fail(ErrorCode::kRankOutOfRange, "r must be positive");
  if (q <= 0) fail(ErrorCode::kPreconditionViolation, "q must be positive");
  const std::vector<std::vector<int>> index = remixed_index_set(r);
  std::map<std::vector<int>, int> position;
  for (std::size_t k = 0; k < index.size(); ++k) position[index[k]] = static_cast<int>(k);

  RationalMatrix a;
  std::vector<Rational> b;
  std::vector<Rational> row(index.size(), Rational(0));
  row[position[std::vector<int>(r, 1)]] = 1;
  a.push_back(row);
  b.push_back(q_factorial<Rational>(r, q));
  for (const auto& c : index) {
    for (int i = 0; i < r; ++i) {
      if (c[i] < 2) continue;
      std::fill(row.begin(), row.end(), Rational(0));
      row[position[c]] += q + 1;
      if (i > 0) {
        std::vector<int> left = c;
        --left[i];
        ++left[i - 1];
        row[position[left]] -= q;
      }
      if (i + 1 < r) {
        std::vector<int> right = c;
        --right[i];
        ++right[i + 1];
        row[position[right]] -= 1;
      }
      a.push_back(row);
      b.push_back(0);
    }
  }
  const SolveResult solved = solve_linear_system(a, b);
  if (solved.status != SolveStatus::kUnique) {
    fail(ErrorCode::kSingularSystem, solved.status == SolveStatus::kInconsistent
                                         ? "remixed system is inconsistent"
                                         : "remixed system is underdetermined");
  }
  std::map<std::vector<int>, Rational> out;
  for (std::size_t k = 0; k < index.size(); ++k) out[index[k]] = solved.solution[k];
  return out;
}

inline Rational remixed_eulerian_eval(int r, const std::vector<int>& c, const Rational& q) {
  if (static_cast<int>(c.size()) != r) fail(ErrorCode::kCompositionMismatch, "need r exponents");
  const auto table = remixed_eulerian_table(r, q);
  auto it = table.find(c);
  if (it == table.end()) fail(ErrorCode::kCompositionMismatch, to_string(c) + " is not in W_r");
  return it->second;
}

struct IdentityCheck {
  BigInt lhs;
  BigInt rhs;
  bool holds;
};

/// deg_{PG(r,q)}(gamma_{n_1}^{c_1} ... gamma_{n_r}^{c_r}) against q^{C(r+1,2)} A_c(q).
inline IdentityCheck pg_identity_check(const Matroid& pg, int r, int q, const std::vector<int>& c) {
  const PmdProfile profile = pmd_profile(pg);
  IdentityCheck out;
  out.lhs = mixed_eulerian_degree(pg, size_composition(profile, c));
  const Rational scaled = power(Rational(q), static_cast<unsigned>(r * (r + 1) / 2)) *
                          remixed_eulerian_eval(r, c, Rational(q));
  out.rhs = to_integer(scaled);
  out.holds = out.lhs == out.rhs;
  return out;
}

inline IdentityCheck pg_identity_check(int r, int q, const std::vector<int>& c) {
  return pg_identity_check(build_projective_geometry(r, q), r, q, c);
}

}  // namespace meuler

#endif  // MEULER_PMD_HPP_
