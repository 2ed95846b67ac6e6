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

#ifndef MEULER_LOCALIZATION_HPP_
#define MEULER_LOCALIZATION_HPP_

// Degrees of monomials in the classes lambda_0, ..., lambda_n as signed counts
// of permutations w of E whose descent set matches a target computed from the
// exponents and the lex-minimal basis positions K(w).

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "meuler/arithmetic.hpp"
#include "meuler/chow_expansion.hpp"
#include "meuler/composition.hpp"
#include "meuler/element_set.hpp"
#include "meuler/error.hpp"
#include "meuler/matroid.hpp"

namespace meuler {

/// Global sign of the descent sum, applied as kSignCalibration^r.  Fixed once
/// from deg_{U(2,3)}(lambda_2) = 1; see calibrate_sign().
inline constexpr int kSignCalibration = -1;

/// Bitmask over positions 0..n.
using PositionSet = std::uint32_t;

struct PermutationEval {
  std::vector<int> w;      // w[i] = element in position i
  FlagChain flag;          // F_1 < ... < F_r (proper part of the complete flag)
  PositionSet basis_positions = 0;  // K(w)
  PositionSet descents = 0;         // Des(w), inside 0..n-1

  int descent_count() const { return std::popcount(descents); }
};

inline PermutationEval perm_flag_and_basis(const Matroid& m, const std::vector<int>& w) {
  if (static_cast<int>(w.size()) != m.size()) {
    fail(ErrorCode::kPreconditionViolation, "permutation has the wrong length");
  }
  PermutationEval out;
  out.w = w;
  ElementSet seen = 0;
  ElementSet current = 0;
  for (int i = 0; i < m.size(); ++i) {
    if (w[i] < 0 || w[i] >= m.size() || contains(seen, w[i])) {
      fail(ErrorCode::kPreconditionViolation, "not a permutation of the ground set");
    }
    seen |= singleton(w[i]);
    if (!contains(current, w[i])) {
      current = m.closure_of(current | singleton(w[i]));
      out.basis_positions |= singleton(i);
      if (current != m.ground()) out.flag.push_back(current);
    }
    if (i + 1 < m.size() && w[i] > w[i + 1]) out.descents |= singleton(i);
  }
  return out;
}

/// I = {i in 0..n-1 : c_0 + ... + c_i < i + 1} with c_i = d_i + [i not in K].
inline PositionSet descent_target(const std::vector<int>& d, PositionSet basis_positions) {
  PositionSet out = 0;
  int prefix = 0;
  const int n = static_cast<int>(d.size()) - 1;
  for (int i = 0; i < n; ++i) {
    prefix += d[i] + (contains(basis_positions, i) ? 0 : 1);
    if (prefix < i + 1) out |= singleton(i);
  }
  return out;
}

/// Counts of permutations by (K(w), Des(w)).  Built once per matroid; the
/// (n+1)! walk is the only expensive part of the descent formula.
class LocalizationTable {
 public:
  explicit LocalizationTable(const Matroid& m) : size_(m.size()), dimension_(m.dimension()) {
    if (m.size() > 10) {
      fail(ErrorCode::kGroundSetTooLarge, "descent sums are limited to 10 elements");
    }
    std::vector<int> w(m.size());
    std::iota(w.begin(), w.end(), 0);
    do {
      const PermutationEval eval = perm_flag_and_basis(m, w);
      ++counts_[{eval.basis_positions, eval.descents}];
    } while (std::next_permutation(w.begin(), w.end()));
  }

  int size() const { return size_; }
  int dimension() const { return dimension_; }

  /// sum over w with Des(w) = I(d, K(w)) of (-1)^{n-r+des(w)}, no calibration.
  BigInt literal_sum(const std::vector<int>& d) const {
    check_exponents(d);
    BigInt total = 0;
    const int n = size_ - 1;
    for (const auto& [key, count] : counts_) {
      if (descent_target(d, key.first) != key.second) continue;
      const int sign_exponent = n - dimension_ + std::popcount(key.second);
      total += sign_exponent % 2 ? -count : count;
    }
    return total;
  }

  BigInt lambda_degree(const std::vector<int>& d) const {
    const BigInt literal = literal_sum(d);
    return dimension_ % 2 && kSignCalibration < 0 ? -literal : literal;
  }

  const std::map<std::pair<PositionSet, PositionSet>, BigInt>& counts() const { return counts_; }

 private:
  void check_exponents(const std::vector<int>& d) const {
    if (static_cast<int>(d.size()) != size_) {
      fail(ErrorCode::kExponentMismatch, "need n + 1 exponents");
    }
    int total = 0;
    for (int x : d) {
      if (x < 0) fail(ErrorCode::kExponentMismatch, "negative exponent");
      total += x;
    }
    if (total != dimension_) {
      fail(ErrorCode::kExponentMismatch, "exponents sum to " + std::to_string(total) +
                                             ", expected " + std::to_string(dimension_));
    }
  }

  int size_;
  int dimension_;
  std::map<std::pair<PositionSet, PositionSet>, BigInt> counts_;
};

/// deg(lambda_0^{d_0} ... lambda_n^{d_n}).
inline BigInt lambda_monomial_degree(const Matroid& m, const std::vector<int>& d) {
  return LocalizationTable(m).lambda_degree(d);
}

/// Recovers the calibration sign from U(2,3), where deg(lambda_2) = 1.
inline int calibrate_sign() {
  const BigInt literal = LocalizationTable(build_uniform(2, 3)).literal_sum({0, 0, 1});
  if (literal != 1 && literal != -1) {
    fail(ErrorCode::kPreconditionViolation, "calibration case is not a unit");
  }
  return literal == 1 ? 1 : -1;
}

/// gamma_1^{c_1} ... gamma_n^{c_n} rewritten with gamma_k = lambda_k + ... +
/// lambda_n, as a map from lambda exponent vectors (d_0..d_n) to coefficients.
inline std::map<std::vector<int>, BigInt> gamma_to_lambda(const Composition& c) {
  const int n = c.parts();
  std::map<std::vector<int>, BigInt> poly{{std::vector<int>(n + 1, 0), BigInt(1)}};
  for (int k = 1; k <= n; ++k) {
    for (int times = 0; times < c[k]; ++times) {
      std::map<std::vector<int>, BigInt> next;
      for (const auto& [d, coefficient] : poly) {
        for (int j = k; j <= n; ++j) {
          std::vector<int> e = d;
          ++e[j];
          next[e] += coefficient;
        }
      }
      poly = std::move(next);
    }
  }
  return poly;
}

inline BigInt gamma_degree_via_localization(const LocalizationTable& table, const Composition& c) {
  if (c.parts() != table.size() - 1 || c.total() != table.dimension()) {
    fail(ErrorCode::kCompositionMismatch,
         "composition " + to_string(c) + " does not match the matroid");
  }
  BigInt total = 0;
  for (const auto& [d, coefficient] : gamma_to_lambda(c)) {
    total += coefficient * table.lambda_degree(d);
  }
  return total;
}

inline BigInt gamma_degree_via_localization(const Matroid& m, const Composition& c) {
  if (c.parts() != m.top_index() || c.total() != m.dimension()) {
    fail(ErrorCode::kCompositionMismatch,
         "composition " + to_string(c) + " does not match the matroid");
  }
  return gamma_degree_via_localization(LocalizationTable(m), c);
}

/// Restriction of lambda_k to the Chow ring: sum_{S containing n} x_S minus
/// sum_{|S| >= k+1} x_S (the second sum is absent for k = n).
inline DegreeOneClass lambda_class(const Matroid& m, int k) {
  if (k < 0 || k > m.top_index()) fail(ErrorCode::kVOutOfRange, "lambda index out of range");
  DegreeOneClass out;
  for (ElementSet f : m.proper_flats()) {
    int coefficient = contains(f, m.top_index()) ? 1 : 0;
    if (k < m.top_index() && cardinality(f) >= k + 1) coefficient -= 1;
    if (coefficient != 0) out[f] = coefficient;
  }
  return out;
}

/// Constant term of xi_{w(0)}^{c_0} ... xi_{w(n)}^{c_n} / prod (xi_{w(i)} -
/// xi_{w(i+1)}) with every factor expanded as a geometric series in
/// xi_b / xi_a for a < b.  Exhaustive over series indices; meant for n <= 4.
inline BigInt localization_constant_term(const std::vector<int>& w, const std::vector<int>& c) {
  const int size = static_cast<int>(w.size());
  if (static_cast<int>(c.size()) != size || size > 6) {
    fail(ErrorCode::kPreconditionViolation, "symbolic check needs matching sizes, n <= 5");
  }
  int bound = size;
  for (int x : c) bound += std::abs(x);
  // exponent vector indexed by variable -> coefficient
  std::map<std::vector<int>, BigInt> current;
  {
    std::vector<int> start(size, 0);
    for (int i = 0; i < size; ++i) start[w[i]] += c[i];
    current[start] = 1;
  }
  for (int i = 0; i + 1 < size; ++i) {
    const int a = w[i];
    const int b = w[i + 1];
    const int big = std::min(a, b);
    const int small = std::max(a, b);
    const int sign = a < b ? 1 : -1;
    std::map<std::vector<int>, BigInt> next;
    for (const auto& [e, coefficient] : current) {
      for (int k = 0; k <= bound; ++k) {
        std::vector<int> f = e;
        f[big] -= 1 + k;
        f[small] += k;
        next[f] += sign * coefficient;
      }
    }
    current = std::move(next);
  }
  auto it = current.find(std::vector<int>(size, 0));
  return it == current.end() ? BigInt(0) : it->second;
}

/// The descent rule: (-1)^{des(w)} when Des(w) = I_c, else 0.
inline BigInt descent_rule_value(const std::vector<int>& w, const std::vector<int>& c) {
  PositionSet target = 0;
  PositionSet descents = 0;
  int prefix = 0;
  const int n = static_cast<int>(w.size()) - 1;
  for (int i = 0; i < n; ++i) {
    prefix += c[i];
    if (prefix < i + 1) target |= singleton(i);
    if (w[i] > w[i + 1]) descents |= singleton(i);
  }
  if (target != descents) return 0;
  return std::popcount(descents) % 2 ? -1 : 1;
}

}  // namespace meuler

#endif  // MEULER_LOCALIZATION_HPP_
