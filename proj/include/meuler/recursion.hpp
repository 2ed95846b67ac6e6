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

#ifndef MEULER_RECURSION_HPP_
#define MEULER_RECURSION_HPP_

// Evaluators built from the relations among the numbers
// C_{v,s}(M) = deg(gamma_{v_1} ... gamma_{v_{r-s}} gamma_n^s).  They delegate to
// the flag expansion whenever a relation does not apply.

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "meuler/arithmetic.hpp"
#include "meuler/chow_expansion.hpp"
#include "meuler/composition.hpp"
#include "meuler/error.hpp"
#include "meuler/matroid.hpp"
#include "meuler/tutte.hpp"

namespace meuler {

struct SupportClass {
  bool contiguous = false;
  bool flatly_contiguous = false;
  int low = 0;   // witness interval [low, high]
  int high = 0;
};

inline SupportClass classify_support(const Matroid& m, const VVector& v) {
  if (v.empty()) fail(ErrorCode::kPreconditionViolation, "empty vector");
  const std::set<int> support(v.begin(), v.end());
  SupportClass out;
  out.low = *support.begin();
  out.high = *support.rbegin();
  out.contiguous = static_cast<int>(support.size()) == out.high - out.low + 1;
  out.flatly_contiguous = true;
  for (int size : m.proper_flat_sizes()) {
    if (size >= out.low && size <= out.high && !support.count(size)) {
      out.flatly_contiguous = false;
    }
  }
  return out;
}

/// C_{v,s}(M) with the conventions gamma_k = 0 for k <= 0 and k >= n+1.
inline BigInt c_value(const Matroid& m, VVector v, int s) {
  v.insert(v.end(), s, m.top_index());
  for (int x : v) {
    if (x <= 0 || x >= m.size()) return 0;
  }
  return gamma_product_degree(m, v);
}

namespace detail {

inline VVector remove_index(const VVector& v, int k) {
  VVector out = v;
  out.erase(out.begin() + (k - 1));
  return out;
}

inline VVector add_constant(VVector v, int delta) {
  for (int& x : v) x += delta;
  return v;
}

inline bool in_range(const Matroid& m, const VVector& v) {
  return std::all_of(v.begin(), v.end(), [&m](int x) { return x >= 1 && x <= m.top_index(); });
}

/// Index (1-based) of the first entry equal to its successor, or 0.
inline int first_repeat(const VVector& v) {
  for (std::size_t k = 1; k < v.size(); ++k) {
    if (v[k] == v[k - 1]) return static_cast<int>(k);
  }
  return 0;
}

inline bool eulerian_applies(const Matroid& m, const VVector& v) {
  return m.dimension() >= 2 && static_cast<int>(v.size()) == m.dimension() && in_range(m, v) &&
         std::is_sorted(v.begin(), v.end()) && first_repeat(v) > 0 &&
         classify_support(m, v).flatly_contiguous;
}

inline BigInt eulerian_step(const Matroid& m, const VVector& v, int j);

inline BigInt eulerian_or_oracle(const Matroid& m, VVector v) {
  for (int x : v) {
    if (x <= 0 || x >= m.size()) return 0;
  }
  std::sort(v.begin(), v.end());
  if (eulerian_applies(m, v)) return eulerian_step(m, v, first_repeat(v));
  return gamma_product_degree(m, v);
}

inline BigInt eulerian_step(const Matroid& m, const VVector& v, int j) {
  const int k = v[j - 1];
  const VVector rest = remove_index(v, j);
  Rational total = 0;
  for (ElementSet f : m.flats_of_rank(1)) {
    const Rational w = mult_weight(m.size(), cardinality(f), k);
    if (w == 0) continue;
    const Minor minor = contraction(m, f);
    total += w * Rational(eulerian_or_oracle(minor.matroid, add_constant(rest, -cardinality(f))));
  }
  for (ElementSet f : m.flats_of_rank(m.dimension())) {
    const Rational w = mult_weight(m.size(), cardinality(f), k);
    if (w == 0) continue;
    const Minor minor = restriction(m, f);
    total += w * Rational(eulerian_or_oracle(minor.matroid, rest));
  }
  return to_integer(total);
}

}  // namespace detail

/// Degree through the relation for a repeated entry v_j = v_{j+1} of a sorted
/// flatly contiguous vector; minors recurse the same way when they can.
inline BigInt eulerian_recursion_degree(const Matroid& m, const VVector& v, int j) {
  if (static_cast<int>(v.size()) != m.dimension()) {
    fail(ErrorCode::kCompositionMismatch, "need exactly r entries");
  }
  if (!std::is_sorted(v.begin(), v.end())) fail(ErrorCode::kPreconditionViolation, "not sorted");
  if (!detail::in_range(m, v)) fail(ErrorCode::kVOutOfRange, "entries must lie in 1..n");
  if (!classify_support(m, v).flatly_contiguous) {
    fail(ErrorCode::kPreconditionViolation, to_string(v) + " is not flatly contiguous");
  }
  const int size = static_cast<int>(v.size());
  const bool repeated = j >= 1 && j <= size &&
                        ((j < size && v[j] == v[j - 1]) || (j > 1 && v[j - 2] == v[j - 1]));
  if (!repeated) {
    fail(ErrorCode::kPreconditionViolation, "entry " + std::to_string(j) + " is not repeated");
  }
  return detail::eulerian_step(m, v, j);
}

namespace detail {

inline bool delcon_applies(const Matroid& m, const VVector& v, int s) {
  if (m.rank() < 3 || v.empty()) return false;
  if (!std::is_sorted(v.begin(), v.end()) || !classify_support(m, v).contiguous) return false;
  return s == 0 || v.front() == 1;
}

inline BigInt delcon_step(const Matroid& m, const VVector& v, int s, int i);

inline BigInt delcon_or_oracle(const Matroid& m, VVector v, int s) {
  if (s < 0) return 0;
  for (int x : v) {
    if (x <= 0 || x >= m.size()) return 0;
  }
  if (s > 0 && m.top_index() < 1) return 0;
  std::sort(v.begin(), v.end());
  if (delcon_applies(m, v, s)) return delcon_step(m, v, s, 0);
  return c_value(m, v, s);
}

inline BigInt delcon_step(const Matroid& m, const VVector& v, int s, int i) {
  const Deletion del = deletion(m, i);
  const Minor con = contraction(m, m.closure_of(singleton(i)));
  const int p = del.deleted_coloop ? 1 : cardinality(m.closure_of(singleton(i)));
  BigInt total = 0;
  if (!del.deleted_coloop) {
    total += delcon_or_oracle(del.matroid, v, s);
  } else if (s >= 1) {
    total += delcon_or_oracle(del.matroid, v, s - 1);
  }
  const int length = static_cast<int>(v.size());
  for (int k = 1; k <= length; ++k) {
    VVector shifted = remove_index(v, k);
    for (int a = 0; a < k - 1; ++a) shifted[a] += 1;
    total += delcon_or_oracle(con.matroid, add_constant(shifted, -p), s);
  }
  return total;
}

}  // namespace detail

/// C_{v,s}(M) by deleting and contracting element i.
inline BigInt deletion_contraction_degree(const Matroid& m, const VVector& v, int s, int i) {
  if (m.rank() < 3) fail(ErrorCode::kRankTooSmall, "rank " + std::to_string(m.rank()) + " < 3");
  if (static_cast<int>(v.size()) + s != m.dimension() || s < 0) {
    fail(ErrorCode::kCompositionMismatch, "need r - s entries");
  }
  if (v.empty() || !std::is_sorted(v.begin(), v.end()) || !classify_support(m, v).contiguous) {
    fail(ErrorCode::kPreconditionViolation, to_string(v) + " is not contiguous and sorted");
  }
  if (s != 0 && v.front() != 1) {
    fail(ErrorCode::kPreconditionViolation, "s > 0 needs v_1 = 1");
  }
  if (!detail::in_range(m, v)) fail(ErrorCode::kVOutOfRange, "entries must lie in 1..n");
  if (i < 0 || i >= m.size()) fail(ErrorCode::kPreconditionViolation, "no such element");
  return detail::delcon_step(m, v, s, i);
}

/// deg(gamma_v gamma_w) by splitting at flats of rank |v| + 1.
inline BigInt two_block_degree(const Matroid& m, const VVector& v, const VVector& w) {
  if (static_cast<int>(v.size() + w.size()) != m.dimension()) {
    fail(ErrorCode::kCompositionMismatch, "blocks must have r entries in total");
  }
  if (v.empty() || w.empty()) fail(ErrorCode::kPreconditionViolation, "empty block");
  if (!detail::in_range(m, v) || !detail::in_range(m, w)) {
    fail(ErrorCode::kVOutOfRange, "entries must lie in 1..n");
  }
  if (!std::is_sorted(v.begin(), v.end()) || !std::is_sorted(w.begin(), w.end())) {
    fail(ErrorCode::kPreconditionViolation, "blocks must be sorted");
  }
  const SupportClass sv = classify_support(m, v);
  const SupportClass sw = classify_support(m, w);
  if (!sv.flatly_contiguous || !sw.flatly_contiguous) {
    fail(ErrorCode::kPreconditionViolation, "blocks must be flatly contiguous");
  }
  for (int x : v) {
    if (std::find(w.begin(), w.end(), x) != w.end()) {
      fail(ErrorCode::kPreconditionViolation, "supports overlap at " + std::to_string(x));
    }
  }
  if (v.front() != 1) fail(ErrorCode::kPreconditionViolation, "1 must be in the first block");
  const std::vector<int> sizes = m.proper_flat_sizes();
  if (!sizes.empty() && w.back() < sizes.back()) {
    fail(ErrorCode::kPreconditionViolation, "second block ends below the largest flat size");
  }
  const int ell = static_cast<int>(v.size());
  const ElementSet t = largest_elements(m.ground(), m.size() - w.front());
  const VVector w_tail(w.begin() + 1, w.end());
  BigInt total = 0;
  for (ElementSet f : m.flats_of_rank(ell + 1)) {
    const int oi = over_intersection(m.ground(), f, t);
    if (oi == 0) continue;
    const Minor below = restriction(m, f);
    const Minor above = contraction(m, f);
    total += oi * c_value(below.matroid, v, 0) *
             c_value(above.matroid, detail::add_constant(w_tail, -cardinality(f)), 0);
  }
  return total;
}

/// C_v(M, y) = sum_k C_{v + k, 0}(M) y^k.
inline UnivariatePoly cv_polynomial(const Matroid& m, const VVector& v) {
  if (static_cast<int>(v.size()) != m.dimension()) {
    fail(ErrorCode::kCompositionMismatch, "need exactly r entries");
  }
  for (int x : v) {
    if (x < 1) fail(ErrorCode::kVOutOfRange, "entries must be positive");
  }
  UnivariatePoly out;
  if (v.empty()) return UnivariatePoly::constant(1);
  const int top = *std::max_element(v.begin(), v.end());
  for (int k = 0; top + k <= m.top_index(); ++k) {
    out.set_coefficient(k, c_value(m, detail::add_constant(v, k), 0));
  }
  return out;
}

/// C_{v,0}(M) = sum_j [y^j] T_M(1, y) C_{v - j, 0}(U_{r+1, r+1}).
inline BigInt cv_via_tutte_convolution(const Matroid& m, const VVector& v) {
  if (static_cast<int>(v.size()) != m.dimension()) {
    fail(ErrorCode::kCompositionMismatch, "need exactly r entries");
  }
  if (v.empty() || !std::is_sorted(v.begin(), v.end()) || !classify_support(m, v).contiguous) {
    fail(ErrorCode::kPreconditionViolation, to_string(v) + " is not contiguous and sorted");
  }
  const UnivariatePoly t = tutte_polynomial(m).at_x_equals_one();
  const Matroid boolean = build_boolean(m.rank());
  BigInt total = 0;
  for (int j = 0; j < v.front(); ++j) {
    const BigInt coefficient = t.coefficient(j);
    if (coefficient == 0) continue;
    total += coefficient * c_value(boolean, detail::add_constant(v, -j), 0);
  }
  return total;
}

}  // namespace meuler

#endif  // MEULER_RECURSION_HPP_
