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

#ifndef MEULER_COMPOSITION_HPP_
#define MEULER_COMPOSITION_HPP_

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "meuler/arithmetic.hpp"
#include "meuler/error.hpp"

namespace meuler {

/// Exponent vector (c_1, ..., c_n); entries[k - 1] is the exponent of gamma_k.
struct Composition {
  std::vector<int> entries;

  int parts() const { return static_cast<int>(entries.size()); }
  int total() const { return std::accumulate(entries.begin(), entries.end(), 0); }
  int operator[](int k) const { return entries[k - 1]; }

  friend bool operator==(const Composition&, const Composition&) = default;
  friend auto operator<=>(const Composition&, const Composition&) = default;
};

/// Multiset of hypersimplex indices (v_1, ..., v_m): the product
/// gamma_{v_1} ... gamma_{v_m}.  Order matters only for the factor order of an
/// expansion.
using VVector = std::vector<int>;

/// v = 1^{c_1} 2^{c_2} ... n^{c_n}.
inline VVector to_vvector(const Composition& c) {
  VVector v;
  for (int k = 1; k <= c.parts(); ++k) v.insert(v.end(), c[k], k);
  return v;
}

/// Inverse of to_vvector; throws VOutOfRange on indices outside 1..n.
inline Composition to_composition(const VVector& v, int n) {
  Composition c{std::vector<int>(n, 0)};
  for (int x : v) {
    if (x < 1 || x > n) {
      fail(ErrorCode::kVOutOfRange, "index " + std::to_string(x) + " outside 1.." +
                                        std::to_string(n));
    }
    ++c.entries[x - 1];
  }
  return c;
}

inline VVector sorted(VVector v) {
  std::sort(v.begin(), v.end());
  return v;
}

/// Calls `visit` on every weak composition of `total` into `parts` parts.
inline void for_each_composition(int total, int parts,
                                 const std::function<void(const Composition&)>& visit) {
  if (parts <= 0) {
    if (total == 0) visit(Composition{});
    return;
  }
  Composition c{std::vector<int>(parts, 0)};
  std::function<void(int, int)> fill = [&](int index, int remaining) {
    if (index == parts - 1) {
      c.entries[index] = remaining;
      visit(c);
      return;
    }
    for (int x = remaining; x >= 0; --x) {
      c.entries[index] = x;
      fill(index + 1, remaining - x);
    }
  };
  fill(0, total);
}

inline std::vector<Composition> all_compositions(int total, int parts) {
  std::vector<Composition> out;
  for_each_composition(total, parts, [&out](const Composition& c) { out.push_back(c); });
  return out;
}

/// total! / prod c_i!.
inline BigInt multinomial(const Composition& c) {
  BigInt out = factorial(c.total());
  for (int x : c.entries) out /= factorial(x);
  return out;
}

inline std::string to_string(const std::vector<int>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(v[i]);
  }
  return out + ")";
}

inline std::string to_string(const Composition& c) { return to_string(c.entries); }

}  // namespace meuler

#endif  // MEULER_COMPOSITION_HPP_
