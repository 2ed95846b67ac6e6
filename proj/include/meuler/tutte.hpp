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

#ifndef MEULER_TUTTE_HPP_
#define MEULER_TUTTE_HPP_

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "meuler/arithmetic.hpp"
#include "meuler/element_set.hpp"
#include "meuler/matroid.hpp"

namespace meuler {

enum class TutteMethod { kCorankNullity, kDeletionContraction };

namespace detail {

/// sum_{a,b} count[a][b] (x-1)^a (y-1)^b expanded in x, y.
inline BivariatePoly expand_shifted(const std::vector<std::vector<BigInt>>& count) {
  BivariatePoly out;
  for (std::size_t a = 0; a < count.size(); ++a) {
    for (std::size_t b = 0; b < count[a].size(); ++b) {
      if (count[a][b] == 0) continue;
      for (std::size_t i = 0; i <= a; ++i) {
        const BigInt xi = binomial(a, i) * (((a - i) % 2) ? -1 : 1);
        for (std::size_t j = 0; j <= b; ++j) {
          const BigInt yj = binomial(b, j) * (((b - j) % 2) ? -1 : 1);
          out.add(static_cast<int>(i), static_cast<int>(j), count[a][b] * xi * yj);
        }
      }
    }
  }
  return out;
}

inline BivariatePoly tutte_corank_nullity(const Matroid& m) {
  const int size = m.size();
  const int full = m.rank();
  std::vector<std::vector<BigInt>> count(full + 1, std::vector<BigInt>(size + 1, 0));
  for (ElementSet s = 0; s <= m.ground(); ++s) {
    const int r = m.rank_of(s);
    ++count[full - r][cardinality(s) - r];
    if (s == m.ground()) break;
  }
  return expand_shifted(count);
}

/// Deletion/contraction on minors (ground G, contracted flat C) of the input,
/// always deleting the smallest surviving element.
class TutteRecursion {
 public:
  explicit TutteRecursion(const Matroid& m) : m_(m) {}

  BivariatePoly run() { return visit(m_.ground(), 0); }

 private:
  int minor_rank(ElementSet s, ElementSet contracted) const {
    return m_.rank_of(s | contracted) - m_.rank_of(contracted);
  }

  BivariatePoly visit(ElementSet ground, ElementSet contracted) {
    if (ground == 0) {
      BivariatePoly one;
      one.add(0, 0, 1);
      return one;
    }
    const std::uint64_t key = (std::uint64_t{ground} << 32) | contracted;
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;

    const int i = min_element(ground);
    const ElementSet rest = ground & ~singleton(i);
    BivariatePoly out;
    if (minor_rank(rest, contracted) < minor_rank(ground, contracted)) {
      out = visit(rest, contracted).shifted(1, 0);
    } else {
      // Elements parallel to i become loops after contracting i.
      ElementSet parallel = 0;
      for (int e : elements_of(ground)) {
        if (minor_rank(singleton(e) | singleton(i), contracted) == 1) parallel |= singleton(e);
      }
      const int p = cardinality(parallel);
      out = visit(rest, contracted) + visit(ground & ~parallel, contracted | parallel)
                                          .shifted(0, p - 1);
    }
    memo_.emplace(key, out);
    return out;
  }

  const Matroid& m_;
  std::unordered_map<std::uint64_t, BivariatePoly> memo_;
};

}  // namespace detail

inline BivariatePoly tutte_polynomial(const Matroid& m,
                                      TutteMethod method = TutteMethod::kCorankNullity) {
  if (method == TutteMethod::kCorankNullity) return detail::tutte_corank_nullity(m);
  return detail::TutteRecursion(m).run();
}

struct CharacteristicData {
  UnivariatePoly chi;          // in lambda
  UnivariatePoly chi_reduced;  // chi / (lambda - 1)
  std::vector<BigInt> mu;      // mu^0 .. mu^r
};

inline CharacteristicData characteristic_data(const Matroid& m) {
  const UnivariatePoly t = tutte_polynomial(m).at_y_equals_zero();
  // T(1 - lambda, 0) by Horner in (1 - lambda).
  const UnivariatePoly one_minus_lambda({1, -1});
  UnivariatePoly value;
  for (int k = t.degree(); k >= 0; --k) {
    value = value * one_minus_lambda + UnivariatePoly::constant(t.coefficient(k));
  }
  CharacteristicData out;
  out.chi = m.rank() % 2 ? BigInt(-1) * value : value;
  out.chi_reduced = out.chi.divide_by_linear(1);
  const int r = m.dimension();
  for (int k = 0; k <= r; ++k) out.mu.push_back(abs(out.chi_reduced.coefficient(r - k)));
  return out;
}

inline std::vector<BigInt> mu_sequence(const Matroid& m) { return characteristic_data(m).mu; }

}  // namespace meuler

#endif  // MEULER_TUTTE_HPP_
