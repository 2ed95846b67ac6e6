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

#ifndef MEULER_CHOW_EXPANSION_HPP_
#define MEULER_CHOW_EXPANSION_HPP_

// Reference evaluator: products of hypersimplex classes gamma_k are expanded
// factor by factor against monomials x_F1 ... x_Fc of flags of flats.  Each
// gamma_k only sees the unique gap (F_j, F_j+1) with |F_j| < k < |F_j+1| and
// contributes the flats strictly inside that gap, weighted by the restriction
// of gamma to the interval minor.  After r factors only full flags remain and
// each has degree one.

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "meuler/arithmetic.hpp"
#include "meuler/composition.hpp"
#include "meuler/element_set.hpp"
#include "meuler/error.hpp"
#include "meuler/linear_algebra.hpp"
#include "meuler/matroid.hpp"

namespace meuler {

enum class WeightConvention {
  /// Over-intersection weights against the largest elements; integral.
  kOverIntersection,
  /// Size-only multiplicities; rational.
  kMultiplicity,
};

inline const char* to_string(WeightConvention c) {
  return c == WeightConvention::kOverIntersection ? "oi" : "mult";
}

enum class FactorOrder { kAscending, kAsGiven };

/// Strictly increasing proper nonempty flats.
using FlagChain = std::vector<ElementSet>;

/// OI_U(S, T) = |S & T| - max(0, |S| + |T| - |U|), for S, T inside U.
inline int over_intersection(ElementSet universe, ElementSet s, ElementSet t) {
  const int excess = cardinality(s) + cardinality(t) - cardinality(universe);
  return cardinality(s & t) - std::max(0, excess);
}

/// mult_U(s, k) = min(s, k) - k s / |U|.
inline Rational mult_weight(int universe_size, int s, int k) {
  return Rational(std::min(s, k)) - Rational(k * s, universe_size);
}

class WeightedFlagSum {
 public:
  using Terms = std::map<FlagChain, Rational>;

  void add(const FlagChain& flag, const Rational& weight) {
    if (weight == 0) return;
    auto [it, inserted] = terms_.try_emplace(flag, weight);
    if (!inserted) {
      it->second += weight;
      if (it->second == 0) terms_.erase(it);
    }
  }

  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

  Rational total() const {
    Rational sum = 0;
    for (const auto& [flag, w] : terms_) sum += w;
    return sum;
  }

  Rational weight_of(const FlagChain& flag) const {
    auto it = terms_.find(flag);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  friend bool operator==(const WeightedFlagSum&, const WeightedFlagSum&) = default;

 private:
  Terms terms_;
};

/// One term of gamma_k * x_flag: insert `flat` at `position` with `factor`.
struct GapInsertion {
  int position;
  ElementSet flat;
  Rational factor;
};

/// Bounds of the gap that gamma_k falls into, or nothing when k equals the
/// size of a flat in the chain (then gamma_k x_flag = 0).
struct Gap {
  int position;  // index in the flag where a new flat would be inserted
  ElementSet lower;
  ElementSet upper;
};

inline std::optional<Gap> locate_gap(const Matroid& m, const FlagChain& flag, int k) {
  ElementSet lower = 0;
  for (std::size_t j = 0; j <= flag.size(); ++j) {
    const ElementSet upper = j < flag.size() ? flag[j] : m.ground();
    const int size = cardinality(upper);
    if (size == k) return std::nullopt;
    if (cardinality(lower) < k && k < size) {
      return Gap{static_cast<int>(j), lower, upper};
    }
    lower = upper;
  }
  return std::nullopt;
}

/// Weight of the flat G inside the gap (lower, upper) in gamma_k.
inline Rational gap_weight(ElementSet lower, ElementSet upper, ElementSet g, int k,
                           WeightConvention convention) {
  const ElementSet universe = upper & ~lower;
  const ElementSet part = g & ~lower;
  if (convention == WeightConvention::kOverIntersection) {
    const ElementSet t = largest_elements(universe, cardinality(upper) - k);
    return over_intersection(universe, part, t);
  }
  return mult_weight(cardinality(universe), cardinality(part), k - cardinality(lower));
}

/// All nonzero terms of gamma_k * x_flag.
inline std::vector<GapInsertion> multiply_by_gamma(const Matroid& m, const FlagChain& flag,
                                                   int k, WeightConvention convention) {
  std::vector<GapInsertion> out;
  const auto gap = locate_gap(m, flag, k);
  if (!gap) return out;
  for (ElementSet g : m.proper_flats()) {
    if (!is_proper_subset(gap->lower, g) || !is_proper_subset(g, gap->upper)) continue;
    Rational w = gap_weight(gap->lower, gap->upper, g, k, convention);
    if (w != 0) out.push_back({gap->position, g, std::move(w)});
  }
  return out;
}

inline void check_factor_indices(const Matroid& m, const VVector& v) {
  for (int x : v) {
    if (x < 1 || x > m.top_index()) {
      fail(ErrorCode::kVOutOfRange, "gamma index " + std::to_string(x) + " outside 1.." +
                                        std::to_string(m.top_index()));
    }
  }
  if (static_cast<int>(v.size()) > m.dimension()) {
    fail(ErrorCode::kVOutOfRange, std::to_string(v.size()) + " factors exceed dimension " +
                                      std::to_string(m.dimension()));
  }
}

/// gamma_{v_1} ... gamma_{v_m} as a weighted sum of flag monomials.
inline WeightedFlagSum expand_gamma_product(const Matroid& m, const VVector& v,
                                            WeightConvention convention,
                                            FactorOrder order = FactorOrder::kAscending) {
  check_factor_indices(m, v);
  const VVector factors = order == FactorOrder::kAscending ? sorted(v) : v;
  WeightedFlagSum current;
  current.add({}, 1);
  for (int k : factors) {
    WeightedFlagSum next;
    for (const auto& [flag, weight] : current.terms()) {
      for (const GapInsertion& step : multiply_by_gamma(m, flag, k, convention)) {
        FlagChain extended = flag;
        extended.insert(extended.begin() + step.position, step.flat);
        next.add(extended, weight * step.factor);
      }
    }
    current = std::move(next);
  }
  return current;
}

/// C_{v,0}(M) = deg(gamma_{v_1} ... gamma_{v_r}), with gamma_k = 0 for k <= 0 or
/// k >= n+1.  Requires |v| = r.
inline BigInt gamma_product_degree(const Matroid& m, const VVector& v,
                                   WeightConvention convention =
                                       WeightConvention::kOverIntersection,
                                   FactorOrder order = FactorOrder::kAscending) {
  if (static_cast<int>(v.size()) != m.dimension()) {
    fail(ErrorCode::kCompositionMismatch, std::to_string(v.size()) + " factors, dimension " +
                                              std::to_string(m.dimension()));
  }
  for (int x : v) {
    if (x <= 0 || x >= m.size()) return 0;
  }
  return to_integer(expand_gamma_product(m, v, convention, order).total());
}

/// A_{c_1..c_n}(M) = deg(gamma_1^{c_1} ... gamma_n^{c_n}).
inline BigInt mixed_eulerian_degree(const Matroid& m, const Composition& c,
                                    WeightConvention convention =
                                        WeightConvention::kOverIntersection) {
  if (c.parts() != m.top_index() || c.total() != m.dimension()) {
    fail(ErrorCode::kCompositionMismatch,
         "composition " + to_string(c) + " needs " + std::to_string(m.top_index()) +
             " parts summing to " + std::to_string(m.dimension()));
  }
  return gamma_product_degree(m, to_vvector(c), convention);
}

/// Memoizes degrees of sorted factor lists for one matroid.  Not thread-safe.
class DegreeCache {
 public:
  explicit DegreeCache(const Matroid& m,
                       WeightConvention convention = WeightConvention::kOverIntersection)
      : matroid_(m), convention_(convention) {}

  const BigInt& degree(const VVector& v) {
    VVector key = sorted(v);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    BigInt value = gamma_product_degree(matroid_, key, convention_);
    return cache_.emplace(std::move(key), std::move(value)).first->second;
  }

  const BigInt& degree(const Composition& c) { return degree(to_vvector(c)); }

  const Matroid& matroid() const { return matroid_; }

 private:
  const Matroid& matroid_;
  WeightConvention convention_;
  std::map<VVector, BigInt> cache_;
};

/// PVol(M) = deg((gamma_1 + ... + gamma_n)^r) by multinomial expansion.
inline BigInt pvol(const Matroid& m) {
  BigInt total = 0;
  DegreeCache cache(m);
  for_each_composition(m.dimension(), m.top_index(), [&](const Composition& c) {
    total += multinomial(c) * cache.degree(c);
  });
  return total;
}

/// Flags F_1 < ... < F_k < E with rk(F_i) = i and
/// min F_1 > ... > min F_k > min E = 0.
inline BigInt count_initial_descending_flags(const Matroid& m, int k) {
  if (k < 0 || k > m.dimension()) {
    fail(ErrorCode::kRankOutOfRange, "flag length " + std::to_string(k));
  }
  BigInt count = 0;
  // Walks chains rank by rank; the next flat must introduce a new minimum.
  std::function<void(ElementSet, int)> walk = [&](ElementSet below, int depth) {
    if (depth == k) {
      if (k == 0 || !contains(below, 0)) ++count;
      return;
    }
    for (ElementSet f : m.flats_of_rank(depth + 1)) {
      if (!is_proper_subset(below, f)) continue;
      if (below != 0 && min_element(f) >= min_element(below)) continue;
      walk(f, depth + 1);
    }
  };
  walk(0, 0);
  return count;
}

struct LogConcavityResult {
  bool holds;
  BigInt ii;  // deg(gamma^c gamma_i^2)
  BigInt jj;  // deg(gamma^c gamma_j^2)
  BigInt ij;  // deg(gamma^c gamma_i gamma_j)
};

inline LogConcavityResult log_concavity_check(DegreeCache& cache, const Composition& c, int i,
                                              int j) {
  const Matroid& m = cache.matroid();
  if (c.parts() != m.top_index() || c.total() + 2 != m.dimension()) {
    fail(ErrorCode::kCompositionMismatch, "composition must sum to r - 2");
  }
  if (i < 1 || j < 1 || i > m.top_index() || j > m.top_index()) {
    fail(ErrorCode::kVOutOfRange, "class indices must lie in 1..n");
  }
  VVector base = to_vvector(c);
  auto with = [&base](int a, int b) {
    VVector v = base;
    v.push_back(a);
    v.push_back(b);
    return v;
  };
  LogConcavityResult out{false, cache.degree(with(i, i)), cache.degree(with(j, j)),
                         cache.degree(with(i, j))};
  out.holds = out.ii * out.jj <= out.ij * out.ij;
  return out;
}

inline LogConcavityResult log_concavity_check(const Matroid& m, const Composition& c, int i,
                                              int j) {
  DegreeCache cache(m);
  return log_concavity_check(cache, c, i, j);
}

/// A degree-one class as its coefficient on each proper flat.  Representatives
/// are not unique: two vectors denote the same class when they differ by a
/// combination of the linear relations sum_{F∋i} x_F - sum_{F∋j} x_F.
using DegreeOneClass = std::map<ElementSet, Rational>;

inline DegreeOneClass gamma_class(const Matroid& m, int k, WeightConvention convention) {
  if (k < 1 || k > m.top_index()) fail(ErrorCode::kVOutOfRange, "gamma index out of range");
  DegreeOneClass out;
  for (ElementSet f : m.proper_flats()) {
    Rational w = gap_weight(0, m.ground(), f, k, convention);
    if (w != 0) out[f] = w;
  }
  return out;
}

inline DegreeOneClass combine(const DegreeOneClass& a, const Rational& sa, const DegreeOneClass& b,
                              const Rational& sb) {
  DegreeOneClass out;
  for (const auto& [f, w] : a) out[f] += sa * w;
  for (const auto& [f, w] : b) out[f] += sb * w;
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

/// True when a - b lies in the span of the linear relations of A^1(M).
inline bool classes_equal(const Matroid& m, const DegreeOneClass& a, const DegreeOneClass& b) {
  const auto& flats = m.proper_flats();
  const DegreeOneClass diff = combine(a, 1, b, -1);
  if (diff.empty()) return true;
  // Columns: u_i - u_0 for i = 1..n, then the difference vector.
  RationalMatrix matrix(flats.size(), std::vector<Rational>(m.size(), 0));
  for (std::size_t row = 0; row < flats.size(); ++row) {
    const ElementSet f = flats[row];
    for (int i = 1; i < m.size(); ++i) {
      matrix[row][i - 1] = Rational(contains(f, i) ? 1 : 0) - Rational(contains(f, 0) ? 1 : 0);
    }
    auto it = diff.find(f);
    matrix[row][m.size() - 1] = it == diff.end() ? Rational(0) : it->second;
  }
  RationalMatrix without_last = matrix;
  for (auto& row : without_last) row.pop_back();
  return matrix_rank(matrix) == matrix_rank(without_last);
}

/// Postnikov tree: increasing binary tree whose vertices carry flats; vertex
/// i was inserted by the (i+1)-th factor, so vertices[i].label == i + 1.
struct TreeVertex {
  int label = 0;
  ElementSet flat = 0;
  int left = -1;
  int right = -1;
};

struct PostnikovTree {
  std::vector<TreeVertex> vertices;

  int root() const { return vertices.empty() ? -1 : 0; }

  /// Binary-search insertion of a new flat; comparable with every flat present.
  void insert(ElementSet flat) {
    const int index = static_cast<int>(vertices.size());
    vertices.push_back({index + 1, flat, -1, -1});
    if (index == 0) return;
    int node = 0;
    while (true) {
      int& child = is_proper_subset(flat, vertices[node].flat) ? vertices[node].left
                                                                : vertices[node].right;
      if (child < 0) {
        child = index;
        return;
      }
      node = child;
    }
  }

  /// Vertex indices in binary search order.
  std::vector<int> search_order() const {
    std::vector<int> out;
    std::function<void(int)> visit = [&](int node) {
      if (node < 0) return;
      visit(vertices[node].left);
      out.push_back(node);
      visit(vertices[node].right);
    };
    visit(root());
    return out;
  }

  FlagChain flag() const {
    FlagChain out;
    for (int b : search_order()) out.push_back(vertices[b].flat);
    return out;
  }

  /// Nested-parenthesis rendering of the shape with labels: "(L)label(R)".
  std::string shape() const {
    std::function<std::string(int)> render = [&](int node) -> std::string {
      if (node < 0) return "";
      return "(" + render(vertices[node].left) + ")" + std::to_string(vertices[node].label) +
             "(" + render(vertices[node].right) + ")";
    };
    return render(root());
  }

  /// Flats of the immediate predecessor and successor of vertex b in the
  /// search order of the subtree of vertices with smaller or equal label;
  /// empty set and ground set at the ends.
  std::pair<ElementSet, ElementSet> neighbours(int b, ElementSet ground) const {
    ElementSet lower = 0;
    ElementSet upper = ground;
    const ElementSet f = vertices[b].flat;
    for (const TreeVertex& other : vertices) {
      if (other.label >= vertices[b].label) continue;
      if (is_proper_subset(other.flat, f) && cardinality(other.flat) > cardinality(lower)) {
        lower = other.flat;
      }
      if (is_proper_subset(f, other.flat) && cardinality(other.flat) < cardinality(upper)) {
        upper = other.flat;
      }
    }
    return {lower, upper};
  }

  bool is_increasing() const {
    for (const TreeVertex& v : vertices) {
      for (int child : {v.left, v.right}) {
        if (child >= 0 && vertices[child].label <= v.label) return false;
      }
    }
    return true;
  }

  bool is_v_compatible(const Matroid& m, const VVector& v) const {
    for (std::size_t b = 0; b < vertices.size(); ++b) {
      auto [lower, upper] = neighbours(static_cast<int>(b), m.ground());
      const int k = v[vertices[b].label - 1];
      if (!(cardinality(lower) < k && k < cardinality(upper))) return false;
    }
    return true;
  }

  /// Weight straight from the definition: product over vertices of the gap
  /// weight of F(b) between its neighbours.
  Rational weight(const Matroid& m, const VVector& v, WeightConvention convention) const {
    Rational out = 1;
    for (std::size_t b = 0; b < vertices.size(); ++b) {
      auto [lower, upper] = neighbours(static_cast<int>(b), m.ground());
      out *= gap_weight(lower, upper, vertices[b].flat, v[vertices[b].label - 1], convention);
    }
    return out;
  }
};

struct WeightedTree {
  PostnikovTree tree;
  Rational weight;
};

/// All v-compatible flat-filled increasing binary trees with nonzero weight.
/// Trees are grown by recording where each factor inserts its flat; factors
/// are taken in the order given.
inline std::vector<WeightedTree> enumerate_trees(const Matroid& m, const VVector& v,
                                                 WeightConvention convention) {
  check_factor_indices(m, v);
  std::vector<WeightedTree> out;
  std::function<void(const PostnikovTree&, const FlagChain&, const Rational&, std::size_t)>
      grow = [&](const PostnikovTree& tree, const FlagChain& flag, const Rational& weight,
                 std::size_t step) {
        if (step == v.size()) {
          out.push_back({tree, weight});
          return;
        }
        for (const GapInsertion& ins : multiply_by_gamma(m, flag, v[step], convention)) {
          PostnikovTree next_tree = tree;
          next_tree.insert(ins.flat);
          FlagChain next_flag = flag;
          next_flag.insert(next_flag.begin() + ins.position, ins.flat);
          grow(next_tree, next_flag, weight * ins.factor, step + 1);
        }
      };
  grow(PostnikovTree{}, FlagChain{}, Rational(1), 0);
  return out;
}

/// Sums tree weights by image flag.
inline WeightedFlagSum aggregate_trees(const std::vector<WeightedTree>& trees) {
  WeightedFlagSum out;
  for (const WeightedTree& t : trees) out.add(t.tree.flag(), t.weight);
  return out;
}

}  // namespace meuler

#endif  // MEULER_CHOW_EXPANSION_HPP_
