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

#ifndef MEULER_MATROID_HPP_
#define MEULER_MATROID_HPP_

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "meuler/arithmetic.hpp"
#include "meuler/element_set.hpp"
#include "meuler/error.hpp"

namespace meuler {

enum class Provenance {
  kBases,
  kFlats,
  kUniform,
  kBoolean,
  kProjectiveGeometry,
  kSparsePaving,
  kMinor,
  kTruncation,
};

/// A loopless matroid on {0, ..., n} with a dense rank table and its lattice
/// of flats enumerated eagerly.  Immutable after construction.
///
/// Naming: `size()` is n+1, `rank()` is r+1 and `dimension()` is r, the top
/// degree of the Chow ring.  `top_index()` is n, the largest admissible
/// hypersimplex index.
class Matroid {
 public:
  /// Builds from a full rank table indexed by subset bitmask.  Checks
  /// normalization and looplessness; callers that cannot guarantee the matroid
  /// axioms validate before calling.
  static Matroid from_rank_table(int size, std::vector<std::uint8_t> table,
                                 Provenance provenance, std::string name) {
    if (size < 0 || size > kMaxGroundSetSize) {
      fail(ErrorCode::kGroundSetTooLarge,
           "ground set of size " + std::to_string(size) + " exceeds " +
               std::to_string(kMaxGroundSetSize));
    }
    if (table.size() != (std::size_t{1} << size)) {
      fail(ErrorCode::kInvalidMatroid, "rank table has the wrong length");
    }
    if (table[0] != 0) fail(ErrorCode::kInvalidMatroid, "rank of the empty set is nonzero");
    for (int e = 0; e < size; ++e) {
      if (table[singleton(e)] == 0) {
        fail(ErrorCode::kLoopDetected, "element " + std::to_string(e) + " is a loop");
      }
    }
    Matroid m;
    m.size_ = size;
    m.rank_table_ = std::move(table);
    m.provenance_ = provenance;
    m.name_ = std::move(name);
    m.enumerate_flats();
    return m;
  }

  static Matroid from_rank_function(int size, const std::function<int(ElementSet)>& rank_fn,
                                    Provenance provenance, std::string name) {
    if (size < 0 || size > kMaxGroundSetSize) {
      fail(ErrorCode::kGroundSetTooLarge,
           "ground set of size " + std::to_string(size) + " exceeds " +
               std::to_string(kMaxGroundSetSize));
    }
    std::vector<std::uint8_t> table(std::size_t{1} << size);
    for (ElementSet s = 0; s < table.size(); ++s) {
      table[s] = static_cast<std::uint8_t>(rank_fn(s));
    }
    return from_rank_table(size, std::move(table), provenance, std::move(name));
  }

  int size() const { return size_; }
  int rank() const { return rank_table_.back(); }
  int dimension() const { return rank() - 1; }
  int top_index() const { return size_ - 1; }
  ElementSet ground() const { return full_set(size_); }
  Provenance provenance() const { return provenance_; }
  const std::string& name() const { return name_; }

  int rank_of(ElementSet s) const { return rank_table_[s & ground()]; }

  ElementSet closure_of(ElementSet s) const {
    s &= ground();
    const int r = rank_of(s);
    ElementSet out = s;
    for (int e = 0; e < size_; ++e) {
      if (!contains(s, e) && rank_table_[s | singleton(e)] == r) out |= singleton(e);
    }
    return out;
  }

  bool is_flat(ElementSet s) const {
    return is_subset(s, ground()) && closure_of(s) == s;
  }

  /// Flats of rank k, in increasing bitmask order.
  const std::vector<ElementSet>& flats_of_rank(int k) const {
    static const std::vector<ElementSet> kEmpty;
    if (k < 0 || k >= static_cast<int>(flats_by_rank_.size())) return kEmpty;
    return flats_by_rank_[k];
  }

  const std::vector<std::vector<ElementSet>>& flats_by_rank() const { return flats_by_rank_; }

  /// Proper nonempty flats ordered by rank, then bitmask.
  const std::vector<ElementSet>& proper_flats() const { return proper_flats_; }

  std::size_t flat_count() const {
    std::size_t total = 0;
    for (const auto& level : flats_by_rank_) total += level.size();
    return total;
  }

  bool is_coloop(int e) const {
    return rank_of(ground() & ~singleton(e)) < rank();
  }

  /// Sizes of the proper nonempty flats, ascending and deduplicated.
  std::vector<int> proper_flat_sizes() const {
    std::set<int> sizes;
    for (ElementSet f : proper_flats_) sizes.insert(cardinality(f));
    return {sizes.begin(), sizes.end()};
  }

  const std::vector<std::uint8_t>& rank_table() const { return rank_table_; }

  friend bool operator==(const Matroid& a, const Matroid& b) {
    return a.size_ == b.size_ && a.rank_table_ == b.rank_table_;
  }

 private:
  Matroid() = default;

  void enumerate_flats() {
    flats_by_rank_.assign(rank() + 1, {});
    const ElementSet limit = static_cast<ElementSet>(rank_table_.size());
    for (ElementSet s = 0; s < limit; ++s) {
      if (closure_of(s) == s) flats_by_rank_[rank_table_[s]].push_back(s);
    }
    proper_flats_.clear();
    for (int k = 1; k < rank(); ++k) {
      proper_flats_.insert(proper_flats_.end(), flats_by_rank_[k].begin(),
                           flats_by_rank_[k].end());
    }
  }

  int size_ = 0;
  std::vector<std::uint8_t> rank_table_;
  std::vector<std::vector<ElementSet>> flats_by_rank_;
  std::vector<ElementSet> proper_flats_;
  Provenance provenance_ = Provenance::kBases;
  std::string name_;
};

/// Child index -> parent element, in increasing parent order.
struct MinorMap {
  std::vector<int> surviving_elements;

  ElementSet to_parent(ElementSet child) const {
    ElementSet out = 0;
    for (std::size_t i = 0; i < surviving_elements.size(); ++i) {
      if (contains(child, static_cast<int>(i))) out |= singleton(surviving_elements[i]);
    }
    return out;
  }

  ElementSet to_child(ElementSet parent) const {
    ElementSet out = 0;
    for (std::size_t i = 0; i < surviving_elements.size(); ++i) {
      if (contains(parent, surviving_elements[i])) out |= singleton(static_cast<int>(i));
    }
    return out;
  }
};

struct Minor {
  Matroid matroid;
  MinorMap map;
};

struct Deletion {
  Matroid matroid;
  MinorMap map;
  bool deleted_coloop = false;
};

namespace detail {

inline std::vector<std::uint8_t> rank_table_from_bases(int size,
                                                       const std::vector<ElementSet>& bases) {
  const std::size_t count = std::size_t{1} << size;
  std::vector<char> independent(count, 0);
  for (ElementSet b : bases) independent[b] = 1;
  for (std::size_t s = count; s-- > 0;) {
    if (!independent[s]) continue;
    for (ElementSet rest = static_cast<ElementSet>(s); rest != 0; rest &= rest - 1) {
      independent[s & ~(rest & -rest)] = 1;
    }
  }
  std::vector<std::uint8_t> table(count, 0);
  for (std::size_t s = 1; s < count; ++s) {
    if (independent[s]) {
      table[s] = static_cast<std::uint8_t>(cardinality(static_cast<ElementSet>(s)));
      continue;
    }
    std::uint8_t best = 0;
    for (ElementSet rest = static_cast<ElementSet>(s); rest != 0; rest &= rest - 1) {
      best = std::max(best, table[s & ~(rest & -rest)]);
    }
    table[s] = best;
  }
  return table;
}

/// Builds the minor with ground set `keep` (parent elements) after contracting
/// `contracted`; `keep` and `contracted` are disjoint.
inline Minor make_minor(const Matroid& m, ElementSet keep, ElementSet contracted,
                        std::string name) {
  MinorMap map{elements_of(keep)};
  const int child_size = static_cast<int>(map.surviving_elements.size());
  const int base = m.rank_of(contracted);
  std::vector<std::uint8_t> table(std::size_t{1} << child_size);
  for (ElementSet s = 0; s < table.size(); ++s) {
    table[s] = static_cast<std::uint8_t>(m.rank_of(map.to_parent(s) | contracted) - base);
  }
  return Minor{Matroid::from_rank_table(child_size, std::move(table), Provenance::kMinor,
                                        std::move(name)),
               std::move(map)};
}

}  // namespace detail

/// Matroid whose bases are the given sets.  Verifies the basis-exchange axiom.
inline Matroid build_from_bases(int n_plus_1, const std::vector<ElementSet>& bases) {
  if (bases.empty()) fail(ErrorCode::kEmptyInput, "no bases given");
  if (n_plus_1 < 1 || n_plus_1 > kMaxGroundSetSize) {
    fail(ErrorCode::kGroundSetTooLarge, "ground set size " + std::to_string(n_plus_1));
  }
  const ElementSet ground = full_set(n_plus_1);
  const int r = cardinality(bases.front());
  std::set<ElementSet> basis_set;
  ElementSet covered = 0;
  for (ElementSet b : bases) {
    if (!is_subset(b, ground)) {
      fail(ErrorCode::kSizeViolation, "basis " + set_to_string(b) + " leaves the ground set");
    }
    if (cardinality(b) != r) {
      fail(ErrorCode::kSizeViolation, "bases have different cardinalities");
    }
    basis_set.insert(b);
    covered |= b;
  }
  if (covered != ground) {
    fail(ErrorCode::kLoopDetected,
         "element " + std::to_string(min_element(ground & ~covered)) + " lies in no basis");
  }
  for (ElementSet b1 : basis_set) {
    for (ElementSet b2 : basis_set) {
      for (int x : elements_of(b1 & ~b2)) {
        bool exchanged = false;
        for (int y : elements_of(b2 & ~b1)) {
          if (basis_set.count((b1 & ~singleton(x)) | singleton(y))) {
            exchanged = true;
            break;
          }
        }
        if (!exchanged) {
          fail(ErrorCode::kBasisExchangeViolation,
               "no exchange for " + std::to_string(x) + " between " + set_to_string(b1) +
                   " and " + set_to_string(b2));
        }
      }
    }
  }
  std::vector<ElementSet> unique_bases(basis_set.begin(), basis_set.end());
  return Matroid::from_rank_table(n_plus_1, detail::rank_table_from_bases(n_plus_1, unique_bases),
                                  Provenance::kBases,
                                  "bases(" + std::to_string(n_plus_1) + ")");
}

inline Matroid build_uniform(int rank, int n_plus_1) {
  if (n_plus_1 < 1) fail(ErrorCode::kRankOutOfRange, "ground set must be nonempty");
  if (rank < 1 || rank > n_plus_1) {
    fail(ErrorCode::kRankOutOfRange,
         "rank " + std::to_string(rank) + " not in [1, " + std::to_string(n_plus_1) + "]");
  }
  const bool boolean = rank == n_plus_1;
  return Matroid::from_rank_function(
      n_plus_1, [rank](ElementSet s) { return std::min(cardinality(s), rank); },
      boolean ? Provenance::kBoolean : Provenance::kUniform,
      "U(" + std::to_string(rank) + "," + std::to_string(n_plus_1) + ")");
}

inline Matroid build_boolean(int n_plus_1) { return build_uniform(n_plus_1, n_plus_1); }

namespace detail {

/// Rank over GF(q) of the given vectors.
inline int rank_mod_prime(std::vector<std::vector<int>> rows, int q) {
  if (rows.empty()) return 0;
  const int cols = static_cast<int>(rows.front().size());
  int rank = 0;
  for (int c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
    int pivot = -1;
    for (int i = rank; i < static_cast<int>(rows.size()); ++i) {
      if (rows[i][c] % q != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(rows[rank], rows[pivot]);
    int inv = 1;
    while ((rows[rank][c] * inv) % q != 1) ++inv;
    for (int& x : rows[rank]) x = (x * inv) % q;
    for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
      if (i == rank || rows[i][c] == 0) continue;
      const int factor = rows[i][c];
      for (int j = 0; j < cols; ++j) {
        rows[i][j] = ((rows[i][j] - factor * rows[rank][j]) % q + q) % q;
      }
    }
    ++rank;
  }
  return rank;
}

/// Points of projective r-space over GF(q): nonzero vectors whose first
/// nonzero coordinate is 1, in lexicographic order.
inline std::vector<std::vector<int>> projective_points(int r, int q) {
  std::vector<std::vector<int>> points;
  std::vector<int> v(r + 1, 0);
  while (true) {
    int lead = 0;
    while (lead <= r && v[lead] == 0) ++lead;
    if (lead <= r && v[lead] == 1) points.push_back(v);
    int i = r;
    while (i >= 0 && v[i] == q - 1) v[i--] = 0;
    if (i < 0) break;
    ++v[i];
  }
  return points;
}

}  // namespace detail

/// PG(r, q) for prime q: points of projective r-space, rank = dimension of the
/// linear span of representatives.
inline Matroid build_projective_geometry(int r, int q) {
  if (!is_prime(q)) fail(ErrorCode::kNonPrimeQ, std::to_string(q) + " is not prime");
  if (r < 1) fail(ErrorCode::kRankOutOfRange, "projective dimension must be >= 1");
  BigInt count = q_integer<BigInt>(r + 1, BigInt(q));
  if (count > kMaxGroundSetSize) {
    fail(ErrorCode::kGroundSetTooLarge, "PG(" + std::to_string(r) + "," + std::to_string(q) +
                                            ") has " + count.str() + " points");
  }
  const auto points = detail::projective_points(r, q);
  const int size = static_cast<int>(points.size());
  std::vector<std::uint8_t> table(std::size_t{1} << size);
  for (ElementSet s = 1; s < table.size(); ++s) {
    std::vector<std::vector<int>> rows;
    for (int e : elements_of(s)) rows.push_back(points[e]);
    table[s] = static_cast<std::uint8_t>(detail::rank_mod_prime(std::move(rows), q));
  }
  return Matroid::from_rank_table(size, std::move(table), Provenance::kProjectiveGeometry,
                                  "PG(" + std::to_string(r) + "," + std::to_string(q) + ")");
}

/// Sparse paving matroid: every `rank`-subset is a basis except the listed
/// circuit-hyperplanes, which pairwise meet in at most rank-2 elements.
inline Matroid build_sparse_paving(int rank, int n_plus_1,
                                   const std::vector<ElementSet>& circuit_hyperplanes) {
  if (rank < 1 || rank > n_plus_1) {
    fail(ErrorCode::kRankOutOfRange, "rank " + std::to_string(rank) + " out of range");
  }
  if (n_plus_1 > kMaxGroundSetSize) {
    fail(ErrorCode::kGroundSetTooLarge, "ground set size " + std::to_string(n_plus_1));
  }
  const ElementSet ground = full_set(n_plus_1);
  for (ElementSet h : circuit_hyperplanes) {
    if (cardinality(h) != rank || !is_subset(h, ground)) {
      fail(ErrorCode::kSizeViolation,
           "circuit-hyperplane " + set_to_string(h) + " must have size " + std::to_string(rank));
    }
  }
  for (std::size_t i = 0; i < circuit_hyperplanes.size(); ++i) {
    for (std::size_t j = i + 1; j < circuit_hyperplanes.size(); ++j) {
      const ElementSet a = circuit_hyperplanes[i];
      const ElementSet b = circuit_hyperplanes[j];
      if (a == b || cardinality(a & b) > rank - 2) {
        fail(ErrorCode::kOverlapViolation,
             set_to_string(a) + " and " + set_to_string(b) + " overlap in " +
                 std::to_string(cardinality(a & b)) + " elements");
      }
    }
  }
  std::set<ElementSet> excluded(circuit_hyperplanes.begin(), circuit_hyperplanes.end());
  std::vector<ElementSet> bases;
  for (ElementSet s = 0; s <= ground; ++s) {
    if (cardinality(s) == rank && !excluded.count(s)) bases.push_back(s);
  }
  Matroid base = build_from_bases(n_plus_1, bases);
  return Matroid::from_rank_table(
      n_plus_1, base.rank_table(), Provenance::kSparsePaving,
      "sparse(" + std::to_string(rank) + "," + std::to_string(n_plus_1) + ";m=" +
          std::to_string(circuit_hyperplanes.size()) + ")");
}

/// Matroid from its lattice of flats, listed by rank.  Checks that the lists
/// form a geometric lattice: closed under intersection, with the flats
/// covering any flat partitioning its complement.
inline Matroid build_from_flats(int n_plus_1,
                                const std::vector<std::vector<ElementSet>>& flats_by_rank) {
  if (flats_by_rank.empty()) fail(ErrorCode::kEmptyInput, "no flats given");
  if (n_plus_1 < 1 || n_plus_1 > kMaxGroundSetSize) {
    fail(ErrorCode::kGroundSetTooLarge, "ground set size " + std::to_string(n_plus_1));
  }
  const ElementSet ground = full_set(n_plus_1);
  const int top = static_cast<int>(flats_by_rank.size()) - 1;
  if (flats_by_rank[0] != std::vector<ElementSet>{0}) {
    fail(ErrorCode::kLoopDetected, "the empty set must be the unique rank-0 flat");
  }
  if (flats_by_rank[top] != std::vector<ElementSet>{ground}) {
    fail(ErrorCode::kInvalidMatroid, "the ground set must be the unique top flat");
  }
  std::vector<std::pair<ElementSet, int>> all;
  std::set<ElementSet> seen;
  for (int k = 0; k <= top; ++k) {
    for (ElementSet f : flats_by_rank[k]) {
      if (!is_subset(f, ground)) fail(ErrorCode::kInvalidMatroid, "flat leaves the ground set");
      if (!seen.insert(f).second) fail(ErrorCode::kInvalidMatroid, "duplicate flat");
      all.emplace_back(f, k);
    }
  }
  for (const auto& [a, ra] : all) {
    for (const auto& [b, rb] : all) {
      if (!seen.count(a & b)) {
        fail(ErrorCode::kInvalidMatroid,
             "intersection of " + set_to_string(a) + " and " + set_to_string(b) + " is not a flat");
      }
    }
  }
  for (const auto& [f, k] : all) {
    if (k == top) continue;
    ElementSet covered = 0;
    for (const auto& [g, rg] : all) {
      if (rg != k + 1 || !is_proper_subset(f, g)) continue;
      if ((covered & (g & ~f)) != 0) {
        fail(ErrorCode::kInvalidMatroid, "covers of " + set_to_string(f) + " overlap");
      }
      covered |= g & ~f;
    }
    if (covered != (ground & ~f)) {
      fail(ErrorCode::kInvalidMatroid, "covers of " + set_to_string(f) + " miss elements");
    }
  }
  Matroid m = Matroid::from_rank_function(
      n_plus_1,
      [&all, top](ElementSet s) {
        int best = top;
        for (const auto& [f, k] : all) {
          if (is_subset(s, f)) best = std::min(best, k);
        }
        return best;
      },
      Provenance::kFlats, "flats(" + std::to_string(n_plus_1) + ")");
  for (int k = 0; k <= top; ++k) {
    std::vector<ElementSet> expected = flats_by_rank[k];
    std::sort(expected.begin(), expected.end());
    if (m.flats_of_rank(k) != expected) {
      fail(ErrorCode::kInvalidMatroid, "rank-" + std::to_string(k) + " flats are inconsistent");
    }
  }
  return m;
}

inline int require_flat(const Matroid& m, ElementSet f) {
  if (!m.is_flat(f)) fail(ErrorCode::kNotAFlat, set_to_string(f) + " is not a flat");
  return m.rank_of(f);
}

/// M^F: lattice [empty, F].
inline Minor restriction(const Matroid& m, ElementSet f) {
  require_flat(m, f);
  return detail::make_minor(m, f, 0, m.name() + "|" + set_to_string(f));
}

/// M_F: lattice [F, E].
inline Minor contraction(const Matroid& m, ElementSet f) {
  require_flat(m, f);
  return detail::make_minor(m, m.ground() & ~f, f, m.name() + "/" + set_to_string(f));
}

/// Minor on G \ F with lattice [F, G].
inline Minor minor_interval(const Matroid& m, ElementSet f, ElementSet g) {
  require_flat(m, f);
  require_flat(m, g);
  if (!is_subset(f, g)) {
    fail(ErrorCode::kNotAFlat, set_to_string(f) + " is not contained in " + set_to_string(g));
  }
  return detail::make_minor(m, g & ~f, f,
                            m.name() + "[" + set_to_string(f) + "," + set_to_string(g) + "]");
}

/// M \ i.  Deleting a coloop drops the rank by one and is flagged.
inline Deletion deletion(const Matroid& m, int i) {
  if (i < 0 || i >= m.size()) fail(ErrorCode::kRankOutOfRange, "no element " + std::to_string(i));
  const bool coloop = m.is_coloop(i);
  Minor minor = detail::make_minor(m, m.ground() & ~singleton(i), 0,
                                   m.name() + "\\" + std::to_string(i));
  return Deletion{std::move(minor.matroid), std::move(minor.map), coloop};
}

/// s-fold truncation: rank' = min(rank, r + 1 - s).
inline Matroid truncate(const Matroid& m, int s) {
  if (s < 0) fail(ErrorCode::kRankOutOfRange, "negative truncation");
  const int cap = m.rank() - s;
  if (cap <= 0) fail(ErrorCode::kRankCollapse, "truncation to rank " + std::to_string(cap));
  std::vector<std::uint8_t> table = m.rank_table();
  for (auto& x : table) x = static_cast<std::uint8_t>(std::min<int>(x, cap));
  return Matroid::from_rank_table(m.size(), std::move(table), Provenance::kTruncation,
                                  "Tr^" + std::to_string(s) + "(" + m.name() + ")");
}

}  // namespace meuler

#endif  // MEULER_MATROID_HPP_
