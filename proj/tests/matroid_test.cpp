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


#include <gtest/gtest.h>

#include <random>

#include "meuler/meuler.hpp"

namespace meuler {
namespace {

void ExpectCode(ErrorCode code, const std::function<void()>& body) {
  try {
    body();
    FAIL() << "expected " << error_code_name(code);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), code) << e.what();
  }
}

TEST(BuildFromBases, UniformTriangle) {
  const Matroid m = build_from_bases(3, {make_set({0, 1}), make_set({0, 2}), make_set({1, 2})});
  EXPECT_EQ(m.rank(), 2);
  EXPECT_EQ(m.flats_of_rank(1),
            (std::vector<ElementSet>{make_set({0}), make_set({1}), make_set({2})}));
  EXPECT_EQ(m, build_uniform(2, 3));
}

TEST(BuildFromBases, ParallelPair) {
  const Matroid m = build_from_bases(3, {make_set({0, 1}), make_set({0, 2})});
  std::vector<ElementSet> rank1 = m.flats_of_rank(1);
  std::sort(rank1.begin(), rank1.end());
  EXPECT_EQ(rank1, (std::vector<ElementSet>{make_set({0}), make_set({1, 2})}));
  EXPECT_EQ(m.flat_count(), 4u);
}

TEST(BuildFromBases, Errors) {
  ExpectCode(ErrorCode::kLoopDetected,
             [] { build_from_bases(3, {make_set({0, 1})}); });
  ExpectCode(ErrorCode::kEmptyInput, [] { build_from_bases(3, {}); });
  ExpectCode(ErrorCode::kBasisExchangeViolation,
             [] { build_from_bases(4, {make_set({0, 1}), make_set({2, 3})}); });
  ExpectCode(ErrorCode::kSizeViolation,
             [] { build_from_bases(3, {make_set({0, 1}), make_set({2})}); });
}

TEST(BuildUniform, FlatCounts) {
  const Matroid boolean = build_uniform(4, 4);
  EXPECT_EQ(boolean.proper_flats().size(), 14u);
  EXPECT_EQ(boolean.provenance(), Provenance::kBoolean);
  const Matroid u35 = build_uniform(3, 5);
  EXPECT_EQ(u35.flats_of_rank(1).size(), 5u);
  EXPECT_EQ(u35.flats_of_rank(2).size(), 10u);
  EXPECT_EQ(build_uniform(2, 3).flat_count(), 5u);
  ExpectCode(ErrorCode::kRankOutOfRange, [] { build_uniform(5, 4); });
  ExpectCode(ErrorCode::kRankOutOfRange, [] { build_uniform(0, 4); });
}

TEST(ProjectiveGeometry, FanoAndPG23) {
  const Matroid f = build_projective_geometry(2, 2);
  EXPECT_EQ(f.size(), 7);
  EXPECT_EQ(f.flats_of_rank(2).size(), 7u);
  for (ElementSet line : f.flats_of_rank(2)) EXPECT_EQ(cardinality(line), 3);
  const Matroid p = build_projective_geometry(2, 3);
  EXPECT_EQ(p.size(), 13);
  EXPECT_EQ(p.flats_of_rank(2).size(), 13u);
  for (ElementSet line : p.flats_of_rank(2)) EXPECT_EQ(cardinality(line), 4);
  ExpectCode(ErrorCode::kNonPrimeQ, [] { build_projective_geometry(2, 4); });
}

TEST(ProjectiveGeometry, FlatSizesAreQIntegers) {
  for (auto [r, q] : {std::pair{2, 2}, std::pair{2, 3}, std::pair{3, 2}}) {
    const Matroid m = build_projective_geometry(r, q);
    for (int k = 1; k <= r + 1; ++k) {
      for (ElementSet f : m.flats_of_rank(k)) EXPECT_EQ(cardinality(f), q_integer<int>(k, q));
    }
  }
}

TEST(SparsePaving, BasesAndErrors) {
  const Matroid m = build_sparse_paving(3, 6, {make_set({0, 1, 2}), make_set({3, 4, 5})});
  int bases = 0;
  for (ElementSet s = 0; s < 64; ++s) bases += cardinality(s) == 3 && m.rank_of(s) == 3;
  EXPECT_EQ(bases, 18);
  EXPECT_EQ(build_sparse_paving(3, 6, {}), build_uniform(3, 6));
  ExpectCode(ErrorCode::kOverlapViolation, [] {
    build_sparse_paving(3, 6, {make_set({0, 1, 2}), make_set({0, 1, 3})});
  });
  ExpectCode(ErrorCode::kSizeViolation, [] { build_sparse_paving(3, 6, {make_set({0, 1})}); });
}

TEST(Closure, Examples) {
  const Matroid f = fano();
  for (ElementSet line : f.flats_of_rank(2)) {
    const auto points = elements_of(line);
    EXPECT_EQ(f.closure_of(make_set({points[0], points[2]})), line);
  }
  EXPECT_EQ(f.closure_of(0), 0u);
  const Matroid u35 = build_uniform(3, 5);
  EXPECT_EQ(u35.closure_of(make_set({0, 2, 4})), u35.ground());
  EXPECT_EQ(u35.rank_of(u35.closure_of(make_set({1, 3}))), u35.rank_of(make_set({1, 3})));
}

TEST(Minors, FanoLineAndPoint) {
  const Matroid f = fano();
  const Minor line = restriction(f, f.flats_of_rank(2).front());
  EXPECT_EQ(line.matroid, build_uniform(2, 3));
  const Minor point = contraction(f, f.flats_of_rank(1).front());
  EXPECT_EQ(point.matroid.size(), 6);
  EXPECT_EQ(point.matroid.rank(), 2);
  ASSERT_EQ(point.matroid.flats_of_rank(1).size(), 3u);
  for (ElementSet p : point.matroid.flats_of_rank(1)) EXPECT_EQ(cardinality(p), 2);
  const ElementSet g = f.flats_of_rank(2).front();
  const Minor same = minor_interval(f, g, g);
  EXPECT_EQ(same.matroid.size(), 0);
  EXPECT_EQ(same.matroid.rank(), 0);
  ExpectCode(ErrorCode::kNotAFlat, [&] { restriction(f, make_set({0, 1})); });
}

TEST(Minors, MapPreservesOrder) {
  const Matroid u = build_uniform(3, 6);
  const Minor minor = contraction(u, make_set({1}));
  EXPECT_EQ(minor.map.surviving_elements, (std::vector<int>{0, 2, 3, 4, 5}));
  EXPECT_EQ(minor.map.to_parent(make_set({0, 1})), make_set({0, 2}));
  EXPECT_EQ(minor.map.to_child(make_set({2, 5})), make_set({1, 4}));
}

// Contracting F and then restricting to the image of G gives the interval [F, G].
TEST(Minors, ContractionThenRestrictionIsInterval) {
  for (const Matroid& m : {fano(), build_uniform(4, 6), sparse_paving_rank3_on6(2)}) {
    for (ElementSet f : m.proper_flats()) {
      for (ElementSet g : m.proper_flats()) {
        if (!is_proper_subset(f, g)) continue;
        const Minor con = contraction(m, f);
        const Minor nested = restriction(con.matroid, con.map.to_child(g));
        EXPECT_EQ(nested.matroid, minor_interval(m, f, g).matroid);
      }
    }
  }
}

TEST(Deletion, ColoopsAndTruncation) {
  const Matroid boolean = build_uniform(4, 4);
  for (int i = 0; i < 4; ++i) EXPECT_TRUE(boolean.is_coloop(i));
  const Matroid u35 = build_uniform(3, 5);
  for (int i = 0; i < 5; ++i) EXPECT_FALSE(u35.is_coloop(i));
  const Deletion del = deletion(u35, 0);
  EXPECT_FALSE(del.deleted_coloop);
  EXPECT_EQ(del.matroid, build_uniform(3, 4));
  EXPECT_TRUE(deletion(boolean, 2).deleted_coloop);
  EXPECT_EQ(truncate(boolean, 1), build_uniform(3, 4));
  ExpectCode(ErrorCode::kRankCollapse, [&] { truncate(boolean, 4); });
}

TEST(BuildFromFlats, RoundTripAndRejects) {
  const Matroid f = fano();
  EXPECT_EQ(build_from_flats(7, f.flats_by_rank()), f);
  std::vector<std::vector<ElementSet>> broken = f.flats_by_rank();
  broken[2].pop_back();
  ExpectCode(ErrorCode::kInvalidMatroid, [&] { build_from_flats(7, broken); });
}

// Property: rank functions are normalized, monotone and submodular; flats are
// intersection-closed; maximal chains have length r+1.
void CheckMatroidAxioms(const Matroid& m, std::mt19937& rng) {
  const ElementSet ground = m.ground();
  ASSERT_EQ(m.rank_of(0), 0);
  auto check_pair = [&](ElementSet a, ElementSet b) {
    EXPECT_LE(m.rank_of(a & b) + m.rank_of(a | b), m.rank_of(a) + m.rank_of(b));
    if (is_subset(a, b)) {
      EXPECT_LE(m.rank_of(a), m.rank_of(b));
    }
  };
  if (m.size() <= 8) {
    for (ElementSet a = 0; a <= ground; ++a) {
      for (ElementSet b = 0; b <= ground; ++b) check_pair(a, b);
    }
  } else {
    std::uniform_int_distribution<ElementSet> pick(0, ground);
    for (int t = 0; t < 10000; ++t) check_pair(pick(rng), pick(rng));
  }
  std::vector<ElementSet> flats;
  for (const auto& level : m.flats_by_rank()) flats.insert(flats.end(), level.begin(), level.end());
  for (ElementSet f : flats) {
    EXPECT_EQ(m.closure_of(f), f);
    for (ElementSet g : flats) EXPECT_TRUE(m.is_flat(f & g));
  }
  std::function<void(ElementSet, int)> chains = [&](ElementSet f, int length) {
    if (f == ground) {
      EXPECT_EQ(length, m.rank());
      return;
    }
    for (ElementSet g : flats) {
      if (is_proper_subset(f, g) && m.rank_of(g) == m.rank_of(f) + 1) chains(g, length + 1);
    }
  };
  if (m.size() <= 9) chains(0, 0);
}

TEST(MatroidProperties, CatalogAxioms) {
  std::mt19937 rng(7);
  for (const Matroid& m : standard_catalog(6, true)) {
    SCOPED_TRACE(m.name());
    CheckMatroidAxioms(m, rng);
  }
}

}  // namespace
}  // namespace meuler
