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
#include "oracles.hpp"

namespace meuler {
namespace {

TEST(Weights, OverIntersection) {
  const ElementSet u = make_set({0, 1, 2, 3, 4});
  EXPECT_EQ(over_intersection(u, make_set({1, 2, 3}), make_set({3, 4})), 1);
  EXPECT_EQ(over_intersection(u, 0, make_set({3, 4})), 0);
  EXPECT_EQ(over_intersection(u, u, make_set({3, 4})), 0);
}

TEST(Weights, Multiplicity) {
  EXPECT_EQ(mult_weight(4, 2, 1), Rational(1, 2));
  EXPECT_EQ(mult_weight(4, 0, 3), 0);
  EXPECT_EQ(mult_weight(4, 4, 3), 0);
}

TEST(Expansion, Gamma1OnBooleanAvoidsZero) {
  const Matroid m = build_uniform(4, 4);
  const WeightedFlagSum sum = expand_gamma_product(m, {1}, WeightConvention::kOverIntersection);
  int expected = 0;
  for (ElementSet f : m.proper_flats()) {
    if (!contains(f, 0)) {
      ++expected;
      EXPECT_EQ(sum.weight_of({f}), 1) << set_to_string(f);
    }
  }
  EXPECT_EQ(static_cast<int>(sum.size()), expected);
}

TEST(Expansion, AnnihilatedWhenIndexHitsFlatSize) {
  const Matroid f = fano();
  // gamma_3 x_L = 0 for a line L; reached by gamma_1 gamma_3 gamma_3 truncated
  const auto lines = f.flats_of_rank(2);
  EXPECT_TRUE(multiply_by_gamma(f, {lines.front()}, 3, WeightConvention::kOverIntersection)
                  .empty());
  EXPECT_TRUE(multiply_by_gamma(f, {f.flats_of_rank(1).front()}, 1,
                                WeightConvention::kMultiplicity)
                  .empty());
}

TEST(Expansion, FanoMass) {
  const WeightedFlagSum sum =
      expand_gamma_product(fano(), {1, 3}, WeightConvention::kOverIntersection);
  EXPECT_EQ(sum.total(), 24);
  for (const auto& [flag, w] : sum.terms()) {
    EXPECT_EQ(flag.size(), 2u);
    EXPECT_TRUE(is_integral(w));
  }
}

TEST(Expansion, RejectsBadIndices) {
  EXPECT_THROW(expand_gamma_product(fano(), {0}, WeightConvention::kOverIntersection), Error);
  EXPECT_THROW(expand_gamma_product(fano(), {7}, WeightConvention::kOverIntersection), Error);
  EXPECT_THROW(expand_gamma_product(fano(), {1, 1, 1}, WeightConvention::kOverIntersection),
               Error);
}

TEST(MixedEulerian, BooleanExamples) {
  const Matroid m = build_uniform(4, 4);
  EXPECT_EQ(mixed_eulerian_degree(m, {{0, 3, 0}}), oracle::eulerian_number(3, 1));
  EXPECT_EQ(mixed_eulerian_degree(m, {{1, 0, 2}}), 3);
  EXPECT_EQ(mixed_eulerian_degree(m, {{1, 1, 1}}), 6);
  EXPECT_EQ(mixed_eulerian_degree(m, {{2, 1, 0}}), 2);
  EXPECT_THROW(mixed_eulerian_degree(m, {{1, 1, 0}}), Error);
}

TEST(MixedEulerian, FanoAndUniform) {
  const Matroid f = fano();
  EXPECT_EQ(mixed_eulerian_degree(f, {{2, 0, 0, 0, 0, 0}}), 8);
  EXPECT_EQ(mixed_eulerian_degree(f, {{1, 0, 1, 0, 0, 0}}), 24);
  EXPECT_EQ(mixed_eulerian_degree(f, {{0, 0, 2, 0, 0, 0}}), 16);
  EXPECT_EQ(gamma_product_degree(build_uniform(3, 5), {3, 3}), 4);
  EXPECT_EQ(gamma_product_degree(sparse_paving_rank3_on6(2), {1, 2}), 16);
}

TEST(MixedEulerian, MatchesFlagOrderOracle) {
  std::vector<Matroid> ms = {build_uniform(3, 3), build_uniform(4, 4), build_uniform(3, 5),
                             build_uniform(4, 6), fano(), sparse_paving_rank3_on6(3),
                             build_uniform(5, 5)};
  for (const Matroid& m : ms) {
    for (const Composition& c : all_compositions(m.dimension(), m.top_index())) {
      const VVector v = to_vvector(c);
      EXPECT_EQ(Rational(mixed_eulerian_degree(m, c)), oracle::flag_order_degree(m, v))
          << m.name() << " " << to_string(c);
    }
  }
}

// Property: OI and MULT conventions give the same integer for every composition.
TEST(MixedEulerian, ConventionsAgree) {
  for (const Matroid& m : standard_catalog(5, false)) {
    if (m.size() > 9) continue;
    for (const Composition& c : all_compositions(m.dimension(), m.top_index())) {
      EXPECT_EQ(mixed_eulerian_degree(m, c, WeightConvention::kOverIntersection),
                mixed_eulerian_degree(m, c, WeightConvention::kMultiplicity))
          << m.name() << " " << to_string(c);
    }
  }
}

// Property: all degrees are nonnegative; factor order does not matter.
TEST(MixedEulerian, NonnegativeAndOrderFree) {
  std::mt19937 rng(11);
  for (const Matroid& m : standard_catalog(5, false)) {
    for (const Composition& c : all_compositions(m.dimension(), m.top_index())) {
      VVector v = to_vvector(c);
      const BigInt sorted_value = gamma_product_degree(m, v);
      EXPECT_GE(sorted_value, 0);
      std::shuffle(v.begin(), v.end(), rng);
      EXPECT_EQ(gamma_product_degree(m, v, WeightConvention::kOverIntersection,
                                     FactorOrder::kAsGiven),
                sorted_value);
    }
  }
}

TEST(Trees, WorkedExampleWeights) {
  const Matroid m = build_uniform(6, 10);
  const VVector v = {2, 3, 1, 4};
  const FlagChain first = {make_set({5}), make_set({3, 5}), make_set({3, 5, 8}),
                           make_set({1, 2, 3, 5, 8})};
  const FlagChain second = {make_set({5}), make_set({0, 5}), make_set({0, 3, 5, 8}),
                            make_set({0, 2, 3, 5, 8})};
  // root labelled 1 with left child 3 and right child 2, whose left child is 4
  const std::string shape = "(()3())1((()4())2())";
  int seen = 0;
  for (const WeightedTree& t : enumerate_trees(m, v, WeightConvention::kOverIntersection)) {
    if (t.tree.shape() != shape) continue;
    if (t.tree.flag() == first) {
      EXPECT_EQ(t.weight, 2);
      ++seen;
    }
    if (t.tree.flag() == second) {
      EXPECT_EQ(t.weight, 1);
      ++seen;
    }
  }
  EXPECT_EQ(seen, 2);
}

TEST(Trees, AllOnesGivesLeftPath) {
  for (const Matroid& m : {build_uniform(4, 4), fano(), build_uniform(4, 6)}) {
    const VVector v(m.dimension(), 1);
    const auto trees = enumerate_trees(m, v, WeightConvention::kOverIntersection);
    EXPECT_FALSE(trees.empty());
    for (const WeightedTree& t : trees) {
      // vertex i (label i+1) has only a left child, labelled i+2
      for (std::size_t i = 0; i < t.tree.vertices.size(); ++i) {
        const TreeVertex& vertex = t.tree.vertices[i];
        EXPECT_EQ(vertex.right, -1);
        EXPECT_EQ(vertex.left, i + 1 < t.tree.vertices.size() ? static_cast<int>(i) + 1 : -1);
      }
      EXPECT_EQ(t.weight, 1);
    }
  }
}

// Property: aggregated tree weights equal the flag expansion, trees are
// increasing and v-compatible, and recomputed weights match.
TEST(Trees, AggregateToExpansion) {
  std::mt19937 rng(3);
  const std::vector<Matroid> ms = standard_catalog(5, false);
  for (int trial = 0; trial < 60; ++trial) {
    const Matroid& m = ms[rng() % ms.size()];
    const int length = 1 + static_cast<int>(rng() % m.dimension());
    VVector v;
    for (int k = 0; k < length; ++k) v.push_back(1 + static_cast<int>(rng() % m.top_index()));
    for (WeightConvention conv :
         {WeightConvention::kOverIntersection, WeightConvention::kMultiplicity}) {
      const auto trees = enumerate_trees(m, v, conv);
      for (const WeightedTree& t : trees) {
        EXPECT_TRUE(t.tree.is_increasing());
        EXPECT_TRUE(t.tree.is_v_compatible(m, v));
        EXPECT_EQ(t.tree.weight(m, v, conv), t.weight);
      }
      EXPECT_EQ(aggregate_trees(trees), expand_gamma_product(m, v, conv, FactorOrder::kAsGiven))
          << m.name() << " " << to_string(v);
    }
  }
}

TEST(PVol, Values) {
  EXPECT_EQ(pvol(build_uniform(4, 4)), 96);
  EXPECT_EQ(pvol(build_uniform(2, 2)), 1);
  EXPECT_EQ(pvol(build_uniform(2, 3)), 3);
}

TEST(DescendingFlags, Values) {
  EXPECT_EQ(count_initial_descending_flags(build_uniform(4, 4), 1), 3);
  EXPECT_EQ(count_initial_descending_flags(fano(), 2), 8);
  EXPECT_EQ(count_initial_descending_flags(fano(), 0), 1);
  EXPECT_EQ(count_initial_descending_flags(build_uniform(3, 5), 0), 1);
}

TEST(LogConcavity, Examples) {
  const Matroid f = fano();
  const Composition empty{std::vector<int>(6, 0)};
  const LogConcavityResult fano13 = log_concavity_check(f, empty, 1, 3);
  EXPECT_TRUE(fano13.holds);
  EXPECT_EQ(fano13.ii, 8);
  EXPECT_EQ(fano13.jj, 16);
  EXPECT_EQ(fano13.ij, 24);
  EXPECT_TRUE(log_concavity_check(f, empty, 2, 2).holds);
  const LogConcavityResult u = log_concavity_check(build_uniform(3, 5), {{0, 0, 0, 0}}, 1, 4);
  EXPECT_TRUE(u.holds);
  EXPECT_EQ(u.ii, 6);
  EXPECT_EQ(u.jj, 1);
  EXPECT_EQ(u.ij, 4);
  EXPECT_THROW(log_concavity_check(f, {{1, 0, 0, 0, 0, 0}}, 1, 2), Error);
}

// gamma_k expressed with OI against different T, and with MULT, are the same
// class in A^1(M).
TEST(DegreeOneClasses, ConventionsAreEqualClasses) {
  for (const Matroid& m : {fano(), build_uniform(4, 5), sparse_paving_rank3_on6(2)}) {
    for (int k = 1; k <= m.top_index(); ++k) {
      EXPECT_TRUE(classes_equal(m, gamma_class(m, k, WeightConvention::kOverIntersection),
                                gamma_class(m, k, WeightConvention::kMultiplicity)));
      if (k + 1 <= m.top_index()) {
        EXPECT_FALSE(classes_equal(m, gamma_class(m, k, WeightConvention::kMultiplicity),
                                   gamma_class(m, k + 1, WeightConvention::kMultiplicity)));
      }
    }
  }
}

}  // namespace
}  // namespace meuler
