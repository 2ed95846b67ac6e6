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

#ifndef MEULER_CATALOG_HPP_
#define MEULER_CATALOG_HPP_

// Small named matroids used by the verification suites.

#include <vector>

#include "meuler/element_set.hpp"
#include "meuler/matroid.hpp"

namespace meuler {

inline Matroid fano() { return build_projective_geometry(2, 2); }

/// Rank 3 sparse paving matroids on 6 elements with m = 0..4 pairwise
/// compatible circuit-hyperplanes.
inline Matroid sparse_paving_rank3_on6(int m) {
  static const ElementSet kHyperplanes[] = {make_set({0, 1, 2}), make_set({0, 3, 4}),
                                            make_set({1, 3, 5}), make_set({2, 4, 5})};
  if (m < 0 || m > 4) fail(ErrorCode::kSizeViolation, "at most 4 circuit-hyperplanes here");
  return build_sparse_paving(3, 6, std::vector<ElementSet>(kHyperplanes, kHyperplanes + m));
}

/// U(r+1, n+1) for 1 <= r <= n <= max_n (rank at least 2).
inline std::vector<Matroid> uniform_catalog(int max_n) {
  std::vector<Matroid> out;
  for (int n = 1; n <= max_n; ++n) {
    for (int r = 1; r <= n; ++r) out.push_back(build_uniform(r + 1, n + 1));
  }
  return out;
}

/// Uniform matroids up to max_n, Fano, the sparse paving family, and the
/// larger projective geometries when include_large is set.
inline std::vector<Matroid> standard_catalog(int max_n, bool include_large) {
  std::vector<Matroid> out = uniform_catalog(max_n);
  out.push_back(fano());
  for (int m = 0; m <= 2; ++m) out.push_back(sparse_paving_rank3_on6(m));
  if (include_large) {
    out.push_back(build_projective_geometry(2, 3));
    out.push_back(build_projective_geometry(3, 2));
  }
  return out;
}

}  // namespace meuler

#endif  // MEULER_CATALOG_HPP_
