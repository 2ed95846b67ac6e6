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

#ifndef MEULER_ELEMENT_SET_HPP_
#define MEULER_ELEMENT_SET_HPP_

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace meuler {

/// Subset of a ground set {0, ..., n} stored as a bitmask.
using ElementSet = std::uint32_t;

/// Rank tables are dense over all subsets, so ground sets stay small.
inline constexpr int kMaxGroundSetSize = 20;

inline constexpr ElementSet full_set(int size) {
  return size >= 32 ? ~ElementSet{0} : (ElementSet{1} << size) - 1;
}

inline constexpr ElementSet singleton(int e) { return ElementSet{1} << e; }

inline constexpr bool contains(ElementSet s, int e) { return (s >> e) & 1U; }

inline constexpr bool is_subset(ElementSet a, ElementSet b) { return (a & ~b) == 0; }

inline constexpr bool is_proper_subset(ElementSet a, ElementSet b) {
  return a != b && is_subset(a, b);
}

inline int cardinality(ElementSet s) { return std::popcount(s); }

/// Smallest element; undefined on the empty set.
inline int min_element(ElementSet s) { return std::countr_zero(s); }

inline int max_element(ElementSet s) { return 31 - std::countl_zero(s); }

inline ElementSet make_set(std::initializer_list<int> elements) {
  ElementSet s = 0;
  for (int e : elements) s |= singleton(e);
  return s;
}

inline ElementSet make_set(const std::vector<int>& elements) {
  ElementSet s = 0;
  for (int e : elements) s |= singleton(e);
  return s;
}

inline std::vector<int> elements_of(ElementSet s) {
  std::vector<int> out;
  out.reserve(cardinality(s));
  while (s != 0) {
    out.push_back(min_element(s));
    s &= s - 1;
  }
  return out;
}

/// The `count` largest elements of `s` (all of `s` if it is smaller).
inline ElementSet largest_elements(ElementSet s, int count) {
  ElementSet out = 0;
  while (count > 0 && s != 0) {
    int e = max_element(s);
    out |= singleton(e);
    s &= ~singleton(e);
    --count;
  }
  return out;
}

/// "{0,3,5}" style rendering.
inline std::string set_to_string(ElementSet s) {
  std::string out = "{";
  bool first = true;
  for (int e : elements_of(s)) {
    if (!first) out += ",";
    out += std::to_string(e);
    first = false;
  }
  return out + "}";
}

}  // namespace meuler

#endif  // MEULER_ELEMENT_SET_HPP_
