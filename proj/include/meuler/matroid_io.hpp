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

#ifndef MEULER_MATROID_IO_HPP_
#define MEULER_MATROID_IO_HPP_

// Matroid input: JSON documents and the compact spec strings used on the
// command line ("uniform:3,5", "pg:2,2", "sparse:3,6;012|345", "file:m.json").

#include <cctype>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "meuler/element_set.hpp"
#include "meuler/error.hpp"
#include "meuler/matroid.hpp"

namespace meuler {

namespace detail {

[[noreturn]] inline void json_fail(const nlohmann::json::json_pointer& at,
                                   const std::string& message) {
  const std::string path = at.to_string();
  fail(ErrorCode::kParseError, (path.empty() ? "/" : path) + ": " + message);
}

inline int json_int(const nlohmann::json& doc, const nlohmann::json::json_pointer& at) {
  if (!doc.contains(at)) json_fail(at, "missing");
  const auto& value = doc.at(at);
  if (!value.is_number_integer()) json_fail(at, "expected an integer");
  return value.get<int>();
}

inline ElementSet json_element_set(const nlohmann::json& doc,
                                   const nlohmann::json::json_pointer& at, int size) {
  const auto& value = doc.at(at);
  if (!value.is_array()) json_fail(at, "expected an array of elements");
  ElementSet out = 0;
  for (std::size_t k = 0; k < value.size(); ++k) {
    const auto here = at / k;
    const int e = json_int(doc, here);
    if (e < 0 || e >= size) json_fail(here, "element " + std::to_string(e) + " out of range");
    if (contains(out, e)) json_fail(here, "repeated element " + std::to_string(e));
    out |= singleton(e);
  }
  return out;
}

inline std::vector<ElementSet> json_set_list(const nlohmann::json& doc,
                                             const nlohmann::json::json_pointer& at, int size) {
  if (!doc.contains(at)) json_fail(at, "missing");
  const auto& value = doc.at(at);
  if (!value.is_array()) json_fail(at, "expected an array");
  std::vector<ElementSet> out;
  for (std::size_t k = 0; k < value.size(); ++k) out.push_back(json_element_set(doc, at / k, size));
  return out;
}

}  // namespace detail

/// Accepts {"ground_set_size", "bases"}, {"ground_set_size", "rank",
/// "circuit_hyperplanes"} or {"ground_set_size", "flats_by_rank"}.
inline Matroid matroid_from_json(const nlohmann::json& doc) {
  using Pointer = nlohmann::json::json_pointer;
  if (!doc.is_object()) detail::json_fail(Pointer(), "expected an object");
  const int size = detail::json_int(doc, Pointer("/ground_set_size"));
  if (size < 1 || size > kMaxGroundSetSize) {
    detail::json_fail(Pointer("/ground_set_size"),
                      "must lie in 1.." + std::to_string(kMaxGroundSetSize));
  }
  if (doc.contains("bases")) {
    return build_from_bases(size, detail::json_set_list(doc, Pointer("/bases"), size));
  }
  if (doc.contains("circuit_hyperplanes")) {
    const int rank = detail::json_int(doc, Pointer("/rank"));
    return build_sparse_paving(rank, size,
                               detail::json_set_list(doc, Pointer("/circuit_hyperplanes"), size));
  }
  if (doc.contains("flats_by_rank")) {
    const Pointer at("/flats_by_rank");
    if (!doc.at(at).is_array()) detail::json_fail(at, "expected an array");
    std::vector<std::vector<ElementSet>> flats;
    for (std::size_t k = 0; k < doc.at(at).size(); ++k) {
      flats.push_back(detail::json_set_list(doc, at / k, size));
    }
    return build_from_flats(size, flats);
  }
  detail::json_fail(Pointer(), "needs one of bases, circuit_hyperplanes, flats_by_rank");
}

inline Matroid matroid_from_json_text(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(ErrorCode::kParseError, std::string("invalid JSON: ") + e.what());
  }
  return matroid_from_json(doc);
}

/// Bases of the matroid, as written by matroid_to_json.
inline nlohmann::json matroid_to_json(const Matroid& m) {
  nlohmann::json bases = nlohmann::json::array();
  for (ElementSet s = 0; s <= m.ground(); ++s) {
    if (cardinality(s) == m.rank() && m.rank_of(s) == m.rank()) bases.push_back(elements_of(s));
    if (s == m.ground()) break;
  }
  return {{"ground_set_size", m.size()}, {"bases", bases}};
}

enum class SpecTag { kUniform, kBoolean, kProjectiveGeometry, kSparsePaving, kFile };

struct MatroidSpec {
  SpecTag tag;
  std::vector<int> numbers;              // R,N | N | R,Q | R,N
  std::vector<ElementSet> hyperplanes;   // sparse only
  std::string path;                      // file only
  std::string text;                      // the original string
};

namespace detail {

class SpecParser {
 public:
  explicit SpecParser(const std::string& s) : s_(s) {}

  MatroidSpec parse() {
    MatroidSpec out;
    out.text = s_;
    const std::size_t colon = s_.find(':');
    if (colon == std::string::npos) error(s_.size(), "expected '<kind>:'");
    const std::string tag = s_.substr(0, colon);
    pos_ = colon + 1;
    if (tag == "uniform") {
      out.tag = SpecTag::kUniform;
      out.numbers = numbers(2);
    } else if (tag == "boolean") {
      out.tag = SpecTag::kBoolean;
      out.numbers = numbers(1);
    } else if (tag == "pg") {
      out.tag = SpecTag::kProjectiveGeometry;
      out.numbers = numbers(2);
    } else if (tag == "sparse") {
      out.tag = SpecTag::kSparsePaving;
      out.numbers = numbers(2);
      if (pos_ < s_.size()) {
        expect(';');
        out.hyperplanes = hyperplanes();
      }
    } else if (tag == "file") {
      out.tag = SpecTag::kFile;
      out.path = s_.substr(pos_);
      if (out.path.empty()) error(pos_, "expected a path");
      pos_ = s_.size();
    } else {
      error(0, "unknown kind '" + tag + "'");
    }
    if (pos_ != s_.size()) error(pos_, "unexpected trailing input");
    return out;
  }

 private:
  [[noreturn]] void error(std::size_t at, const std::string& message) const {
    fail(ErrorCode::kParseError, "position " + std::to_string(at) + " in '" + s_ + "': " + message);
  }

  void expect(char c) {
    if (pos_ >= s_.size() || s_[pos_] != c) error(pos_, std::string("expected '") + c + "'");
    ++pos_;
  }

  int number() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) error(start, "expected a number");
    if (pos_ - start > 6) error(start, "number too large");
    return std::stoi(s_.substr(start, pos_ - start));
  }

  std::vector<int> numbers(int count) {
    std::vector<int> out;
    for (int k = 0; k < count; ++k) {
      if (k) expect(',');
      out.push_back(number());
    }
    return out;
  }

  // Hyperplanes are runs of single-digit elements separated by '|'.
  std::vector<ElementSet> hyperplanes() {
    std::vector<ElementSet> out;
    while (true) {
      const std::size_t start = pos_;
      ElementSet h = 0;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        h |= singleton(s_[pos_] - '0');
        ++pos_;
      }
      if (start == pos_) error(start, "expected element digits");
      out.push_back(h);
      if (pos_ >= s_.size()) break;
      expect('|');
    }
    return out;
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline MatroidSpec parse_matroid_spec(const std::string& s) { return detail::SpecParser(s).parse(); }

inline Matroid build_matroid(const MatroidSpec& spec) {
  switch (spec.tag) {
    case SpecTag::kUniform:
      return build_uniform(spec.numbers[0], spec.numbers[1]);
    case SpecTag::kBoolean:
      return build_boolean(spec.numbers[0]);
    case SpecTag::kProjectiveGeometry:
      return build_projective_geometry(spec.numbers[0], spec.numbers[1]);
    case SpecTag::kSparsePaving:
      return build_sparse_paving(spec.numbers[0], spec.numbers[1], spec.hyperplanes);
    case SpecTag::kFile: {
      std::ifstream in(spec.path);
      if (!in) fail(ErrorCode::kParseError, "cannot read " + spec.path);
      std::stringstream buffer;
      buffer << in.rdbuf();
      return matroid_from_json_text(buffer.str());
    }
  }
  fail(ErrorCode::kParseError, "unknown spec");
}

inline Matroid build_matroid(const std::string& s) { return build_matroid(parse_matroid_spec(s)); }

}  // namespace meuler

#endif  // MEULER_MATROID_IO_HPP_
