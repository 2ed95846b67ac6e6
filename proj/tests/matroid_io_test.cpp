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

#include <cstdio>
#include <fstream>
#include <functional>
#include <optional>
#include <string>

#include "meuler/meuler.hpp"

namespace meuler {
namespace {

std::optional<ErrorCode> code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

std::string message_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

TEST(Json, BasesSchema) {
  const Matroid m = matroid_from_json_text(
      R"({"ground_set_size": 3, "bases": [[0, 1], [0, 2], [1, 2]]})");
  EXPECT_EQ(m.size(), 3);
  EXPECT_EQ(m.rank(), 2);
  EXPECT_EQ(m.flats_of_rank(1).size(), 3u);
}

TEST(Json, CircuitHyperplaneSchema) {
  const Matroid m = matroid_from_json_text(
      R"({"ground_set_size": 6, "rank": 3, "circuit_hyperplanes": [[0, 1, 2], [3, 4, 5]]})");
  EXPECT_EQ(m.rank(), 3);
  EXPECT_EQ(mu_sequence(m), mu_sequence(sparse_paving_rank3_on6(2)));
}

TEST(Json, FlatsSchema) {
  const Matroid m = matroid_from_json_text(
      R"({"ground_set_size": 3, "flats_by_rank": [[[]], [[0], [1], [2]], [[0, 1, 2]]]})");
  EXPECT_EQ(m.rank(), 2);
  EXPECT_EQ(m.size(), 3);
}

TEST(Json, ErrorsCarryPointers) {
  EXPECT_EQ(code_of([] { matroid_from_json_text("{"); }), ErrorCode::kParseError);
  EXPECT_NE(message_of([] { matroid_from_json_text(R"({"bases": []})"); }).find("/ground_set_size"),
            std::string::npos);
  EXPECT_NE(message_of([] {
              matroid_from_json_text(R"({"ground_set_size": 3, "bases": [[0, 1], [0, 7]]})");
            }).find("/bases/1/1"),
            std::string::npos);
  EXPECT_NE(message_of([] {
              matroid_from_json_text(R"({"ground_set_size": 3, "bases": [[0, "a"]]})");
            }).find("/bases/0/1"),
            std::string::npos);
  EXPECT_EQ(code_of([] { matroid_from_json_text(R"({"ground_set_size": 3})"); }),
            ErrorCode::kParseError);
}

TEST(Json, RoundTripOverCatalog) {
  for (const Matroid& m : standard_catalog(5, false)) {
    const Matroid back = matroid_from_json(matroid_to_json(m));
    EXPECT_EQ(back.size(), m.size());
    EXPECT_EQ(back.rank(), m.rank());
    EXPECT_EQ(back.proper_flats(), m.proper_flats()) << m.name();
  }
}

TEST(Spec, Kinds) {
  const Matroid u = build_matroid("uniform:3,5");
  EXPECT_EQ(u.rank(), 3);
  EXPECT_EQ(u.size(), 5);
  EXPECT_EQ(build_matroid("boolean:4").rank(), 4);
  const Matroid f = build_matroid("pg:2,2");
  EXPECT_EQ(f.size(), 7);
  EXPECT_EQ(f.rank(), 3);
  const Matroid s = build_matroid("sparse:3,6;012|345");
  EXPECT_EQ(mu_sequence(s), mu_sequence(sparse_paving_rank3_on6(2)));
  const MatroidSpec spec = parse_matroid_spec("sparse:3,6");
  EXPECT_EQ(spec.tag, SpecTag::kSparsePaving);
  EXPECT_TRUE(spec.hyperplanes.empty());
}

TEST(Spec, FileKind) {
  const std::string path = ::testing::TempDir() + "meuler_io_test.json";
  {
    std::ofstream out(path);
    out << matroid_to_json(fano()).dump();
  }
  const Matroid m = build_matroid("file:" + path);
  EXPECT_EQ(m.proper_flats(), fano().proper_flats());
  std::remove(path.c_str());
  EXPECT_EQ(code_of([&] { build_matroid("file:" + path); }), ErrorCode::kParseError);
}

TEST(Spec, Errors) {
  EXPECT_EQ(code_of([] { build_matroid("pg:2,4"); }), ErrorCode::kNonPrimeQ);
  EXPECT_EQ(code_of([] { parse_matroid_spec("uniform"); }), ErrorCode::kParseError);
  EXPECT_EQ(code_of([] { parse_matroid_spec("cube:3"); }), ErrorCode::kParseError);
  EXPECT_EQ(code_of([] { parse_matroid_spec("uniform:3,"); }), ErrorCode::kParseError);
  EXPECT_EQ(code_of([] { parse_matroid_spec("uniform:3,5x"); }), ErrorCode::kParseError);
  EXPECT_EQ(code_of([] { parse_matroid_spec("sparse:3,6;01||2"); }), ErrorCode::kParseError);
  const std::string message = message_of([] { parse_matroid_spec("uniform:3;5"); });
  EXPECT_NE(message.find("position 9"), std::string::npos) << message;
}

}  // namespace
}  // namespace meuler
