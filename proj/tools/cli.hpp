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

#ifndef MEULER_TOOLS_CLI_HPP_
#define MEULER_TOOLS_CLI_HPP_

// Command-line front end.  run() is kept separate from main() so tests can
// drive it with captured streams.
//
// Exit codes: 0 success, 1 bad input, 2 an internal check failed (two
// pipelines disagree, a verification suite found a violation).

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "meuler/meuler.hpp"

namespace meuler::cli {

enum ExitCode { kOk = 0, kInputError = 1, kInternalError = 2 };

/// One output row: what was computed, by which pipeline, and how long it took.
struct OutputRecord {
  std::string matroid;
  std::string c;  // composition or other input echo
  std::string pipeline;
  std::string value;
  double millis = 0;
  nlohmann::json extra = nlohmann::json::object();
};

inline std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  if (s.empty()) return out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(item, &used);
    } catch (const std::exception&) {
      fail(ErrorCode::kParseError, "'" + item + "' is not an integer");
    }
    if (used != item.size()) fail(ErrorCode::kParseError, "'" + item + "' is not an integer");
    out.push_back(value);
  }
  return out;
}

inline Rational parse_rational(const std::string& s) {
  const std::size_t slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(s));
    return Rational(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
  } catch (const std::exception&) {
    fail(ErrorCode::kParseError, "'" + s + "' is not a rational number");
  }
}

inline std::string rational_string(const Rational& x) { return x.str(); }

inline std::string join(const std::vector<int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out;
}

class Emitter {
 public:
  Emitter(std::string format, std::ostream& out) : format_(std::move(format)), out_(out) {}

  void add(OutputRecord record) { records_.push_back(std::move(record)); }

  /// Free-form text used instead of the value column in text mode.
  void add_text(std::string text) { text_.push_back(std::move(text)); }

  void flush() {
    if (format_ == "json") {
      nlohmann::json doc = nlohmann::json::array();
      for (const OutputRecord& r : records_) {
        nlohmann::json row = {{"matroid", r.matroid}, {"c", r.c},         {"pipeline", r.pipeline},
                              {"value", r.value},     {"millis", r.millis}};
        for (auto it = r.extra.begin(); it != r.extra.end(); ++it) row[it.key()] = it.value();
        doc.push_back(row);
      }
      out_ << (doc.size() == 1 ? doc.front().dump(2) : doc.dump(2)) << "\n";
    } else if (format_ == "csv") {
      out_ << "matroid,c,pipeline,value,millis\n";
      for (const OutputRecord& r : records_) {
        out_ << quote(r.matroid) << "," << quote(r.c) << "," << quote(r.pipeline) << ","
             << quote(r.value) << "," << r.millis << "\n";
      }
    } else if (!text_.empty()) {
      for (const std::string& line : text_) out_ << line << "\n";
    } else {
      for (const OutputRecord& r : records_) out_ << r.value << "\n";
    }
  }

 private:
  static std::string quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) out += ch == '"' ? std::string("\"\"") : std::string(1, ch);
    return out + "\"";
  }

  std::string format_;
  std::ostream& out_;
  std::vector<OutputRecord> records_;
  std::vector<std::string> text_;
};

template <typename F>
auto timed(F&& f, double& millis) {
  const auto start = std::chrono::steady_clock::now();
  auto value = f();
  millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
               .count();
  return value;
}

/// Degree of gamma^c by the named pipeline.
inline BigInt degree_by_pipeline(const Matroid& m, const Composition& c,
                                 const std::string& pipeline, WeightConvention convention) {
  const VVector v = to_vvector(c);
  if (pipeline == "flag") return mixed_eulerian_degree(m, c, convention);
  if (pipeline == "localization") return gamma_degree_via_localization(m, c);
  if (pipeline == "eulerian") {
    for (std::size_t j = 1; j < v.size(); ++j) {
      if (v[j] == v[j - 1]) return eulerian_recursion_degree(m, v, static_cast<int>(j));
    }
    fail(ErrorCode::kPreconditionViolation, "eulerian pipeline needs a repeated index");
  }
  if (pipeline == "delcon") return deletion_contraction_degree(m, v, 0, 0);
  if (pipeline == "convolution") return cv_via_tutte_convolution(m, v);
  if (pipeline == "lopsided") {
    const PmdProfile profile = pmd_profile(m);
    std::vector<int> by_rank(profile.dimension(), 0);
    int placed = 0;
    for (int i = 1; i <= profile.dimension(); ++i) {
      by_rank[i - 1] = c[profile.sizes[i]];
      placed += by_rank[i - 1];
    }
    if (placed != c.total()) {
      fail(ErrorCode::kPreconditionViolation, "lopsided pipeline needs indices at flat sizes");
    }
    return lopsided_degree(m, by_rank);
  }
  fail(ErrorCode::kParseError, "unknown pipeline '" + pipeline + "'");
}

inline Composition composition_from_flags(const Matroid& m, const std::string& c_text,
                                          const std::string& v_text) {
  if (c_text.empty() == v_text.empty()) {
    fail(ErrorCode::kParseError, "give exactly one of --c and --v");
  }
  if (!c_text.empty()) {
    Composition c{parse_int_list(c_text)};
    for (int x : c.entries) {
      if (x < 0) fail(ErrorCode::kCompositionMismatch, "negative exponent");
    }
    if (c.parts() != m.top_index()) {
      fail(ErrorCode::kCompositionMismatch,
           "--c needs " + std::to_string(m.top_index()) + " entries");
    }
    return c;
  }
  return to_composition(parse_int_list(v_text), m.top_index());
}

struct SuiteResult {
  int checks = 0;
  std::vector<std::string> failures;
};

/// Verification suites runnable from the command line.
inline SuiteResult run_suite(const std::string& suite, const Matroid& m) {
  SuiteResult out;
  auto expect = [&out](bool ok, const std::string& what) {
    ++out.checks;
    if (!ok) out.failures.push_back(what);
  };
  const int r = m.dimension();
  const int n = m.top_index();
  const bool all = suite == "all";
  bool known = all;
  if (all || suite == "charpoly") {
    known = true;
    const CharacteristicData data = characteristic_data(m);
    for (int k = 0; k <= r; ++k) {
      VVector v(k, 1);
      v.insert(v.end(), r - k, n);
      expect(gamma_product_degree(m, v) == data.mu[k], "mu^" + std::to_string(k) + " degree");
      expect(count_initial_descending_flags(m, k) == data.mu[k],
             "mu^" + std::to_string(k) + " descending flags");
    }
  }
  if (all || suite == "conventions") {
    known = true;
    for (const Composition& c : all_compositions(r, n)) {
      expect(mixed_eulerian_degree(m, c, WeightConvention::kOverIntersection) ==
                 mixed_eulerian_degree(m, c, WeightConvention::kMultiplicity),
             "conventions at " + to_string(c));
    }
  }
  if (all || suite == "localization") {
    known = true;
    const LocalizationTable table(m);
    for (const Composition& c : all_compositions(r, n)) {
      expect(gamma_degree_via_localization(table, c) == mixed_eulerian_degree(m, c),
             "localization at " + to_string(c));
    }
  }
  if (all || suite == "tutte") {
    known = true;
    const UnivariatePoly t = tutte_polynomial(m).at_x_equals_one();
    const Matroid boolean = build_boolean(m.rank());
    for (const Composition& c : all_compositions(r, n)) {
      const VVector v = to_vvector(c);
      if (v.empty() || v.front() != 1 || !classify_support(m, v).contiguous) continue;
      if (v.back() > boolean.top_index()) continue;
      expect(cv_polynomial(m, v) == t * cv_polynomial(boolean, v),
             "factorization at " + to_string(v));
    }
  }
  if (all || suite == "logconcave") {
    known = true;
    if (r >= 2) {
      DegreeCache cache(m);
      for (const Composition& c : all_compositions(r - 2, n)) {
        for (int i = 1; i <= n; ++i) {
          for (int j = i + 1; j <= n; ++j) {
            expect(log_concavity_check(cache, c, i, j).holds,
                   "log-concavity at " + to_string(c) + " i=" + std::to_string(i) +
                       " j=" + std::to_string(j));
          }
        }
      }
    }
  }
  if (all || suite == "trees") {
    known = true;
    for (const Composition& c : all_compositions(r, n)) {
      const VVector v = to_vvector(c);
      expect(aggregate_trees(enumerate_trees(m, v, WeightConvention::kOverIntersection)) ==
                 expand_gamma_product(m, v, WeightConvention::kOverIntersection,
                                      FactorOrder::kAsGiven),
             "trees at " + to_string(v));
    }
  }
  if (suite == "pmd") {
    known = true;
    const PmdProfile profile = pmd_profile(m);
    for (const std::vector<int>& c : remixed_index_set(r)) {
      if (is_lopsided(c)) {
        expect(lopsided_degree(m, c) == mixed_eulerian_degree(m, size_composition(profile, c)),
               "lopsided at " + to_string(c));
      }
      for (int i = 1; i <= r; ++i) {
        if (c[i - 1] >= 2) {
          expect(pmd_recurrence_check(m, c, i).holds, "recurrence at " + to_string(c));
        }
      }
    }
  }
  if (!known) fail(ErrorCode::kParseError, "unknown suite '" + suite + "'");
  return out;
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Matroidal mixed Eulerian numbers"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "text";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "text"}));

  std::string matroid_text, c_text, v_text, pipeline = "flag", convention = "oi", suite;
  std::string q_text;
  int rank_r = 0;
  bool contiguous_only = false;

  auto* degree = app.add_subcommand("degree", "Degree of a product of hypersimplex classes");
  degree->add_option("--matroid", matroid_text, "Matroid spec")->required();
  degree->add_option("--c", c_text, "Exponents c_1,...,c_n");
  degree->add_option("--v", v_text, "Indices v_1,...,v_r");
  degree->add_option("--pipeline", pipeline,
                     "flag|eulerian|delcon|localization|lopsided|convolution, comma separated");
  degree->add_option("--convention", convention)->check(CLI::IsMember({"oi", "mult"}));

  auto* table = app.add_subcommand("table", "All mixed Eulerian numbers of a matroid");
  table->add_option("--matroid", matroid_text)->required();
  table->add_flag("--contiguous-only", contiguous_only);

  auto* tutte = app.add_subcommand("tutte", "Tutte polynomial");
  tutte->add_option("--matroid", matroid_text)->required();
  auto* charpoly = app.add_subcommand("charpoly", "Reduced characteristic polynomial");
  charpoly->add_option("--matroid", matroid_text)->required();
  auto* cvpoly = app.add_subcommand("cvpoly", "C_v(M, y)");
  cvpoly->add_option("--matroid", matroid_text)->required();
  cvpoly->add_option("--v", v_text)->required();
  auto* pvol_cmd = app.add_subcommand("pvol", "Permutohedral volume");
  pvol_cmd->add_option("--matroid", matroid_text)->required();
  auto* remixed = app.add_subcommand("remixed", "Remixed Eulerian number A_c(q)");
  remixed->add_option("--r", rank_r)->required();
  remixed->add_option("--q", q_text)->required();
  remixed->add_option("--c", c_text)->required();
  auto* trees = app.add_subcommand("trees", "Weighted flat-filled trees");
  trees->add_option("--matroid", matroid_text)->required();
  trees->add_option("--v", v_text)->required();
  auto* check = app.add_subcommand("check", "Run a verification suite");
  check->add_option("--suite", suite, "charpoly|conventions|localization|tutte|logconcave|trees|pmd|all")
      ->required();
  check->add_option("--matroid", matroid_text)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  Emitter emit(format, out);
  try {
    if (degree->parsed()) {
      const Matroid m = build_matroid(matroid_text);
      const Composition c = composition_from_flags(m, c_text, v_text);
      const WeightConvention conv = convention == "mult" ? WeightConvention::kMultiplicity
                                                         : WeightConvention::kOverIntersection;
      std::stringstream names(pipeline);
      std::string name;
      std::optional<BigInt> first;
      while (std::getline(names, name, ',')) {
        double millis = 0;
        const BigInt value = timed([&] { return degree_by_pipeline(m, c, name, conv); }, millis);
        emit.add({matroid_text, join(c.entries), name, value.str(), millis});
        if (first && *first != value) {
          emit.flush();
          err << "internal error: pipelines disagree\n";
          return kInternalError;
        }
        first = value;
      }
      if (!first) fail(ErrorCode::kParseError, "no pipeline given");
      // Identical values from several pipelines print once in text mode.
      if (format == "text") emit.add_text(first->str());
    } else if (table->parsed()) {
      const Matroid m = build_matroid(matroid_text);
      DegreeCache cache(m);
      for (const Composition& c : all_compositions(m.dimension(), m.top_index())) {
        const VVector v = to_vvector(c);
        if (contiguous_only && !v.empty() && !classify_support(m, v).contiguous) continue;
        double millis = 0;
        const BigInt value = timed([&] { return cache.degree(c); }, millis);
        emit.add({matroid_text, join(c.entries), "flag", value.str(), millis});
        emit.add_text(to_string(c) + " " + value.str());
      }
    } else if (tutte->parsed()) {
      const Matroid m = build_matroid(matroid_text);
      double millis = 0;
      const BivariatePoly t = timed([&] { return tutte_polynomial(m); }, millis);
      OutputRecord record{matroid_text, "", "corank-nullity", t.to_string(), millis};
      nlohmann::json terms = nlohmann::json::array();
      for (const auto& [key, coefficient] : t.terms()) {
        terms.push_back({key.first, key.second, coefficient.str()});
      }
      record.extra["terms"] = terms;
      emit.add(record);
    } else if (charpoly->parsed()) {
      const Matroid m = build_matroid(matroid_text);
      double millis = 0;
      const CharacteristicData data = timed([&] { return characteristic_data(m); }, millis);
      OutputRecord record{matroid_text, "", "tutte", data.chi_reduced.to_string("l"), millis};
      nlohmann::json mu = nlohmann::json::array();
      std::string mu_text;
      for (const BigInt& x : data.mu) {
        mu.push_back(x.str());
        mu_text += (mu_text.empty() ? "" : ",") + x.str();
      }
      record.extra["mu"] = mu;
      record.extra["chi"] = data.chi.to_string("l");
      emit.add(record);
      emit.add_text("chi_reduced = " + data.chi_reduced.to_string("l"));
      emit.add_text("mu = " + mu_text);
    } else if (cvpoly->parsed()) {
      const Matroid m = build_matroid(matroid_text);
      const VVector v = parse_int_list(v_text);
      double millis = 0;
      const UnivariatePoly p = timed([&] { return cv_polynomial(m, v); }, millis);
      emit.add({matroid_text, join(v), "flag", p.to_string(), millis});
    } else if (pvol_cmd->parsed()) {
      const Matroid m = build_matroid(matroid_text);
      double millis = 0;
      const BigInt value = timed([&] { return pvol(m); }, millis);
      emit.add({matroid_text, "", "flag", value.str(), millis});
    } else if (remixed->parsed()) {
      const Rational q = parse_rational(q_text);
      const std::vector<int> c = parse_int_list(c_text);
      double millis = 0;
      const Rational value = timed([&] { return remixed_eulerian_eval(rank_r, c, q); }, millis);
      emit.add({"", join(c), "linear-solve", rational_string(value), millis});
    } else if (trees->parsed()) {
      const Matroid m = build_matroid(matroid_text);
      const VVector v = parse_int_list(v_text);
      double millis = 0;
      const auto found = timed(
          [&] { return enumerate_trees(m, v, WeightConvention::kOverIntersection); }, millis);
      for (const WeightedTree& t : found) {
        std::string flag;
        for (ElementSet f : t.tree.flag()) flag += set_to_string(f);
        OutputRecord record{matroid_text, join(v), "trees", t.weight.str(), millis};
        record.extra["shape"] = t.tree.shape();
        record.extra["flag"] = flag;
        emit.add(record);
        emit.add_text(t.tree.shape() + " " + flag + " " + t.weight.str());
      }
      if (found.empty()) emit.add_text("no trees");
    } else if (check->parsed()) {
      const Matroid m = build_matroid(matroid_text);
      double millis = 0;
      const SuiteResult result = timed([&] { return run_suite(suite, m); }, millis);
      const bool ok = result.failures.empty();
      OutputRecord record{matroid_text, "", suite, ok ? "pass" : "fail", millis};
      record.extra["checks"] = result.checks;
      record.extra["failures"] = result.failures;
      emit.add(record);
      emit.add_text(suite + ": " + std::to_string(result.checks) + " checks, " +
                    std::to_string(result.failures.size()) + " failures");
      for (const std::string& f : result.failures) emit.add_text("  " + f);
      emit.flush();
      return ok ? kOk : kInternalError;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    const bool internal =
        e.code() == ErrorCode::kDivisionNotExact || e.code() == ErrorCode::kSingularSystem;
    return internal ? kInternalError : kInputError;
  }
  emit.flush();
  return kOk;
}

}  // namespace meuler::cli

#endif  // MEULER_TOOLS_CLI_HPP_
