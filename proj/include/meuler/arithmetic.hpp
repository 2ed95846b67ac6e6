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

#ifndef MEULER_ARITHMETIC_HPP_
#define MEULER_ARITHMETIC_HPP_

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "meuler/error.hpp"

namespace meuler {

using BigInt = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

inline bool is_integral(const Rational& x) {
  return boost::multiprecision::denominator(x) == 1;
}

inline BigInt to_integer(const Rational& x) {
  if (!is_integral(x)) {
    fail(ErrorCode::kDivisionNotExact, "expected an integer, got " + x.str());
  }
  return boost::multiprecision::numerator(x);
}

inline BigInt factorial(int n) {
  BigInt out = 1;
  for (int i = 2; i <= n; ++i) out *= i;
  return out;
}

inline BigInt binomial(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt out = 1;
  for (long long i = 1; i <= k; ++i) {
    out *= n - k + i;
    out /= i;
  }
  return out;
}

inline BigInt power(const BigInt& base, unsigned exponent) {
  BigInt out = 1;
  for (unsigned i = 0; i < exponent; ++i) out *= base;
  return out;
}

inline Rational power(const Rational& base, unsigned exponent) {
  Rational out = 1;
  for (unsigned i = 0; i < exponent; ++i) out *= base;
  return out;
}

/// (k)_q = 1 + q + ... + q^{k-1}.
template <typename T>
T q_integer(int k, const T& q) {
  T out = 0;
  T term = 1;
  for (int i = 0; i < k; ++i) {
    out += term;
    term *= q;
  }
  return out;
}

template <typename T>
T q_factorial(int k, const T& q) {
  T out = 1;
  for (int i = 1; i <= k; ++i) out *= q_integer<T>(i, q);
  return out;
}

inline bool is_prime(long long q) {
  if (q < 2) return false;
  for (long long d = 2; d * d <= q; ++d) {
    if (q % d == 0) return false;
  }
  return true;
}

/// Dense univariate polynomial with exact integer coefficients;
/// coefficients()[k] multiplies y^k.  Trailing zeros are trimmed.
class UnivariatePoly {
 public:
  UnivariatePoly() = default;
  explicit UnivariatePoly(std::vector<BigInt> coefficients)
      : coefficients_(std::move(coefficients)) {
    trim();
  }

  static UnivariatePoly constant(const BigInt& c) { return UnivariatePoly({c}); }

  const std::vector<BigInt>& coefficients() const { return coefficients_; }
  bool is_zero() const { return coefficients_.empty(); }
  int degree() const { return static_cast<int>(coefficients_.size()) - 1; }

  BigInt coefficient(int k) const {
    if (k < 0 || k >= static_cast<int>(coefficients_.size())) return 0;
    return coefficients_[k];
  }

  void set_coefficient(int k, const BigInt& value) {
    if (k >= static_cast<int>(coefficients_.size())) coefficients_.resize(k + 1);
    coefficients_[k] = value;
    trim();
  }

  BigInt evaluate(const BigInt& y) const {
    BigInt out = 0;
    for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) {
      out = out * y + *it;
    }
    return out;
  }

  friend UnivariatePoly operator+(const UnivariatePoly& a, const UnivariatePoly& b) {
    std::vector<BigInt> c(std::max(a.coefficients_.size(), b.coefficients_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coefficient(i) + b.coefficient(i);
    return UnivariatePoly(std::move(c));
  }

  friend UnivariatePoly operator-(const UnivariatePoly& a, const UnivariatePoly& b) {
    std::vector<BigInt> c(std::max(a.coefficients_.size(), b.coefficients_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coefficient(i) - b.coefficient(i);
    return UnivariatePoly(std::move(c));
  }

  friend UnivariatePoly operator*(const UnivariatePoly& a, const UnivariatePoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigInt> c(a.coefficients_.size() + b.coefficients_.size() - 1);
    for (std::size_t i = 0; i < a.coefficients_.size(); ++i) {
      for (std::size_t j = 0; j < b.coefficients_.size(); ++j) {
        c[i + j] += a.coefficients_[i] * b.coefficients_[j];
      }
    }
    return UnivariatePoly(std::move(c));
  }

  friend UnivariatePoly operator*(const BigInt& s, const UnivariatePoly& p) {
    std::vector<BigInt> c = p.coefficients_;
    for (auto& x : c) x *= s;
    return UnivariatePoly(std::move(c));
  }

  friend bool operator==(const UnivariatePoly& a, const UnivariatePoly& b) {
    return a.coefficients_ == b.coefficients_;
  }

  /// Exact division by (y - root).  Throws DivisionNotExact on a remainder.
  UnivariatePoly divide_by_linear(const BigInt& root) const {
    if (is_zero()) return {};
    std::vector<BigInt> quotient(coefficients_.size() - 1);
    BigInt carry = 0;
    for (int k = degree(); k >= 1; --k) {
      carry = coefficients_[k] + carry * root;
      quotient[k - 1] = carry;
    }
    BigInt remainder = coefficients_[0] + carry * root;
    if (remainder != 0) {
      fail(ErrorCode::kDivisionNotExact, "remainder " + remainder.str());
    }
    return UnivariatePoly(std::move(quotient));
  }

  std::string to_string(const std::string& var = "y") const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int k = 0; k <= degree(); ++k) {
      const BigInt& c = coefficients_[k];
      if (c == 0) continue;
      BigInt mag = abs(c);
      if (first) {
        if (c < 0) out << "-";
      } else {
        out << (c < 0 ? " - " : " + ");
      }
      first = false;
      if (k == 0 || mag != 1) out << mag;
      if (k >= 1) out << var;
      if (k >= 2) out << "^" << k;
    }
    return out.str();
  }

 private:
  void trim() {
    while (!coefficients_.empty() && coefficients_.back() == 0) coefficients_.pop_back();
  }

  std::vector<BigInt> coefficients_;
};

inline std::ostream& operator<<(std::ostream& os, const UnivariatePoly& p) {
  return os << p.to_string();
}

/// Sparse bivariate polynomial: (x-degree, y-degree) -> coefficient.
class BivariatePoly {
 public:
  using Terms = std::map<std::pair<int, int>, BigInt>;

  BivariatePoly() = default;

  const Terms& terms() const { return terms_; }

  BigInt coefficient(int i, int j) const {
    auto it = terms_.find({i, j});
    return it == terms_.end() ? BigInt(0) : it->second;
  }

  void add(int i, int j, const BigInt& c) {
    if (c == 0) return;
    BigInt& slot = terms_[{i, j}];
    slot += c;
    if (slot == 0) terms_.erase({i, j});
  }

  friend BivariatePoly operator+(BivariatePoly a, const BivariatePoly& b) {
    for (const auto& [key, c] : b.terms_) a.add(key.first, key.second, c);
    return a;
  }

  /// Multiply by x^i y^j.
  BivariatePoly shifted(int i, int j) const {
    BivariatePoly out;
    for (const auto& [key, c] : terms_) out.add(key.first + i, key.second + j, c);
    return out;
  }

  BigInt evaluate(const BigInt& x, const BigInt& y) const {
    BigInt out = 0;
    for (const auto& [key, c] : terms_) {
      out += c * power(x, key.first) * power(y, key.second);
    }
    return out;
  }

  /// T(1, y) as a polynomial in y.
  UnivariatePoly at_x_equals_one() const {
    UnivariatePoly out;
    for (const auto& [key, c] : terms_) {
      out.set_coefficient(key.second, out.coefficient(key.second) + c);
    }
    return out;
  }

  /// T(x, 0) as a polynomial in x.
  UnivariatePoly at_y_equals_zero() const {
    UnivariatePoly out;
    for (const auto& [key, c] : terms_) {
      if (key.second == 0) out.set_coefficient(key.first, out.coefficient(key.first) + c);
    }
    return out;
  }

  friend bool operator==(const BivariatePoly& a, const BivariatePoly& b) {
    return a.terms_ == b.terms_;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [key, c] = *it;
      BigInt mag = abs(c);
      if (first) {
        if (c < 0) out << "-";
      } else {
        out << (c < 0 ? " - " : " + ");
      }
      first = false;
      bool bare = key.first == 0 && key.second == 0;
      if (bare || mag != 1) out << mag;
      if (key.first >= 1) out << "x" << (key.first >= 2 ? "^" + std::to_string(key.first) : "");
      if (key.second >= 1) out << "y" << (key.second >= 2 ? "^" + std::to_string(key.second) : "");
    }
    return out.str();
  }

 private:
  Terms terms_;
};

}  // namespace meuler

#endif  // MEULER_ARITHMETIC_HPP_
