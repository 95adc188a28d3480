// Copyright 2026 The subcore Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SUBCORE_SCALAR_HPP_
#define SUBCORE_SCALAR_HPP_

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

namespace subcore {

// Exact values are arbitrary-precision rationals; floating values are
// doubles compared with an absolute tolerance.
enum class Mode { exact, floating };

std::string_view to_string(Mode mode);
Mode parse_mode(std::string_view text);

// Thrown when two scalars of different modes meet in one operation.
class ModeMismatch : public std::logic_error {
 public:
  ModeMismatch() : std::logic_error("scalar mode mismatch (exact vs float)") {}
};

inline constexpr double kDefaultEpsilon = 1e-9;

// Process-wide tolerance used by every floating comparison.
double float_epsilon();
void set_float_epsilon(double eps);

class Scalar {
 public:
  // Exact zero.
  Scalar() = default;

  static Scalar exact(mpq_class q);
  static Scalar exact(long num, long den = 1);
  static Scalar floating(double x);
  static Scalar zero(Mode mode);
  static Scalar from_int(long value, Mode mode);

  // Accepts "p/q", "-p", decimals ("0.25", "-1.5e-3"). Decimals are read
  // exactly in exact mode, so "0.1" is 1/10 and not the nearest double.
  static Scalar parse(std::string_view text, Mode mode);

  Mode mode() const { return std::holds_alternative<mpq_class>(v_) ? Mode::exact : Mode::floating; }
  bool is_exact() const { return mode() == Mode::exact; }

  const mpq_class& rational() const;
  double to_double() const;
  bool is_finite() const;
  int sign() const;

  // "p/q" (or "p" when the denominator is 1) in exact mode; shortest
  // round-trip decimal in float mode.
  std::string str() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

 private:
  explicit Scalar(mpq_class q) : v_(std::move(q)) {}
  explicit Scalar(double x) : v_(x) {}

  std::variant<mpq_class, double> v_{mpq_class(0)};
};

// Three-way comparison; float mode treats |a-b| <= eps as equal.
int compare(const Scalar& a, const Scalar& b);

bool scalar_eq(const Scalar& a, const Scalar& b);
inline bool scalar_le(const Scalar& a, const Scalar& b) { return compare(a, b) <= 0; }
inline bool scalar_lt(const Scalar& a, const Scalar& b) { return compare(a, b) < 0; }

inline bool operator==(const Scalar& a, const Scalar& b) { return scalar_eq(a, b); }
inline bool operator<(const Scalar& a, const Scalar& b) { return compare(a, b) < 0; }
inline bool operator<=(const Scalar& a, const Scalar& b) { return compare(a, b) <= 0; }
inline bool operator>(const Scalar& a, const Scalar& b) { return compare(a, b) > 0; }
inline bool operator>=(const Scalar& a, const Scalar& b) { return compare(a, b) >= 0; }

const Scalar& min(const Scalar& a, const Scalar& b);
const Scalar& max(const Scalar& a, const Scalar& b);

}  // namespace subcore

#endif  // SUBCORE_SCALAR_HPP_
