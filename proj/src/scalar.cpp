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

#include "subcore/scalar.hpp"

#include <atomic>
#include <charconv>
#include <cctype>
#include <cmath>
#include <cstdlib>

namespace subcore {

namespace {

std::atomic<double> g_epsilon{kDefaultEpsilon};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

// Reads [+-]digits[.digits][(e|E)[+-]digits] exactly.
mpq_class parse_decimal(std::string_view s) {
  const std::string orig(s);
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exp_text = s.substr(e + 1);
    s = s.substr(0, e);
    bool exp_negative = false;
    if (!exp_text.empty() && (exp_text.front() == '+' || exp_text.front() == '-')) {
      exp_negative = exp_text.front() == '-';
      exp_text.remove_prefix(1);
    }
    if (!all_digits(exp_text) || exp_text.size() > 6)
      throw std::invalid_argument("malformed exponent in scalar '" + orig + "'");
    exponent = std::stol(std::string(exp_text));
    if (exp_negative) exponent = -exponent;
  }
  std::string digits;
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view whole = s.substr(0, dot);
    std::string_view frac = s.substr(dot + 1);
    if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac)) ||
        (whole.empty() && frac.empty()))
      throw std::invalid_argument("malformed scalar '" + orig + "'");
    digits = std::string(whole) + std::string(frac);
    exponent -= static_cast<long>(frac.size());
  } else {
    if (!all_digits(s)) throw std::invalid_argument("malformed scalar '" + orig + "'");
    digits = std::string(s);
  }
  mpz_class num(digits, 10);
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
  mpq_class q = exponent < 0 ? mpq_class(num, scale) : mpq_class(num * scale);
  q.canonicalize();
  return negative ? mpq_class(-q) : q;
}

mpq_class parse_rational(std::string_view s) {
  const auto slash = s.find('/');
  if (slash == std::string_view::npos) return parse_decimal(s);
  std::string_view num = trim(s.substr(0, slash));
  std::string_view den = trim(s.substr(slash + 1));
  bool negative = false;
  if (!num.empty() && (num.front() == '+' || num.front() == '-')) {
    negative = num.front() == '-';
    num.remove_prefix(1);
  }
  if (!all_digits(num) || !all_digits(den))
    throw std::invalid_argument("malformed rational '" + std::string(s) + "'");
  mpz_class d(std::string(den), 10);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(s) + "'");
  mpq_class q(mpz_class(std::string(num), 10), d);
  q.canonicalize();
  return negative ? mpq_class(-q) : q;
}

template <class ExactOp, class FloatOp>
void combine(std::variant<mpq_class, double>& lhs, const std::variant<mpq_class, double>& rhs,
             ExactOp exact_op, FloatOp float_op) {
  if (lhs.index() != rhs.index()) throw ModeMismatch();
  if (auto* q = std::get_if<mpq_class>(&lhs))
    exact_op(*q, std::get<mpq_class>(rhs));
  else
    float_op(std::get<double>(lhs), std::get<double>(rhs));
}

}  // namespace

std::string_view to_string(Mode mode) { return mode == Mode::exact ? "exact" : "float"; }

Mode parse_mode(std::string_view text) {
  if (text == "exact") return Mode::exact;
  if (text == "float") return Mode::floating;
  throw std::invalid_argument("unknown scalar mode '" + std::string(text) + "'");
}

double float_epsilon() { return g_epsilon.load(std::memory_order_relaxed); }

void set_float_epsilon(double eps) {
  if (!(eps >= 0.0) || !std::isfinite(eps)) throw std::invalid_argument("epsilon must be finite and >= 0");
  g_epsilon.store(eps, std::memory_order_relaxed);
}

Scalar Scalar::exact(mpq_class q) {
  q.canonicalize();
  return Scalar(std::move(q));
}

Scalar Scalar::exact(long num, long den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  return exact(mpq_class(num, den));
}

Scalar Scalar::floating(double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("non-finite scalar");
  return Scalar(x);
}

Scalar Scalar::zero(Mode mode) { return from_int(0, mode); }

Scalar Scalar::from_int(long value, Mode mode) {
  return mode == Mode::exact ? Scalar(mpq_class(value)) : Scalar(static_cast<double>(value));
}

Scalar Scalar::parse(std::string_view text, Mode mode) {
  text = trim(text);
  if (text.empty()) throw std::invalid_argument("empty scalar");
  mpq_class q = parse_rational(text);
  if (mode == Mode::exact) return exact(std::move(q));
  if (text.find('/') == std::string_view::npos) {
    // strtod gives the correctly rounded double of the decimal text.
    return floating(std::strtod(std::string(text).c_str(), nullptr));
  }
  return floating(q.get_d());
}

const mpq_class& Scalar::rational() const {
  if (const auto* q = std::get_if<mpq_class>(&v_)) return *q;
  throw ModeMismatch();
}

double Scalar::to_double() const {
  if (const auto* q = std::get_if<mpq_class>(&v_)) return q->get_d();
  return std::get<double>(v_);
}

bool Scalar::is_finite() const {
  if (const auto* x = std::get_if<double>(&v_)) return std::isfinite(*x);
  return true;
}

int Scalar::sign() const {
  if (const auto* q = std::get_if<mpq_class>(&v_)) return sgn(*q);
  const double x = std::get<double>(v_);
  if (std::abs(x) <= float_epsilon()) return 0;
  return x < 0 ? -1 : 1;
}

std::string Scalar::str() const {
  if (const auto* q = std::get_if<mpq_class>(&v_)) return q->get_str();
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, std::get<double>(v_));
  return std::string(buf, res.ptr);
}

Scalar Scalar::operator-() const {
  if (const auto* q = std::get_if<mpq_class>(&v_)) return Scalar(mpq_class(-*q));
  return Scalar(-std::get<double>(v_));
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  combine(v_, rhs.v_, [](mpq_class& a, const mpq_class& b) { a += b; },
          [](double& a, double b) { a += b; });
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
  combine(v_, rhs.v_, [](mpq_class& a, const mpq_class& b) { a -= b; },
          [](double& a, double b) { a -= b; });
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
  combine(v_, rhs.v_, [](mpq_class& a, const mpq_class& b) { a *= b; },
          [](double& a, double b) { a *= b; });
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
  if (rhs.sign() == 0 && rhs.is_exact()) throw std::domain_error("division by zero");
  combine(v_, rhs.v_, [](mpq_class& a, const mpq_class& b) { a /= b; },
          [](double& a, double b) { a /= b; });
  return *this;
}

int compare(const Scalar& a, const Scalar& b) {
  if (a.mode() != b.mode()) throw ModeMismatch();
  if (a.is_exact()) {
    const int c = cmp(a.rational(), b.rational());
    return (c > 0) - (c < 0);
  }
  const double x = a.to_double();
  const double y = b.to_double();
  if (std::abs(x - y) <= float_epsilon()) return 0;
  return x < y ? -1 : 1;
}

bool scalar_eq(const Scalar& a, const Scalar& b) { return compare(a, b) == 0; }

const Scalar& min(const Scalar& a, const Scalar& b) { return compare(b, a) < 0 ? b : a; }
const Scalar& max(const Scalar& a, const Scalar& b) { return compare(b, a) > 0 ? b : a; }

}  // namespace subcore
