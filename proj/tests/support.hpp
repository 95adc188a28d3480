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

// Fixtures, seeded generators and brute-force oracles shared by the unit and
// acceptance suites. The oracles here deliberately avoid the library's own
// construction paths.

#ifndef SUBCORE_TESTS_SUPPORT_HPP_
#define SUBCORE_TESTS_SUPPORT_HPP_

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <stdexcept>
#include <vector>

#include "subcore/choquet.hpp"
#include "subcore/embed.hpp"
#include "subcore/setfun.hpp"

namespace subcore::testing {

inline Scalar q(long num, long den = 1) { return Scalar::exact(num, den); }

// v(S) = 2p - p^2 with p = |S|/3 on three points.
inline SetFunction running_example() {
  return SetFunction::tabulate(GroundSet(3), [](Subset s) {
    const mpq_class p(s.size(), 3);
    return Scalar::exact(mpq_class(2 * p - p * p));
  });
}

// n = 2 convex game: only the grand coalition is worth 1.
inline SetFunction unanimity_game() {
  return SetFunction(GroundSet(2), {q(0), q(0), q(0), q(1)});
}

inline SetFunction additive_example() {
  return SetFunction::additive(GroundSet(4), {q(1, 2), q(1, 3), q(0), q(7, 5)});
}

inline PointFunction point_function(std::vector<Scalar> values) {
  const int n = static_cast<int>(values.size());
  return PointFunction(GroundSet(n), std::move(values));
}

inline std::vector<int> identity_order(int n) {
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  return order;
}

inline std::vector<int> random_order(int n, std::mt19937_64& rng) {
  auto order = identity_order(n);
  std::shuffle(order.begin(), order.end(), rng);
  return order;
}

// Integers in [lo, hi], ties likely.
inline PointFunction random_point_function(int n, std::mt19937_64& rng, long lo = -4, long hi = 4) {
  std::vector<Scalar> values;
  for (int i = 0; i < n; ++i) values.push_back(q(std::uniform_int_distribution<long>(lo, hi)(rng)));
  return PointFunction(GroundSet(n), std::move(values));
}

inline std::vector<Subset> random_family(int n, int m, std::mt19937_64& rng) {
  std::vector<Subset> out;
  const std::uint32_t full = (1U << n) - 1U;
  for (int k = 0; k < m; ++k)
    out.push_back(Subset(static_cast<std::uint32_t>(std::uniform_int_distribution<std::uint32_t>(0, full)(rng))));
  return out;
}

// Family whose first members are the binary digits of the point index, so
// it separates points; then random extra members, positions shuffled.
// Needs 2^m >= n.
inline std::vector<Subset> separating_family(int n, int m, std::mt19937_64& rng) {
  std::vector<Subset> out;
  for (int bit = 0; (1 << bit) < n; ++bit) {
    Subset s;
    for (int p = 0; p < n; ++p)
      if ((p >> bit) & 1) s = s.with(p);
    out.push_back(s);
  }
  if (static_cast<int>(out.size()) > m) throw std::invalid_argument("family too small to separate points");
  auto extra = random_family(n, m - static_cast<int>(out.size()), rng);
  out.insert(out.end(), extra.begin(), extra.end());
  std::shuffle(out.begin(), out.end(), rng);
  return out;
}

// Brute-force oracle: telescoping along an explicit permutation, written
// without Chain or chain_measure.
inline std::vector<Scalar> marginal_vector(const SetFunction& v, const std::vector<int>& order) {
  std::vector<Scalar> w(static_cast<std::size_t>(v.n()), Scalar::zero(v.mode()));
  std::uint32_t prefix = 0;
  for (int p : order) {
    const std::uint32_t next = prefix | (1U << p);
    w[static_cast<std::size_t>(p)] = v(Subset(next)) - v(Subset(prefix));
    prefix = next;
  }
  return w;
}

inline Scalar dot(const PointFunction& f, const std::vector<Scalar>& w) {
  Scalar total = Scalar::zero(f.mode());
  for (std::size_t i = 0; i < w.size(); ++i) total += f(static_cast<int>(i)) * w[i];
  return total;
}

struct PermutationSweep {
  Scalar best;
  std::size_t attaining = 0;
};

// Max over all n! maximal chains of integral f dmu, and how many attain it.
inline PermutationSweep max_over_all_chains(const SetFunction& v, const PointFunction& f) {
  auto order = identity_order(v.n());
  PermutationSweep sweep{dot(f, marginal_vector(v, order)), 0};
  do {
    const Scalar value = dot(f, marginal_vector(v, order));
    const int c = compare(value, sweep.best);
    if (c > 0) {
      sweep.best = value;
      sweep.attaining = 1;
    } else if (c == 0) {
      ++sweep.attaining;
    }
  } while (std::next_permutation(order.begin(), order.end()));
  return sweep;
}

// Riemann-style oracle for the Choquet integral: y v(Omega) plus the
// integral of z -> v({f > z}) over [y, max f], evaluated exactly on each
// piece between consecutive breakpoints from an anchor y <= min f.
inline Scalar choquet_from_anchor(const SetFunction& v, const PointFunction& f, const Scalar& y) {
  std::vector<Scalar> breaks{y};
  for (const Scalar& x : f.values()) breaks.push_back(x);
  std::sort(breaks.begin(), breaks.end(), [](const Scalar& a, const Scalar& b) { return compare(a, b) < 0; });
  Scalar total = y * v(v.ground().all());
  for (std::size_t k = 1; k < breaks.size(); ++k) {
    const Scalar width = breaks[k] - breaks[k - 1];
    if (width.sign() == 0) continue;
    // {f > z} is constant on (breaks[k-1], breaks[k]); sample its midpoint.
    const Scalar mid = (breaks[k] + breaks[k - 1]) / Scalar::from_int(2, f.mode());
    Subset level;
    for (int p = 0; p < f.ground().size(); ++p)
      if (compare(f(p), mid) > 0) level = level.with(p);
    total += width * v(level);
  }
  return total;
}

// N-th ternary digit of x in [0,1): floor(x * 3^N) mod 3.
inline int ternary_digit(const mpq_class& x, int N) {
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 3, static_cast<unsigned long>(N));
  const mpq_class scaled = x * scale;
  mpz_class whole;
  mpz_fdiv_q(whole.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
  return static_cast<int>(mpz_class(whole % 3).get_si());
}

}  // namespace subcore::testing

#endif  // SUBCORE_TESTS_SUPPORT_HPP_
