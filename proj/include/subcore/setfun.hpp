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

// Finite ground sets, bitmask subsets and dense set functions.
//
// The ground set plays the role of a measurable space whose sigma-algebra is
// the full power set. Continuity of a set function along monotone sequences
// is automatic on a finite lattice, so no predicate represents it.

#ifndef SUBCORE_SETFUN_HPP_
#define SUBCORE_SETFUN_HPP_

#include <bit>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "subcore/scalar.hpp"

namespace subcore {

inline constexpr int kMaxPoints = 24;

// Characteristic bit-vector; bit i set iff point i is a member.
class Subset {
 public:
  constexpr Subset() = default;
  constexpr explicit Subset(std::uint32_t bits) : bits_(bits) {}

  static constexpr Subset empty() { return Subset(); }
  static constexpr Subset singleton(int point) { return Subset(std::uint32_t{1} << point); }
  static Subset of(std::initializer_list<int> points);
  static Subset of(const std::vector<int>& points);

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr bool is_empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(int point) const { return (bits_ >> point) & 1U; }
  constexpr bool is_subset_of(Subset other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool is_proper_subset_of(Subset other) const { return is_subset_of(other) && bits_ != other.bits_; }

  // Points in ascending order.
  std::vector<int> points() const;

  constexpr Subset operator|(Subset o) const { return Subset(bits_ | o.bits_); }
  constexpr Subset operator&(Subset o) const { return Subset(bits_ & o.bits_); }
  // Set difference.
  constexpr Subset operator-(Subset o) const { return Subset(bits_ & ~o.bits_); }
  constexpr Subset with(int point) const { return Subset(bits_ | (std::uint32_t{1} << point)); }
  constexpr Subset without(int point) const { return Subset(bits_ & ~(std::uint32_t{1} << point)); }

  constexpr bool operator==(const Subset&) const = default;
  constexpr auto operator<=>(const Subset&) const = default;

 private:
  std::uint32_t bits_ = 0;
};

// "{0,2}" style rendering.
std::string to_string(Subset s);

// Calls fn(E) for every E contained in `within`, starting at the empty set
// and ending at `within` itself.
template <class Fn>
void for_each_subset(Subset within, Fn&& fn) {
  const std::uint32_t mask = within.bits();
  std::uint32_t e = 0;
  while (true) {
    fn(Subset(e));
    if (e == mask) break;
    e = (e - mask) & mask;
  }
}

class GroundSet {
 public:
  explicit GroundSet(int n, std::vector<std::string> labels = {});

  int size() const { return n_; }
  Subset all() const { return Subset(n_ == 32 ? ~0U : ((1U << n_) - 1U)); }
  std::size_t subset_count() const { return std::size_t{1} << n_; }
  bool has_labels() const { return !labels_.empty(); }
  const std::vector<std::string>& labels() const { return labels_; }
  // Label of `point`, or its index when unlabeled.
  std::string label(int point) const;
  // Index of a label or of a decimal point index; throws if unknown.
  int point_of(const std::string& name) const;

  Subset complement(Subset s) const { return all() - s; }
  bool contains(Subset s) const { return s.is_subset_of(all()); }

  bool operator==(const GroundSet& o) const { return n_ == o.n_; }

 private:
  int n_;
  std::vector<std::string> labels_;
};

// Total map from subsets of a ground set to scalars, stored as a dense table
// indexed by bitmask. All entries share one scalar mode.
class SetFunction {
 public:
  SetFunction(GroundSet ground, std::vector<Scalar> table);

  static SetFunction tabulate(GroundSet ground, const std::function<Scalar(Subset)>& fn);
  static SetFunction zero(GroundSet ground, Mode mode = Mode::exact);
  // v(S) = sum of weights[i] over i in S.
  static SetFunction additive(GroundSet ground, const std::vector<Scalar>& weights);

  const GroundSet& ground() const { return ground_; }
  int n() const { return ground_.size(); }
  Mode mode() const { return table_.front().mode(); }
  const Scalar& operator()(Subset s) const { return table_[s.bits()]; }
  const Scalar& at(Subset s) const;
  const std::vector<Scalar>& table() const { return table_; }

  // v(A) - v(empty) for every A.
  SetFunction normalized() const;

 private:
  GroundSet ground_;
  std::vector<Scalar> table_;
};

enum class SubmodularCheck {
  // v(S+i) + v(S+j) >= v(S+i+j) + v(S) for S and distinct i, j outside S.
  pairwise,
  // v(A) + v(B) >= v(A|B) + v(A&B) over all ordered pairs (A, B).
  exhaustive,
};

bool is_grounded(const SetFunction& v);
bool is_monotone(const SetFunction& v);
bool is_submodular(const SetFunction& v, SubmodularCheck how = SubmodularCheck::pairwise);
bool is_supermodular(const SetFunction& v, SubmodularCheck how = SubmodularCheck::pairwise);
// Both sub- and supermodular: v(A) + v(B) == v(A|B) + v(A&B) everywhere.
bool is_modular(const SetFunction& v);

// w(A) = v(Omega) - v(Omega \ A) + v(empty).
SetFunction dual_transform(const SetFunction& v);

// Dual taken inside the subspace `within`:
// w(E) = v(within) - v(within \ E) + v(empty), for E intersected with `within`.
// Maps the upper core of v on `within` onto the lower core of w there.
SetFunction relative_dual(const SetFunction& v, Subset within);

}  // namespace subcore

#endif  // SUBCORE_SETFUN_HPP_
