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

// Chains of subsets and the algebras they generate.
//
// On a finite carrier a chain from the empty set to the carrier generates the
// whole power set of the carrier exactly when every step adds one point. Both
// the closure computation and that shortcut are exposed so they can be
// checked against each other.

#ifndef SUBCORE_CHAIN_HPP_
#define SUBCORE_CHAIN_HPP_

#include <optional>
#include <span>
#include <vector>

#include "subcore/setfun.hpp"

namespace subcore {

// Strictly increasing sequence of subsets from the empty set to a carrier.
class Chain {
 public:
  // Validates: first set empty, last set == carrier, each strictly contains
  // its predecessor.
  Chain(Subset carrier, std::vector<Subset> sets);

  // The chain {} < {o1} < {o1,o2} < ... over the points of `order`, whose
  // union is the carrier. `order` must list each carrier point once.
  static Chain from_order(Subset carrier, std::span<const int> order);

  Subset carrier() const { return carrier_; }
  const std::vector<Subset>& sets() const { return sets_; }
  std::size_t size() const { return sets_.size(); }
  const Subset& operator[](std::size_t k) const { return sets_[k]; }

  // Every consecutive difference is a single point.
  bool is_maximal() const;
  bool contains(Subset s) const { return index_of(s).has_value(); }
  std::optional<std::size_t> index_of(Subset s) const;

  // Points in the order the chain adds them. Requires a maximal chain.
  std::vector<int> point_order() const;

  bool operator==(const Chain&) const = default;

 private:
  Subset carrier_;
  std::vector<Subset> sets_;
};

// Maximal chain over the whole ground set following `order`, a permutation
// of 0..n-1.
Chain maximal_chain(const GroundSet& ground, std::span<const int> order);

// Restricts `base` to A and inserts B:
// { B & (I & A) } united with { B | (I & A) } over I in base, deduplicated
// and sorted by inclusion. Requires B within A within base.carrier() and a
// maximal base chain; the result is then a maximal chain on A containing
// the empty set, B and A.
Chain insert_chain(const Chain& base, Subset A, Subset B);

// Every set of the algebra on `carrier` generated by `generators` (closure
// under complement within the carrier and pairwise union, starting from the
// generators, the empty set and the carrier). Output is sorted by bitmask.
// Size is up to 2^|carrier|, so this is meant for small carriers.
std::vector<Subset> generated_algebra(Subset carrier, std::span<const Subset> generators);

// Atoms of the same algebra: the classes of points that no generator
// separates, in order of their smallest point.
std::vector<Subset> algebra_atoms(Subset carrier, std::span<const Subset> generators);

enum class GenerationCheck { maximality, closure };

// True iff the chain's sets generate the full power set of its carrier.
bool chain_generates(const Chain& chain, GenerationCheck how = GenerationCheck::maximality);

// A chain interval C \ D with D strictly inside C, both chain members.
struct ChainInterval {
  Subset upper;
  Subset lower;

  Subset points() const { return upper - lower; }
  bool operator==(const ChainInterval&) const = default;
};

// Disjoint union of chain intervals (C1 \ D1) | (C2 \ D2) | ... with
// C1 > D1 > C2 > D2 > ... strictly. Canonical: adjacent intervals are
// merged, so every D_i strictly contains C_{i+1}.
class ChainIntervalUnion {
 public:
  // Canonical representation of a point set in the algebra generated by
  // `chain`; throws if `points` cuts through a chain step.
  static ChainIntervalUnion from_points(const Chain& chain, Subset points);

  const std::vector<ChainInterval>& intervals() const { return intervals_; }
  Subset points() const;

  // Sum over intervals of v(C_i) - v(D_i), the finitely additive extension
  // of v from the chain to its algebra.
  Scalar sum(const SetFunction& v) const;

  bool operator==(const ChainIntervalUnion&) const = default;

 private:
  std::vector<ChainInterval> intervals_;
};

// Union of the given chain intervals, complemented inside
// `complement_within` when provided, put into canonical form. Every interval
// endpoint and `complement_within` must be members of `chain`.
ChainIntervalUnion interval_union_normalize(const Chain& chain, std::span<const ChainInterval> intervals,
                                            std::optional<Subset> complement_within = std::nullopt);

}  // namespace subcore

#endif  // SUBCORE_CHAIN_HPP_
