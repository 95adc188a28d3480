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

#include "subcore/chain.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace subcore {

Chain::Chain(Subset carrier, std::vector<Subset> sets) : carrier_(carrier), sets_(std::move(sets)) {
  if (sets_.empty() || !sets_.front().is_empty()) throw std::invalid_argument("chain must start at the empty set");
  if (sets_.back() != carrier_) throw std::invalid_argument("chain must end at its carrier " + to_string(carrier_));
  for (std::size_t k = 1; k < sets_.size(); ++k)
    if (!sets_[k - 1].is_proper_subset_of(sets_[k]))
      throw std::invalid_argument("chain is not strictly increasing at " + to_string(sets_[k - 1]) + " -> " +
                                  to_string(sets_[k]));
}

Chain Chain::from_order(Subset carrier, std::span<const int> order) {
  std::vector<Subset> sets{Subset::empty()};
  Subset acc;
  for (int p : order) {
    if (p < 0 || p >= kMaxPoints || !carrier.contains(p))
      throw std::invalid_argument("point " + std::to_string(p) + " is not in carrier " + to_string(carrier));
    if (acc.contains(p)) throw std::invalid_argument("point " + std::to_string(p) + " repeated in order");
    acc = acc.with(p);
    sets.push_back(acc);
  }
  if (acc != carrier) throw std::invalid_argument("order misses points of carrier " + to_string(carrier));
  return Chain(carrier, std::move(sets));
}

bool Chain::is_maximal() const {
  for (std::size_t k = 1; k < sets_.size(); ++k)
    if ((sets_[k] - sets_[k - 1]).size() != 1) return false;
  return true;
}

std::optional<std::size_t> Chain::index_of(Subset s) const {
  // Sizes strictly increase along the chain, so cardinality pins the slot.
  auto it = std::lower_bound(sets_.begin(), sets_.end(), s,
                             [](Subset a, Subset b) { return a.size() < b.size(); });
  if (it != sets_.end() && *it == s) return static_cast<std::size_t>(it - sets_.begin());
  return std::nullopt;
}

std::vector<int> Chain::point_order() const {
  if (!is_maximal()) throw std::invalid_argument("point order needs a maximal chain");
  std::vector<int> out;
  out.reserve(sets_.size() - 1);
  for (std::size_t k = 1; k < sets_.size(); ++k) out.push_back((sets_[k] - sets_[k - 1]).points().front());
  return out;
}

Chain maximal_chain(const GroundSet& ground, std::span<const int> order) {
  if (order.size() != static_cast<std::size_t>(ground.size()))
    throw std::invalid_argument("order must be a permutation of all " + std::to_string(ground.size()) + " points");
  return Chain::from_order(ground.all(), order);
}

Chain insert_chain(const Chain& base, Subset A, Subset B) {
  if (!B.is_subset_of(A)) throw std::invalid_argument("insert_chain: B " + to_string(B) + " is not within A " + to_string(A));
  if (!A.is_subset_of(base.carrier()))
    throw std::invalid_argument("insert_chain: A " + to_string(A) + " is not within the chain carrier");
  if (!base.is_maximal()) throw std::invalid_argument("insert_chain: base chain is not maximal");
  std::vector<Subset> sets;
  sets.reserve(2 * base.size());
  for (Subset I : base.sets()) {
    const Subset restricted = I & A;
    sets.push_back(B & restricted);
    sets.push_back(B | restricted);
  }
  std::sort(sets.begin(), sets.end(), [](Subset a, Subset b) {
    return a.size() != b.size() ? a.size() < b.size() : a.bits() < b.bits();
  });
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  // The constructor rejects anything that is not totally ordered.
  return Chain(A, std::move(sets));
}

std::vector<Subset> generated_algebra(Subset carrier, std::span<const Subset> generators) {
  const int width = carrier.is_empty() ? 0 : 32 - std::countl_zero(carrier.bits());
  std::vector<bool> seen(std::size_t{1} << width, false);
  std::vector<Subset> members;
  std::vector<Subset> pending;
  auto add = [&](Subset s) {
    if (!seen[s.bits()]) {
      seen[s.bits()] = true;
      members.push_back(s);
      pending.push_back(s);
    }
  };
  add(Subset::empty());
  add(carrier);
  for (Subset g : generators) {
    if (!g.is_subset_of(carrier)) throw std::invalid_argument("generator " + to_string(g) + " leaves the carrier");
    add(g);
  }
  while (!pending.empty()) {
    const Subset s = pending.back();
    pending.pop_back();
    add(carrier - s);
    for (std::size_t k = 0, count = members.size(); k < count; ++k) add(s | members[k]);
  }
  std::sort(members.begin(), members.end());
  return members;
}

std::vector<Subset> algebra_atoms(Subset carrier, std::span<const Subset> generators) {
  // Points with identical membership signatures are inseparable.
  std::map<std::vector<bool>, Subset> classes;
  std::vector<std::vector<bool>> order;
  for (int p : carrier.points()) {
    std::vector<bool> signature;
    signature.reserve(generators.size());
    for (Subset g : generators) signature.push_back(g.contains(p));
    auto [it, inserted] = classes.try_emplace(signature, Subset());
    if (inserted) order.push_back(signature);
    it->second = it->second.with(p);
  }
  std::vector<Subset> atoms;
  atoms.reserve(order.size());
  for (const auto& sig : order) atoms.push_back(classes.at(sig));
  return atoms;
}

bool chain_generates(const Chain& chain, GenerationCheck how) {
  if (how == GenerationCheck::maximality) return chain.is_maximal();
  const auto algebra = generated_algebra(chain.carrier(), chain.sets());
  return algebra.size() == (std::size_t{1} << chain.carrier().size());
}

ChainIntervalUnion ChainIntervalUnion::from_points(const Chain& chain, Subset points) {
  if (!points.is_subset_of(chain.carrier()))
    throw std::invalid_argument("point set " + to_string(points) + " leaves the chain carrier");
  const auto& sets = chain.sets();
  ChainIntervalUnion out;
  // Walk layers top-down so intervals come out in nesting order.
  std::optional<std::size_t> run_top;
  for (std::size_t k = sets.size() - 1; k > 0; --k) {
    const Subset layer = sets[k] - sets[k - 1];
    const Subset hit = points & layer;
    if (!hit.is_empty() && hit != layer)
      throw std::invalid_argument("point set " + to_string(points) + " is not in the algebra of the chain");
    if (hit == layer) {
      if (!run_top) run_top = k;
    } else if (run_top) {
      out.intervals_.push_back({sets[*run_top], sets[k]});
      run_top.reset();
    }
  }
  if (run_top) out.intervals_.push_back({sets[*run_top], sets[0]});
  return out;
}

Subset ChainIntervalUnion::points() const {
  Subset out;
  for (const auto& iv : intervals_) out = out | iv.points();
  return out;
}

Scalar ChainIntervalUnion::sum(const SetFunction& v) const {
  Scalar total = Scalar::zero(v.mode());
  for (const auto& iv : intervals_) total += v(iv.upper) - v(iv.lower);
  return total;
}

ChainIntervalUnion interval_union_normalize(const Chain& chain, std::span<const ChainInterval> intervals,
                                            std::optional<Subset> complement_within) {
  Subset acc;
  for (const auto& iv : intervals) {
    if (!chain.contains(iv.upper) || !chain.contains(iv.lower))
      throw std::invalid_argument("interval endpoints must be members of the chain");
    if (!iv.lower.is_subset_of(iv.upper)) throw std::invalid_argument("interval lower end exceeds upper end");
    acc = acc | iv.points();
  }
  if (complement_within) {
    if (!chain.contains(*complement_within))
      throw std::invalid_argument("complement must be taken within a chain member");
    acc = *complement_within - acc;
  }
  return ChainIntervalUnion::from_points(chain, acc);
}

}  // namespace subcore
