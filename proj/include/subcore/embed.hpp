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

// Ternary embedding of a generating family into a single chain.
//
// f = sum_k 3^-k [w in J_k] writes membership in J_1, J_2, ... as the ternary
// digits of f(w), all 0 or 1. The sublevel sets {f < a} form a chain, and
// J_N is recovered from that chain as the union over digit prefixes
// (a_1..a_{N-1}) of {f < s + 2*3^-N} \ {f < s + 3^-N}, s = sum a_n 3^-n.
// All arithmetic is exact; half-open interval tests are what decide digits.

#ifndef SUBCORE_EMBED_HPP_
#define SUBCORE_EMBED_HPP_

#include <vector>

#include "subcore/chain.hpp"
#include "subcore/choquet.hpp"
#include "subcore/setfun.hpp"

namespace subcore {

inline constexpr int kMaxFamilySize = 24;

class GeneratingFamily {
 public:
  GeneratingFamily(GroundSet ground, std::vector<Subset> members);

  const GroundSet& ground() const { return ground_; }
  const std::vector<Subset>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }

  // The members generate the whole power set, i.e. separate every pair of
  // points. Families that do not are still accepted.
  bool generates_power_set() const { return separates_; }
  // Classes of points no member separates.
  std::vector<Subset> atoms() const;

 private:
  GroundSet ground_;
  std::vector<Subset> members_;
  bool separates_ = false;
};

// f(w) = sum_{k=1..m} 3^-k [w in J_k], exact.
PointFunction ternary_embed(const GeneratingFamily& family);

// Distinct sublevel sets {f < a} for 0 <= a <= 1, ordered by inclusion.
Chain embed_chain(const GeneratingFamily& family);

// {f < a}.
Subset sublevel_set(const PointFunction& f, const Scalar& a);

// J_N read back from f through the interval union above. Requires exact f,
// 1 <= N <= family_size <= kMaxFamilySize. Prefixes whose interval holds no
// value of f are skipped, so the work is O(n * N) intervals.
Subset recover_generator(const PointFunction& f, int family_size, int N);

}  // namespace subcore

#endif  // SUBCORE_EMBED_HPP_
