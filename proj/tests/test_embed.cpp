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


#include <random>
#include <set>

#include "doctest.h"
#include "subcore/chain.hpp"
#include "subcore/embed.hpp"
#include "support.hpp"

using namespace subcore;
using subcore::testing::q;

TEST_CASE("ternary embedding example") {
  const GeneratingFamily family(GroundSet(3), {Subset::of({0, 1}), Subset::of({1, 2})});
  CHECK(family.generates_power_set());
  const PointFunction f = ternary_embed(family);
  CHECK(f.values() == std::vector<Scalar>{q(1, 3), q(4, 9), q(1, 9)});
  CHECK(embed_chain(family).sets() ==
        std::vector<Subset>{Subset(), Subset::of({2}), Subset::of({0, 2}), Subset::of({0, 1, 2})});
  CHECK(recover_generator(f, 2, 1) == Subset::of({0, 1}));
  CHECK(recover_generator(f, 2, 2) == Subset::of({1, 2}));
  CHECK(sublevel_set(f, q(2, 5)) == Subset::of({0, 2}));
}

TEST_CASE("recover_generator argument checks") {
  const GeneratingFamily family(GroundSet(3), {Subset::of({0, 1}), Subset::of({1, 2})});
  const PointFunction f = ternary_embed(family);
  CHECK_THROWS_AS(recover_generator(f, 2, 0), std::out_of_range);
  CHECK_THROWS_AS(recover_generator(f, 2, 3), std::out_of_range);
  const PointFunction g(GroundSet(2), {Scalar::floating(0.1), Scalar::floating(0.2)});
  CHECK_THROWS_AS(recover_generator(g, 2, 1), std::invalid_argument);
  CHECK_THROWS_AS(GeneratingFamily(GroundSet(2), {Subset::of({3})}), std::invalid_argument);
  CHECK_THROWS_AS(GeneratingFamily(GroundSet(2), std::vector<Subset>(25)), std::invalid_argument);
}

TEST_CASE("embedding round trip and digit oracle") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + trial % 12;
    const int m = 1 + trial % 10;
    const GeneratingFamily family(GroundSet(n), testing::random_family(n, m, rng));
    const PointFunction f = ternary_embed(family);
    for (int N = 1; N <= m; ++N) {
      const Subset got = recover_generator(f, m, N);
      CHECK(got == family.members()[static_cast<std::size_t>(N - 1)]);
      Subset digits;
      for (int p = 0; p < n; ++p) {
        const int d = testing::ternary_digit(f(p).rational(), N);
        CHECK(d != 2);
        if (d == 1) digits = digits.with(p);
      }
      CHECK(got == digits);
    }
  }
}

TEST_CASE("the embedding chain generates the family's algebra") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 1 + trial % 8;
    const int m = 1 + trial % 6;
    const GeneratingFamily family(GroundSet(n), testing::random_family(n, m, rng));
    const Chain chain = embed_chain(family);
    const auto from_chain = generated_algebra(family.ground().all(), chain.sets());
    const auto from_family = generated_algebra(family.ground().all(), family.members());
    CHECK(from_chain == from_family);
    CHECK(chain_generates(chain, GenerationCheck::closure) == family.generates_power_set());
    CHECK(chain.is_maximal() == family.generates_power_set());
    // Every member is a union of chain intervals.
    for (Subset J : family.members()) CHECK(ChainIntervalUnion::from_points(chain, J).points() == J);
    // Quotient classes are the level sets of f.
    const PointFunction f = ternary_embed(family);
    std::set<std::uint32_t> level_sets;
    for (const Scalar& y : f.distinct_values()) {
      Subset s;
      for (int p = 0; p < n; ++p)
        if (f(p) == y) s = s.with(p);
      level_sets.insert(s.bits());
    }
    std::set<std::uint32_t> atoms;
    for (Subset a : family.atoms()) atoms.insert(a.bits());
    CHECK(atoms == level_sets);
  }
}

TEST_CASE("separating families give injective embeddings") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + trial % 11;
    const int m = 4 + trial % 7;
    const GeneratingFamily family(GroundSet(n), testing::separating_family(n, m, rng));
    CHECK(family.generates_power_set());
    CHECK(ternary_embed(family).is_injective());
    CHECK(chain_generates(embed_chain(family), GenerationCheck::maximality));
    CHECK(chain_generates(embed_chain(family), GenerationCheck::closure));
  }
}

TEST_CASE("trivial families") {
  const GeneratingFamily empty(GroundSet(3), {});
  const PointFunction zero = ternary_embed(empty);
  CHECK(zero.values() == std::vector<Scalar>(3, q(0)));
  CHECK(embed_chain(empty).sets() == std::vector<Subset>{Subset(), Subset::of({0, 1, 2})});
  CHECK_FALSE(empty.generates_power_set());
  CHECK(recover_generator(zero, 4, 2) == Subset());
  const GeneratingFamily whole(GroundSet(3), {Subset::of({0, 1, 2})});
  CHECK(ternary_embed(whole).values() == std::vector<Scalar>(3, q(1, 3)));
  CHECK(recover_generator(ternary_embed(whole), 1, 1) == Subset::of({0, 1, 2}));
}
