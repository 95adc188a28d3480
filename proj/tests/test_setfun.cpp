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

#include "doctest.h"
#include "subcore/generators.hpp"
#include "subcore/setfun.hpp"
#include "support.hpp"

using namespace subcore;
using subcore::testing::q;

namespace {

// Any exact table on n points with small integer values.
SetFunction random_table(int n, std::mt19937_64& rng, long lo = 0, long hi = 4) {
  return SetFunction::tabulate(GroundSet(n), [&](Subset) {
    return q(std::uniform_int_distribution<long>(lo, hi)(rng));
  });
}

}  // namespace

TEST_CASE("subset basics") {
  const Subset s = Subset::of({0, 2, 5});
  CHECK(s.bits() == 0b100101U);
  CHECK(s.size() == 3);
  CHECK(s.points() == std::vector<int>{0, 2, 5});
  CHECK(to_string(s) == "{0,2,5}");
  CHECK(Subset::of({2}).is_proper_subset_of(s));
  CHECK((s - Subset::of({0})) == Subset::of({2, 5}));
  std::vector<Subset> seen;
  for_each_subset(Subset::of({1, 3}), [&](Subset e) { seen.push_back(e); });
  CHECK(seen == std::vector<Subset>{Subset(), Subset::of({1}), Subset::of({3}), Subset::of({1, 3})});
}

TEST_CASE("ground set validation") {
  CHECK_THROWS_AS(GroundSet(0), std::invalid_argument);
  CHECK_THROWS_AS(GroundSet(25), std::invalid_argument);
  CHECK_THROWS_AS(GroundSet(2, {"a"}), std::invalid_argument);
  CHECK_THROWS_AS(GroundSet(2, {"a", "a"}), std::invalid_argument);
  const GroundSet g(3, {"x", "y", "z"});
  CHECK(g.point_of("y") == 1);
  CHECK(g.point_of("2") == 2);
  CHECK_THROWS_AS(g.point_of("w"), std::invalid_argument);
  CHECK(g.all() == Subset(7));
}

TEST_CASE("set function table validation") {
  CHECK_THROWS_AS(SetFunction(GroundSet(2), {q(0), q(1)}), std::invalid_argument);
  CHECK_THROWS_AS(SetFunction(GroundSet(1), {q(0), Scalar::floating(1.0)}), ModeMismatch);
}

TEST_CASE("is_grounded") {
  CHECK(is_grounded(SetFunction::zero(GroundSet(3))));
  CHECK(is_grounded(SetFunction::tabulate(GroundSet(3), [](Subset s) { return q(s.size()); })));
  CHECK_FALSE(is_grounded(SetFunction::tabulate(GroundSet(3), [](Subset) { return q(1); })));
}

TEST_CASE("is_monotone") {
  CHECK(is_monotone(SetFunction::tabulate(GroundSet(3), [](Subset s) { return q(s.size()); })));
  CHECK(is_monotone(testing::running_example()));
  // v({0}) = 1, v({0,1}) = 0.
  CHECK_FALSE(is_monotone(SetFunction(GroundSet(2), {q(0), q(1), q(0), q(0)})));
}

TEST_CASE("running example values") {
  const SetFunction v = testing::running_example();
  CHECK(v(Subset::of({0})) == q(5, 9));
  CHECK(v(Subset::of({1, 2})) == q(8, 9));
  CHECK(v(Subset::of({0, 1, 2})) == q(1));
  // v({0}) + v({1}) = 10/9 >= v({0,1}) + v({}) = 8/9
  CHECK(v(Subset::of({0})) + v(Subset::of({1})) == q(10, 9));
}

TEST_CASE("sub- and supermodularity predicates") {
  const SetFunction running = testing::running_example();
  const SetFunction additive = testing::additive_example();
  const SetFunction game = testing::unanimity_game();
  for (auto how : {SubmodularCheck::pairwise, SubmodularCheck::exhaustive}) {
    CHECK(is_submodular(running, how));
    CHECK_FALSE(is_supermodular(running, how));
    CHECK(is_submodular(additive, how));
    CHECK(is_supermodular(additive, how));
    CHECK_FALSE(is_submodular(game, how));
    CHECK(is_supermodular(game, how));
  }
  CHECK(is_modular(additive));
  CHECK_FALSE(is_modular(running));
}

TEST_CASE("pairwise and exhaustive submodularity checks agree") {
  std::mt19937_64 rng(2024);
  int submodular_seen = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 1 + trial % 8;
    // Mix structured submodular draws with arbitrary tables so both answers
    // occur often.
    const SetFunction v = trial % 2 == 0 && n <= 8 ? random_submodular(n, rng()) : random_table(n, rng);
    const bool pairwise = is_submodular(v, SubmodularCheck::pairwise);
    CHECK(pairwise == is_submodular(v, SubmodularCheck::exhaustive));
    CHECK(is_supermodular(v, SubmodularCheck::pairwise) == is_supermodular(v, SubmodularCheck::exhaustive));
    submodular_seen += pairwise;
  }
  CHECK(submodular_seen > 100);
  CHECK(submodular_seen < 400);
}

TEST_CASE("dual transform of the running example") {
  const SetFunction d = dual_transform(testing::running_example());
  for (int i = 0; i < 3; ++i) CHECK(d(Subset::singleton(i)) == q(1, 9));
  CHECK(d(Subset::of({0, 1})) == q(4, 9));
  CHECK(d(Subset::of({1, 2})) == q(4, 9));
  CHECK(d(Subset()) == q(0));
  CHECK(d(Subset::of({0, 1, 2})) == q(1));
  CHECK(is_supermodular(d));
}

TEST_CASE("additive functions are self-dual") {
  const SetFunction v = testing::additive_example();
  const SetFunction d = dual_transform(v);
  CHECK(d.table() == v.table());
}

TEST_CASE("duality properties on random set functions") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + trial % 6;
    const SetFunction v = trial % 3 == 0 ? random_submodular(n, rng()) : random_table(n, rng, -2, 5);
    const SetFunction d = dual_transform(v);
    CHECK(dual_transform(d).table() == v.table());
    CHECK(d(Subset()) == v(Subset()));
    CHECK(d(v.ground().all()) == v(v.ground().all()));
    CHECK(is_submodular(v) == is_supermodular(d));
    CHECK(is_supermodular(v) == is_submodular(d));
    if (is_monotone(v)) CHECK(is_monotone(d));
    if (is_grounded(v)) CHECK(is_grounded(d));
  }
}

TEST_CASE("sub- and supermodular grounded functions are additive") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + trial % 6;
    std::vector<Scalar> w;
    for (int i = 0; i < n; ++i) w.push_back(q(std::uniform_int_distribution<long>(-3, 3)(rng), 4));
    const SetFunction v = SetFunction::additive(GroundSet(n), w);
    REQUIRE(is_modular(v));
    for (std::uint32_t s = 0; s < v.ground().subset_count(); ++s) {
      Scalar sum;
      for (int p : Subset(s).points()) sum += v(Subset::singleton(p));
      CHECK(v(Subset(s)) == sum);
    }
  }
  // A non-additive table is never modular.
  CHECK_FALSE(is_modular(testing::running_example()));
}

TEST_CASE("relative dual matches the dual on the subspace") {
  const SetFunction v = random_submodular(5, 3);
  const Subset A = Subset::of({0, 2, 3});
  const SetFunction d = relative_dual(v, A);
  for_each_subset(A, [&](Subset E) { CHECK(d(E) == v(A) - v(A - E) + v(Subset())); });
  CHECK(relative_dual(v, v.ground().all()).table() == dual_transform(v).table());
}

TEST_CASE("normalizing subtracts v(empty)") {
  const SetFunction v = SetFunction::tabulate(GroundSet(2), [](Subset s) { return q(s.size() + 3); });
  const SetFunction w = v.normalized();
  CHECK(is_grounded(w));
  CHECK(w(Subset::of({0, 1})) == q(2));
}

TEST_CASE("float-mode predicates tolerate round-off") {
  // 0.1 + 0.2 vs 0.3: off by 5.5e-17 in binary, equal within eps.
  const SetFunction v(GroundSet(2), {Scalar::floating(0.0), Scalar::floating(0.1), Scalar::floating(0.2),
                                     Scalar::floating(0.3)});
  CHECK(is_modular(v));
  CHECK(is_monotone(v));
}
