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
#include "subcore/choquet.hpp"
#include "subcore/generators.hpp"
#include "subcore/measure.hpp"
#include "support.hpp"

using namespace subcore;
using subcore::testing::point_function;
using subcore::testing::q;

TEST_CASE("Choquet integral of the running example") {
  const SetFunction v = testing::running_example();
  const PointFunction f = point_function({q(3), q(1), q(2)});
  CHECK(choquet_integral(v, f) == q(22, 9));
  const Chain levels = level_set_chain(f);
  CHECK(levels.sets() == std::vector<Subset>{Subset(), Subset::of({0}), Subset::of({0, 2}), Subset::of({0, 1, 2})});

  const auto report = verify_choquet_sup(v, f);
  CHECK(report.passed());
  CHECK(report.witness_weights == std::vector<Scalar>{q(5, 9), q(1, 9), q(1, 3)});
  CHECK(report.base_order == std::vector<int>{0, 2, 1});
  CHECK(report.count("sample_domination") == 1);
  CHECK(report.count("integral_matches") == 1);

  // Exactly one of the six orders attains the maximum.
  const auto sweep = testing::max_over_all_chains(v, f);
  CHECK(sweep.best == q(22, 9));
  CHECK(sweep.attaining == 1);
}

TEST_CASE("all six chain values for the running example") {
  const SetFunction v = testing::running_example();
  const PointFunction f = point_function({q(3), q(1), q(2)});
  std::vector<Scalar> values;
  auto order = testing::identity_order(3);
  do {
    values.push_back(testing::dot(f, testing::marginal_vector(v, order)));
  } while (std::next_permutation(order.begin(), order.end()));
  std::sort(values.begin(), values.end());
  CHECK(values == std::vector<Scalar>{q(14, 9), q(16, 9), q(16, 9), q(20, 9), q(20, 9), q(22, 9)});
}

TEST_CASE("risk of a signed function") {
  const SetFunction v = testing::running_example();
  CHECK(choquet_integral(v, point_function({q(-1), q(0), q(1)})) == q(4, 9));
  CHECK(coherent_risk(v, point_function({q(1), q(0), q(-1)})) == q(4, 9));
}

TEST_CASE("ties in f are broken by point index") {
  const SetFunction v = testing::running_example();
  const PointFunction f = point_function({q(2), q(5), q(2)});
  CHECK(complete_chain(level_set_chain(f)).point_order() == std::vector<int>{1, 0, 2});
  CHECK_FALSE(f.is_injective());
  CHECK(verify_choquet_sup(v, f).passed());
  const PointFunction flat = point_function({q(7), q(7), q(7)});
  CHECK(choquet_integral(v, flat) == q(7));
  CHECK(level_set_chain(flat).size() == 2);
}

TEST_CASE("Choquet integral equals the level-set oracle") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + trial % 6;
    const SetFunction v = trial % 2 ? random_submodular(n, rng()) : random_supermodular(n, rng());
    const PointFunction f = testing::random_point_function(n, rng);
    const Scalar value = choquet_integral(v, f);
    CHECK(value == testing::choquet_from_anchor(v, f, f.distinct_values().front()));
    CHECK(value == testing::choquet_from_anchor(v, f, f.distinct_values().front() - q(3, 2)));
  }
}

TEST_CASE("sup over chains equals the integral for submodular v") {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 80; ++trial) {
    const int n = 1 + trial % 6;
    const SetFunction v = random_submodular(n, rng());
    const PointFunction f = testing::random_point_function(n, rng);
    const auto report = verify_choquet_sup(v, f, {16, static_cast<std::uint64_t>(trial), 64});
    CHECK(report.passed());
    CHECK(testing::max_over_all_chains(v, f).best == choquet_integral(v, f));
    const AtomicMeasure mu(v.ground(), v.ground().all(), report.witness_weights);
    CHECK(integrate(f, mu) == choquet_integral(v, f));
  }
}

TEST_CASE("Choquet laws") {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + trial % 6;
    const SetFunction v = random_submodular(n, rng());
    const PointFunction f = testing::random_point_function(n, rng);
    const Scalar c = q(static_cast<long>(rng() % 7), 1 + static_cast<long>(rng() % 3));
    const Scalar t = q(static_cast<long>(rng() % 11) - 5, 2);
    const Scalar base = choquet_integral(v, f);
    CHECK(choquet_integral(v, f.scaled(c)) == c * base);
    CHECK(choquet_integral(v, f.shifted(t)) == base + t * v(v.ground().all()));
    // g >= f pointwise.
    std::vector<Scalar> bumped = f.values();
    for (auto& x : bumped) x += q(static_cast<long>(rng() % 3));
    CHECK(choquet_integral(v, point_function(bumped)) >= base);
    const Subset A = Subset(static_cast<std::uint32_t>(rng())) & v.ground().all();
    CHECK(choquet_integral(v, PointFunction::indicator(v.ground(), A)) == v(A));
    CHECK(coherent_risk(v, f) == choquet_integral(v, -f));
  }
}

TEST_CASE("level-set chains of random functions") {
  std::mt19937_64 rng(34);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + trial % 6;
    const PointFunction f = testing::random_point_function(n, rng, 0, 3);
    const Chain levels = level_set_chain(f);
    CHECK(levels.size() == f.distinct_values().size() + 1);
    const Chain full = complete_chain(levels);
    CHECK(full.is_maximal());
    for (Subset s : levels.sets()) CHECK(full.contains(s));
    // f is non-increasing along the completed order.
    const auto order = full.point_order();
    for (std::size_t k = 1; k < order.size(); ++k) CHECK(f(order[k - 1]) >= f(order[k]));
  }
}

TEST_CASE("point function checks") {
  CHECK_THROWS_AS(PointFunction(GroundSet(2), {q(1)}), std::invalid_argument);
  CHECK_THROWS_AS(PointFunction(GroundSet(2), {q(1), Scalar::floating(1)}), ModeMismatch);
  CHECK_THROWS_AS(choquet_integral(testing::running_example(), point_function({q(1), q(2)})), std::invalid_argument);
  const PointFunction f = point_function({q(3), q(1), q(2)});
  CHECK(f.above(q(1)) == Subset::of({0, 2}));
  CHECK(f.below(q(3)) == Subset::of({1, 2}));
  CHECK(f.distinct_values() == std::vector<Scalar>{q(1), q(2), q(3)});
}

TEST_CASE("indicators reduce to the sup representation") {
  const SetFunction v = testing::running_example();
  for_each_subset(v.ground().all(), [&](Subset A) {
    const PointFunction chi = PointFunction::indicator(v.ground(), A);
    const auto report = verify_choquet_sup(v, chi);
    CHECK(report.passed());
    const AtomicMeasure mu(v.ground(), v.ground().all(), report.witness_weights);
    CHECK(mu(A) == v(A));
    CHECK(verify_sup_representation(v, v.ground().all(), A).passed());
  });
}

TEST_CASE("injective functions give maximal level-set chains") {
  CHECK(level_set_chain(point_function({q(4), q(-1), q(2), q(0)})).is_maximal());
  CHECK(level_set_chain(point_function({q(1), q(1)})).sets() == std::vector<Subset>{Subset(), Subset::of({0, 1})});
}
