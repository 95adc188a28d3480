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

#ifndef SUBCORE_GENERATORS_HPP_
#define SUBCORE_GENERATORS_HPP_

#include <cstdint>
#include <utility>
#include <vector>

#include "subcore/chain.hpp"
#include "subcore/measure.hpp"
#include "subcore/setfun.hpp"

namespace subcore {

// Non-decreasing map g on [0,1] with g(0) = 0 and g(1) = 1, either a
// polynomial or linear interpolation between knots.
class Distortion {
 public:
  // g(x) = sum_k coeffs[k] x^k.
  static Distortion polynomial(std::vector<Scalar> coeffs);
  // Knots (x, g(x)) with x strictly increasing from 0 to 1.
  static Distortion piecewise_linear(std::vector<std::pair<Scalar, Scalar>> knots);

  Scalar operator()(const Scalar& x) const;
  Mode mode() const;

  // Knot abscissae for piecewise-linear g; 0, 1/64, ..., 1 for polynomials.
  std::vector<Scalar> grid() const;
  // Second differences on the grid.
  bool is_concave() const;
  bool is_convex() const;

 private:
  Distortion() = default;
  void validate() const;

  std::vector<Scalar> coeffs_;
  std::vector<std::pair<Scalar, Scalar>> knots_;
};

// v(S) = g(sum_{i in S} p_i). Requires p >= 0 summing to 1.
SetFunction distortion_capacity(const GroundSet& ground, const Distortion& g, const std::vector<Scalar>& p);

// v(S) = total weight of the items covered by some point of S; point i
// covers the item indices in covers[i] (at most 64 items).
SetFunction coverage_function(const GroundSet& ground, const std::vector<std::vector<int>>& covers,
                              const std::vector<Scalar>& item_weights);

struct ShapleyExample {
  Chain chain;
  AtomicMeasure measure;
};

// The chain {} < {b1} < ... < B < B+{c1} < ... < A with B = {b}, A = B + {c},
// obtained by inserting B into a base chain that visits b, then c, then the
// remaining points, and its chain measure. Throws std::logic_error if the
// weights differ from the marginal formulas
//   mu({b_i}) = v({b_1..b_i}) - v({b_1..b_{i-1}})
//   mu({c_j}) = v(B + {c_1..c_j}) - v(B + {c_1..c_{j-1}}).
ShapleyExample shapley_example(const std::vector<int>& b, const std::vector<int>& c, const SetFunction& v);

struct IntervalDiscretization {
  SetFunction v;
  Chain chain;
};

// [0,1) cut into `cells` equal cells; v = g(Lebesgue mass) and the chain of
// left prefixes [0, k/cells).
IntervalDiscretization interval_discretization(int cells, const Distortion& g);

// Seeded monotone grounded submodular instance in exact mode, drawn from
// concave piecewise-linear distortions of random weights, coverage
// functions, and sums of the two. Draws failing the predicates are redrawn.
SetFunction random_submodular(int n, std::uint64_t seed);

// Seeded monotone grounded supermodular instance (duals of the above and
// convex distortions).
SetFunction random_supermodular(int n, std::uint64_t seed);

// Seeded monotone grounded instance that is NOT submodular. Needs n >= 2.
SetFunction random_non_submodular(int n, std::uint64_t seed);

}  // namespace subcore

#endif  // SUBCORE_GENERATORS_HPP_
