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

// Discrete Choquet integration.
//
// v(f) = y v(Omega) + integral_y^inf v({f > z}) dz for any y <= min f. With
// f's distinct values y_1 < ... < y_m the integrand is piecewise constant and
// the integral is y_1 v(Omega) + sum_{j>=2} (y_j - y_{j-1}) v({f >= y_j}).
// Every function on a finite set is integrable.

#ifndef SUBCORE_CHOQUET_HPP_
#define SUBCORE_CHOQUET_HPP_

#include <cstdint>
#include <vector>

#include "subcore/chain.hpp"
#include "subcore/measure.hpp"
#include "subcore/report.hpp"
#include "subcore/setfun.hpp"

namespace subcore {

class PointFunction {
 public:
  PointFunction(GroundSet ground, std::vector<Scalar> values);

  static PointFunction indicator(const GroundSet& ground, Subset A, Mode mode = Mode::exact);

  const GroundSet& ground() const { return ground_; }
  Mode mode() const { return values_.front().mode(); }
  const std::vector<Scalar>& values() const { return values_; }
  const Scalar& operator()(int point) const { return values_.at(static_cast<std::size_t>(point)); }

  // Distinct values, ascending.
  std::vector<Scalar> distinct_values() const;
  bool is_injective() const { return distinct_values().size() == values_.size(); }

  // {w : f(w) > z} and {w : f(w) < z}.
  Subset above(const Scalar& z) const;
  Subset below(const Scalar& z) const;

  PointFunction operator-() const;
  PointFunction scaled(const Scalar& c) const;
  PointFunction shifted(const Scalar& c) const;

 private:
  GroundSet ground_;
  std::vector<Scalar> values_;
};

Scalar choquet_integral(const SetFunction& v, const PointFunction& f);

// rho(f) = v(-f).
Scalar coherent_risk(const SetFunction& v, const PointFunction& f);

// Integral of f against an atomic measure: sum of f(w) mu({w}).
Scalar integrate(const PointFunction& f, const AtomicMeasure& mu);

// Distinct level sets {f > z}, from the empty set up to Omega. Maximal iff
// f is injective.
Chain level_set_chain(const PointFunction& f);

// Refines each step of the chain that adds several points into single-point
// steps, adding tied points in ascending index order.
Chain complete_chain(const Chain& chain);

struct ChoquetOptions {
  std::size_t samples = 32;
  std::uint64_t seed = 0;
  std::size_t max_listed_violations = 64;
};

// Witness for v(f) = sup over the lower core of Omega of integral f dmu.
// Claims:
//   agrees_on_level_set  mu(I) = v(I) for each level set of f
//   dominated            max_E mu(E) - v(E) <= 0 (plus listed violations)
//   nonnegative          min weight >= 0
//   integral_matches     integral f dmu = v(f)
//   sample_domination    max over sampled chain measures mu' of
//                        integral f dmu' <= v(f)
VerificationReport verify_choquet_sup(const SetFunction& v, const PointFunction& f,
                                      const ChoquetOptions& options = {});

}  // namespace subcore

#endif  // SUBCORE_CHOQUET_HPP_
