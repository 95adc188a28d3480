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

#include "subcore/choquet.hpp"

#include <algorithm>
#include <stdexcept>

namespace subcore {

PointFunction::PointFunction(GroundSet ground, std::vector<Scalar> values)
    : ground_(std::move(ground)), values_(std::move(values)) {
  if (values_.size() != static_cast<std::size_t>(ground_.size()))
    throw std::invalid_argument("point function needs " + std::to_string(ground_.size()) + " values, got " +
                                std::to_string(values_.size()));
  const Mode m = values_.front().mode();
  for (const Scalar& x : values_) {
    if (x.mode() != m) throw ModeMismatch();
    if (!x.is_finite()) throw std::invalid_argument("point function values must be finite");
  }
}

PointFunction PointFunction::indicator(const GroundSet& ground, Subset A, Mode mode) {
  std::vector<Scalar> values;
  for (int p = 0; p < ground.size(); ++p) values.push_back(Scalar::from_int(A.contains(p) ? 1 : 0, mode));
  return PointFunction(ground, std::move(values));
}

std::vector<Scalar> PointFunction::distinct_values() const {
  std::vector<Scalar> sorted = values_;
  std::sort(sorted.begin(), sorted.end(), [](const Scalar& a, const Scalar& b) { return compare(a, b) < 0; });
  sorted.erase(std::unique(sorted.begin(), sorted.end(), [](const Scalar& a, const Scalar& b) { return scalar_eq(a, b); }),
               sorted.end());
  return sorted;
}

Subset PointFunction::above(const Scalar& z) const {
  Subset out;
  for (int p = 0; p < ground_.size(); ++p)
    if (compare((*this)(p), z) > 0) out = out.with(p);
  return out;
}

Subset PointFunction::below(const Scalar& z) const {
  Subset out;
  for (int p = 0; p < ground_.size(); ++p)
    if (compare((*this)(p), z) < 0) out = out.with(p);
  return out;
}

PointFunction PointFunction::operator-() const {
  std::vector<Scalar> out;
  out.reserve(values_.size());
  for (const Scalar& x : values_) out.push_back(-x);
  return PointFunction(ground_, std::move(out));
}

PointFunction PointFunction::scaled(const Scalar& c) const {
  std::vector<Scalar> out;
  out.reserve(values_.size());
  for (const Scalar& x : values_) out.push_back(x * c);
  return PointFunction(ground_, std::move(out));
}

PointFunction PointFunction::shifted(const Scalar& c) const {
  std::vector<Scalar> out;
  out.reserve(values_.size());
  for (const Scalar& x : values_) out.push_back(x + c);
  return PointFunction(ground_, std::move(out));
}

namespace {

// {f >= y} for a value y taken by f.
Subset at_least(const PointFunction& f, const Scalar& y) {
  Subset out;
  for (int p = 0; p < f.ground().size(); ++p)
    if (compare(f(p), y) >= 0) out = out.with(p);
  return out;
}

}  // namespace

Scalar choquet_integral(const SetFunction& v, const PointFunction& f) {
  if (!(f.ground() == v.ground())) throw std::invalid_argument("function and set function live on different ground sets");
  const std::vector<Scalar> ys = f.distinct_values();
  Scalar total = ys.front() * v(v.ground().all());
  for (std::size_t j = 1; j < ys.size(); ++j) total += (ys[j] - ys[j - 1]) * v(at_least(f, ys[j]));
  return total;
}

Scalar coherent_risk(const SetFunction& v, const PointFunction& f) { return choquet_integral(v, -f); }

Scalar integrate(const PointFunction& f, const AtomicMeasure& mu) {
  Scalar total = Scalar::zero(mu.mode());
  for (int p : mu.carrier().points()) total += f(p) * mu.weight(p);
  return total;
}

Chain level_set_chain(const PointFunction& f) {
  const std::vector<Scalar> ys = f.distinct_values();
  std::vector<Subset> sets{Subset::empty()};
  for (auto it = ys.rbegin(); it != ys.rend(); ++it) sets.push_back(at_least(f, *it));
  return Chain(f.ground().all(), std::move(sets));
}

Chain complete_chain(const Chain& chain) {
  std::vector<Subset> sets{Subset::empty()};
  for (std::size_t k = 1; k < chain.size(); ++k) {
    Subset acc = chain[k - 1];
    for (int p : (chain[k] - chain[k - 1]).points()) {
      acc = acc.with(p);
      sets.push_back(acc);
    }
  }
  return Chain(chain.carrier(), std::move(sets));
}

VerificationReport verify_choquet_sup(const SetFunction& v, const PointFunction& f, const ChoquetOptions& options) {
  const Chain levels = level_set_chain(f);
  const Chain completed = complete_chain(levels);
  const AtomicMeasure mu = chain_measure(v, completed);
  const Subset omega = v.ground().all();
  const Scalar zero = Scalar::zero(v.mode());
  const Scalar value = choquet_integral(v, f);

  VerificationReport report;
  report.base_order = completed.point_order();
  report.chain = completed.sets();
  report.witness_weights = mu.weights();
  report.witness_carrier = omega;

  for (Subset I : levels.sets())
    report.claims.push_back(Claim{"agrees_on_level_set", {I}, mu(I), v(I), scalar_eq(mu(I), v(I))});

  Scalar lowest = mu.weight(0);
  Subset at = Subset::singleton(0);
  for (int p = 1; p < v.n(); ++p) {
    if (compare(mu.weight(p), lowest) < 0) {
      lowest = mu.weight(p);
      at = Subset::singleton(p);
    }
  }
  report.claims.push_back(Claim{"nonnegative", {at}, lowest, zero, lowest.sign() >= 0});

  const CoreScan scan = scan_lower_core(mu, v, omega);
  report.claims.push_back(Claim{"dominated", {omega}, scan.worst, zero, scan.worst.sign() <= 0});
  for (Subset E : scan.violations) {
    if (report.count("violation") >= options.max_listed_violations) {
      ++report.unlisted_violations;
      continue;
    }
    report.claims.push_back(Claim{"violation", {E}, mu(E), v(E), false});
  }

  const Scalar attained = integrate(f, mu);
  report.claims.push_back(Claim{"integral_matches", {}, attained, value, scalar_eq(attained, value)});

  if (options.samples > 0) {
    const auto samples = sample_core(v, omega, options.samples, options.seed);
    Scalar best = integrate(f, samples.front());
    for (const auto& sample : samples) best = max(best, integrate(f, sample));
    report.claims.push_back(Claim{"sample_domination", {}, best, value, scalar_le(best, value)});
  }
  return report;
}

}  // namespace subcore
