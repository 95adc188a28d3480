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

#include "subcore/generators.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

namespace subcore {

Distortion Distortion::polynomial(std::vector<Scalar> coeffs) {
  if (coeffs.empty()) throw std::invalid_argument("distortion polynomial needs coefficients");
  Distortion g;
  g.coeffs_ = std::move(coeffs);
  g.validate();
  return g;
}

Distortion Distortion::piecewise_linear(std::vector<std::pair<Scalar, Scalar>> knots) {
  if (knots.size() < 2) throw std::invalid_argument("distortion needs at least two knots");
  for (std::size_t k = 1; k < knots.size(); ++k)
    if (!(knots[k - 1].first < knots[k].first))
      throw std::invalid_argument("distortion knots must have strictly increasing x");
  if (knots.front().first.sign() != 0 || !scalar_eq(knots.back().first, Scalar::from_int(1, knots.front().first.mode())))
    throw std::invalid_argument("distortion knots must span [0, 1]");
  Distortion g;
  g.knots_ = std::move(knots);
  g.validate();
  return g;
}

Mode Distortion::mode() const { return coeffs_.empty() ? knots_.front().first.mode() : coeffs_.front().mode(); }

Scalar Distortion::operator()(const Scalar& x) const {
  const Scalar zero = Scalar::zero(mode());
  const Scalar one = Scalar::from_int(1, mode());
  if (x < zero || x > one) throw std::domain_error("distortion evaluated outside [0, 1] at " + x.str());
  if (!coeffs_.empty()) {
    Scalar acc = zero;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }
  for (std::size_t k = 1; k < knots_.size(); ++k) {
    const auto& [x0, y0] = knots_[k - 1];
    const auto& [x1, y1] = knots_[k];
    if (x <= x1) return y0 + (y1 - y0) * (x - x0) / (x1 - x0);
  }
  return knots_.back().second;
}

std::vector<Scalar> Distortion::grid() const {
  std::vector<Scalar> out;
  if (!knots_.empty()) {
    for (const auto& kn : knots_) out.push_back(kn.first);
    return out;
  }
  constexpr long kSteps = 64;
  for (long k = 0; k <= kSteps; ++k)
    out.push_back(mode() == Mode::exact ? Scalar::exact(k, kSteps)
                                        : Scalar::floating(static_cast<double>(k) / kSteps));
  return out;
}

namespace {

// Sign pattern of successive slopes on the grid: +1 if some slope rises,
// -1 if some slope falls.
std::pair<bool, bool> slope_changes(const Distortion& g) {
  const auto xs = g.grid();
  bool rises = false, falls = false;
  for (std::size_t k = 2; k < xs.size(); ++k) {
    const Scalar s0 = (g(xs[k - 1]) - g(xs[k - 2])) / (xs[k - 1] - xs[k - 2]);
    const Scalar s1 = (g(xs[k]) - g(xs[k - 1])) / (xs[k] - xs[k - 1]);
    const int c = compare(s1, s0);
    rises |= c > 0;
    falls |= c < 0;
  }
  return {rises, falls};
}

}  // namespace

bool Distortion::is_concave() const { return !slope_changes(*this).first; }

bool Distortion::is_convex() const { return !slope_changes(*this).second; }

void Distortion::validate() const {
  const Scalar zero = Scalar::zero(mode());
  const Scalar one = Scalar::from_int(1, mode());
  if (!scalar_eq((*this)(zero), zero)) throw std::invalid_argument("distortion must satisfy g(0) = 0");
  if (!scalar_eq((*this)(one), one)) throw std::invalid_argument("distortion must satisfy g(1) = 1");
  const auto xs = grid();
  for (std::size_t k = 1; k < xs.size(); ++k)
    if ((*this)(xs[k]) < (*this)(xs[k - 1]))
      throw std::invalid_argument("distortion decreases between " + xs[k - 1].str() + " and " + xs[k].str());
}

SetFunction distortion_capacity(const GroundSet& ground, const Distortion& g, const std::vector<Scalar>& p) {
  if (p.size() != static_cast<std::size_t>(ground.size()))
    throw std::invalid_argument("one probability weight per point required");
  Scalar total = Scalar::zero(g.mode());
  for (const Scalar& w : p) {
    if (w.sign() < 0) throw std::invalid_argument("probability weights must be nonnegative");
    total += w;
  }
  if (!scalar_eq(total, Scalar::from_int(1, g.mode()))) throw std::invalid_argument("probability weights must sum to 1");
  const SetFunction mass = SetFunction::additive(ground, p);
  return SetFunction::tabulate(ground, [&](Subset s) {
    // Clamp float round-off so g stays inside its domain.
    Scalar x = mass(s);
    if (!x.is_exact()) x = Scalar::floating(std::clamp(x.to_double(), 0.0, 1.0));
    return g(x);
  });
}

SetFunction coverage_function(const GroundSet& ground, const std::vector<std::vector<int>>& covers,
                              const std::vector<Scalar>& item_weights) {
  if (covers.size() != static_cast<std::size_t>(ground.size()))
    throw std::invalid_argument("one cover list per point required");
  if (item_weights.empty() || item_weights.size() > 64) throw std::invalid_argument("coverage needs 1..64 items");
  std::vector<std::uint64_t> masks;
  for (const auto& items : covers) {
    std::uint64_t m = 0;
    for (int item : items) {
      if (item < 0 || static_cast<std::size_t>(item) >= item_weights.size())
        throw std::invalid_argument("cover item " + std::to_string(item) + " out of range");
      m |= std::uint64_t{1} << item;
    }
    masks.push_back(m);
  }
  for (const Scalar& w : item_weights)
    if (w.sign() < 0) throw std::invalid_argument("item weights must be nonnegative");
  return SetFunction::tabulate(ground, [&](Subset s) {
    std::uint64_t covered = 0;
    for (int p : s.points()) covered |= masks[static_cast<std::size_t>(p)];
    Scalar total = Scalar::zero(item_weights.front().mode());
    for (std::size_t i = 0; i < item_weights.size(); ++i)
      if ((covered >> i) & 1U) total += item_weights[i];
    return total;
  });
}

ShapleyExample shapley_example(const std::vector<int>& b, const std::vector<int>& c, const SetFunction& v) {
  const Subset B = Subset::of(b);
  const Subset C = Subset::of(c);
  if (B.size() != static_cast<int>(b.size()) || C.size() != static_cast<int>(c.size()))
    throw std::invalid_argument("shapley_example: repeated points");
  if (!(B & C).is_empty()) throw std::invalid_argument("shapley_example: b and c overlap at " + to_string(B & C));
  const Subset A = B | C;
  if (!v.ground().contains(A)) throw std::invalid_argument("shapley_example: points outside the ground set");

  std::vector<int> order = b;
  order.insert(order.end(), c.begin(), c.end());
  for (int p = 0; p < v.n(); ++p)
    if (!A.contains(p)) order.push_back(p);
  Chain chain = insert_chain(maximal_chain(v.ground(), order), A, B);
  AtomicMeasure mu = chain_measure(v, chain);

  Subset prefix;
  for (int bi : b) {
    const Scalar expected = v(prefix.with(bi)) - v(prefix);
    if (!scalar_eq(mu.weight(bi), expected)) throw std::logic_error("marginal formula mismatch at b point " + std::to_string(bi));
    prefix = prefix.with(bi);
  }
  for (int cj : c) {
    const Scalar expected = v(prefix.with(cj)) - v(prefix);
    if (!scalar_eq(mu.weight(cj), expected)) throw std::logic_error("marginal formula mismatch at c point " + std::to_string(cj));
    prefix = prefix.with(cj);
  }
  return ShapleyExample{std::move(chain), std::move(mu)};
}

IntervalDiscretization interval_discretization(int cells, const Distortion& g) {
  if (cells < 1 || cells > kMaxPoints) throw std::invalid_argument("cells must be in [1, 24]");
  const GroundSet ground(cells);
  std::vector<Scalar> p;
  for (int k = 0; k < cells; ++k)
    p.push_back(g.mode() == Mode::exact ? Scalar::exact(1, cells) : Scalar::floating(1.0 / cells));
  std::vector<int> order(static_cast<std::size_t>(cells));
  std::iota(order.begin(), order.end(), 0);
  return IntervalDiscretization{distortion_capacity(ground, g, p), maximal_chain(ground, order)};
}

namespace {

using Rng = std::mt19937_64;

long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

std::vector<Scalar> random_probabilities(Rng& rng, int n) {
  std::vector<long> raw;
  for (int i = 0; i < n; ++i) raw.push_back(uniform(rng, 1, 6));
  const long total = std::accumulate(raw.begin(), raw.end(), 0L);
  std::vector<Scalar> p;
  for (long r : raw) p.push_back(Scalar::exact(r, total));
  return p;
}

// Piecewise-linear distortion with slopes sorted descending (concave) or
// ascending (convex), normalized to g(1) = 1.
Distortion random_piecewise(Rng& rng, bool concave) {
  constexpr long kDen = 12;
  const long segments = uniform(rng, 1, 4);
  std::vector<long> cuts;
  while (static_cast<long>(cuts.size()) < segments - 1) {
    const long k = uniform(rng, 1, kDen - 1);
    if (std::find(cuts.begin(), cuts.end(), k) == cuts.end()) cuts.push_back(k);
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.insert(cuts.begin(), 0);
  cuts.push_back(kDen);
  std::vector<long> slopes;
  for (long s = 0; s < segments; ++s) slopes.push_back(uniform(rng, 0, 6));
  std::sort(slopes.begin(), slopes.end(), std::greater<>());
  slopes.front() += 1;
  if (!concave) std::reverse(slopes.begin(), slopes.end());

  std::vector<mpq_class> ys{mpq_class(0)};
  for (long s = 0; s < segments; ++s)
    ys.push_back(ys.back() + mpq_class(slopes[static_cast<std::size_t>(s)] * (cuts[static_cast<std::size_t>(s) + 1] - cuts[static_cast<std::size_t>(s)])));
  const mpq_class top = ys.back();
  std::vector<std::pair<Scalar, Scalar>> knots;
  for (std::size_t k = 0; k < cuts.size(); ++k)
    knots.emplace_back(Scalar::exact(cuts[k], kDen), Scalar::exact(mpq_class(ys[k] / top)));
  return Distortion::piecewise_linear(std::move(knots));
}

SetFunction random_coverage(Rng& rng, const GroundSet& ground) {
  const int items = static_cast<int>(uniform(rng, 2, 8));
  std::vector<std::vector<int>> covers(static_cast<std::size_t>(ground.size()));
  for (auto& cover : covers)
    for (int item = 0; item < items; ++item)
      if (uniform(rng, 0, 9) < 4) cover.push_back(item);
  std::vector<Scalar> weights;
  for (int item = 0; item < items; ++item) weights.push_back(Scalar::exact(uniform(rng, 1, 5)));
  return coverage_function(ground, covers, weights);
}

SetFunction add(const SetFunction& a, const SetFunction& b) {
  return SetFunction::tabulate(a.ground(), [&](Subset s) { return a(s) + b(s); });
}

}  // namespace

SetFunction random_submodular(int n, std::uint64_t seed) {
  if (n < 1 || n > 12) throw std::invalid_argument("random_submodular supports 1 <= n <= 12");
  const GroundSet ground(n);
  Rng rng(seed);
  while (true) {
    SetFunction v = SetFunction::zero(ground);
    switch (uniform(rng, 0, 2)) {
      case 0:
        v = distortion_capacity(ground, random_piecewise(rng, true), random_probabilities(rng, n));
        break;
      case 1:
        v = random_coverage(rng, ground);
        break;
      default: {
        const SetFunction d = distortion_capacity(ground, random_piecewise(rng, true), random_probabilities(rng, n));
        v = add(d, random_coverage(rng, ground));
      }
    }
    if (is_grounded(v) && is_monotone(v) && is_submodular(v)) return v;
  }
}

SetFunction random_supermodular(int n, std::uint64_t seed) {
  if (n < 1 || n > 12) throw std::invalid_argument("random_supermodular supports 1 <= n <= 12");
  const GroundSet ground(n);
  Rng rng(seed);
  while (true) {
    SetFunction v = uniform(rng, 0, 1) == 0
                        ? dual_transform(random_submodular(n, rng()))
                        : distortion_capacity(ground, random_piecewise(rng, false), random_probabilities(rng, n));
    if (is_grounded(v) && is_monotone(v) && is_supermodular(v)) return v;
  }
}

SetFunction random_non_submodular(int n, std::uint64_t seed) {
  if (n < 2 || n > 12) throw std::invalid_argument("random_non_submodular supports 2 <= n <= 12");
  const GroundSet ground(n);
  Rng rng(seed);
  while (true) {
    // Each set is at least its largest proper one-point-smaller subset, so
    // the table is monotone and grounded by construction.
    std::vector<Scalar> table(ground.subset_count(), Scalar::exact(0));
    for (std::uint32_t s = 1; s < table.size(); ++s) {
      mpq_class best(0);
      for (int p : Subset(s).points()) best = std::max(best, table[Subset(s).without(p).bits()].rational());
      table[s] = Scalar::exact(mpq_class(best + uniform(rng, 0, 3)));
    }
    SetFunction v(ground, std::move(table));
    if (!is_submodular(v)) return v;
  }
}

}  // namespace subcore
