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

#include "subcore/measure.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>
#include <tuple>

namespace subcore {

bool VerificationReport::passed() const {
  return std::all_of(claims.begin(), claims.end(), [](const Claim& c) { return c.pass; });
}

const Claim* VerificationReport::first_failure() const {
  for (const Claim& c : claims)
    if (!c.pass) return &c;
  return nullptr;
}

std::size_t VerificationReport::count(const std::string& name) const {
  return static_cast<std::size_t>(
      std::count_if(claims.begin(), claims.end(), [&](const Claim& c) { return c.name == name; }));
}

AtomicMeasure::AtomicMeasure(GroundSet ground, Subset carrier, std::vector<Scalar> weights)
    : ground_(std::move(ground)), carrier_(carrier), weights_(std::move(weights)) {
  if (!ground_.contains(carrier_)) throw std::invalid_argument("measure carrier leaves the ground set");
  if (weights_.size() != static_cast<std::size_t>(ground_.size()))
    throw std::invalid_argument("one weight per ground point required");
  const Mode m = weights_.front().mode();
  for (int p = 0; p < ground_.size(); ++p) {
    const Scalar& w = weights_[static_cast<std::size_t>(p)];
    if (w.mode() != m) throw ModeMismatch();
    if (!carrier_.contains(p) && w.sign() != 0)
      throw std::invalid_argument("point " + std::to_string(p) + " outside the carrier has nonzero weight");
  }
}

Scalar AtomicMeasure::operator()(Subset E) const {
  if (!E.is_subset_of(carrier_))
    throw std::invalid_argument("set " + to_string(E) + " is not within the carrier " + to_string(carrier_));
  Scalar total = Scalar::zero(mode());
  for (int p : E.points()) total += weights_[static_cast<std::size_t>(p)];
  return total;
}

bool AtomicMeasure::is_nonnegative() const {
  return std::all_of(weights_.begin(), weights_.end(), [](const Scalar& w) { return w.sign() >= 0; });
}

AtomicMeasure AtomicMeasure::perturbed(int point, const Scalar& delta) const {
  if (!carrier_.contains(point)) throw std::invalid_argument("perturbed point outside the carrier");
  auto w = weights_;
  w[static_cast<std::size_t>(point)] += delta;
  return AtomicMeasure(ground_, carrier_, std::move(w));
}

bool AtomicMeasure::operator==(const AtomicMeasure& o) const {
  if (carrier_ != o.carrier_ || weights_.size() != o.weights_.size()) return false;
  for (std::size_t i = 0; i < weights_.size(); ++i)
    if (!scalar_eq(weights_[i], o.weights_[i])) return false;
  return true;
}

AtomicMeasure chain_measure(const SetFunction& v, const Chain& chain) {
  if (!chain.is_maximal()) throw std::invalid_argument("chain_measure needs a maximal chain");
  std::vector<Scalar> weights(static_cast<std::size_t>(v.n()), Scalar::zero(v.mode()));
  const auto& sets = chain.sets();
  for (std::size_t k = 1; k < sets.size(); ++k) {
    const int point = (sets[k] - sets[k - 1]).points().front();
    weights[static_cast<std::size_t>(point)] = v.at(sets[k]) - v.at(sets[k - 1]);
  }
  return AtomicMeasure(v.ground(), chain.carrier(), std::move(weights));
}

bool agrees_on_chain(const AtomicMeasure& mu, const SetFunction& v, const Chain& chain) {
  return std::all_of(chain.sets().begin(), chain.sets().end(),
                     [&](Subset s) { return scalar_eq(mu(s), v.at(s)); });
}

namespace {

enum class Side { lower, upper };

// Visits every E within A in Gray-code order so mu(E) is updated by one
// weight per step. Slack is mu(E) - v(E) for the lower core, v(E) - mu(E)
// for the upper core.
CoreScan scan_core(const AtomicMeasure& mu, const SetFunction& v, Subset A, Side side) {
  const std::vector<int> points = A.points();
  const std::uint64_t total = std::uint64_t{1} << points.size();
  Subset E;
  Scalar mass = Scalar::zero(v.mode());
  auto slack = [&]() { return side == Side::lower ? mass - v(E) : v(E) - mass; };
  CoreScan scan{slack(), {}};
  if (scan.worst.sign() > 0) scan.violations.push_back(E);
  for (std::uint64_t c = 1; c < total; ++c) {
    const int p = points[static_cast<std::size_t>(std::countr_zero(c))];
    if (E.contains(p)) {
      E = E.without(p);
      mass -= mu.weight(p);
    } else {
      E = E.with(p);
      mass += mu.weight(p);
    }
    Scalar s = slack();
    if (s.sign() > 0) scan.violations.push_back(E);
    if (compare(s, scan.worst) > 0) scan.worst = std::move(s);
  }
  std::sort(scan.violations.begin(), scan.violations.end());
  return scan;
}

bool in_core(const AtomicMeasure& mu, const SetFunction& v, Subset A, Side side) {
  if (mu.carrier() != A || !mu.is_nonnegative()) return false;
  if (!scalar_eq(mu(A), v.at(A))) return false;
  return scan_core(mu, v, A, side).worst.sign() <= 0;
}

std::vector<int> resolve_base_order(const SetFunction& v, const VerifyOptions& options) {
  if (!options.base_order.empty()) return options.base_order;
  std::vector<int> order(static_cast<std::size_t>(v.n()));
  std::iota(order.begin(), order.end(), 0);
  return order;
}

void check_pair(const SetFunction& v, Subset A, Subset B) {
  if (!v.ground().contains(A)) throw std::invalid_argument("A " + to_string(A) + " leaves the ground set");
  if (!B.is_subset_of(A)) throw std::invalid_argument("B " + to_string(B) + " is not within A " + to_string(A));
}

Claim make_claim(std::string name, std::vector<Subset> sets, Scalar lhs, Scalar rhs, bool pass) {
  return Claim{std::move(name), std::move(sets), std::move(lhs), std::move(rhs), pass};
}

// Witness and claims for one side without truncating the violation list.
VerificationReport verify_side(const SetFunction& v, Subset A, Subset B, const std::vector<int>& base_order,
                               Side side) {
  const Chain base = maximal_chain(v.ground(), base_order);
  const Chain inserted = insert_chain(base, A, B);
  const AtomicMeasure mu = chain_measure(v, inserted);
  const Scalar zero = Scalar::zero(v.mode());

  VerificationReport report;
  report.base_order = base_order;
  report.chain = inserted.sets();
  report.witness_weights = mu.weights();
  report.witness_carrier = A;

  for (Subset I : inserted.sets()) {
    Scalar lhs = mu(I);
    const bool ok = scalar_eq(lhs, v(I));
    report.claims.push_back(make_claim("agrees_on_chain", {I}, std::move(lhs), v(I), ok));
  }
  {
    Scalar lhs = mu(A);
    const bool ok = scalar_eq(lhs, v(A));
    report.claims.push_back(make_claim("total_mass", {A}, std::move(lhs), v(A), ok));
  }
  {
    Scalar lowest = zero;
    Subset at;
    for (int p : A.points()) {
      if (at.is_empty() || compare(mu.weight(p), lowest) < 0) {
        lowest = mu.weight(p);
        at = Subset::singleton(p);
      }
    }
    const bool ok = lowest.sign() >= 0;
    report.claims.push_back(make_claim("nonnegative", {at}, lowest, zero, ok));
  }
  const CoreScan scan = scan_core(mu, v, A, side);
  report.claims.push_back(make_claim(side == Side::lower ? "dominated" : "dominates", {A}, scan.worst, zero,
                                     scan.worst.sign() <= 0));
  for (Subset E : scan.violations) report.claims.push_back(make_claim("violation", {E}, mu(E), v(E), false));
  {
    Scalar lhs = mu(B);
    const bool ok = scalar_eq(lhs, v(B));
    report.claims.push_back(make_claim("attains", {B}, std::move(lhs), v(B), ok));
  }
  return report;
}

void truncate_violations(VerificationReport& report, std::size_t max_listed) {
  std::size_t listed = 0;
  std::vector<Claim> kept;
  kept.reserve(report.claims.size());
  for (Claim& c : report.claims) {
    if (c.name == "violation" && listed++ >= max_listed) {
      ++report.unlisted_violations;
      continue;
    }
    kept.push_back(std::move(c));
  }
  report.claims = std::move(kept);
}

// Rewrites a lower-core report for w = relative_dual(v, A) into statements
// about v on the upper core: a set E' becomes A \ E', mu(E') becomes
// mu(A) - mu(A \ E'), and w(E') becomes v(A) + v(empty) - v(A \ E').
std::vector<Claim> translate_dual_claims(const VerificationReport& dual, const SetFunction& v, Subset A) {
  Scalar total = Scalar::zero(v.mode());
  for (int p : A.points()) total += dual.witness_weights[static_cast<std::size_t>(p)];
  const Scalar shift = v(A) + v(Subset::empty());
  std::vector<Claim> out;
  for (const Claim& c : dual.claims) {
    Claim t = c;
    if (c.name == "agrees_on_chain" || c.name == "violation" || c.name == "attains") {
      t.sets = {A - c.sets.front()};
      t.lhs = total - c.lhs;
      t.rhs = shift - c.rhs;
    } else if (c.name == "dominated") {
      t.name = "dominates";
      t.lhs = c.lhs - total + shift;
    }
    out.push_back(std::move(t));
  }
  return out;
}

std::size_t count_mismatches(std::vector<Claim> a, std::vector<Claim> b) {
  auto key = [](const Claim& c) {
    return std::make_tuple(c.name, c.sets.empty() ? 0U : c.sets.front().bits());
  };
  auto by_key = [&](const Claim& x, const Claim& y) { return key(x) < key(y); };
  std::sort(a.begin(), a.end(), by_key);
  std::sort(b.begin(), b.end(), by_key);
  std::size_t mismatches = a.size() > b.size() ? a.size() - b.size() : b.size() - a.size();
  for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
    const Claim& x = a[i];
    const Claim& y = b[i];
    if (key(x) != key(y) || x.pass != y.pass || !scalar_eq(x.lhs, y.lhs) || !scalar_eq(x.rhs, y.rhs)) ++mismatches;
  }
  return mismatches;
}

}  // namespace

CoreScan scan_lower_core(const AtomicMeasure& mu, const SetFunction& v, Subset A) {
  return scan_core(mu, v, A, Side::lower);
}

CoreScan scan_upper_core(const AtomicMeasure& mu, const SetFunction& v, Subset A) {
  return scan_core(mu, v, A, Side::upper);
}

bool in_lower_core(const AtomicMeasure& mu, const SetFunction& v, Subset A) { return in_core(mu, v, A, Side::lower); }

bool in_upper_core(const AtomicMeasure& mu, const SetFunction& v, Subset A) { return in_core(mu, v, A, Side::upper); }

VerificationReport verify_sup_representation(const SetFunction& v, Subset A, Subset B, const VerifyOptions& options) {
  check_pair(v, A, B);
  VerificationReport report = verify_side(v, A, B, resolve_base_order(v, options), Side::lower);
  truncate_violations(report, options.max_listed_violations);
  return report;
}

VerificationReport verify_inf_representation(const SetFunction& v, Subset A, Subset B, const VerifyOptions& options) {
  check_pair(v, A, B);
  const std::vector<int> order = resolve_base_order(v, options);
  VerificationReport direct = verify_side(v, A, B, order, Side::upper);

  // Complementing the reversed base chain inside A turns the insertion of
  // A \ B back into the insertion of B, so both routes share one witness.
  const std::vector<int> reversed(order.rbegin(), order.rend());
  const SetFunction dual_v = relative_dual(v, A);
  const VerificationReport dual = verify_side(dual_v, A, A - B, reversed, Side::lower);
  std::size_t mismatches = count_mismatches(direct.claims, translate_dual_claims(dual, v, A));
  for (std::size_t p = 0; p < direct.witness_weights.size(); ++p)
    if (!scalar_eq(direct.witness_weights[p], dual.witness_weights[p])) ++mismatches;

  const Scalar zero = Scalar::zero(v.mode());
  direct.claims.push_back(make_claim("dual_route_agrees", {A, B},
                                     Scalar::from_int(static_cast<long>(mismatches), v.mode()), zero,
                                     mismatches == 0));
  truncate_violations(direct, options.max_listed_violations);
  return direct;
}

namespace {

// Gauss-Jordan on [rows | rhs]. Returns the unique solution, or nothing when
// the system is singular or inconsistent.
std::optional<std::vector<Scalar>> solve_unique(std::vector<std::vector<Scalar>> rows, std::vector<Scalar> rhs,
                                                std::size_t cols) {
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col].sign() == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    std::swap(rhs[pivot], rhs[rank]);
    const Scalar lead = rows[rank][col];
    for (std::size_t c = col; c < cols; ++c) rows[rank][c] /= lead;
    rhs[rank] /= lead;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col].sign() == 0) continue;
      const Scalar factor = rows[r][col];
      for (std::size_t c = col; c < cols; ++c) rows[r][c] -= factor * rows[rank][c];
      rhs[r] -= factor * rhs[rank];
    }
    ++rank;
  }
  if (rank < cols) return std::nullopt;
  for (std::size_t r = rank; r < rows.size(); ++r)
    if (rhs[r].sign() != 0) return std::nullopt;
  rhs.resize(cols);
  return rhs;
}

}  // namespace

bool verify_uniqueness(const SetFunction& v, Subset A, Subset B, const VerifyOptions& options) {
  check_pair(v, A, B);
  const Chain base = maximal_chain(v.ground(), resolve_base_order(v, options));
  const Chain inserted = insert_chain(base, A, B);
  const std::vector<int> points = A.points();
  const Scalar zero = Scalar::zero(v.mode());
  const Scalar one = Scalar::from_int(1, v.mode());

  std::vector<std::vector<Scalar>> rows;
  std::vector<Scalar> rhs;
  for (Subset I : inserted.sets()) {
    std::vector<Scalar> row;
    row.reserve(points.size());
    for (int p : points) row.push_back(I.contains(p) ? one : zero);
    rows.push_back(std::move(row));
    rhs.push_back(v(I));
  }
  const auto solution = solve_unique(std::move(rows), std::move(rhs), points.size());
  if (!solution) return false;
  const AtomicMeasure mu = chain_measure(v, inserted);
  for (std::size_t k = 0; k < points.size(); ++k)
    if (!scalar_eq((*solution)[k], mu.weight(points[k]))) return false;
  return true;
}

std::vector<AtomicMeasure> sample_core(const SetFunction& v, Subset A, std::size_t count, std::uint64_t seed) {
  if (!v.ground().contains(A)) throw std::invalid_argument("sample_core: A leaves the ground set");
  std::mt19937_64 rng(seed);
  std::vector<int> order = A.points();
  std::vector<AtomicMeasure> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    std::shuffle(order.begin(), order.end(), rng);
    out.push_back(chain_measure(v, Chain::from_order(A, order)));
  }
  return out;
}

}  // namespace subcore
