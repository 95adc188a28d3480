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

#include "subcore/embed.hpp"

#include <stdexcept>

namespace subcore {

namespace {

mpq_class inverse_power_of_three(int k) {
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), 3, static_cast<unsigned long>(k));
  return mpq_class(mpz_class(1), den);
}

bool any_value_in(const std::vector<mpq_class>& values, const mpq_class& lo, const mpq_class& hi) {
  for (const auto& x : values)
    if (x >= lo && x < hi) return true;
  return false;
}

// Depth-first over digit prefixes a_1..a_depth in {0,1}; `prefix` is their
// ternary value. At depth N-1 the interval [prefix + 3^-N, prefix + 2*3^-N)
// contributes the points whose value it holds.
void collect(const std::vector<mpq_class>& values, const mpq_class& prefix, int depth, int N, Subset& out) {
  const mpq_class step = inverse_power_of_three(depth);
  // Every value with this prefix lies in [prefix, prefix + 3^-depth).
  if (!any_value_in(values, prefix, prefix + step)) return;
  if (depth == N - 1) {
    const mpq_class unit = inverse_power_of_three(N);
    const mpq_class lo = prefix + unit;
    const mpq_class hi = prefix + 2 * unit;
    for (std::size_t p = 0; p < values.size(); ++p)
      if (values[p] >= lo && values[p] < hi) out = out.with(static_cast<int>(p));
    return;
  }
  const mpq_class next = inverse_power_of_three(depth + 1);
  collect(values, prefix, depth + 1, N, out);
  collect(values, prefix + next, depth + 1, N, out);
}

}  // namespace

GeneratingFamily::GeneratingFamily(GroundSet ground, std::vector<Subset> members)
    : ground_(std::move(ground)), members_(std::move(members)) {
  if (members_.size() > static_cast<std::size_t>(kMaxFamilySize))
    throw std::invalid_argument("generating family holds at most " + std::to_string(kMaxFamilySize) + " sets");
  for (Subset s : members_)
    if (!ground_.contains(s)) throw std::invalid_argument("family member " + to_string(s) + " leaves the ground set");
  separates_ = atoms().size() == static_cast<std::size_t>(ground_.size());
}

std::vector<Subset> GeneratingFamily::atoms() const { return algebra_atoms(ground_.all(), members_); }

PointFunction ternary_embed(const GeneratingFamily& family) {
  std::vector<Scalar> values;
  values.reserve(static_cast<std::size_t>(family.ground().size()));
  for (int p = 0; p < family.ground().size(); ++p) {
    mpq_class x(0);
    for (std::size_t k = 0; k < family.size(); ++k)
      if (family.members()[k].contains(p)) x += inverse_power_of_three(static_cast<int>(k) + 1);
    values.push_back(Scalar::exact(x));
  }
  return PointFunction(family.ground(), std::move(values));
}

Subset sublevel_set(const PointFunction& f, const Scalar& a) { return f.below(a); }

Chain embed_chain(const GeneratingFamily& family) {
  const PointFunction f = ternary_embed(family);
  std::vector<Subset> sets;
  // {f < y} at each attained value y, then {f < 1} = Omega.
  for (const Scalar& y : f.distinct_values()) sets.push_back(sublevel_set(f, y));
  sets.push_back(sublevel_set(f, Scalar::exact(1)));
  return Chain(family.ground().all(), std::move(sets));
}

Subset recover_generator(const PointFunction& f, int family_size, int N) {
  if (family_size < 0 || family_size > kMaxFamilySize)
    throw std::invalid_argument("family size out of range");
  if (N < 1 || N > family_size)
    throw std::out_of_range("generator index " + std::to_string(N) + " outside 1.." + std::to_string(family_size));
  if (f.mode() != Mode::exact) throw std::invalid_argument("recover_generator needs exact values");
  std::vector<mpq_class> values;
  values.reserve(f.values().size());
  for (const Scalar& x : f.values()) values.push_back(x.rational());
  Subset out;
  collect(values, mpq_class(0), 0, N, out);
  return out;
}

}  // namespace subcore
