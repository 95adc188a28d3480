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

#include "subcore/setfun.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace subcore {

Subset Subset::of(std::initializer_list<int> points) { return of(std::vector<int>(points)); }

Subset Subset::of(const std::vector<int>& points) {
  std::uint32_t bits = 0;
  for (int p : points) {
    if (p < 0 || p >= kMaxPoints) throw std::out_of_range("point index " + std::to_string(p) + " out of range");
    bits |= std::uint32_t{1} << p;
  }
  return Subset(bits);
}

std::vector<int> Subset::points() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (std::uint32_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
  return out;
}

std::string to_string(Subset s) {
  std::string out = "{";
  bool first = true;
  for (int p : s.points()) {
    if (!first) out += ',';
    out += std::to_string(p);
    first = false;
  }
  return out + "}";
}

GroundSet::GroundSet(int n, std::vector<std::string> labels) : n_(n), labels_(std::move(labels)) {
  if (n < 1 || n > kMaxPoints)
    throw std::invalid_argument("ground set size must be in [1, " + std::to_string(kMaxPoints) + "], got " +
                                std::to_string(n));
  if (!labels_.empty() && labels_.size() != static_cast<std::size_t>(n))
    throw std::invalid_argument("expected " + std::to_string(n) + " labels, got " + std::to_string(labels_.size()));
  for (std::size_t i = 0; i < labels_.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (labels_[i] == labels_[j]) throw std::invalid_argument("duplicate label '" + labels_[i] + "'");
}

std::string GroundSet::label(int point) const {
  return labels_.empty() ? std::to_string(point) : labels_.at(static_cast<std::size_t>(point));
}

int GroundSet::point_of(const std::string& name) const {
  if (auto it = std::find(labels_.begin(), labels_.end(), name); it != labels_.end())
    return static_cast<int>(it - labels_.begin());
  int idx = -1;
  auto [ptr, ec] = std::from_chars(name.data(), name.data() + name.size(), idx);
  if (ec != std::errc() || ptr != name.data() + name.size() || idx < 0 || idx >= n_)
    throw std::invalid_argument("unknown point '" + name + "'");
  return idx;
}

SetFunction::SetFunction(GroundSet ground, std::vector<Scalar> table)
    : ground_(std::move(ground)), table_(std::move(table)) {
  if (table_.size() != ground_.subset_count())
    throw std::invalid_argument("set function table needs " + std::to_string(ground_.subset_count()) +
                                " entries, got " + std::to_string(table_.size()));
  const Mode m = table_.front().mode();
  for (const Scalar& x : table_) {
    if (x.mode() != m) throw ModeMismatch();
    if (!x.is_finite()) throw std::invalid_argument("set function values must be finite");
  }
}

SetFunction SetFunction::tabulate(GroundSet ground, const std::function<Scalar(Subset)>& fn) {
  std::vector<Scalar> table;
  table.reserve(ground.subset_count());
  for (std::uint32_t s = 0; s < ground.subset_count(); ++s) table.push_back(fn(Subset(s)));
  return SetFunction(std::move(ground), std::move(table));
}

SetFunction SetFunction::zero(GroundSet ground, Mode mode) {
  return tabulate(std::move(ground), [mode](Subset) { return Scalar::zero(mode); });
}

SetFunction SetFunction::additive(GroundSet ground, const std::vector<Scalar>& weights) {
  if (weights.size() != static_cast<std::size_t>(ground.size()))
    throw std::invalid_argument("one weight per point required");
  std::vector<Scalar> table(ground.subset_count(), Scalar::zero(weights.front().mode()));
  for (std::uint32_t s = 1; s < table.size(); ++s) {
    const int low = std::countr_zero(s);
    table[s] = table[s & (s - 1)] + weights[static_cast<std::size_t>(low)];
  }
  return SetFunction(std::move(ground), std::move(table));
}

const Scalar& SetFunction::at(Subset s) const {
  if (!ground_.contains(s)) throw std::out_of_range("subset " + to_string(s) + " outside the ground set");
  return table_[s.bits()];
}

SetFunction SetFunction::normalized() const {
  const Scalar base = table_.front();
  std::vector<Scalar> table;
  table.reserve(table_.size());
  for (const Scalar& x : table_) table.push_back(x - base);
  return SetFunction(ground_, std::move(table));
}

bool is_grounded(const SetFunction& v) { return v(Subset::empty()).sign() == 0; }

bool is_monotone(const SetFunction& v) {
  const int n = v.n();
  for (std::uint32_t s = 0; s < v.ground().subset_count(); ++s) {
    const Subset S(s);
    for (int i = 0; i < n; ++i)
      if (!S.contains(i) && !scalar_le(v(S), v(S.with(i)))) return false;
  }
  return true;
}

namespace {

// sign > 0 checks submodularity, sign < 0 supermodularity.
bool check_lattice_inequality(const SetFunction& v, SubmodularCheck how, int sign) {
  auto holds = [sign](const Scalar& lhs, const Scalar& rhs) {
    return sign > 0 ? scalar_le(rhs, lhs) : scalar_le(lhs, rhs);
  };
  const std::size_t count = v.ground().subset_count();
  if (how == SubmodularCheck::exhaustive) {
    for (std::uint32_t a = 0; a < count; ++a) {
      for (std::uint32_t b = a + 1; b < count; ++b) {
        const Subset A(a), B(b);
        if (!holds(v(A) + v(B), v(A | B) + v(A & B))) return false;
      }
    }
    return true;
  }
  const int n = v.n();
  for (std::uint32_t s = 0; s < count; ++s) {
    const Subset S(s);
    for (int i = 0; i < n; ++i) {
      if (S.contains(i)) continue;
      for (int j = i + 1; j < n; ++j) {
        if (S.contains(j)) continue;
        if (!holds(v(S.with(i)) + v(S.with(j)), v(S.with(i).with(j)) + v(S))) return false;
      }
    }
  }
  return true;
}

}  // namespace

bool is_submodular(const SetFunction& v, SubmodularCheck how) { return check_lattice_inequality(v, how, +1); }

bool is_supermodular(const SetFunction& v, SubmodularCheck how) { return check_lattice_inequality(v, how, -1); }

bool is_modular(const SetFunction& v) { return is_submodular(v) && is_supermodular(v); }

SetFunction dual_transform(const SetFunction& v) { return relative_dual(v, v.ground().all()); }

SetFunction relative_dual(const SetFunction& v, Subset within) {
  if (!v.ground().contains(within)) throw std::invalid_argument("relative_dual: subspace outside the ground set");
  const Scalar& top = v(within);
  const Scalar& bottom = v(Subset::empty());
  return SetFunction::tabulate(v.ground(), [&](Subset E) { return top - v(within - E) + bottom; });
}

}  // namespace subcore
