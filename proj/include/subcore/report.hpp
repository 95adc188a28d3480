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

#ifndef SUBCORE_REPORT_HPP_
#define SUBCORE_REPORT_HPP_

#include <optional>
#include <string>
#include <vector>

#include "subcore/scalar.hpp"
#include "subcore/setfun.hpp"

namespace subcore {

// One checked relation between two computed quantities.
struct Claim {
  std::string name;
  std::vector<Subset> sets;
  Scalar lhs;
  Scalar rhs;
  bool pass = false;
};

struct VerificationReport {
  std::vector<Claim> claims;
  // Base chain point order the witness was built from.
  std::vector<int> base_order;
  std::vector<Subset> chain;
  std::vector<Scalar> witness_weights;
  Subset witness_carrier;
  // Violations beyond this many are counted but not listed.
  std::size_t unlisted_violations = 0;

  bool passed() const;
  const Claim* first_failure() const;
  std::size_t count(const std::string& name) const;
};

}  // namespace subcore

#endif  // SUBCORE_REPORT_HPP_
