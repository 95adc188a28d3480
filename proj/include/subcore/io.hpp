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

// JSON instance, family and report formats.
//
// Instance:
//   { "n": 3, "labels": ["a","b","c"]?, "mode": "exact"|"float"?,
//     "values": { "<key>": <scalar>, ... } }
// with one entry per subset. A key is a decimal bitmask ("5"), a binary
// bitmask ("0b101"), or a point list ("{0,2}", "[a,c]", "{}"). "values" may
// also be an array of 2^n scalars indexed by bitmask. Instead of "values" an
// instance may name a generator:
//   { "generator": "distortion", "n": 3, "g": G, "p": [..]? }
//   { "generator": "coverage", "n": 3, "covers": [[0],[0,1],[2]], "weights": [..] }
//   { "generator": "interval", "cells": 4, "g": G }
//   { "generator": "random_submodular", "n": 5, "seed": 7 }
// where G is {"poly": [c0, c1, ...]} or {"knots": [[x, g(x)], ...]} and p
// defaults to uniform. "normalize": true subtracts v(empty) everywhere.
//
// Scalars are "p/q" strings, decimal strings, or JSON numbers. In exact mode
// a JSON number is read from its shortest decimal text, so 0.1 is 1/10.
//
// Family:
//   { "n": 3, "labels": [..]?, "family": [[0,1],[1,2]] }

#ifndef SUBCORE_IO_HPP_
#define SUBCORE_IO_HPP_

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "json.hpp"
#include "subcore/embed.hpp"
#include "subcore/report.hpp"
#include "subcore/setfun.hpp"

namespace subcore {

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

nlohmann::json read_json_file(const std::filesystem::path& path);

Scalar parse_scalar(const nlohmann::json& j, Mode mode);
// Array of point indices or labels.
Subset parse_subset(const GroundSet& ground, const nlohmann::json& j);
Subset parse_subset_key(const GroundSet& ground, std::string_view key);
// Comma-separated or JSON array text, e.g. "2,0,1" or "[3,1,2]".
nlohmann::json parse_list_argument(std::string_view text);

SetFunction load_instance(const nlohmann::json& j);
GeneratingFamily load_family(const nlohmann::json& j);

nlohmann::json to_json(const Scalar& x);
nlohmann::json to_json(Subset s);
nlohmann::json to_json(const VerificationReport& report);

}  // namespace subcore

#endif  // SUBCORE_IO_HPP_
