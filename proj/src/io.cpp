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

#include "subcore/io.hpp"

#include <cctype>
#include <fstream>
#include <optional>

#include "subcore/generators.hpp"

namespace subcore {

using nlohmann::json;

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

const json& require(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

int require_int(const json& j, const char* key) {
  const json& x = require(j, key);
  if (!x.is_number_integer()) throw InputError(std::string("field \"") + key + "\" must be an integer");
  return x.get<int>();
}

Mode instance_mode(const json& j) {
  if (!j.contains("mode")) return Mode::exact;
  try {
    return parse_mode(j.at("mode").get<std::string>());
  } catch (const std::exception& e) {
    throw InputError(e.what());
  }
}

GroundSet load_ground(const json& j, int n) {
  std::vector<std::string> labels;
  if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
  try {
    return GroundSet(n, std::move(labels));
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

Distortion load_distortion(const json& g, Mode mode) {
  if (g.contains("poly")) {
    std::vector<Scalar> coeffs;
    for (const json& c : g.at("poly")) coeffs.push_back(parse_scalar(c, mode));
    return Distortion::polynomial(std::move(coeffs));
  }
  if (g.contains("knots")) {
    std::vector<std::pair<Scalar, Scalar>> knots;
    for (const json& k : g.at("knots")) {
      if (!k.is_array() || k.size() != 2) throw InputError("distortion knots are [x, g(x)] pairs");
      knots.emplace_back(parse_scalar(k[0], mode), parse_scalar(k[1], mode));
    }
    return Distortion::piecewise_linear(std::move(knots));
  }
  throw InputError("distortion needs \"poly\" or \"knots\"");
}

std::vector<Scalar> scalar_list(const json& j, Mode mode) {
  if (!j.is_array()) throw InputError("expected an array of scalars");
  std::vector<Scalar> out;
  for (const json& x : j) out.push_back(parse_scalar(x, mode));
  return out;
}

SetFunction load_generator(const json& j, Mode mode) {
  const std::string kind = require(j, "generator").get<std::string>();
  if (kind == "interval") {
    return interval_discretization(require_int(j, "cells"), load_distortion(require(j, "g"), mode)).v;
  }
  const GroundSet ground = load_ground(j, require_int(j, "n"));
  if (kind == "distortion") {
    std::vector<Scalar> p;
    if (j.contains("p")) {
      p = scalar_list(j.at("p"), mode);
    } else {
      for (int i = 0; i < ground.size(); ++i)
        p.push_back(mode == Mode::exact ? Scalar::exact(1, ground.size()) : Scalar::floating(1.0 / ground.size()));
    }
    return distortion_capacity(ground, load_distortion(require(j, "g"), mode), p);
  }
  if (kind == "coverage") {
    const auto covers = require(j, "covers").get<std::vector<std::vector<int>>>();
    return coverage_function(ground, covers, scalar_list(require(j, "weights"), mode));
  }
  if (kind == "random_submodular") {
    if (mode != Mode::exact) throw InputError("random_submodular instances are exact");
    const auto seed = j.contains("seed") ? j.at("seed").get<std::uint64_t>() : 0;
    return random_submodular(ground.size(), seed);
  }
  throw InputError("unknown generator \"" + kind + "\"");
}

SetFunction load_values(const json& j, Mode mode) {
  const GroundSet ground = load_ground(j, require_int(j, "n"));
  const json& values = require(j, "values");
  std::vector<std::optional<Scalar>> table(ground.subset_count());
  if (values.is_array()) {
    if (values.size() != table.size())
      throw InputError("\"values\" array needs " + std::to_string(table.size()) + " entries");
    for (std::size_t s = 0; s < table.size(); ++s) table[s] = parse_scalar(values[s], mode);
  } else if (values.is_object()) {
    for (const auto& [key, value] : values.items()) {
      const Subset s = parse_subset_key(ground, key);
      if (table[s.bits()]) throw InputError("duplicate value for subset " + std::to_string(s.bits()) + " " + to_string(s));
      table[s.bits()] = parse_scalar(value, mode);
    }
  } else {
    throw InputError("\"values\" must be an object or an array");
  }
  std::vector<Scalar> dense;
  dense.reserve(table.size());
  for (std::size_t s = 0; s < table.size(); ++s) {
    if (!table[s])
      throw InputError("missing value for subset " + std::to_string(s) + " " + to_string(Subset(static_cast<std::uint32_t>(s))));
    dense.push_back(std::move(*table[s]));
  }
  return SetFunction(ground, std::move(dense));
}

}  // namespace

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

Scalar parse_scalar(const json& j, Mode mode) {
  try {
    if (j.is_string()) return Scalar::parse(j.get<std::string>(), mode);
    if (j.is_number_integer()) return Scalar::from_int(j.get<long>(), mode);
    if (j.is_number_float()) {
      if (mode == Mode::floating) return Scalar::floating(j.get<double>());
      // dump() prints the shortest text that round-trips the double.
      return Scalar::parse(j.dump(), mode);
    }
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  throw InputError("scalar must be a number or a string, got " + j.dump());
}

Subset parse_subset(const GroundSet& ground, const json& j) {
  if (!j.is_array()) throw InputError("subset must be an array of points, got " + j.dump());
  Subset s;
  for (const json& p : j) {
    int point = -1;
    if (p.is_number_integer()) {
      point = p.get<int>();
      if (point < 0 || point >= ground.size()) throw InputError("point " + p.dump() + " outside the ground set");
    } else if (p.is_string()) {
      try {
        point = ground.point_of(p.get<std::string>());
      } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
      }
    } else {
      throw InputError("subset members must be indices or labels, got " + p.dump());
    }
    s = s.with(point);
  }
  return s;
}

Subset parse_subset_key(const GroundSet& ground, std::string_view key) {
  key = trim(key);
  if (key.empty()) throw InputError("empty subset key");
  auto in_ground = [&](unsigned long long bits) {
    if (bits >= ground.subset_count()) throw InputError("bitmask " + std::string(key) + " outside the ground set");
    return Subset(static_cast<std::uint32_t>(bits));
  };
  if (key.size() > 2 && key[0] == '0' && (key[1] == 'b' || key[1] == 'B')) {
    unsigned long long bits = 0;
    for (char c : key.substr(2)) {
      if (c != '0' && c != '1') throw InputError("malformed binary subset key '" + std::string(key) + "'");
      bits = bits * 2 + static_cast<unsigned>(c - '0');
      if (bits >= (1ULL << 32)) throw InputError("bitmask " + std::string(key) + " too large");
    }
    return in_ground(bits);
  }
  if (std::isdigit(static_cast<unsigned char>(key.front()))) {
    for (char c : key)
      if (!std::isdigit(static_cast<unsigned char>(c))) throw InputError("malformed subset key '" + std::string(key) + "'");
    if (key.size() > 10) throw InputError("bitmask " + std::string(key) + " too large");
    return in_ground(std::stoull(std::string(key)));
  }
  const char open = key.front(), close = key.back();
  if (!((open == '{' && close == '}') || (open == '[' && close == ']')))
    throw InputError("subset key '" + std::string(key) + "' is neither a bitmask nor a point list");
  std::string_view body = trim(key.substr(1, key.size() - 2));
  Subset s;
  while (!body.empty()) {
    const auto comma = body.find(',');
    std::string_view item = trim(body.substr(0, comma));
    if (item.size() >= 2 && item.front() == '"' && item.back() == '"') item = item.substr(1, item.size() - 2);
    if (item.empty()) throw InputError("empty point in subset key '" + std::string(key) + "'");
    try {
      s = s.with(ground.point_of(std::string(item)));
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what());
    }
    if (comma == std::string_view::npos) break;
    body = body.substr(comma + 1);
  }
  return s;
}

json parse_list_argument(std::string_view text) {
  text = trim(text);
  if (!text.empty() && text.front() == '[') {
    try {
      return json::parse(text);
    } catch (const json::parse_error& e) {
      throw InputError("malformed list '" + std::string(text) + "': " + e.what());
    }
  }
  json out = json::array();
  while (!text.empty()) {
    const auto comma = text.find(',');
    std::string_view item = trim(text.substr(0, comma));
    if (item.empty()) throw InputError("empty item in list '" + std::string(text) + "'");
    const bool integral = item.find_first_not_of("+-0123456789") == std::string_view::npos;
    if (integral) {
      try {
        out.push_back(std::stol(std::string(item)));
      } catch (const std::exception&) {
        throw InputError("malformed integer '" + std::string(item) + "'");
      }
    } else {
      out.push_back(std::string(item));
    }
    if (comma == std::string_view::npos) break;
    text = text.substr(comma + 1);
  }
  return out;
}

SetFunction load_instance(const json& j) {
  if (!j.is_object()) throw InputError("instance must be a JSON object");
  const Mode mode = instance_mode(j);
  try {
    SetFunction v = j.contains("generator") ? load_generator(j, mode) : load_values(j, mode);
    if (j.value("normalize", false)) v = v.normalized();
    return v;
  } catch (const InputError&) {
    throw;
  } catch (const json::exception& e) {
    throw InputError(e.what());
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  } catch (const std::domain_error& e) {
    throw InputError(e.what());
  }
}

GeneratingFamily load_family(const json& j) {
  if (!j.is_object()) throw InputError("family must be a JSON object");
  const GroundSet ground = load_ground(j, require_int(j, "n"));
  const json& members = require(j, "family");
  if (!members.is_array()) throw InputError("\"family\" must be an array of subsets");
  std::vector<Subset> sets;
  for (const json& m : members) sets.push_back(parse_subset(ground, m));
  try {
    return GeneratingFamily(ground, std::move(sets));
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

json to_json(const Scalar& x) {
  if (x.is_exact()) return x.str();
  return x.to_double();
}

json to_json(Subset s) { return s.points(); }

json to_json(const VerificationReport& report) {
  json claims = json::array();
  for (const Claim& c : report.claims) {
    json sets = json::array();
    for (Subset s : c.sets) sets.push_back(to_json(s));
    claims.push_back({{"claim", c.name}, {"sets", sets}, {"lhs", to_json(c.lhs)}, {"rhs", to_json(c.rhs)},
                      {"pass", c.pass}});
  }
  json chain = json::array();
  for (Subset s : report.chain) chain.push_back(to_json(s));
  json weights = json::array();
  for (const Scalar& w : report.witness_weights) weights.push_back(to_json(w));
  json out = {{"pass", report.passed()},
              {"base_order", report.base_order},
              {"chain", chain},
              {"witness", {{"carrier", to_json(report.witness_carrier)}, {"weights", weights}}},
              {"claims", claims}};
  if (report.unlisted_violations > 0) out["unlisted_violations"] = report.unlisted_violations;
  return out;
}

}  // namespace subcore
