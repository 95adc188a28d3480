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


// subcore: check, core, choquet, embed and sweep over JSON instances.
// Exit codes: 0 all claims pass, 1 a claim failed, 2 bad input.

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "subcore/choquet.hpp"
#include "subcore/embed.hpp"
#include "subcore/io.hpp"
#include "subcore/measure.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace subcore;

namespace {

constexpr int kPass = 0;
constexpr int kClaimFailure = 1;
constexpr int kInputError = 2;

struct Options {
  bool pretty = false;
  std::string file;
  std::string a_arg;
  std::string b_arg;
  std::string chain_arg;
  std::string f_arg;
  bool risk = false;
  std::size_t samples = 32;
  std::uint64_t seed = 0;
  std::optional<int> recover;
  std::size_t max_violations = 64;
};

std::string label_of(const GroundSet& g, int p) { return g.has_labels() ? g.label(p) : std::to_string(p); }

std::string render(const GroundSet& g, Subset s) {
  std::string out = "{";
  for (int p : s.points()) out += (out.size() > 1 ? "," : "") + label_of(g, p);
  return out + "}";
}

Subset subset_argument(const GroundSet& g, const std::string& text, Subset fallback) {
  if (text.empty()) return fallback;
  if (text == "all") return g.all();
  return parse_subset(g, parse_list_argument(text));
}

std::vector<int> order_argument(const GroundSet& g, const std::string& text) {
  if (text.empty()) return {};
  std::vector<int> order;
  for (const json& item : parse_list_argument(text)) order.push_back(parse_subset(g, json::array({item})).points().front());
  std::vector<bool> seen(static_cast<std::size_t>(g.size()), false);
  for (int p : order) {
    if (seen[static_cast<std::size_t>(p)]) throw InputError("--chain repeats point " + label_of(g, p));
    seen[static_cast<std::size_t>(p)] = true;
  }
  if (order.size() != static_cast<std::size_t>(g.size()))
    throw InputError("--chain must list all " + std::to_string(g.size()) + " points");
  return order;
}

json flags_of(const SetFunction& v) {
  return {{"grounded", is_grounded(v)},
          {"monotone", is_monotone(v)},
          {"submodular", is_submodular(v)},
          {"supermodular", is_supermodular(v)},
          {"modular", is_modular(v)}};
}

void print_report_text(std::ostream& os, const GroundSet& g, const VerificationReport& r) {
  os << "base order:";
  for (int p : r.base_order) os << ' ' << label_of(g, p);
  os << "\nchain:";
  for (Subset s : r.chain) os << ' ' << render(g, s);
  os << "\nwitness on " << render(g, r.witness_carrier) << ":";
  for (int p : r.witness_carrier.points()) os << ' ' << label_of(g, p) << '=' << r.witness_weights[static_cast<std::size_t>(p)].str();
  os << '\n';
  for (const Claim& c : r.claims) {
    os << "  " << (c.pass ? "ok  " : "FAIL") << ' ' << c.name;
    for (Subset s : c.sets) os << ' ' << render(g, s);
    os << "  " << c.lhs.str() << " vs " << c.rhs.str() << '\n';
  }
  if (r.unlisted_violations > 0) os << "  ... " << r.unlisted_violations << " more violations\n";
}

void emit(const Options& opt, const json& out, const std::function<void(std::ostream&)>& text) {
  if (opt.pretty)
    text(std::cout);
  else
    std::cout << out.dump(2) << '\n';
}

int cmd_check(const Options& opt) {
  const SetFunction v = load_instance(read_json_file(opt.file));
  const SetFunction d = dual_transform(v);
  const json flags = flags_of(v);
  const json dual_flags = flags_of(d);
  json dual_values = json::object();
  for (std::uint32_t s = 0; s < d.ground().subset_count(); ++s) dual_values[std::to_string(s)] = to_json(d(Subset(s)));
  const json out = {{"command", "check"}, {"n", v.n()},        {"mode", to_string(v.mode())},
                    {"flags", flags},     {"dual", {{"flags", dual_flags}, {"values", dual_values}}}};
  emit(opt, out, [&](std::ostream& os) {
    os << "n = " << v.n() << ", mode " << to_string(v.mode()) << '\n';
    for (const auto& [k, x] : flags.items()) os << "  " << k << ": " << (x.get<bool>() ? "yes" : "no") << '\n';
    os << "dual:\n";
    for (const auto& [k, x] : dual_flags.items()) os << "  " << k << ": " << (x.get<bool>() ? "yes" : "no") << '\n';
  });
  return kPass;
}

int cmd_core(const Options& opt) {
  const SetFunction v = load_instance(read_json_file(opt.file));
  const GroundSet& g = v.ground();
  const Subset A = subset_argument(g, opt.a_arg, g.all());
  const Subset B = subset_argument(g, opt.b_arg, Subset());
  if (!B.is_subset_of(A)) throw InputError("B " + render(g, B) + " is not within A " + render(g, A));
  VerifyOptions vo;
  vo.base_order = order_argument(g, opt.chain_arg);
  vo.max_listed_violations = opt.max_violations;
  const bool use_inf = !is_submodular(v) && is_supermodular(v);
  const VerificationReport r =
      use_inf ? verify_inf_representation(v, A, B, vo) : verify_sup_representation(v, A, B, vo);
  const bool unique = verify_uniqueness(v, A, B, vo);
  json out = to_json(r);
  out["command"] = "core";
  out["route"] = use_inf ? "inf" : "sup";
  out["A"] = to_json(A);
  out["B"] = to_json(B);
  out["unique"] = unique;
  emit(opt, out, [&](std::ostream& os) {
    os << (use_inf ? "inf" : "sup") << " representation, A = " << render(g, A) << ", B = " << render(g, B) << '\n';
    print_report_text(os, g, r);
    os << "unique: " << (unique ? "yes" : "no") << '\n' << (r.passed() ? "PASS" : "FAIL") << '\n';
  });
  return r.passed() && unique ? kPass : kClaimFailure;
}

PointFunction point_function_argument(const SetFunction& v, const std::string& text) {
  if (text.empty()) throw InputError("--f is required");
  const json list = parse_list_argument(text);
  if (!list.is_array() || list.size() != static_cast<std::size_t>(v.n()))
    throw InputError("--f needs " + std::to_string(v.n()) + " values");
  std::vector<Scalar> values;
  for (const json& x : list) values.push_back(parse_scalar(x, v.mode()));
  return PointFunction(v.ground(), std::move(values));
}

int cmd_choquet(const Options& opt) {
  const SetFunction v = load_instance(read_json_file(opt.file));
  const GroundSet& g = v.ground();
  const PointFunction given = point_function_argument(v, opt.f_arg);
  const PointFunction f = opt.risk ? -given : given;
  const Scalar value = choquet_integral(v, f);
  const VerificationReport r = verify_choquet_sup(v, f, {opt.samples, opt.seed, opt.max_violations});
  json out = to_json(r);
  out["command"] = "choquet";
  out["functional"] = opt.risk ? "risk" : "integral";
  out["value"] = to_json(value);
  out["samples"] = opt.samples;
  out["seed"] = opt.seed;
  emit(opt, out, [&](std::ostream& os) {
    os << (opt.risk ? "rho(f) = v(-f) = " : "v(f) = ") << value.str() << '\n';
    print_report_text(os, g, r);
    os << "samples " << opt.samples << ", seed " << opt.seed << '\n' << (r.passed() ? "PASS" : "FAIL") << '\n';
  });
  return r.passed() ? kPass : kClaimFailure;
}

struct EmbedResult {
  json out;
  bool pass = true;
};

EmbedResult embed_report(const GeneratingFamily& family, std::optional<int> only) {
  const PointFunction f = ternary_embed(family);
  const Chain chain = embed_chain(family);
  json values = json::array();
  for (const Scalar& x : f.values()) values.push_back(to_json(x));
  json sets = json::array();
  for (Subset s : chain.sets()) sets.push_back(to_json(s));
  json atoms = json::array();
  for (Subset a : family.atoms()) atoms.push_back(to_json(a));
  EmbedResult res;
  json recovered = json::array();
  const int m = static_cast<int>(family.size());
  if (only && (*only < 1 || *only > m))
    throw InputError("--recover " + std::to_string(*only) + " outside 1.." + std::to_string(m));
  for (int N = 1; N <= m; ++N) {
    if (only && *only != N) continue;
    const Subset got = recover_generator(f, m, N);
    const bool match = got == family.members()[static_cast<std::size_t>(N - 1)];
    res.pass = res.pass && match;
    recovered.push_back({{"N", N}, {"set", to_json(got)}, {"matches", match}});
  }
  res.out = {{"f", values},
             {"chain", sets},
             {"generates_power_set", family.generates_power_set()},
             {"chain_generates", chain_generates(chain, GenerationCheck::closure)},
             {"atoms", atoms},
             {"recovered", recovered},
             {"pass", res.pass}};
  return res;
}

int cmd_embed(const Options& opt) {
  const GeneratingFamily family = load_family(read_json_file(opt.file));
  const GroundSet& g = family.ground();
  EmbedResult res = embed_report(family, opt.recover);
  res.out["command"] = "embed";
  emit(opt, res.out, [&](std::ostream& os) {
    const PointFunction f = ternary_embed(family);
    os << "f:";
    for (int p = 0; p < g.size(); ++p) os << ' ' << label_of(g, p) << '=' << f(p).str();
    const Chain chain = embed_chain(family);
    os << "\nchain:";
    for (Subset s : chain.sets()) os << ' ' << render(g, s);
    os << "\ngenerates power set: " << (family.generates_power_set() ? "yes" : "no") << "\natoms:";
    for (Subset a : family.atoms()) os << ' ' << render(g, a);
    os << '\n';
    for (const json& r : res.out.at("recovered")) {
      Subset s;
      for (int p : r.at("set")) s = s.with(p);
      os << "  J_" << r.at("N").get<int>() << " = " << render(g, s) << (r.at("matches").get<bool>() ? "" : "  MISMATCH")
         << '\n';
    }
    os << (res.pass ? "PASS" : "FAIL") << '\n';
  });
  return res.pass ? kPass : kClaimFailure;
}

// Every B within A within the ground set. Submodular instances must pass
// the sup route, supermodular ones the inf route, and anything else must
// fail the sup route for some pair.
json sweep_instance(const SetFunction& v, std::size_t max_violations, bool& pass) {
  const json flags = flags_of(v);
  const bool sub = is_submodular(v);
  const bool super = is_supermodular(v);
  VerifyOptions vo;
  vo.max_listed_violations = max_violations;
  std::size_t pairs = 0;
  std::size_t failed_pairs = 0;
  std::size_t not_unique = 0;
  json first_failure;
  for_each_subset(v.ground().all(), [&](Subset A) {
    for_each_subset(A, [&](Subset B) {
      ++pairs;
      const VerificationReport r =
          !sub && super ? verify_inf_representation(v, A, B, vo) : verify_sup_representation(v, A, B, vo);
      if (!r.passed()) {
        if (failed_pairs++ == 0) {
          const Claim* c = r.first_failure();
          first_failure = {{"A", to_json(A)}, {"B", to_json(B)}, {"claim", c->name}};
        }
      }
      if (!verify_uniqueness(v, A, B, vo)) ++not_unique;
    });
  });
  std::string expectation;
  if (sub || super) {
    expectation = sub ? "sup representation holds" : "inf representation holds";
    pass = failed_pairs == 0 && not_unique == 0;
  } else {
    expectation = "non-submodular instance is detected";
    pass = failed_pairs > 0 && not_unique == 0;
  }
  json out = {{"kind", "instance"},   {"flags", flags},          {"pairs", pairs},
              {"failed_pairs", failed_pairs}, {"not_unique", not_unique}, {"expectation", expectation},
              {"pass", pass}};
  if (failed_pairs > 0) out["first_failure"] = first_failure;
  return out;
}

int cmd_sweep(const Options& opt) {
  if (!fs::is_directory(opt.file)) throw InputError(opt.file + " is not a directory");
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(opt.file))
    if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  json results = json::array();
  bool all_pass = true;
  bool input_error = false;
  for (const fs::path& path : files) {
    json row = {{"file", path.filename().string()}};
    try {
      const json j = read_json_file(path);
      bool pass = true;
      if (j.contains("family")) {
        EmbedResult res = embed_report(load_family(j), std::nullopt);
        row.update({{"kind", "family"}, {"pass", res.pass}, {"generates_power_set", res.out.at("generates_power_set")}});
        pass = res.pass;
      } else {
        row.update(sweep_instance(load_instance(j), opt.max_violations, pass));
      }
      all_pass = all_pass && pass;
    } catch (const InputError& e) {
      row.update({{"kind", "error"}, {"error", e.what()}, {"pass", false}});
      input_error = true;
    }
    results.push_back(row);
  }
  const json out = {{"command", "sweep"}, {"directory", opt.file}, {"files", results},
                    {"pass", all_pass && !input_error}};
  emit(opt, out, [&](std::ostream& os) {
    for (const json& row : results) {
      os << (row.at("pass").get<bool>() ? "PASS " : "FAIL ") << row.at("file").get<std::string>();
      if (row.contains("expectation")) os << "  " << row.at("expectation").get<std::string>() << ", " << row.at("pairs") << " pairs";
      if (row.contains("error")) os << "  " << row.at("error").get<std::string>();
      os << '\n';
    }
  });
  if (input_error) return kInputError;
  return all_pass ? kPass : kClaimFailure;
}

void apply_epsilon_override() {
  const char* text = std::getenv("SUBCORE_EPSILON");
  if (text == nullptr || *text == '\0') return;
  char* end = nullptr;
  const double eps = std::strtod(text, &end);
  if (end == text || *end != '\0' || !(eps >= 0)) throw InputError(std::string("bad SUBCORE_EPSILON '") + text + "'");
  set_float_epsilon(eps);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Chain measures, cores and Choquet integrals of set functions"};
  app.require_subcommand(1);
  Options opt;
  app.add_flag("--pretty", opt.pretty, "Human-readable text instead of JSON");
  app.add_option("--max-violations", opt.max_violations, "Violations listed per report");

  auto* check = app.add_subcommand("check", "Predicates of an instance and of its dual");
  check->add_option("instance", opt.file)->required();

  auto* core = app.add_subcommand("core", "Verify the chain-measure witness for a pair B within A");
  core->add_option("instance", opt.file)->required();
  core->add_option("-A,--A", opt.a_arg, "Carrier A as a point list, or 'all' (default)");
  core->add_option("-B,--B", opt.b_arg, "Set B within A as a point list (default empty)");
  core->add_option("--chain", opt.chain_arg, "Base chain as a permutation of all points");

  auto* choquet = app.add_subcommand("choquet", "Choquet integral and its attaining chain measure");
  choquet->add_option("instance", opt.file)->required();
  choquet->add_option("--f", opt.f_arg, "One value per point, e.g. 3,1,2")->required();
  choquet->add_flag("--risk", opt.risk, "Evaluate rho(f) = v(-f)");
  choquet->add_option("--samples", opt.samples, "Core samples for the domination check");
  choquet->add_option("--seed", opt.seed, "Seed for core sampling");

  auto* embed = app.add_subcommand("embed", "Ternary embedding of a family of sets");
  embed->add_option("family", opt.file)->required();
  embed->add_option("--recover", opt.recover, "Recover only J_N");

  auto* sweep = app.add_subcommand("sweep", "Verify every instance and family file in a directory");
  sweep->add_option("directory", opt.file)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    apply_epsilon_override();
    if (*check) return cmd_check(opt);
    if (*core) return cmd_core(opt);
    if (*choquet) return cmd_choquet(opt);
    if (*embed) return cmd_embed(opt);
    if (*sweep) return cmd_sweep(opt);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}
