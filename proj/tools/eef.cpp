// Copyright 2026 The eef authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "eef/eef.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitPropertyFailed = 1;
constexpr int kExitInputError = 2;
constexpr int kExitLimit = 3;

struct CommonFlags {
  std::string out;
  bool quiet = false;
  std::optional<std::string> fairness;
};

void emit(const CommonFlags& flags, const std::string& payload) {
  if (flags.out.empty())
    std::cout << payload;
  else
    eef::write_text_file(flags.out, payload);
}

void diagnose(const CommonFlags& flags, const std::string& message) {
  if (!flags.quiet) std::cerr << "eef: " << message << "\n";
}

eef::Instance load_instance(const std::string& path, const CommonFlags& flags) {
  eef::Instance inst = eef::parse_instance(eef::read_text_file(path));
  if (flags.fairness) {
    auto f = eef::fairness_from_string(*flags.fairness);
    if (!f)
      throw eef::ValidationError(eef::errc::malformed_document, "--fairness",
                                 "expected one of EF, EF1, EFX");
    inst = inst.with_fairness(*f);
  }
  return inst;
}

eef::Int parse_cap_flag(const std::string& text, const char* what) {
  auto v = eef::parse_decimal(text);
  if (!v || *v < 1)
    throw eef::ValidationError(eef::errc::invalid_range, what,
                               "expected a positive decimal integer");
  return *v;
}

// LO:HI with arbitrary-precision decimal endpoints.
std::pair<eef::Int, eef::Int> parse_range_flag(const std::string& text, const char* what) {
  const auto colon = text.find(':');
  if (colon == std::string::npos)
    throw eef::ValidationError(eef::errc::invalid_range, what, "expected LO:HI");
  auto lo = eef::parse_decimal(text.substr(0, colon));
  auto hi = eef::parse_decimal(text.substr(colon + 1));
  if (!lo || !hi)
    throw eef::ValidationError(eef::errc::invalid_range, what, "expected LO:HI integers");
  return {*lo, *hi};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact decision tool for envy-free Pareto-efficient allocation"};
  app.require_subcommand(1);

  CommonFlags flags;
  eef::EngineOptions engine_options;
  eef::BruteOptions brute_options;
  if (const char* env_cap = std::getenv("EEF_ENUM_CAP")) {
    try {
      brute_options.cap = parse_cap_flag(env_cap, "EEF_ENUM_CAP");
    } catch (const eef::ValidationError&) {
      std::cerr << "eef: ignoring invalid EEF_ENUM_CAP\n";
    }
  }

  std::string instance_path, allocation_path;
  std::string enum_cap_flag;

  auto add_common = [&](CLI::App* cmd, bool with_limits) {
    cmd->add_option("--out", flags.out, "write the result document to this path");
    cmd->add_flag("--quiet", flags.quiet, "suppress stderr diagnostics");
    cmd->add_option("--fairness", flags.fairness,
                    "override the instance's fairness notion (EF, EF1, EFX)");
    if (with_limits) {
      cmd->add_option("--iterations", engine_options.iteration_limit,
                      "engine iteration cap");
      cmd->add_option("--node-limit", engine_options.limits.node_limit,
                      "branch-and-bound node cap per solve");
      cmd->add_option("--pivot-limit", engine_options.limits.pivot_limit,
                      "simplex pivot cap per solve");
    }
  };

  CLI::App* solve = app.add_subcommand("solve", "decide EEF existence");
  solve->add_option("instance", instance_path, "instance document")->required();
  add_common(solve, true);

  CLI::App* verify = app.add_subcommand("verify", "check a concrete allocation");
  verify->add_option("instance", instance_path, "instance document")->required();
  verify->add_option("allocation", allocation_path, "allocation document")->required();
  add_common(verify, true);

  CLI::App* brute = app.add_subcommand("brute", "exhaustive decision with census");
  brute->add_option("instance", instance_path, "instance document")->required();
  brute->add_option("--enum-cap", enum_cap_flag,
                    "refuse enumerations longer than this (also EEF_ENUM_CAP)");
  brute->add_option("--jobs", brute_options.jobs, "worker threads for enumeration");
  add_common(brute, false);

  CLI::App* gen = app.add_subcommand("gen", "emit a seeded pseudo-random instance");
  eef::GenParams gen_params;
  std::uint64_t seed = 0;
  std::string mult_range = "1:1", util_range = "0:1", gen_fairness = "EF";
  gen->add_option("--agents", gen_params.agents, "number of agents")->required();
  gen->add_option("--items", gen_params.items, "number of item types")->required();
  gen->add_option("--mult-range", mult_range, "multiplicity range LO:HI");
  gen->add_option("--util-range", util_range, "utility range LO:HI");
  gen->add_option("--seed", seed, "PRNG seed")->required();
  gen->add_option("--fairness", gen_fairness, "fairness notion for the instance");
  gen->add_option("--out", flags.out, "write the document to this path");
  gen->add_flag("--quiet", flags.quiet, "suppress stderr diagnostics");

  CLI::App* exp = app.add_subcommand("export", "write the parametric system documents");
  std::string out_prefix = "pilp";
  exp->add_option("instance", instance_path, "instance document")->required();
  exp->add_option("--out-prefix", out_prefix, "prefix for the emitted files");
  exp->add_flag("--quiet", flags.quiet, "suppress stderr diagnostics");
  exp->add_option("--fairness", flags.fairness, "override the instance's fairness notion");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
    app.exit(e);
    return kExitInputError;
  }

  try {
    if (solve->parsed()) {
      const eef::Instance inst = load_instance(instance_path, flags);
      const eef::Verdict verdict = eef::solve_eef(inst, engine_options);
      emit(flags, eef::serialize_verdict(verdict));
      diagnose(flags, std::string("answer ") + (verdict.yes() ? "YES" : "NO") + " after " +
                          std::to_string(verdict.iterations) + " iterations");
      return kExitOk;
    }
    if (verify->parsed()) {
      const eef::Instance inst = load_instance(instance_path, flags);
      const eef::Allocation alloc =
          eef::parse_allocation(eef::read_text_file(allocation_path));
      eef::validate_allocation(inst, alloc);
      const eef::VerifyReport report = eef::verify(inst, alloc, engine_options.limits);
      emit(flags, eef::serialize_report(report));
      diagnose(flags, std::string("fairness ") + (report.fair ? "pass" : "fail") +
                          ", efficiency " + (report.efficient ? "pass" : "fail"));
      return report.ok() ? kExitOk : kExitPropertyFailed;
    }
    if (brute->parsed()) {
      if (!enum_cap_flag.empty())
        brute_options.cap = parse_cap_flag(enum_cap_flag, "--enum-cap");
      const eef::Instance inst = load_instance(instance_path, flags);
      const eef::BruteResult result = eef::brute_eef(inst, brute_options);
      emit(flags, eef::serialize_verdict(result.verdict) +
                      eef::serialize_census(result.census));
      diagnose(flags, std::string("answer ") + (result.verdict.yes() ? "YES" : "NO") +
                          " over " + eef::to_decimal(result.census.allocations) +
                          " allocations");
      return kExitOk;
    }
    if (gen->parsed()) {
      std::tie(gen_params.mult_lo, gen_params.mult_hi) =
          parse_range_flag(mult_range, "--mult-range");
      std::tie(gen_params.util_lo, gen_params.util_hi) =
          parse_range_flag(util_range, "--util-range");
      auto f = eef::fairness_from_string(gen_fairness);
      if (!f)
        throw eef::ValidationError(eef::errc::malformed_document, "--fairness",
                                   "expected one of EF, EF1, EFX");
      gen_params.fairness = *f;
      emit(flags, eef::serialize_instance(eef::random_instance(gen_params, seed)));
      return kExitOk;
    }
    if (exp->parsed()) {
      const eef::Instance inst = load_instance(instance_path, flags);
      const eef::PilpSystem sys = eef::build_system(inst);
      const std::string a_file = out_prefix + ".A.model";
      const std::string q_file = out_prefix + ".Q.model";
      const std::string manifest_file = out_prefix + ".manifest.json";
      eef::write_text_file(a_file, eef::write_model(eef::a_system_model(sys)));
      eef::write_text_file(q_file, eef::write_model(sys.q));
      eef::write_text_file(manifest_file,
                           eef::serialize_export_manifest(sys, a_file, q_file));
      diagnose(flags, "wrote " + a_file + ", " + q_file + ", " + manifest_file);
      return kExitOk;
    }
  } catch (const eef::CapExceeded& e) {
    diagnose(flags, e.what());
    return kExitLimit;
  } catch (const eef::LimitError& e) {
    diagnose(flags, e.what());
    return kExitLimit;
  } catch (const eef::ValidationError& e) {
    diagnose(flags, e.what());
    return kExitInputError;
  } catch (const std::exception& e) {
    diagnose(flags, e.what());
    return kExitInputError;
  }
  return kExitInputError;
}
