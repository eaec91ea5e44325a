// Copyright 2026 The kaprekar Authors. All Rights Reserved.
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

#include "cli.hpp"

#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "kaprekar/atlas.hpp"
#include "kaprekar/dynamics.hpp"
#include "kaprekar/errors.hpp"
#include "kaprekar/operators.hpp"
#include "kaprekar/randomops.hpp"

namespace kaprekar::cli {
namespace {

// Raised for CLI-level validation failures (exit 1).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct OperatorFlags {
  std::string inline_spec;
  std::string spec_file;
};

struct CommonFlags {
  std::string format = "text";
  bool timestamps = false;
};

void add_operator_flags(CLI::App* cmd, OperatorFlags& f) {
  cmd->add_option("--op", f.inline_spec,
                  "Inline operator spec, e.g. '{\"kind\":\"kaprekar\","
                  "\"width\":4}'. Wins over --op-file when both are given.");
  cmd->add_option("--op-file", f.spec_file,
                  "Path to a file holding an operator spec");
}

void add_format_flags(CLI::App* cmd, CommonFlags& f, bool csv = true) {
  std::vector<std::string> formats{"text", "json"};
  if (csv) formats.emplace_back("csv");
  cmd->add_option("--format", f.format, "Output format")
      ->check(CLI::IsMember(formats))
      ->capture_default_str();
  cmd->add_flag("--timestamps", f.timestamps,
                "Add a generation timestamp to the output");
}

OperatorSpec load_operator(const OperatorFlags& f) {
  if (!f.inline_spec.empty()) return parse_operator_spec(f.inline_spec);
  if (!f.spec_file.empty()) {
    std::ifstream in(f.spec_file);
    if (!in) throw UsageError("--op-file: cannot read '" + f.spec_file + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_operator_spec(buf.str());
  }
  throw UsageError("an operator is required: pass --op or --op-file");
}

DigitString parse_seed(const std::string& text, int width) {
  if (text.empty() || text.size() > 20 ||
      text.find_first_not_of("0123456789") != std::string::npos) {
    throw UsageError("--seed: '" + text + "' is not a nonnegative integer");
  }
  std::uint64_t value = 0;
  try {
    value = std::stoull(text);
  } catch (const std::exception&) {
    throw UsageError("--seed: '" + text + "' is out of range");
  }
  if (value >= pow10(width)) {
    throw UsageError("--seed: seed exceeds width (" + text +
                     " does not fit in " + std::to_string(width) +
                     " digits)");
  }
  return DigitString::from_integer(value, width);
}

std::string utc_timestamp() {
  const std::time_t now =
      std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

int cmd_ops(const CommonFlags& flags, std::ostream& out) {
  if (flags.format == "json") {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& info : operator_catalog()) {
      arr.push_back({{"kind", std::string(info.name)},
                     {"parameters", std::string(info.parameters)},
                     {"description", std::string(info.description)},
                     {"shrink_policy", supports_shrink(info.kind)}});
    }
    out << arr.dump(2) << '\n';
    return kExitOk;
  }
  for (const auto& info : operator_catalog()) {
    out << std::left << std::setw(16) << info.name << "  "
        << info.description << '\n';
    out << std::string(18, ' ') << "params: "
        << (info.parameters.empty() ? "(none)" : info.parameters);
    if (supports_shrink(info.kind)) out << "; zero_policy pad|shrink";
    out << '\n';
  }
  return kExitOk;
}

int cmd_run(const OperatorFlags& op, const CommonFlags& flags,
            const std::string& seed_text, std::optional<std::uint64_t> max_steps,
            std::ostream& out) {
  const OperatorSpec spec = load_operator(op);
  if (seed_text.empty()) throw UsageError("run requires --seed");
  const DigitString seed = parse_seed(seed_text, spec.width());
  const Trajectory traj = iterate(spec, seed, max_steps);
  if (flags.format == "json") {
    auto obj = nlohmann::ordered_json::parse(to_json(traj));
    if (flags.timestamps) obj["generated_at"] = utc_timestamp();
    out << obj.dump(2) << '\n';
  } else if (flags.format == "csv") {
    out << to_csv(traj);
  } else {
    out << render_text(traj);
    if (flags.timestamps) out << "generated_at=" << utc_timestamp() << '\n';
  }
  return kExitOk;
}

struct AtlasFlags {
  std::string dot_path;
  bool dot_full = false;
  unsigned threads = 0;
  int max_width = kDefaultAtlasMaxWidth;
};

void write_file(const std::string& path, const std::string& text) {
  std::ofstream file(path);
  if (!file) throw UsageError("--dot: cannot write '" + path + "'");
  file << text;
}

int cmd_atlas(const OperatorFlags& op, const CommonFlags& flags,
              const AtlasFlags& atlas, std::ostream& out) {
  const OperatorSpec spec = load_operator(op);
  AtlasOptions options;
  options.threads = atlas.threads;
  options.max_width = atlas.max_width;
  const SuccessorTable table = build_successors(spec, options);
  const AtlasReport report = analyze(table);

  if (!atlas.dot_path.empty()) {
    std::string dot = report_to_dot(report);
    if (atlas.dot_full) dot += state_graph_to_dot(table);
    write_file(atlas.dot_path, dot);
  }
  if (flags.format == "json") {
    out << report_to_json(report, flags.timestamps ? utc_timestamp() : "");
  } else if (flags.format == "csv") {
    out << report_to_csv(report);
  } else {
    out << report_to_text(report);
    if (flags.timestamps) out << "generated_at=" << utc_timestamp() << '\n';
  }
  return kExitOk;
}

struct DemoFlags {
  std::string mode = "both";
  int width = 3;
  std::uint64_t seed = 0;
  std::uint64_t walks = 1000;
  std::optional<std::uint64_t> max_steps;
};

int cmd_random_demo(const CommonFlags& flags, const DemoFlags& demo,
                    std::ostream& out) {
  if (demo.width < 1 || demo.width > kMaxWidth) {
    throw UsageError("--width must be in 1.." + std::to_string(kMaxWidth));
  }
  std::vector<WalkMode> modes;
  if (demo.mode == "both" || demo.mode == "fixed") modes.push_back(WalkMode::kFixed);
  if (demo.mode == "both" || demo.mode == "fresh") modes.push_back(WalkMode::kFresh);
  const std::uint64_t bound = pow10(demo.width);
  const std::uint64_t max_steps = demo.max_steps.value_or(bound + 1);

  std::vector<RandomDemoSummary> results;
  for (WalkMode m : modes) {
    results.push_back(
        run_random_demo(m, demo.seed, demo.width, demo.walks, max_steps));
  }

  if (flags.format == "json") {
    nlohmann::ordered_json obj;
    if (flags.timestamps) obj["generated_at"] = utc_timestamp();
    obj["pigeonhole_bound"] = bound;
    obj["expected_consistent_fraction"] = 1.0 / static_cast<double>(bound);
    auto& arr = obj["demos"] = nlohmann::ordered_json::array();
    for (const auto& r : results) {
      arr.push_back({{"mode", std::string(to_string(r.mode))},
                     {"base_seed", r.base_seed},
                     {"width", r.width},
                     {"walks", r.walks},
                     {"max_steps", r.max_steps},
                     {"repeats_found", r.repeats_found},
                     {"consistent_repeats", r.consistent_repeats},
                     {"consistent_fraction", r.consistent_fraction()},
                     {"max_rho_length", r.max_rho_length}});
    }
    out << obj.dump(2) << '\n';
  } else if (flags.format == "csv") {
    out << "schema=1\n";
    out << "mode,base_seed,width,walks,max_steps,repeats_found,"
           "consistent_repeats,consistent_fraction,max_rho_length\n";
    for (const auto& r : results) {
      out << to_string(r.mode) << ',' << r.base_seed << ',' << r.width << ','
          << r.walks << ',' << r.max_steps << ',' << r.repeats_found << ','
          << r.consistent_repeats << ',' << std::fixed << std::setprecision(6)
          << r.consistent_fraction() << ',' << r.max_rho_length << '\n';
    }
  } else {
    for (const auto& r : results) {
      out << "mode=" << to_string(r.mode) << " width=" << r.width
          << " walks=" << r.walks << " base_seed=" << r.base_seed
          << " max_steps=" << r.max_steps << '\n';
      out << "  repeats_found=" << r.repeats_found;
      if (r.mode == WalkMode::kFixed) {
        out << " max_rho_length=" << r.max_rho_length
            << " pigeonhole_bound=" << bound;
      } else {
        out << " consistent_repeats=" << r.consistent_repeats
            << " consistent_fraction=" << std::fixed << std::setprecision(6)
            << r.consistent_fraction() << " expected="
            << 1.0 / static_cast<double>(bound);
        out.unsetf(std::ios::floatfield);
      }
      out << '\n';
    }
    if (flags.timestamps) out << "generated_at=" << utc_timestamp() << '\n';
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Iterated digit-string operators: trajectories, exhaustive "
               "atlases and random-operator experiments."};
  app.name("kaprekar");
  app.require_subcommand(1);

  CommonFlags common;
  OperatorFlags op;

  auto* ops = app.add_subcommand("ops", "List operator kinds and parameters");
  add_format_flags(ops, common, /*csv=*/false);

  std::string seed_text;
  std::optional<std::uint64_t> max_steps;
  auto* run_cmd = app.add_subcommand("run", "Iterate one operator from a seed");
  add_operator_flags(run_cmd, op);
  add_format_flags(run_cmd, common);
  run_cmd->add_option("--seed", seed_text,
                      "Start state as a decimal integer, zero-padded to the "
                      "operator width");
  run_cmd->add_option("--max-steps", max_steps,
                      "Abort after this many applications")
      ->check(CLI::PositiveNumber);

  AtlasFlags atlas_flags;
  std::string atlas_seed;
  auto* atlas_cmd =
      app.add_subcommand("atlas", "Analyze the operator over all 10^k states");
  add_operator_flags(atlas_cmd, op);
  add_format_flags(atlas_cmd, common);
  atlas_cmd->add_option("--dot", atlas_flags.dot_path,
                        "Write the condensed cycle graph as DOT to this path");
  atlas_cmd->add_flag("--dot-full", atlas_flags.dot_full,
                      "Also emit every state and edge in the DOT file "
                      "(width <= 3)");
  atlas_cmd->add_option("--threads", atlas_flags.threads,
                        "Worker threads for table construction "
                        "(0 = hardware concurrency)");
  atlas_cmd->add_option("--max-width", atlas_flags.max_width,
                        "Largest width to accept (hard cap 9)")
      ->check(CLI::Range(1, kHardAtlasMaxWidth))
      ->capture_default_str();
  atlas_cmd->add_option("--seed", atlas_seed,
                        "Not accepted: the atlas covers every state");
  atlas_cmd->add_option("--max-steps", max_steps,
                        "Ignored by atlas (cycles are found exhaustively)");

  DemoFlags demo;
  auto* demo_cmd = app.add_subcommand(
      "random-demo", "Fixed pseudorandom function vs fresh random draws");
  add_format_flags(demo_cmd, common);
  demo_cmd->add_option("--mode", demo.mode, "fixed, fresh or both")
      ->check(CLI::IsMember({"fixed", "fresh", "both"}))
      ->capture_default_str();
  demo_cmd->add_option("--width", demo.width, "Digit width k")
      ->capture_default_str();
  demo_cmd->add_option("--seed", demo.seed,
                       "Base seed; walk i uses seed + i")
      ->capture_default_str();
  demo_cmd->add_option("--walks", demo.walks, "Number of walks per mode")
      ->capture_default_str();
  demo_cmd->add_option("--max-steps", demo.max_steps,
                       "Step budget per walk (default 10^k + 1)")
      ->check(CLI::PositiveNumber);

  std::vector<const char*> argv{"kaprekar"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitInvalid;
  }

  try {
    if (ops->parsed()) return cmd_ops(common, out);
    if (run_cmd->parsed()) {
      return cmd_run(op, common, seed_text, max_steps, out);
    }
    if (atlas_cmd->parsed()) {
      if (!atlas_seed.empty()) {
        throw UsageError("--seed: atlas does not take a seed state");
      }
      return cmd_atlas(op, common, atlas_flags, out);
    }
    if (demo_cmd->parsed()) return cmd_random_demo(common, demo, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.is_resource_error() ? kExitResource : kExitInvalid;
  }
  return kExitInvalid;
}

}  // namespace kaprekar::cli
