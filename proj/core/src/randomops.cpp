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

#include "kaprekar/randomops.hpp"

#include <unordered_map>

#include "json.hpp"
#include "kaprekar/dynamics.hpp"
#include "kaprekar/errors.hpp"
#include "kaprekar/operators.hpp"

namespace kaprekar {

DigitString fixed_random_step(std::uint64_t seed, const DigitString& ds) {
  const std::uint64_t r = mix64(seed ^ ds.to_integer()) % pow10(ds.width());
  return DigitString::from_integer(r, ds.width());
}

std::string_view to_string(WalkMode mode) {
  return mode == WalkMode::kFixed ? "fixed" : "fresh";
}

WalkMode walk_mode_from_string(std::string_view name) {
  if (name == "fixed") return WalkMode::kFixed;
  if (name == "fresh") return WalkMode::kFresh;
  throw Error(ErrorCode::kValidationError,
              "walk mode must be fixed or fresh, got '" + std::string(name) +
                  "'");
}

WalkReport fixed_random_walk(std::uint64_t seed, int width,
                             std::uint64_t max_steps) {
  const OperatorSpec spec = OperatorSpec::fixed_random(width, seed);
  SplitMixStream stream(seed);
  const DigitString start =
      DigitString::from_integer(stream.next() % pow10(width), width);
  const Trajectory traj = iterate(spec, start, max_steps);

  WalkReport report;
  report.mode = WalkMode::kFixed;
  report.seed = seed;
  report.width = width;
  report.steps_taken = traj.states.size();
  report.first_repeat_index = traj.states.size();
  report.first_occurrence_index = traj.preperiod;
  report.repeated_value = traj.states[traj.preperiod].to_integer();
  report.repeat_consistent = true;
  report.trajectory_summary = TrajectorySummary{traj.preperiod, traj.period};
  return report;
}

WalkReport fresh_random_walk(std::uint64_t seed, int width,
                             std::uint64_t max_steps) {
  if (max_steps < 1) {
    throw Error(ErrorCode::kValidationError, "max_steps must be >= 1");
  }
  if (width < 1 || width > kMaxWidth) {
    throw Error(ErrorCode::kValidationError,
                "width must be in 1.." + std::to_string(kMaxWidth));
  }
  const std::uint64_t modulus = pow10(width);
  SplitMixStream stream(seed);

  WalkReport report;
  report.mode = WalkMode::kFresh;
  report.seed = seed;
  report.width = width;

  std::vector<std::uint64_t> values{stream.next() % modulus};
  std::unordered_map<std::uint64_t, std::uint64_t> first_seen{{values[0], 0}};
  for (std::uint64_t t = 1; t <= max_steps; ++t) {
    const std::uint64_t v = stream.next() % modulus;
    report.steps_taken = t;
    auto [it, inserted] = first_seen.emplace(v, t);
    if (inserted) {
      values.push_back(v);
      continue;
    }
    // Draw one more successor and compare with the historical one.
    const std::uint64_t after = stream.next() % modulus;
    report.steps_taken = t + 1;
    report.first_repeat_index = t;
    report.first_occurrence_index = it->second;
    report.repeated_value = v;
    report.repeat_consistent = after == values[it->second + 1];
    break;
  }
  return report;
}

WalkReport random_walk(WalkMode mode, std::uint64_t seed, int width,
                       std::uint64_t max_steps) {
  return mode == WalkMode::kFixed ? fixed_random_walk(seed, width, max_steps)
                                  : fresh_random_walk(seed, width, max_steps);
}

std::string to_json(const WalkReport& report) {
  nlohmann::json obj;
  obj["mode"] = std::string(to_string(report.mode));
  obj["seed"] = report.seed;
  obj["width"] = report.width;
  obj["steps_taken"] = report.steps_taken;
  auto opt = [](const auto& v) -> nlohmann::json {
    return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
  };
  obj["first_repeat_index"] = opt(report.first_repeat_index);
  obj["first_occurrence_index"] = opt(report.first_occurrence_index);
  obj["repeated_value"] = opt(report.repeated_value);
  obj["repeat_consistent"] = opt(report.repeat_consistent);
  if (report.trajectory_summary) {
    obj["trajectory_summary"] = {
        {"preperiod", report.trajectory_summary->preperiod},
        {"period", report.trajectory_summary->period}};
  } else {
    obj["trajectory_summary"] = nullptr;
  }
  return obj.dump();
}

WalkReport walk_report_from_json(std::string_view text) {
  nlohmann::json obj;
  try {
    obj = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::kParseError,
                "malformed walk report at byte " + std::to_string(e.byte));
  }
  try {
    WalkReport r;
    r.mode = walk_mode_from_string(obj.at("mode").get<std::string>());
    r.seed = obj.at("seed").get<std::uint64_t>();
    r.width = obj.at("width").get<int>();
    r.steps_taken = obj.at("steps_taken").get<std::uint64_t>();
    auto read = [&](const char* key, auto& dst) {
      const auto& v = obj.at(key);
      if (!v.is_null()) dst = v.get<typename std::decay_t<decltype(dst)>::value_type>();
    };
    read("first_repeat_index", r.first_repeat_index);
    read("first_occurrence_index", r.first_occurrence_index);
    read("repeated_value", r.repeated_value);
    read("repeat_consistent", r.repeat_consistent);
    const auto& ts = obj.at("trajectory_summary");
    if (!ts.is_null()) {
      r.trajectory_summary =
          TrajectorySummary{ts.at("preperiod").get<std::uint64_t>(),
                            ts.at("period").get<std::uint64_t>()};
    }
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kValidationError,
                std::string("bad walk report: ") + e.what());
  }
}

RandomDemoSummary run_random_demo(WalkMode mode, std::uint64_t base_seed,
                                  int width, std::uint64_t walks,
                                  std::uint64_t max_steps) {
  RandomDemoSummary summary;
  summary.mode = mode;
  summary.base_seed = base_seed;
  summary.width = width;
  summary.walks = walks;
  summary.max_steps = max_steps;
  for (std::uint64_t i = 0; i < walks; ++i) {
    const WalkReport r = random_walk(mode, base_seed + i, width, max_steps);
    if (r.first_repeat_index) ++summary.repeats_found;
    if (r.repeat_consistent.value_or(false)) ++summary.consistent_repeats;
    if (r.trajectory_summary) {
      summary.max_rho_length =
          std::max(summary.max_rho_length, r.trajectory_summary->preperiod +
                                               r.trajectory_summary->period);
    }
  }
  return summary;
}

}  // namespace kaprekar
