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

#include "kaprekar/dynamics.hpp"

#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "json.hpp"
#include "kaprekar/errors.hpp"

namespace kaprekar {
namespace {

Outcome outcome_for(const std::vector<DigitString>& states,
                    std::size_t preperiod, std::size_t period) {
  if (period != 1) return Outcome::kReachedCycle;
  return states[preperiod].to_integer() == 0 ? Outcome::kReachedZeroConstant
                                             : Outcome::kReachedConstant;
}

[[noreturn]] void malformed(const std::string& why) {
  throw Error(ErrorCode::kMalformedTrajectory, why);
}

}  // namespace

std::string_view to_string(Outcome outcome) {
  switch (outcome) {
    case Outcome::kReachedZeroConstant: return "reached_zero_constant";
    case Outcome::kReachedConstant: return "reached_constant";
    case Outcome::kReachedCycle: return "reached_cycle";
  }
  return "unknown";
}

Trajectory iterate(const OperatorSpec& spec, const DigitString& seed,
                   std::optional<std::uint64_t> max_steps) {
  const std::uint64_t budget = max_steps.value_or(spec.state_count() + 1);
  Trajectory traj{spec, {seed}, 0, 1, Outcome::kReachedCycle};
  std::unordered_map<std::uint64_t, std::size_t> first_seen;
  first_seen.emplace(seed.to_integer(), 0);

  DigitString current = seed;
  for (std::uint64_t steps = 0;; ++steps) {
    if (steps == budget) {
      throw Error(ErrorCode::kStepBudgetExceeded,
                  "no repeat within " + std::to_string(budget) +
                      " steps from seed " + seed.to_string());
    }
    current = apply(spec, current);
    auto [it, inserted] =
        first_seen.emplace(current.to_integer(), traj.states.size());
    if (!inserted) {
      traj.preperiod = it->second;
      traj.period = traj.states.size() - it->second;
      break;
    }
    traj.states.push_back(current);
  }
  traj.outcome = outcome_for(traj.states, traj.preperiod, traj.period);
  return traj;
}

Outcome classify(const Trajectory& traj) {
  const auto& states = traj.states;
  if (states.empty()) malformed("trajectory has no states");
  if (traj.period < 1) malformed("period must be >= 1");
  if (traj.preperiod + traj.period != states.size()) {
    malformed("preperiod + period = " +
              std::to_string(traj.preperiod + traj.period) +
              " but trajectory holds " + std::to_string(states.size()) +
              " states");
  }
  if (states.size() > traj.spec.state_count()) {
    malformed("trajectory longer than the state space");
  }
  std::unordered_set<std::uint64_t> seen;
  for (std::size_t t = 0; t < states.size(); ++t) {
    if (!seen.insert(states[t].to_integer()).second) {
      malformed("state " + states[t].to_string() + " repeats at index " +
                std::to_string(t));
    }
    const DigitString next = apply(traj.spec, states[t]);
    const bool last = t + 1 == states.size();
    const DigitString& expected = last ? states[traj.preperiod] : states[t + 1];
    if (next.to_integer() != expected.to_integer()) {
      malformed("f(" + states[t].to_string() + ") = " + next.to_string() +
                ", trajectory has " + expected.to_string());
    }
  }
  const Outcome outcome = outcome_for(states, traj.preperiod, traj.period);
  if (outcome != traj.outcome) {
    malformed("outcome label " + std::string(to_string(traj.outcome)) +
              " disagrees with period " + std::to_string(traj.period));
  }
  return outcome;
}

std::string render_text(const Trajectory& traj) {
  std::ostringstream out;
  for (const auto& s : traj.states) out << s.to_string() << '\n';
  out << "-> " << traj.states[traj.preperiod].to_string()
      << " (repeats index " << traj.preperiod << ")\n";
  out << "preperiod=" << traj.preperiod << " period=" << traj.period
      << " outcome=" << to_string(traj.outcome);
  if (traj.spec.zero_policy() == ZeroPolicy::kShrink) {
    out << " state_key=integer";
  }
  out << '\n';
  return out.str();
}

std::string to_json(const Trajectory& traj) {
  nlohmann::json obj;
  obj["operator"] = nlohmann::json::parse(serialize(traj.spec));
  obj["seed"] = traj.seed().to_string();
  auto& states = obj["states"] = nlohmann::json::array();
  for (const auto& s : traj.states) states.push_back(s.to_string());
  obj["preperiod"] = traj.preperiod;
  obj["period"] = traj.period;
  obj["outcome"] = std::string(to_string(traj.outcome));
  obj["state_key"] = "integer";
  return obj.dump(2) + "\n";
}

std::string to_csv(const Trajectory& traj) {
  std::ostringstream out;
  out << "schema=1\n";
  out << "index,state,role\n";
  for (std::size_t t = 0; t < traj.states.size(); ++t) {
    out << t << ',' << traj.states[t].to_string() << ','
        << (t < traj.preperiod ? "tail" : "cycle") << '\n';
  }
  return out.str();
}

}  // namespace kaprekar
