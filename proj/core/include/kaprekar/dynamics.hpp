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

#ifndef KAPREKAR_DYNAMICS_HPP_
#define KAPREKAR_DYNAMICS_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kaprekar/digitspace.hpp"
#include "kaprekar/operators.hpp"

namespace kaprekar {

enum class Outcome { kReachedZeroConstant, kReachedConstant, kReachedCycle };

std::string_view to_string(Outcome outcome);

/// The chain a, f(a), f(f(a)), ... cut at its first repetition.
///
/// `states` holds exactly preperiod + period pairwise-distinct states and
/// f(states.back()) == states[preperiod]. States are keyed by integer
/// value, which under the shrink policy identifies e.g. "099" with "99".
struct Trajectory {
  OperatorSpec spec;
  std::vector<DigitString> states;
  std::size_t preperiod = 0;
  std::size_t period = 1;
  Outcome outcome = Outcome::kReachedCycle;

  const DigitString& seed() const { return states.front(); }
  std::span<const DigitString> tail() const {
    return std::span(states).first(preperiod);
  }
  std::span<const DigitString> cycle() const {
    return std::span(states).subspan(preperiod);
  }
};

/// Iterates `spec` from `seed` until a state repeats. `max_steps` bounds the
/// number of operator applications; the default 10^width + 1 can never be
/// hit under the pad policy. Throws StepBudgetExceeded when a caller-set
/// budget is exhausted first.
Trajectory iterate(const OperatorSpec& spec, const DigitString& seed,
                   std::optional<std::uint64_t> max_steps = std::nullopt);

/// Re-validates every Trajectory invariant against its operator and returns
/// the outcome. Throws MalformedTrajectory on any violation.
Outcome classify(const Trajectory& traj);

/// One state per line, a re-entry marker, then
/// "preperiod=<i> period=<c> outcome=<label>".
std::string render_text(const Trajectory& traj);
std::string to_json(const Trajectory& traj);
/// "schema=1" header line, then "index,state,role" rows.
std::string to_csv(const Trajectory& traj);

}  // namespace kaprekar

#endif  // KAPREKAR_DYNAMICS_HPP_
