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

#ifndef KAPREKAR_RANDOMOPS_HPP_
#define KAPREKAR_RANDOMOPS_HPP_

// Random operators in two readings: a fixed pseudorandom function of the
// state (a genuine f: A -> A, so it must end in a cycle) and a walk that
// draws fresh randomness at every step (not a function, so a repeated value
// does not force a repeated successor).

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "kaprekar/digitspace.hpp"

namespace kaprekar {

/// SplitMix64 finalizer applied to x + 0x9E3779B97F4A7C15. Bit-exact across
/// platforms; mix64(0) == 0xE220A8397B1DCDAF.
constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
  std::uint64_t z = x + 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// mix64(seed ^ a) mod 10^width, at the width of `ds`.
DigitString fixed_random_step(std::uint64_t seed, const DigitString& ds);

/// Sequential SplitMix64 stream: draw t is mix64(seed + t * gamma).
class SplitMixStream {
 public:
  explicit SplitMixStream(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next() noexcept {
    const std::uint64_t out = mix64(state_);
    state_ += 0x9E3779B97F4A7C15ULL;
    return out;
  }

 private:
  std::uint64_t state_;
};

enum class WalkMode { kFixed, kFresh };

std::string_view to_string(WalkMode mode);
WalkMode walk_mode_from_string(std::string_view name);

struct TrajectorySummary {
  std::uint64_t preperiod = 0;
  std::uint64_t period = 0;
  friend bool operator==(const TrajectorySummary&,
                         const TrajectorySummary&) = default;
};

struct WalkReport {
  WalkMode mode = WalkMode::kFresh;
  std::uint64_t seed = 0;
  int width = 1;
  /// Successor draws (fresh) or operator applications (fixed) performed.
  std::uint64_t steps_taken = 0;
  /// Index of the first state equal to an earlier one.
  std::optional<std::uint64_t> first_repeat_index;
  /// Index of that earlier occurrence.
  std::optional<std::uint64_t> first_occurrence_index;
  std::optional<std::uint64_t> repeated_value;
  /// Whether the successor after the repeat equals the successor after the
  /// earlier occurrence. Always true in fixed mode.
  std::optional<bool> repeat_consistent;
  /// Fixed mode only.
  std::optional<TrajectorySummary> trajectory_summary;

  friend bool operator==(const WalkReport&, const WalkReport&) = default;
};

/// Both modes start from the first draw of SplitMixStream(seed).
/// Fixed mode iterates fixed_random_step with this seed and throws
/// StepBudgetExceeded if no repeat occurs within max_steps applications.
WalkReport fixed_random_walk(std::uint64_t seed, int width,
                             std::uint64_t max_steps);

/// Draws successors until a value repeats, then one more. Stops without a
/// repeat after max_steps draws. Throws ValidationError if max_steps == 0.
WalkReport fresh_random_walk(std::uint64_t seed, int width,
                             std::uint64_t max_steps);

WalkReport random_walk(WalkMode mode, std::uint64_t seed, int width,
                       std::uint64_t max_steps);

std::string to_json(const WalkReport& report);
WalkReport walk_report_from_json(std::string_view text);

/// Aggregate over `walks` walks with seeds base_seed, base_seed + 1, ...
struct RandomDemoSummary {
  WalkMode mode = WalkMode::kFresh;
  std::uint64_t base_seed = 0;
  int width = 1;
  std::uint64_t walks = 0;
  std::uint64_t max_steps = 0;
  std::uint64_t repeats_found = 0;
  std::uint64_t consistent_repeats = 0;
  /// Largest preperiod + period over fixed-mode walks.
  std::uint64_t max_rho_length = 0;

  double consistent_fraction() const {
    return walks == 0 ? 0.0 : static_cast<double>(consistent_repeats) /
                                  static_cast<double>(walks);
  }
};

RandomDemoSummary run_random_demo(WalkMode mode, std::uint64_t base_seed,
                                  int width, std::uint64_t walks,
                                  std::uint64_t max_steps);

}  // namespace kaprekar

#endif  // KAPREKAR_RANDOMOPS_HPP_
