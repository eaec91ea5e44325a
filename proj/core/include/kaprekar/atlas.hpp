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

#ifndef KAPREKAR_ATLAS_HPP_
#define KAPREKAR_ATLAS_HPP_

// Exhaustive functional-graph analysis of one operator over all 10^k
// padded states: cycles, fixed points, transient lengths and basins.

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kaprekar/operators.hpp"

namespace kaprekar {

inline constexpr int kDefaultAtlasMaxWidth = 7;
inline constexpr int kHardAtlasMaxWidth = 9;

struct AtlasOptions {
  /// Refuse widths above this (WidthTooLarge). Clamped to the hard cap.
  int max_width = kDefaultAtlasMaxWidth;
  /// Worker threads for table construction; 0 means hardware concurrency.
  unsigned threads = 0;
};

/// f materialized over every padded state: succ[n] = f(n).
class SuccessorTable {
 public:
  /// Wraps precomputed successors. Throws ValidationError if the length is
  /// not 10^width or an entry is out of range.
  SuccessorTable(OperatorSpec spec, std::vector<std::uint32_t> succ);

  const OperatorSpec& spec() const noexcept { return spec_; }
  int width() const noexcept { return spec_.width(); }
  std::uint64_t size() const noexcept { return succ_.size(); }
  std::uint32_t operator[](std::uint64_t n) const noexcept { return succ_[n]; }
  std::span<const std::uint32_t> values() const noexcept { return succ_; }

 private:
  OperatorSpec spec_;
  std::vector<std::uint32_t> succ_;
};

/// Throws WidthTooLarge above the configured ceiling and
/// ShrinkPolicyUnsupported for shrink-policy specs.
SuccessorTable build_successors(const OperatorSpec& spec,
                                const AtlasOptions& options = {});

struct Cycle {
  /// Rotated so the smallest state comes first.
  std::vector<std::uint64_t> states;
  std::uint64_t length() const noexcept { return states.size(); }
  friend bool operator==(const Cycle&, const Cycle&) = default;
};

struct AtlasReport {
  OperatorSpec spec;
  std::uint64_t state_count = 0;
  /// Sorted by smallest state; a cycle's id is its index here.
  std::vector<Cycle> cycles;
  /// basin_sizes[id]: states (cycle members included) draining into cycle id.
  std::vector<std::uint64_t> basin_sizes;
  std::vector<std::uint64_t> fixed_points;
  std::uint64_t max_transient = 0;
  /// Smallest state attaining max_transient.
  std::uint64_t max_transient_witness = 0;
  std::map<std::uint64_t, std::uint64_t> transient_histogram;
  /// Basin of the cycle through 0, or 0 if 0 is not on a cycle.
  std::uint64_t zero_basin_count = 0;
  /// States ending at a fixed point vs. on a cycle of length >= 2.
  std::uint64_t constant_reaching_count = 0;
  std::uint64_t cycle_reaching_count = 0;

  std::uint64_t max_cycle_length() const noexcept;

  friend bool operator==(const AtlasReport&, const AtlasReport&) = default;
};

/// Per-state results kept alongside the report.
struct StateLabels {
  std::vector<std::uint32_t> transient;
  std::vector<std::uint32_t> cycle_id;
};

struct AtlasAnalysis {
  AtlasReport report;
  StateLabels labels;
};

/// Linear pass with three-state marking; see atlas.cpp.
AtlasAnalysis analyze_with_labels(const SuccessorTable& table);
AtlasReport analyze(const SuccessorTable& table);

struct VerificationResult {
  bool agrees = false;
  std::optional<std::uint64_t> counterexample;
  std::string detail;
  AtlasReport report;

  explicit operator bool() const noexcept { return agrees; }
};

/// Runs iterate() from every state and checks it against the atlas on
/// transient length, period and owning cycle. Width must be <= 4.
VerificationResult verify_against_trajectories(const OperatorSpec& spec);

// Export formats.

/// Pretty JSON with a stable key order. A non-empty `generated_at` is added
/// as a top-level field.
std::string report_to_json(const AtlasReport& report,
                           std::string_view generated_at = {});
/// Inverse of report_to_json; extra fields are ignored.
AtlasReport report_from_json(std::string_view text);
/// "schema=1" header, then rows "record,id,length,min_state,count".
std::string report_to_csv(const AtlasReport& report);
std::string report_to_text(const AtlasReport& report);
/// One node per cycle labelled with its length and basin size.
std::string report_to_dot(const AtlasReport& report);
/// Every state and edge; only for width <= 3 (WidthTooLarge otherwise).
std::string state_graph_to_dot(const SuccessorTable& table);

}  // namespace kaprekar

#endif  // KAPREKAR_ATLAS_HPP_
