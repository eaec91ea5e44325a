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

#include "kaprekar/atlas.hpp"

#include <algorithm>
#include <exception>
#include <limits>
#include <thread>

#include "kaprekar/dynamics.hpp"
#include "kaprekar/errors.hpp"

namespace kaprekar {
namespace {

constexpr std::uint32_t kUnvisited = std::numeric_limits<std::uint32_t>::max();
constexpr std::uint32_t kInProgress = kUnvisited - 1;

void fill_range(const OperatorSpec& spec, std::uint64_t begin,
                std::uint64_t end, std::uint32_t* out) {
  const int width = spec.width();
  for (std::uint64_t n = begin; n < end; ++n) {
    out[n] = static_cast<std::uint32_t>(
        apply(spec, DigitString::from_integer(n, width)).to_integer());
  }
}

}  // namespace

SuccessorTable::SuccessorTable(OperatorSpec spec,
                               std::vector<std::uint32_t> succ)
    : spec_(std::move(spec)), succ_(std::move(succ)) {
  const std::uint64_t n = spec_.state_count();
  if (succ_.size() != n) {
    throw Error(ErrorCode::kValidationError,
                "successor table has " + std::to_string(succ_.size()) +
                    " entries, expected " + std::to_string(n));
  }
  for (std::uint64_t i = 0; i < n; ++i) {
    if (succ_[i] >= n) {
      throw Error(ErrorCode::kValidationError,
                  "succ[" + std::to_string(i) + "] = " +
                      std::to_string(succ_[i]) + " is outside the state space");
    }
  }
}

SuccessorTable build_successors(const OperatorSpec& spec,
                                const AtlasOptions& options) {
  const int ceiling = std::min(options.max_width, kHardAtlasMaxWidth);
  if (spec.width() > ceiling) {
    throw Error(ErrorCode::kWidthTooLarge,
                "atlas width " + std::to_string(spec.width()) +
                    " exceeds the configured ceiling of " +
                    std::to_string(ceiling));
  }
  if (spec.zero_policy() != ZeroPolicy::kPad) {
    throw Error(ErrorCode::kShrinkPolicyUnsupported,
                "the atlas enumerates the padded state space only");
  }

  const std::uint64_t n = spec.state_count();
  std::vector<std::uint32_t> succ(n);
  unsigned threads = options.threads ? options.threads
                                     : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(
      std::min<std::uint64_t>(threads, std::max<std::uint64_t>(1, n / 4096)));

  if (threads <= 1) {
    fill_range(spec, 0, n, succ.data());
  } else {
    std::vector<std::exception_ptr> errors(threads);
    std::vector<std::thread> workers;
    workers.reserve(threads);
    const std::uint64_t chunk = (n + threads - 1) / threads;
    for (unsigned w = 0; w < threads; ++w) {
      const std::uint64_t begin = std::min<std::uint64_t>(n, w * chunk);
      const std::uint64_t end = std::min<std::uint64_t>(n, begin + chunk);
      workers.emplace_back([&, w, begin, end] {
        try {
          fill_range(spec, begin, end, succ.data());
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (auto& t : workers) t.join();
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }
  return SuccessorTable(spec, std::move(succ));
}

std::uint64_t AtlasReport::max_cycle_length() const noexcept {
  std::uint64_t best = 0;
  for (const auto& c : cycles) best = std::max(best, c.length());
  return best;
}

// Every state is walked forward until it meets either a state on the
// current path (a new cycle) or an already finished state. While a state is
// in progress, `transient` holds its index on the path.
AtlasAnalysis analyze_with_labels(const SuccessorTable& table) {
  const std::uint64_t n = table.size();
  std::vector<std::uint32_t> transient(n, 0);
  std::vector<std::uint32_t> cycle_id(n, kUnvisited);
  std::vector<Cycle> found;
  std::vector<std::uint32_t> path;

  for (std::uint64_t start = 0; start < n; ++start) {
    if (cycle_id[start] != kUnvisited) continue;
    path.clear();
    std::uint32_t x = static_cast<std::uint32_t>(start);
    while (cycle_id[x] == kUnvisited) {
      cycle_id[x] = kInProgress;
      transient[x] = static_cast<std::uint32_t>(path.size());
      path.push_back(x);
      x = table[x];
    }

    std::size_t tail_end;
    std::uint32_t id;
    std::uint32_t base;
    if (cycle_id[x] == kInProgress) {
      tail_end = transient[x];
      id = static_cast<std::uint32_t>(found.size());
      Cycle cycle;
      for (std::size_t i = tail_end; i < path.size(); ++i) {
        cycle.states.push_back(path[i]);
        cycle_id[path[i]] = id;
        transient[path[i]] = 0;
      }
      found.push_back(std::move(cycle));
      base = 0;
    } else {
      tail_end = path.size();
      id = cycle_id[x];
      base = transient[x];
    }
    for (std::size_t i = tail_end; i-- > 0;) {
      cycle_id[path[i]] = id;
      transient[path[i]] = base + static_cast<std::uint32_t>(tail_end - i);
    }
  }

  // Canonical order: rotate each cycle to its minimum, sort by minimum.
  for (auto& c : found) {
    std::rotate(c.states.begin(),
                std::min_element(c.states.begin(), c.states.end()),
                c.states.end());
  }
  std::vector<std::uint32_t> order(found.size());
  for (std::uint32_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    return found[a].states.front() < found[b].states.front();
  });
  std::vector<std::uint32_t> remap(found.size());
  for (std::uint32_t i = 0; i < order.size(); ++i) remap[order[i]] = i;
  for (auto& id : cycle_id) id = remap[id];

  AtlasReport report{table.spec(), n, {}, {}, {}, 0, 0, {}, 0, 0, 0};
  report.cycles.reserve(found.size());
  for (std::uint32_t old : order) report.cycles.push_back(std::move(found[old]));

  report.basin_sizes.assign(report.cycles.size(), 0);
  for (std::uint64_t s = 0; s < n; ++s) {
    ++report.basin_sizes[cycle_id[s]];
    ++report.transient_histogram[transient[s]];
    if (transient[s] > report.max_transient) {
      report.max_transient = transient[s];
      report.max_transient_witness = s;
    }
  }
  for (std::size_t i = 0; i < report.cycles.size(); ++i) {
    const auto& c = report.cycles[i];
    if (c.length() == 1) {
      report.fixed_points.push_back(c.states.front());
      report.constant_reaching_count += report.basin_sizes[i];
    } else {
      report.cycle_reaching_count += report.basin_sizes[i];
    }
  }
  if (n > 0 && transient[0] == 0) {
    report.zero_basin_count = report.basin_sizes[cycle_id[0]];
  }
  return AtlasAnalysis{std::move(report),
                       StateLabels{std::move(transient), std::move(cycle_id)}};
}

AtlasReport analyze(const SuccessorTable& table) {
  return analyze_with_labels(table).report;
}

VerificationResult verify_against_trajectories(const OperatorSpec& spec) {
  if (spec.width() > 4) {
    throw Error(ErrorCode::kWidthTooLarge,
                "trajectory cross-check is limited to width <= 4");
  }
  AtlasOptions options;
  options.threads = 1;
  const SuccessorTable table = build_successors(spec, options);
  AtlasAnalysis analysis = analyze_with_labels(table);
  const auto& labels = analysis.labels;
  VerificationResult result{true, std::nullopt, {}, std::move(analysis.report)};
  const auto& cycles = result.report.cycles;
  for (std::uint64_t s = 0; s < table.size(); ++s) {
    const Trajectory traj =
        iterate(spec, DigitString::from_integer(s, spec.width()));
    const Cycle& owner = cycles[labels.cycle_id[s]];
    std::uint64_t traj_min = std::numeric_limits<std::uint64_t>::max();
    for (const auto& c : traj.cycle()) traj_min = std::min(traj_min, c.to_integer());

    std::string why;
    if (traj.preperiod != labels.transient[s]) {
      why = "transient " + std::to_string(traj.preperiod) + " vs atlas " +
            std::to_string(labels.transient[s]);
    } else if (traj.period != owner.length()) {
      why = "period " + std::to_string(traj.period) + " vs atlas " +
            std::to_string(owner.length());
    } else if (traj_min != owner.states.front()) {
      why = "cycle minimum " + std::to_string(traj_min) + " vs atlas " +
            std::to_string(owner.states.front());
    }
    if (!why.empty()) {
      result.agrees = false;
      result.counterexample = s;
      result.detail = "state " + std::to_string(s) + ": " + why;
      break;
    }
  }
  return result;
}

}  // namespace kaprekar
