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

// JSON, CSV, text and DOT renderings of atlas results.

#include <sstream>

#include "json.hpp"
#include "kaprekar/atlas.hpp"
#include "kaprekar/errors.hpp"

namespace kaprekar {
namespace {

using json = nlohmann::ordered_json;

std::string padded(std::uint64_t n, int width) {
  return DigitString::from_integer(n, width).to_string();
}

std::uint64_t unpadded(const json& v) {
  const std::string s = v.get<std::string>();
  return DigitString::parse(s).to_integer();
}

}  // namespace

std::string report_to_json(const AtlasReport& report,
                           std::string_view generated_at) {
  const int w = report.spec.width();
  json obj;
  obj["operator"] = json::parse(serialize(report.spec));
  if (!generated_at.empty()) obj["generated_at"] = std::string(generated_at);
  obj["width"] = w;
  obj["state_count"] = report.state_count;

  json cycles = json::array();
  for (std::size_t i = 0; i < report.cycles.size(); ++i) {
    json states = json::array();
    for (auto s : report.cycles[i].states) states.push_back(padded(s, w));
    cycles.push_back({{"id", i},
                      {"length", report.cycles[i].length()},
                      {"basin_size", report.basin_sizes[i]},
                      {"states", std::move(states)}});
  }
  obj["cycle_count"] = report.cycles.size();
  obj["max_cycle_length"] = report.max_cycle_length();
  obj["cycles"] = std::move(cycles);

  json fixed = json::array();
  for (auto s : report.fixed_points) fixed.push_back(padded(s, w));
  obj["fixed_points"] = std::move(fixed);

  obj["max_transient"] = report.max_transient;
  obj["max_transient_witness"] = padded(report.max_transient_witness, w);

  json hist = json::array();
  for (const auto& [len, count] : report.transient_histogram) {
    hist.push_back({{"length", len}, {"count", count}});
  }
  obj["transient_histogram"] = std::move(hist);
  obj["zero_basin_count"] = report.zero_basin_count;
  obj["constant_reaching_count"] = report.constant_reaching_count;
  obj["cycle_reaching_count"] = report.cycle_reaching_count;
  return obj.dump(2) + "\n";
}

AtlasReport report_from_json(std::string_view text) {
  json obj;
  try {
    obj = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kParseError,
                "malformed atlas report at byte " + std::to_string(e.byte));
  }
  try {
    AtlasReport r{parse_operator_spec(obj.at("operator").dump()),
                  obj.at("state_count").get<std::uint64_t>(),
                  {}, {}, {}, 0, 0, {}, 0, 0, 0};
    for (const auto& c : obj.at("cycles")) {
      Cycle cycle;
      for (const auto& s : c.at("states")) cycle.states.push_back(unpadded(s));
      r.cycles.push_back(std::move(cycle));
      r.basin_sizes.push_back(c.at("basin_size").get<std::uint64_t>());
    }
    for (const auto& s : obj.at("fixed_points")) {
      r.fixed_points.push_back(unpadded(s));
    }
    r.max_transient = obj.at("max_transient").get<std::uint64_t>();
    r.max_transient_witness = unpadded(obj.at("max_transient_witness"));
    for (const auto& h : obj.at("transient_histogram")) {
      r.transient_histogram[h.at("length").get<std::uint64_t>()] =
          h.at("count").get<std::uint64_t>();
    }
    r.zero_basin_count = obj.at("zero_basin_count").get<std::uint64_t>();
    r.constant_reaching_count =
        obj.at("constant_reaching_count").get<std::uint64_t>();
    r.cycle_reaching_count = obj.at("cycle_reaching_count").get<std::uint64_t>();
    return r;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kValidationError,
                std::string("bad atlas report: ") + e.what());
  }
}

std::string report_to_csv(const AtlasReport& report) {
  const int w = report.spec.width();
  std::ostringstream out;
  out << "schema=1\n";
  out << "record,id,length,min_state,count\n";
  for (std::size_t i = 0; i < report.cycles.size(); ++i) {
    out << "cycle," << i << ',' << report.cycles[i].length() << ','
        << padded(report.cycles[i].states.front(), w) << ','
        << report.basin_sizes[i] << '\n';
  }
  for (const auto& [len, count] : report.transient_histogram) {
    out << "transient,," << len << ",," << count << '\n';
  }
  return out.str();
}

std::string report_to_text(const AtlasReport& report) {
  const int w = report.spec.width();
  std::ostringstream out;
  out << "operator: " << report.spec.label() << '\n';
  out << "states: " << report.state_count << '\n';
  out << "cycles: " << report.cycles.size()
      << " (longest " << report.max_cycle_length() << ")\n";
  for (std::size_t i = 0; i < report.cycles.size(); ++i) {
    const auto& c = report.cycles[i];
    out << "  #" << i << " length=" << c.length()
        << " basin=" << report.basin_sizes[i] << " :";
    constexpr std::size_t kShown = 12;
    for (std::size_t t = 0; t < c.states.size() && t < kShown; ++t) {
      out << ' ' << padded(c.states[t], w);
    }
    if (c.states.size() > kShown) out << " ...";
    out << '\n';
  }
  out << "fixed points:";
  for (auto s : report.fixed_points) out << ' ' << padded(s, w);
  out << '\n';
  out << "max transient: " << report.max_transient << " (witness "
      << padded(report.max_transient_witness, w) << ")\n";
  out << "zero basin: " << report.zero_basin_count << '\n';
  out << "reach a constant: " << report.constant_reaching_count
      << ", reach a cycle of length >= 2: " << report.cycle_reaching_count
      << '\n';
  out << "transient histogram:\n";
  for (const auto& [len, count] : report.transient_histogram) {
    out << "  " << len << ": " << count << '\n';
  }
  return out.str();
}

std::string report_to_dot(const AtlasReport& report) {
  const int w = report.spec.width();
  std::ostringstream out;
  out << "digraph atlas {\n";
  out << "  label=\"" << report.spec.label() << "\";\n";
  out << "  node [shape=circle];\n";
  for (std::size_t i = 0; i < report.cycles.size(); ++i) {
    const auto& c = report.cycles[i];
    out << "  c" << i << " [label=\"" << padded(c.states.front(), w)
        << "\\nlength=" << c.length() << "\\nbasin=" << report.basin_sizes[i]
        << "\"";
    if (c.length() == 1) out << ", shape=doublecircle";
    out << "];\n";
    out << "  c" << i << " -> c" << i << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string state_graph_to_dot(const SuccessorTable& table) {
  if (table.width() > 3) {
    throw Error(ErrorCode::kWidthTooLarge,
                "full state graph export is limited to width <= 3");
  }
  const int w = table.width();
  std::ostringstream out;
  out << "digraph states {\n";
  for (std::uint64_t n = 0; n < table.size(); ++n) {
    out << "  \"" << padded(n, w) << "\" -> \"" << padded(table[n], w)
        << "\";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace kaprekar
