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

// JSON form of OperatorSpec.

#include <set>
#include <string>

#include "json.hpp"
#include "kaprekar/errors.hpp"
#include "kaprekar/operators.hpp"

namespace kaprekar {
namespace {

using json = nlohmann::json;

const std::set<std::string>& allowed_keys(OperatorKind kind) {
  static const std::set<std::string> kNone{"kind", "width", "zero_policy"};
  static const std::set<std::string> kPerm{"kind", "width", "zero_policy",
                                           "p1", "p2"};
  static const std::set<std::string> kSelf{"kind", "width", "zero_policy",
                                           "p"};
  static const std::set<std::string> kGroup{"kind", "width", "zero_policy",
                                            "grouping"};
  static const std::set<std::string> kShift{
      "kind",       "width",           "zero_policy",
      "inc_amount", "inc_if_less_than", "dec_amount",
      "dec_if_greater_than"};
  static const std::set<std::string> kAffine{"kind", "width", "zero_policy",
                                             "m", "c"};
  static const std::set<std::string> kPower{"kind", "width", "zero_policy",
                                            "exponent"};
  static const std::set<std::string> kSeed{"kind", "width", "zero_policy",
                                           "seed"};
  switch (kind) {
    case OperatorKind::kPermDiff: return kPerm;
    case OperatorKind::kSelfPermDiff: return kSelf;
    case OperatorKind::kSfSwapAdd: return kGroup;
    case OperatorKind::kDigitShiftSub: return kShift;
    case OperatorKind::kAffineMod: return kAffine;
    case OperatorKind::kDigitPowerSum: return kPower;
    case OperatorKind::kFixedRandom: return kSeed;
    default: return kNone;
  }
}

[[noreturn]] void invalid(const std::string& message) {
  throw Error(ErrorCode::kValidationError, message);
}

const json& field(const json& obj, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) invalid(std::string("missing required key '") + key + "'");
  return *it;
}

std::string string_field(const json& obj, const char* key) {
  const json& v = field(obj, key);
  if (!v.is_string()) invalid(std::string("'") + key + "' must be a string");
  return v.get<std::string>();
}

std::int64_t int_field(const json& obj, const char* key) {
  const json& v = field(obj, key);
  if (!v.is_number_integer()) {
    invalid(std::string("'") + key + "' must be an integer");
  }
  if (v.is_number_unsigned() &&
      v.get<std::uint64_t>() >
          static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) {
    invalid(std::string("'") + key + "' is out of range");
  }
  return v.get<std::int64_t>();
}

int small_int_field(const json& obj, const char* key) {
  const std::int64_t v = int_field(obj, key);
  if (v < std::numeric_limits<int>::min() ||
      v > std::numeric_limits<int>::max()) {
    invalid(std::string("'") + key + "' is out of range");
  }
  return static_cast<int>(v);
}

std::uint64_t uint_field(const json& obj, const char* key) {
  const json& v = field(obj, key);
  if (!v.is_number_integer() ||
      (!v.is_number_unsigned() && v.get<std::int64_t>() < 0)) {
    invalid(std::string("'") + key + "' must be a nonnegative integer");
  }
  return v.get<std::uint64_t>();
}

Permutation permutation_field(const json& obj, const char* key) {
  try {
    return Permutation::parse(string_field(obj, key));
  } catch (const Error& e) {
    invalid(std::string("'") + key + "': " + e.what());
  }
}

}  // namespace

OperatorSpec parse_operator_spec(std::string_view text) {
  json obj;
  try {
    obj = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kParseError,
                "malformed operator spec at byte " + std::to_string(e.byte) +
                    ": " + e.what());
  }
  if (!obj.is_object()) invalid("operator spec must be a JSON object");

  const OperatorKind kind = kind_from_string(string_field(obj, "kind"));
  const int width = small_int_field(obj, "width");
  ZeroPolicy policy = ZeroPolicy::kPad;
  if (obj.contains("zero_policy")) {
    policy = zero_policy_from_string(string_field(obj, "zero_policy"));
  }
  const auto& allowed = allowed_keys(kind);
  for (const auto& [key, value] : obj.items()) {
    if (!allowed.count(key)) {
      invalid("unexpected key '" + key + "' for kind " +
              std::string(to_string(kind)));
    }
  }

  OperatorParams params;
  switch (kind) {
    case OperatorKind::kKaprekar:
    case OperatorKind::kReverseDiff:
      break;
    case OperatorKind::kPermDiff:
      params = PermDiffParams{permutation_field(obj, "p1"),
                              permutation_field(obj, "p2")};
      break;
    case OperatorKind::kSelfPermDiff:
      params = SelfPermDiffParams{permutation_field(obj, "p")};
      break;
    case OperatorKind::kSfSwapAdd:
      params = Grouping::parse(string_field(obj, "grouping"));
      break;
    case OperatorKind::kDigitShiftSub:
      params = ShiftParams{small_int_field(obj, "inc_amount"),
                           small_int_field(obj, "inc_if_less_than"),
                           small_int_field(obj, "dec_amount"),
                           small_int_field(obj, "dec_if_greater_than")};
      break;
    case OperatorKind::kAffineMod:
      params = AffineParams{uint_field(obj, "m"), uint_field(obj, "c")};
      break;
    case OperatorKind::kDigitPowerSum:
      params = PowerSumParams{small_int_field(obj, "exponent")};
      break;
    case OperatorKind::kFixedRandom:
      params = FixedRandomParams{uint_field(obj, "seed")};
      break;
  }
  return OperatorSpec::make(kind, width, policy, std::move(params));
}

std::string serialize(const OperatorSpec& spec) {
  json obj;
  obj["kind"] = std::string(to_string(spec.kind()));
  obj["width"] = spec.width();
  obj["zero_policy"] = std::string(to_string(spec.zero_policy()));
  std::visit(
      [&](const auto& p) {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, PermDiffParams>) {
          obj["p1"] = p.p1.to_string();
          obj["p2"] = p.p2.to_string();
        } else if constexpr (std::is_same_v<T, SelfPermDiffParams>) {
          obj["p"] = p.p.to_string();
        } else if constexpr (std::is_same_v<T, Grouping>) {
          obj["grouping"] = p.to_string();
        } else if constexpr (std::is_same_v<T, ShiftParams>) {
          obj["inc_amount"] = p.inc_amount;
          obj["inc_if_less_than"] = p.inc_if_less_than;
          obj["dec_amount"] = p.dec_amount;
          obj["dec_if_greater_than"] = p.dec_if_greater_than;
        } else if constexpr (std::is_same_v<T, AffineParams>) {
          obj["m"] = p.m;
          obj["c"] = p.c;
        } else if constexpr (std::is_same_v<T, PowerSumParams>) {
          obj["exponent"] = p.exponent;
        } else if constexpr (std::is_same_v<T, FixedRandomParams>) {
          obj["seed"] = p.seed;
        }
      },
      spec.params());
  return obj.dump();
}

}  // namespace kaprekar
