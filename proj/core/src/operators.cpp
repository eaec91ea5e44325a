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

#include "kaprekar/operators.hpp"

#include <array>
#include <charconv>

#include "kaprekar/errors.hpp"
#include "kaprekar/randomops.hpp"

namespace kaprekar {
namespace {

__extension__ typedef unsigned __int128 u128;

std::uint64_t abs_diff(std::uint64_t a, std::uint64_t b) {
  return a > b ? a - b : b - a;
}

void check_spec_width(int width) {
  if (width < 1 || width > kMaxWidth) {
    throw Error(ErrorCode::kValidationError,
                "width must be in 1.." + std::to_string(kMaxWidth) +
                    ", got " + std::to_string(width));
  }
}

constexpr std::array<KindInfo, 9> kCatalog{{
    {OperatorKind::kKaprekar, "kaprekar", "",
     "digits sorted descending minus digits sorted ascending"},
    {OperatorKind::kPermDiff, "perm_diff", "p1, p2 (permutations)",
     "|P1(a) - P2(a)|"},
    {OperatorKind::kSelfPermDiff, "self_perm_diff", "p (permutation)",
     "|a - P(a)|"},
    {OperatorKind::kReverseDiff, "reverse_diff", "",
     "|a - reverse(a)|"},
    {OperatorKind::kSfSwapAdd, "sf_swap_add", "grouping (e.g. \"1,2\")",
     "a + (digit groups in reversed order), mod 10^k"},
    {OperatorKind::kDigitShiftSub, "digit_shift_sub",
     "inc_amount, inc_if_less_than, dec_amount, dec_if_greater_than",
     "|shift-up(a) - shift-down(a)|"},
    {OperatorKind::kAffineMod, "affine_mod", "m, c",
     "(m*a + c) mod 10^k"},
    {OperatorKind::kDigitPowerSum, "digit_power_sum", "exponent (>= 1)",
     "sum of digit^exponent, mod 10^k"},
    {OperatorKind::kFixedRandom, "fixed_random", "seed (uint64)",
     "mix64(seed xor a) mod 10^k, a fixed pseudorandom function"},
}};

}  // namespace

std::string_view to_string(OperatorKind kind) {
  for (const auto& info : kCatalog) {
    if (info.kind == kind) return info.name;
  }
  return "unknown";
}

OperatorKind kind_from_string(std::string_view name) {
  for (const auto& info : kCatalog) {
    if (info.name == name) return info.kind;
  }
  throw Error(ErrorCode::kValidationError,
              "unknown operator kind '" + std::string(name) + "'");
}

std::string_view to_string(ZeroPolicy policy) {
  return policy == ZeroPolicy::kPad ? "pad" : "shrink";
}

ZeroPolicy zero_policy_from_string(std::string_view name) {
  if (name == "pad") return ZeroPolicy::kPad;
  if (name == "shrink") return ZeroPolicy::kShrink;
  throw Error(ErrorCode::kValidationError,
              "zero_policy must be \"pad\" or \"shrink\", got '" +
                  std::string(name) + "'");
}

std::span<const KindInfo> operator_catalog() { return kCatalog; }

Grouping Grouping::parse(std::string_view text) {
  Grouping g;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view field = text.substr(start, end - start);
    while (!field.empty() && field.front() == ' ') field.remove_prefix(1);
    while (!field.empty() && field.back() == ' ') field.remove_suffix(1);
    int value = 0;
    auto [ptr, ec] =
        std::from_chars(field.data(), field.data() + field.size(), value);
    if (field.empty() || ec != std::errc() ||
        ptr != field.data() + field.size()) {
      throw Error(ErrorCode::kParseError,
                  "bad grouping entry at offset " + std::to_string(start) +
                      " in '" + std::string(text) + "'");
    }
    g.parts.push_back(value);
    start = end + 1;
  }
  return g;
}

std::string Grouping::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts[i]);
  }
  return s;
}

int Grouping::width() const noexcept {
  int w = 0;
  for (int p : parts) w += p;
  return w;
}

void Grouping::validate(int width) const {
  if (parts.empty()) {
    throw Error(ErrorCode::kInvalidGrouping, "grouping has no parts");
  }
  for (int p : parts) {
    if (p < 1) {
      throw Error(ErrorCode::kInvalidGrouping,
                  "grouping part sizes must be >= 1");
    }
  }
  if (this->width() != width) {
    throw Error(ErrorCode::kInvalidGrouping,
                "grouping parts sum to " + std::to_string(this->width()) +
                    ", expected width " + std::to_string(width));
  }
}

void ShiftParams::validate() const {
  auto in_range = [](int v) { return v >= 0 && v <= 10; };
  if (!in_range(inc_amount) || !in_range(inc_if_less_than) ||
      !in_range(dec_amount) || !in_range(dec_if_greater_than)) {
    throw Error(ErrorCode::kInvalidShiftParams,
                "shift parameters must be integers in 0..10");
  }
  if ((inc_if_less_than - 1) + inc_amount > 9) {
    throw Error(ErrorCode::kInvalidShiftParams,
                "(inc_if_less_than - 1) + inc_amount must be <= 9");
  }
  if ((dec_if_greater_than + 1) - dec_amount < 0) {
    throw Error(ErrorCode::kInvalidShiftParams,
                "(dec_if_greater_than + 1) - dec_amount must be >= 0");
  }
}

bool supports_shrink(OperatorKind kind) noexcept {
  return kind == OperatorKind::kKaprekar ||
         kind == OperatorKind::kReverseDiff ||
         kind == OperatorKind::kDigitShiftSub;
}

bool is_difference_kind(OperatorKind kind) noexcept {
  return kind == OperatorKind::kKaprekar || kind == OperatorKind::kPermDiff ||
         kind == OperatorKind::kSelfPermDiff ||
         kind == OperatorKind::kReverseDiff;
}

OperatorSpec OperatorSpec::make(OperatorKind kind, int width,
                                ZeroPolicy policy, OperatorParams params) {
  check_spec_width(width);
  if (policy == ZeroPolicy::kShrink && !supports_shrink(kind)) {
    throw Error(ErrorCode::kValidationError,
                "zero_policy shrink is only allowed for kaprekar, "
                "reverse_diff and digit_shift_sub, not " +
                    std::string(to_string(kind)));
  }
  auto require = [&](bool ok, const char* what) {
    if (!ok) {
      throw Error(ErrorCode::kValidationError,
                  std::string(to_string(kind)) + " requires " + what);
    }
  };
  auto check_perm = [&](const Permutation& p, const char* name) {
    if (p.width() != width) {
      throw Error(ErrorCode::kValidationError,
                  std::string(name) + " width " + std::to_string(p.width()) +
                      " != operator width " + std::to_string(width));
    }
  };
  switch (kind) {
    case OperatorKind::kKaprekar:
    case OperatorKind::kReverseDiff:
      require(std::holds_alternative<std::monostate>(params),
              "no parameters");
      break;
    case OperatorKind::kPermDiff: {
      require(std::holds_alternative<PermDiffParams>(params), "p1 and p2");
      const auto& pp = std::get<PermDiffParams>(params);
      check_perm(pp.p1, "p1");
      check_perm(pp.p2, "p2");
      break;
    }
    case OperatorKind::kSelfPermDiff:
      require(std::holds_alternative<SelfPermDiffParams>(params), "p");
      check_perm(std::get<SelfPermDiffParams>(params).p, "p");
      break;
    case OperatorKind::kSfSwapAdd:
      require(std::holds_alternative<Grouping>(params), "grouping");
      std::get<Grouping>(params).validate(width);
      break;
    case OperatorKind::kDigitShiftSub:
      require(std::holds_alternative<ShiftParams>(params), "shift parameters");
      std::get<ShiftParams>(params).validate();
      break;
    case OperatorKind::kAffineMod:
      require(std::holds_alternative<AffineParams>(params), "m and c");
      break;
    case OperatorKind::kDigitPowerSum:
      require(std::holds_alternative<PowerSumParams>(params), "exponent");
      if (std::get<PowerSumParams>(params).exponent < 1) {
        throw Error(ErrorCode::kValidationError, "exponent must be >= 1");
      }
      break;
    case OperatorKind::kFixedRandom:
      require(std::holds_alternative<FixedRandomParams>(params), "seed");
      break;
  }
  return OperatorSpec(kind, width, policy, std::move(params));
}

OperatorSpec OperatorSpec::kaprekar(int width, ZeroPolicy policy) {
  return make(OperatorKind::kKaprekar, width, policy, std::monostate{});
}

OperatorSpec OperatorSpec::perm_diff(Permutation p1, Permutation p2) {
  const int width = p1.width();
  return make(OperatorKind::kPermDiff, width, ZeroPolicy::kPad,
              PermDiffParams{std::move(p1), std::move(p2)});
}

OperatorSpec OperatorSpec::self_perm_diff(Permutation p) {
  const int width = p.width();
  return make(OperatorKind::kSelfPermDiff, width, ZeroPolicy::kPad,
              SelfPermDiffParams{std::move(p)});
}

OperatorSpec OperatorSpec::reverse_diff(int width, ZeroPolicy policy) {
  return make(OperatorKind::kReverseDiff, width, policy, std::monostate{});
}

OperatorSpec OperatorSpec::sf_swap_add(Grouping grouping) {
  const int width = grouping.width();
  return make(OperatorKind::kSfSwapAdd, width, ZeroPolicy::kPad,
              std::move(grouping));
}

OperatorSpec OperatorSpec::digit_shift_sub(int width, ShiftParams shift,
                                           ZeroPolicy policy) {
  return make(OperatorKind::kDigitShiftSub, width, policy, shift);
}

OperatorSpec OperatorSpec::affine_mod(int width, std::uint64_t m,
                                      std::uint64_t c) {
  return make(OperatorKind::kAffineMod, width, ZeroPolicy::kPad,
              AffineParams{m, c});
}

OperatorSpec OperatorSpec::digit_power_sum(int width, int exponent) {
  return make(OperatorKind::kDigitPowerSum, width, ZeroPolicy::kPad,
              PowerSumParams{exponent});
}

OperatorSpec OperatorSpec::fixed_random(int width, std::uint64_t seed) {
  return make(OperatorKind::kFixedRandom, width, ZeroPolicy::kPad,
              FixedRandomParams{seed});
}

std::string OperatorSpec::label() const {
  std::string s(to_string(kind_));
  s += "(k=" + std::to_string(width_);
  std::visit(
      [&](const auto& p) {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, PermDiffParams>) {
          s += ",p1=" + p.p1.to_string() + ",p2=" + p.p2.to_string();
        } else if constexpr (std::is_same_v<T, SelfPermDiffParams>) {
          s += ",p=" + p.p.to_string();
        } else if constexpr (std::is_same_v<T, Grouping>) {
          s += ",grouping=" + p.to_string();
        } else if constexpr (std::is_same_v<T, ShiftParams>) {
          s += ",shift=" + std::to_string(p.inc_amount) + "/" +
               std::to_string(p.inc_if_less_than) + "/" +
               std::to_string(p.dec_amount) + "/" +
               std::to_string(p.dec_if_greater_than);
        } else if constexpr (std::is_same_v<T, AffineParams>) {
          s += ",m=" + std::to_string(p.m) + ",c=" + std::to_string(p.c);
        } else if constexpr (std::is_same_v<T, PowerSumParams>) {
          s += ",exponent=" + std::to_string(p.exponent);
        } else if constexpr (std::is_same_v<T, FixedRandomParams>) {
          s += ",seed=" + std::to_string(p.seed);
        }
      },
      params_);
  if (policy_ == ZeroPolicy::kShrink) s += ",shrink";
  s += ")";
  return s;
}

DigitString kaprekar_step(const DigitString& ds) {
  const std::uint64_t hi = sort_descending(ds).to_integer();
  const std::uint64_t lo = sort_ascending(ds).to_integer();
  return DigitString::from_integer(hi - lo, ds.width());
}

DigitString perm_diff_step(const DigitString& ds, const Permutation& p1,
                           const Permutation& p2) {
  const std::uint64_t a = apply_permutation(ds, p1).to_integer();
  const std::uint64_t b = apply_permutation(ds, p2).to_integer();
  return DigitString::from_integer(abs_diff(a, b), ds.width());
}

DigitString self_perm_diff_step(const DigitString& ds, const Permutation& p) {
  const std::uint64_t b = apply_permutation(ds, p).to_integer();
  return DigitString::from_integer(abs_diff(ds.to_integer(), b), ds.width());
}

DigitString reverse_diff_step(const DigitString& ds) {
  return DigitString::from_integer(
      abs_diff(ds.to_integer(), reverse(ds).to_integer()), ds.width());
}

DigitString sf_swap_add_step(const DigitString& ds, const Grouping& g) {
  g.validate(ds.width());
  // Groups are emitted last-to-first; within a group the digits keep order.
  std::array<std::uint8_t, kMaxWidth> swapped{};
  std::vector<int> starts(g.parts.size());
  int pos = 0;
  for (std::size_t i = 0; i < g.parts.size(); ++i) {
    starts[i] = pos;
    pos += g.parts[i];
  }
  int out = 0;
  for (std::size_t i = g.parts.size(); i-- > 0;) {
    for (int t = 0; t < g.parts[i]; ++t) swapped[out++] = ds[starts[i] + t];
  }
  const std::uint64_t other =
      DigitString::from_digits({swapped.data(),
                                static_cast<std::size_t>(ds.width())})
          .to_integer();
  const std::uint64_t mod = pow10(ds.width());
  return DigitString::from_integer((ds.to_integer() + other) % mod,
                                   ds.width());
}

DigitString digit_shift_sub_step(const DigitString& ds,
                                 const ShiftParams& shift) {
  shift.validate();
  std::uint64_t up = 0;
  std::uint64_t down = 0;
  for (std::uint8_t d : ds.digits()) {
    const int u = d < shift.inc_if_less_than ? d + shift.inc_amount : d;
    const int v = d > shift.dec_if_greater_than ? d - shift.dec_amount : d;
    up = up * 10 + static_cast<std::uint64_t>(u);
    down = down * 10 + static_cast<std::uint64_t>(v);
  }
  return DigitString::from_integer(abs_diff(up, down), ds.width());
}

DigitString affine_mod_step(const DigitString& ds, std::uint64_t m,
                            std::uint64_t c) {
  const std::uint64_t mod = pow10(ds.width());
  const u128 v = static_cast<u128>(m) * ds.to_integer() + c;
  return DigitString::from_integer(static_cast<std::uint64_t>(v % mod),
                                   ds.width());
}

DigitString digit_power_sum_step(const DigitString& ds, int exponent) {
  if (exponent < 1) {
    throw Error(ErrorCode::kValidationError, "exponent must be >= 1");
  }
  const std::uint64_t mod = pow10(ds.width());
  std::array<std::uint64_t, 10> powers{};
  for (std::uint64_t d = 0; d < 10; ++d) {
    std::uint64_t result = 1 % mod;
    std::uint64_t base = d % mod;
    for (int e = exponent; e > 0; e >>= 1) {
      if (e & 1) result = static_cast<std::uint64_t>(u128(result) * base % mod);
      base = static_cast<std::uint64_t>(u128(base) * base % mod);
    }
    powers[d] = result;
  }
  std::uint64_t sum = 0;
  for (std::uint8_t d : ds.digits()) sum = (sum + powers[d]) % mod;
  return DigitString::from_integer(sum, ds.width());
}

DigitString apply(const OperatorSpec& spec, const DigitString& ds) {
  const bool shrink = spec.zero_policy() == ZeroPolicy::kShrink;
  if (shrink ? ds.width() > spec.width() : ds.width() != spec.width()) {
    throw Error(ErrorCode::kWidthMismatch,
                "state width " + std::to_string(ds.width()) +
                    (shrink ? " exceeds" : " !=") + " operator width " +
                    std::to_string(spec.width()));
  }
  // Under shrink a state is its integer value at natural width, so "09"
  // and "9" step identically.
  const DigitString input = shrink ? ds.trimmed() : ds;
  DigitString next;
  switch (spec.kind()) {
    case OperatorKind::kKaprekar:
      next = kaprekar_step(input);
      break;
    case OperatorKind::kPermDiff: {
      const auto& p = spec.params_as<PermDiffParams>();
      next = perm_diff_step(input, p.p1, p.p2);
      break;
    }
    case OperatorKind::kSelfPermDiff:
      next = self_perm_diff_step(input, spec.params_as<SelfPermDiffParams>().p);
      break;
    case OperatorKind::kReverseDiff:
      next = reverse_diff_step(input);
      break;
    case OperatorKind::kSfSwapAdd:
      next = sf_swap_add_step(input, spec.params_as<Grouping>());
      break;
    case OperatorKind::kDigitShiftSub:
      next = digit_shift_sub_step(input, spec.params_as<ShiftParams>());
      break;
    case OperatorKind::kAffineMod: {
      const auto& p = spec.params_as<AffineParams>();
      next = affine_mod_step(input, p.m, p.c);
      break;
    }
    case OperatorKind::kDigitPowerSum:
      next = digit_power_sum_step(input,
                                  spec.params_as<PowerSumParams>().exponent);
      break;
    case OperatorKind::kFixedRandom:
      next = fixed_random_step(spec.params_as<FixedRandomParams>().seed, input);
      break;
  }
  return shrink ? next.trimmed() : next;
}

}  // namespace kaprekar
