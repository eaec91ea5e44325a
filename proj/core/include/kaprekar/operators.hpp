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

#ifndef KAPREKAR_OPERATORS_HPP_
#define KAPREKAR_OPERATORS_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "kaprekar/digitspace.hpp"

namespace kaprekar {

enum class OperatorKind {
  kKaprekar,
  kPermDiff,
  kSelfPermDiff,
  kReverseDiff,
  kSfSwapAdd,
  kDigitShiftSub,
  kAffineMod,
  kDigitPowerSum,
  kFixedRandom,
};

/// Snake-case name used in the operator spec format ("perm_diff", ...).
std::string_view to_string(OperatorKind kind);
/// Throws ValidationError for unknown names.
OperatorKind kind_from_string(std::string_view name);

/// pad: every state keeps the operator width, leading zeros included.
/// shrink: results drop leading zeros and continue at their natural width.
enum class ZeroPolicy { kPad, kShrink };

std::string_view to_string(ZeroPolicy policy);
ZeroPolicy zero_policy_from_string(std::string_view name);

/// Consecutive digit-group sizes, e.g. {1,2} reads 576 as 5(76).
struct Grouping {
  std::vector<int> parts;

  /// Parses "1,2". Throws ParseError / InvalidGrouping.
  static Grouping parse(std::string_view text);
  std::string to_string() const;
  int width() const noexcept;
  /// Throws InvalidGrouping unless every part is >= 1 and they sum to width.
  void validate(int width) const;

  friend bool operator==(const Grouping&, const Grouping&) = default;
};

/// A' adds inc_amount to digits < inc_if_less_than, A'' subtracts
/// dec_amount from digits > dec_if_greater_than.
struct ShiftParams {
  int inc_amount = 1;
  int inc_if_less_than = 9;
  int dec_amount = 1;
  int dec_if_greater_than = 0;

  /// Throws InvalidShiftParams if a shifted digit could leave 0..9.
  void validate() const;

  friend bool operator==(const ShiftParams&, const ShiftParams&) = default;
};

struct PermDiffParams {
  Permutation p1;
  Permutation p2;
  friend bool operator==(const PermDiffParams&, const PermDiffParams&) = default;
};

struct SelfPermDiffParams {
  Permutation p;
  friend bool operator==(const SelfPermDiffParams&,
                         const SelfPermDiffParams&) = default;
};

struct AffineParams {
  std::uint64_t m = 1;
  std::uint64_t c = 0;
  friend bool operator==(const AffineParams&, const AffineParams&) = default;
};

struct PowerSumParams {
  int exponent = 2;
  friend bool operator==(const PowerSumParams&,
                         const PowerSumParams&) = default;
};

struct FixedRandomParams {
  std::uint64_t seed = 0;
  friend bool operator==(const FixedRandomParams&,
                         const FixedRandomParams&) = default;
};

using OperatorParams =
    std::variant<std::monostate, PermDiffParams, SelfPermDiffParams, Grouping,
                 ShiftParams, AffineParams, PowerSumParams, FixedRandomParams>;

/// One validated operator f: A -> A. Immutable once built; the factories
/// reject any parameter combination that would leave the digit space.
class OperatorSpec {
 public:
  static OperatorSpec kaprekar(int width, ZeroPolicy policy = ZeroPolicy::kPad);
  static OperatorSpec perm_diff(Permutation p1, Permutation p2);
  static OperatorSpec self_perm_diff(Permutation p);
  static OperatorSpec reverse_diff(int width,
                                   ZeroPolicy policy = ZeroPolicy::kPad);
  static OperatorSpec sf_swap_add(Grouping grouping);
  static OperatorSpec digit_shift_sub(int width, ShiftParams shift,
                                      ZeroPolicy policy = ZeroPolicy::kPad);
  static OperatorSpec affine_mod(int width, std::uint64_t m, std::uint64_t c);
  static OperatorSpec digit_power_sum(int width, int exponent);
  static OperatorSpec fixed_random(int width, std::uint64_t seed);

  /// Generic constructor used by the parser; validates every invariant.
  static OperatorSpec make(OperatorKind kind, int width, ZeroPolicy policy,
                           OperatorParams params);

  OperatorKind kind() const noexcept { return kind_; }
  int width() const noexcept { return width_; }
  ZeroPolicy zero_policy() const noexcept { return policy_; }
  const OperatorParams& params() const noexcept { return params_; }

  template <typename T>
  const T& params_as() const {
    return std::get<T>(params_);
  }

  /// Number of states in the padded digit space, 10^width.
  std::uint64_t state_count() const noexcept { return pow10(width_); }

  /// Short human label, e.g. "perm_diff(k=3,p1=2,3,1,p2=1,3,2)".
  std::string label() const;

  friend bool operator==(const OperatorSpec&, const OperatorSpec&) = default;

 private:
  OperatorSpec(OperatorKind kind, int width, ZeroPolicy policy,
               OperatorParams params)
      : kind_(kind), width_(width), policy_(policy),
        params_(std::move(params)) {}

  OperatorKind kind_;
  int width_;
  ZeroPolicy policy_;
  OperatorParams params_;
};

/// Kinds whose steps never permute positions, so they stay defined when the
/// width changes under the shrink policy.
bool supports_shrink(OperatorKind kind) noexcept;

/// Kinds built as an absolute difference of two digit rearrangements.
bool is_difference_kind(OperatorKind kind) noexcept;

// Individual steps. Each returns a string of the input's width.

DigitString kaprekar_step(const DigitString& ds);
DigitString perm_diff_step(const DigitString& ds, const Permutation& p1,
                           const Permutation& p2);
DigitString self_perm_diff_step(const DigitString& ds, const Permutation& p);
DigitString reverse_diff_step(const DigitString& ds);
DigitString sf_swap_add_step(const DigitString& ds, const Grouping& g);
DigitString digit_shift_sub_step(const DigitString& ds,
                                 const ShiftParams& shift);
DigitString affine_mod_step(const DigitString& ds, std::uint64_t m,
                            std::uint64_t c);
DigitString digit_power_sum_step(const DigitString& ds, int exponent);

/// One application of f. Under pad the input width must equal the spec
/// width. Under shrink any width up to it is accepted, the input is read at
/// its natural width (leading zeros dropped) and so is the result.
DigitString apply(const OperatorSpec& spec, const DigitString& ds);

/// Parses the JSON operator spec format and validates it.
OperatorSpec parse_operator_spec(std::string_view text);
/// Canonical JSON form; parse_operator_spec(serialize(s)) == s.
std::string serialize(const OperatorSpec& spec);

struct KindInfo {
  OperatorKind kind;
  std::string_view name;
  std::string_view parameters;
  std::string_view description;
};

/// Every operator kind with its parameter schema, in declaration order.
std::span<const KindInfo> operator_catalog();

}  // namespace kaprekar

#endif  // KAPREKAR_OPERATORS_HPP_
