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

#ifndef KAPREKAR_TESTS_CATALOG_HPP_
#define KAPREKAR_TESTS_CATALOG_HPP_

// One representative spec per operator kind at a given width, plus the
// matching string-based oracle step.

#include <functional>
#include <vector>

#include "kaprekar/operators.hpp"
#include "kaprekar/randomops.hpp"
#include "oracles.hpp"

namespace testing_catalog {

using kaprekar::OperatorSpec;
using kaprekar::Permutation;

inline std::vector<int> rotate_left(int w) {
  std::vector<int> p;
  for (int t = 2; t <= w; ++t) p.push_back(t);
  p.push_back(1);
  return p;
}

inline std::vector<int> fix_first_reverse_rest(int w) {
  std::vector<int> p{1};
  for (int t = w; t >= 2; --t) p.push_back(t);
  return p;
}

inline std::vector<int> rotate_right(int w) {
  std::vector<int> p{w};
  for (int t = 1; t < w; ++t) p.push_back(t);
  return p;
}

inline std::vector<int> sf_parts(int w) {
  return w == 1 ? std::vector<int>{1} : std::vector<int>{1, w - 1};
}

/// At width 3 these are exactly the worked-example parameters.
inline std::vector<OperatorSpec> specs(int w) {
  return {
      OperatorSpec::kaprekar(w),
      OperatorSpec::perm_diff(Permutation::from_one_based(rotate_left(w)),
                              Permutation::from_one_based(
                                  fix_first_reverse_rest(w))),
      OperatorSpec::self_perm_diff(
          Permutation::from_one_based(rotate_right(w))),
      OperatorSpec::reverse_diff(w),
      OperatorSpec::sf_swap_add(kaprekar::Grouping{sf_parts(w)}),
      OperatorSpec::digit_shift_sub(w, kaprekar::ShiftParams{1, 9, 1, 0}),
      OperatorSpec::affine_mod(w, 7, 3),
      OperatorSpec::digit_power_sum(w, 2),
      OperatorSpec::fixed_random(w, 42),
  };
}

inline std::function<std::uint64_t(std::uint64_t)> oracle_for(
    const OperatorSpec& spec) {
  using kaprekar::OperatorKind;
  const int w = spec.width();
  switch (spec.kind()) {
    case OperatorKind::kKaprekar:
      return [w](std::uint64_t n) { return oracle::kaprekar(n, w); };
    case OperatorKind::kPermDiff: {
      auto p = spec.params_as<kaprekar::PermDiffParams>();
      auto a = p.p1.one_based(), b = p.p2.one_based();
      return [=](std::uint64_t n) { return oracle::perm_diff(n, w, a, b); };
    }
    case OperatorKind::kSelfPermDiff: {
      auto a = spec.params_as<kaprekar::SelfPermDiffParams>().p.one_based();
      return [=](std::uint64_t n) { return oracle::self_perm_diff(n, w, a); };
    }
    case OperatorKind::kReverseDiff:
      return [w](std::uint64_t n) { return oracle::reverse_diff(n, w); };
    case OperatorKind::kSfSwapAdd: {
      auto parts = spec.params_as<kaprekar::Grouping>().parts;
      return [=](std::uint64_t n) { return oracle::sf_swap_add(n, w, parts); };
    }
    case OperatorKind::kDigitShiftSub: {
      auto s = spec.params_as<kaprekar::ShiftParams>();
      return [=](std::uint64_t n) {
        return oracle::digit_shift_sub(n, w, s.inc_amount, s.inc_if_less_than,
                                       s.dec_amount, s.dec_if_greater_than);
      };
    }
    case OperatorKind::kAffineMod: {
      auto a = spec.params_as<kaprekar::AffineParams>();
      return [=](std::uint64_t n) { return oracle::affine(n, w, a.m, a.c); };
    }
    case OperatorKind::kDigitPowerSum: {
      int e = spec.params_as<kaprekar::PowerSumParams>().exponent;
      return [=](std::uint64_t n) { return oracle::power_sum(n, w, e); };
    }
    case OperatorKind::kFixedRandom: {
      // The mixer itself is pinned by reference vectors in the randomops
      // tests; here only the reduction is re-derived.
      auto seed = spec.params_as<kaprekar::FixedRandomParams>().seed;
      return [=](std::uint64_t n) {
        return kaprekar::mix64(seed ^ n) % oracle::ipow10(w);
      };
    }
  }
  return {};
}

}  // namespace testing_catalog

#endif  // KAPREKAR_TESTS_CATALOG_HPP_
