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

#include "doctest.h"
#include "catalog.hpp"
#include "kaprekar/errors.hpp"
#include "kaprekar/operators.hpp"
#include "oracles.hpp"

using namespace kaprekar;

namespace {

DigitString ds(const char* s) { return DigitString::parse(s); }
Permutation perm(const char* s) { return Permutation::parse(s); }

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected kaprekar::Error");
  return ErrorCode::kParseError;
}

}  // namespace

TEST_SUITE("operators") {

TEST_CASE("kaprekar_step") {
  CHECK(kaprekar_step(ds("6174")).to_string() == "6174");
  CHECK(kaprekar_step(ds("495")).to_string() == "495");
  CHECK(kaprekar_step(ds("3333")).to_string() == "0000");
}

TEST_CASE("perm_diff_step") {
  const auto p1 = perm("2,3,1"), p2 = perm("1,3,2");
  CHECK(perm_diff_step(ds("125"), p1, p2).to_string() == "099");
  CHECK(perm_diff_step(ds("099"), p1, p2).to_string() == "891");
  CHECK(perm_diff_step(ds("891"), p1, p2).to_string() == "099");
  CHECK(perm_diff_step(ds("555"), p1, p2).to_string() == "000");
  CHECK(code_of([&] { perm_diff_step(ds("1255"), p1, p2); }) ==
        ErrorCode::kWidthMismatch);
}

TEST_CASE("self_perm_diff_step") {
  const auto p = perm("3,1,2");
  CHECK(self_perm_diff_step(ds("125"), p).to_string() == "387");
  CHECK(self_perm_diff_step(ds("054"), p).to_string() == "351");
  CHECK(self_perm_diff_step(ds("125"), Permutation::identity(3)).to_string() ==
        "000");
  CHECK(code_of([&] { self_perm_diff_step(ds("12"), p); }) ==
        ErrorCode::kWidthMismatch);
}

TEST_CASE("reverse_diff_step") {
  CHECK(reverse_diff_step(ds("125")).to_string() == "396");
  CHECK(reverse_diff_step(ds("297")).to_string() == "495");
  CHECK(reverse_diff_step(ds("444")).to_string() == "000");
}

TEST_CASE("sf_swap_add_step follows the stated rule") {
  const Grouping g{{1, 2}};
  CHECK(sf_swap_add_step(ds("767"), g).to_string() == "444");
  CHECK(sf_swap_add_step(ds("888"), g).to_string() == "776");
  // 576 + 765 = 1341; the printed 1342 is not reproduced.
  CHECK(sf_swap_add_step(ds("576"), g).to_string() == "341");
  // Three groups reverse the whole group order: 1|23|4 -> 4|23|1.
  CHECK(sf_swap_add_step(ds("1234"), Grouping{{1, 2, 1}}).to_integer() ==
        (1234 + 4231) % 10000);
}

TEST_CASE("sf_swap_add_step rejects bad groupings") {
  CHECK(code_of([] { sf_swap_add_step(ds("123"), Grouping{{1, 1}}); }) ==
        ErrorCode::kInvalidGrouping);
  CHECK(code_of([] { sf_swap_add_step(ds("123"), Grouping{{0, 3}}); }) ==
        ErrorCode::kInvalidGrouping);
  CHECK(code_of([] { sf_swap_add_step(ds("123"), Grouping{}); }) ==
        ErrorCode::kInvalidGrouping);
}

TEST_CASE("digit_shift_sub_step") {
  const ShiftParams basic{1, 9, 1, 0};
  CHECK(digit_shift_sub_step(ds("495"), basic).to_string() == "212");
  CHECK(digit_shift_sub_step(ds("212"), basic).to_string() == "222");
  CHECK(digit_shift_sub_step(ds("222"), basic).to_string() == "222");
  const ShiftParams variant{2, 8, 3, 2};
  // 495: up 697, down 162.
  CHECK(digit_shift_sub_step(ds("495"), variant).to_integer() == 697 - 162);
  CHECK(code_of([] { digit_shift_sub_step(ds("495"), {1, 10, 1, 0}); }) ==
        ErrorCode::kInvalidShiftParams);
  CHECK(code_of([] { digit_shift_sub_step(ds("495"), {1, 9, 2, 0}); }) ==
        ErrorCode::kInvalidShiftParams);
}

TEST_CASE("affine_mod_step and digit_power_sum_step") {
  CHECK(affine_mod_step(ds("125"), 1, 0).to_string() == "125");
  CHECK(affine_mod_step(ds("999"), 2, 3).to_string() == "001");
  CHECK(affine_mod_step(ds("000"), 7, 0).to_string() == "000");
  // 64-bit multiplier does not overflow.
  CHECK(affine_mod_step(ds("999999999"), ~0ULL, ~0ULL).width() == 9);
  CHECK(digit_power_sum_step(ds("125"), 2).to_string() == "030");
  CHECK(digit_power_sum_step(ds("000"), 3).to_string() == "000");
  CHECK(digit_power_sum_step(ds("999"), 1).to_string() == "027");
  CHECK(code_of([] { digit_power_sum_step(ds("1"), 0); }) ==
        ErrorCode::kValidationError);
}

TEST_CASE("apply dispatches by kind") {
  CHECK(apply(OperatorSpec::kaprekar(4), ds("3333")).to_string() == "0000");
  CHECK(apply(OperatorSpec::reverse_diff(3), ds("396")).to_string() == "297");
  const auto pd = OperatorSpec::perm_diff(perm("2,3,1"), perm("1,3,2"));
  CHECK(apply(pd, ds("891")).to_string() == "099");
  CHECK(code_of([&] { apply(pd, ds("0891")); }) == ErrorCode::kWidthMismatch);
}

TEST_CASE("shrink policy reads states at natural width") {
  const auto k2 = OperatorSpec::kaprekar(2, ZeroPolicy::kShrink);
  CHECK(apply(k2, ds("10")).to_string() == "9");
  CHECK(apply(k2, ds("9")).to_string() == "0");
  CHECK(apply(k2, ds("09")).to_string() == "0");
  CHECK(code_of([&] { apply(k2, ds("100")); }) == ErrorCode::kWidthMismatch);
  CHECK(code_of([] {
          OperatorSpec::make(OperatorKind::kPermDiff, 3, ZeroPolicy::kShrink,
                             PermDiffParams{perm("2,3,1"), perm("1,3,2")});
        }) == ErrorCode::kValidationError);
}

TEST_CASE("spec invariants are checked at construction") {
  CHECK(code_of([] { OperatorSpec::perm_diff(perm("2,1"), perm("1,3,2")); }) ==
        ErrorCode::kValidationError);
  CHECK(code_of([] { OperatorSpec::kaprekar(0); }) ==
        ErrorCode::kValidationError);
  CHECK(code_of([] { OperatorSpec::kaprekar(10); }) ==
        ErrorCode::kValidationError);
  CHECK(code_of([] { OperatorSpec::digit_shift_sub(3, {3, 8, 1, 0}); }) ==
        ErrorCode::kInvalidShiftParams);
  CHECK(code_of([] { OperatorSpec::digit_power_sum(3, 0); }) ==
        ErrorCode::kValidationError);
  CHECK(code_of([] {
          OperatorSpec::make(OperatorKind::kSfSwapAdd, 3, ZeroPolicy::kPad,
                             Grouping{{2, 2}});
        }) == ErrorCode::kInvalidGrouping);
}

TEST_CASE("parse_operator_spec") {
  const auto k = parse_operator_spec(R"({"kind":"kaprekar","width":4})");
  CHECK(k == OperatorSpec::kaprekar(4));
  const auto pd = parse_operator_spec(
      R"({"kind":"perm_diff","width":3,"p1":"2,3,1","p2":"1,3,2"})");
  CHECK(pd == OperatorSpec::perm_diff(perm("2,3,1"), perm("1,3,2")));
  const auto shift = parse_operator_spec(
      R"({"kind":"digit_shift_sub","width":3,"inc_amount":2,"inc_if_less_than":8,)"
      R"("dec_amount":3,"dec_if_greater_than":2,"zero_policy":"shrink"})");
  CHECK(shift.zero_policy() == ZeroPolicy::kShrink);
  CHECK(shift.params_as<ShiftParams>() == ShiftParams{2, 8, 3, 2});
  const auto fr =
      parse_operator_spec(R"({"kind":"fixed_random","width":4,"seed":18446744073709551615})");
  CHECK(fr.params_as<FixedRandomParams>().seed == ~0ULL);
}

TEST_CASE("parse_operator_spec errors") {
  auto code = [](const char* text) {
    return code_of([&] { parse_operator_spec(text); });
  };
  CHECK(code(R"({"kind":"perm_diff","width":3,"p1":"2,2,1","p2":"1,3,2"})") ==
        ErrorCode::kValidationError);
  CHECK(code(R"({"kind":"kaprekar","width":4)") == ErrorCode::kParseError);
  CHECK(code(R"({"kind":"nope","width":4})") == ErrorCode::kValidationError);
  CHECK(code(R"({"kind":"kaprekar"})") == ErrorCode::kValidationError);
  CHECK(code(R"({"kind":"kaprekar","width":"4"})") ==
        ErrorCode::kValidationError);
  CHECK(code(R"({"kind":"kaprekar","width":4,"p":"1,2,3,4"})") ==
        ErrorCode::kValidationError);
  CHECK(code(R"({"kind":"affine_mod","width":4,"m":-1,"c":0})") ==
        ErrorCode::kValidationError);
  CHECK(code(R"({"kind":"sf_swap_add","width":3,"grouping":"1,1"})") ==
        ErrorCode::kInvalidGrouping);
  CHECK(code(R"({"kind":"reverse_diff","width":3,"zero_policy":"wide"})") ==
        ErrorCode::kValidationError);
  CHECK(code(R"({"kind":"affine_mod","width":3,"m":1,"c":0,"zero_policy":"shrink"})") ==
        ErrorCode::kValidationError);
  CHECK(code("[1,2]") == ErrorCode::kValidationError);
}

TEST_CASE("parse -> serialize -> parse is exact for every catalog spec") {
  for (int w = 1; w <= 6; ++w) {
    for (const auto& spec : testing_catalog::specs(w)) {
      const std::string text = serialize(spec);
      const auto again = parse_operator_spec(text);
      REQUIRE(again == spec);
      REQUIRE(serialize(again) == text);
    }
  }
  const auto shrink = OperatorSpec::reverse_diff(5, ZeroPolicy::kShrink);
  CHECK(parse_operator_spec(serialize(shrink)) == shrink);
}

TEST_CASE("every catalog operator agrees with its oracle and is closed") {
  for (int w = 1; w <= 4; ++w) {
    for (const auto& spec : testing_catalog::specs(w)) {
      CAPTURE(spec.label());
      const auto f = testing_catalog::oracle_for(spec);
      for (std::uint64_t n = 0; n < pow10(w); ++n) {
        const auto out = apply(spec, DigitString::from_integer(n, w));
        REQUIRE(out.width() == w);
        REQUIRE(out.to_integer() == f(n));
        // Pure: same input, same output.
        REQUIRE(apply(spec, DigitString::from_integer(n, w)) == out);
      }
    }
  }
}

TEST_CASE("difference operators send repdigits to zero") {
  for (int w = 1; w <= 6; ++w) {
    for (const auto& spec : testing_catalog::specs(w)) {
      if (!is_difference_kind(spec.kind())) continue;
      for (std::uint64_t d = 0; d <= 9; ++d) {
        std::uint64_t rep = 0;
        for (int t = 0; t < w; ++t) rep = rep * 10 + d;
        REQUIRE(apply(spec, DigitString::from_integer(rep, w)).to_integer() ==
                0);
      }
    }
  }
  const auto self_id = OperatorSpec::self_perm_diff(Permutation::identity(4));
  for (std::uint64_t n = 0; n < 10000; ++n) {
    REQUIRE(apply(self_id, DigitString::from_integer(n, 4)).to_integer() == 0);
  }
}

TEST_CASE("kaprekar depends only on the digit multiset") {
  for (std::uint64_t n = 0; n < 10000; ++n) {
    const auto d = DigitString::from_integer(n, 4);
    const auto expected = kaprekar_step(d);
    REQUIRE(kaprekar_step(sort_ascending(d)) == expected);
    REQUIRE(kaprekar_step(reverse(d)) == expected);
    REQUIRE(kaprekar_step(apply_permutation(d, perm("3,1,4,2"))) == expected);
  }
}

TEST_CASE("perm_diff with equal permutations is zero") {
  std::vector<int> base{1, 2, 3};
  do {
    const auto p = Permutation::from_one_based(base);
    for (std::uint64_t n = 0; n < 1000; ++n) {
      REQUIRE(perm_diff_step(DigitString::from_integer(n, 3), p, p)
                  .to_integer() == 0);
    }
  } while (std::next_permutation(base.begin(), base.end()));
}

TEST_CASE("catalog lists all nine kinds") {
  CHECK(operator_catalog().size() == 9);
  for (const auto& info : operator_catalog()) {
    CHECK(kind_from_string(info.name) == info.kind);
  }
}

}  // TEST_SUITE
