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
#include "kaprekar/dynamics.hpp"
#include "kaprekar/errors.hpp"
#include "kaprekar/operators.hpp"
#include "kaprekar/randomops.hpp"

using namespace kaprekar;

TEST_SUITE("randomops") {

TEST_CASE("mix64 reference vectors") {
  // First outputs of SplitMix64 seeded with 0.
  CHECK(mix64(0) == 0xE220A8397B1DCDAFULL);
  SplitMixStream stream(0);
  CHECK(stream.next() == 0xE220A8397B1DCDAFULL);
  CHECK(stream.next() == 0x6E789E6AA1B965F4ULL);
  CHECK(mix64(1) != mix64(2));
  CHECK(mix64(12345) == mix64(12345));
  static_assert(mix64(0) == 0xE220A8397B1DCDAFULL);
}

TEST_CASE("fixed_random_step is a function of (seed, state)") {
  for (std::uint64_t n = 0; n < 1000; ++n) {
    const auto d = DigitString::from_integer(n, 3);
    const auto a = fixed_random_step(99, d);
    REQUIRE(a == fixed_random_step(99, d));
    REQUIRE(a.width() == 3);
    REQUIRE(a.to_integer() == mix64(99 ^ n) % 1000);
  }
}

TEST_CASE("fixed random operator always reaches a cycle") {
  for (int w : {3, 4}) {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      const auto spec = OperatorSpec::fixed_random(w, seed);
      const auto t = iterate(spec, DigitString::from_integer(seed % pow10(w), w));
      REQUIRE(t.preperiod + t.period <= pow10(w));
      REQUIRE(classify(t) == t.outcome);
    }
  }
}

TEST_CASE("fixed walk report") {
  const auto r = fixed_random_walk(42, 4, pow10(4) + 1);
  CHECK(r.mode == WalkMode::kFixed);
  CHECK(r.seed == 42);
  REQUIRE(r.trajectory_summary);
  REQUIRE(r.first_repeat_index);
  CHECK(*r.first_repeat_index ==
        r.trajectory_summary->preperiod + r.trajectory_summary->period);
  CHECK(*r.first_repeat_index <= pow10(4));
  CHECK(r.repeat_consistent == true);
  CHECK_THROWS_AS(fixed_random_walk(42, 4, 2), Error);
}

TEST_CASE("fresh walk finds a repeat within the pigeonhole bound") {
  for (int w = 1; w <= 4; ++w) {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
      const auto r = fresh_random_walk(seed, w, pow10(w) + 1);
      REQUIRE(r.mode == WalkMode::kFresh);
      REQUIRE(r.seed == seed);
      REQUIRE(r.first_repeat_index);
      REQUIRE(*r.first_repeat_index <= pow10(w));
      REQUIRE(*r.first_occurrence_index < *r.first_repeat_index);
      REQUIRE(r.repeat_consistent.has_value());
      REQUIRE(!r.trajectory_summary);
      REQUIRE(r.steps_taken == *r.first_repeat_index + 1);
    }
  }
}

TEST_CASE("fresh walk replays the SplitMix stream") {
  const auto r = fresh_random_walk(7, 2, 101);
  SplitMixStream stream(7);
  std::vector<std::uint64_t> draws;
  for (std::uint64_t i = 0; i <= r.steps_taken; ++i) {
    draws.push_back(stream.next() % 100);
  }
  const auto rep = *r.first_repeat_index;
  const auto first = *r.first_occurrence_index;
  CHECK(draws[rep] == draws[first]);
  CHECK(draws[rep] == *r.repeated_value);
  for (std::uint64_t i = 0; i < rep; ++i) {
    for (std::uint64_t j = i + 1; j < rep; ++j) REQUIRE(draws[i] != draws[j]);
  }
  CHECK(*r.repeat_consistent == (draws[rep + 1] == draws[first + 1]));
}

TEST_CASE("fresh walk without a repeat inside the budget") {
  const auto r = fresh_random_walk(3, 9, 5);
  CHECK(!r.first_repeat_index);
  CHECK(!r.repeat_consistent);
  CHECK(r.steps_taken == 5);
  CHECK_THROWS_AS(fresh_random_walk(3, 3, 0), Error);
}

TEST_CASE("fresh mode is not a function") {
  for (int w = 1; w <= 4; ++w) {
    int inconsistent = 0;
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
      const auto r = fresh_random_walk(seed, w, pow10(w) + 1);
      if (!r.repeat_consistent.value()) ++inconsistent;
    }
    CAPTURE(w);
    CHECK(inconsistent > 0);
  }
}

TEST_CASE("reports are reproducible and serialize losslessly") {
  for (auto mode : {WalkMode::kFixed, WalkMode::kFresh}) {
    const auto a = random_walk(mode, 1234, 4, pow10(4) + 1);
    const auto b = random_walk(mode, 1234, 4, pow10(4) + 1);
    CHECK(a == b);
    CHECK(to_json(a) == to_json(b));
    CHECK(walk_report_from_json(to_json(a)) == a);
  }
  const auto none = fresh_random_walk(3, 9, 5);
  CHECK(walk_report_from_json(to_json(none)) == none);
}

TEST_CASE("demo summary") {
  const auto s = run_random_demo(WalkMode::kFixed, 0, 3, 20, 1001);
  CHECK(s.walks == 20);
  CHECK(s.repeats_found == 20);
  CHECK(s.consistent_repeats == 20);
  CHECK(s.max_rho_length <= 1000);
  CHECK(walk_mode_from_string("fresh") == WalkMode::kFresh);
  CHECK_THROWS_AS(walk_mode_from_string("stale"), Error);
}

}  // TEST_SUITE
