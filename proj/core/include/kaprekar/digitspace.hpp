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

#ifndef KAPREKAR_DIGITSPACE_HPP_
#define KAPREKAR_DIGITSPACE_HPP_

// Fixed-width base-10 digit strings and the digit-level primitives the
// operator catalog is built from.

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace kaprekar {

inline constexpr int kMaxWidth = 9;

/// 10^width for width in [0, 19].
constexpr std::uint64_t pow10(int width) {
  std::uint64_t r = 1;
  for (int i = 0; i < width; ++i) r *= 10;
  return r;
}

/// A width-k numeral that keeps its leading zeros, e.g. "099" at width 3.
/// Widths are limited to 1..9 so every value fits in 64 bits.
class DigitString {
 public:
  /// "0" at width 1.
  DigitString() = default;

  /// Throws ValueOutOfRange if n >= 10^width, ValidationError on bad width.
  static DigitString from_integer(std::uint64_t n, int width);

  /// Digits most-significant first; each must be 0..9.
  static DigitString from_digits(std::span<const std::uint8_t> digits);

  /// Parses the exact textual form: the width is the string length.
  static DigitString parse(std::string_view text);

  int width() const noexcept { return width_; }
  std::span<const std::uint8_t> digits() const noexcept {
    return {digits_.data(), static_cast<std::size_t>(width_)};
  }
  std::uint8_t operator[](int pos) const noexcept { return digits_[pos]; }

  std::uint64_t to_integer() const noexcept;
  std::string to_string() const;

  /// Drops leading zeros, keeping at least one digit.
  DigitString trimmed() const;

  friend bool operator==(const DigitString&, const DigitString&) = default;
  friend auto operator<=>(const DigitString&, const DigitString&) = default;

 private:
  std::uint8_t width_ = 1;
  std::array<std::uint8_t, kMaxWidth> digits_{};
};

std::uint64_t to_integer(const DigitString& ds) noexcept;

DigitString sort_descending(const DigitString& ds);
DigitString sort_ascending(const DigitString& ds);
DigitString reverse(const DigitString& ds);
bool is_repdigit(const DigitString& ds) noexcept;

/// A digit permutation written as 1-based source positions: output digit t
/// is input digit mapping[t]. "2,3,1" turns 125 into 251.
class Permutation {
 public:
  /// Throws ValidationError unless the mapping is a bijection of {1..n}.
  static Permutation from_one_based(std::span<const int> mapping);
  static Permutation parse(std::string_view text);
  static Permutation identity(int width);

  int width() const noexcept { return static_cast<int>(source_.size()); }
  /// Zero-based source position for output position t.
  int source(int t) const noexcept { return source_[t]; }
  std::vector<int> one_based() const;
  std::string to_string() const;
  bool is_identity() const noexcept;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::uint8_t> source_;
};

/// Throws WidthMismatch if the widths differ.
DigitString apply_permutation(const DigitString& ds, const Permutation& p);

/// The permutation equal to applying `first` and then `second`.
Permutation compose(const Permutation& first, const Permutation& second);

}  // namespace kaprekar

#endif  // KAPREKAR_DIGITSPACE_HPP_
