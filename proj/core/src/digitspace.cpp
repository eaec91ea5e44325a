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

#include "kaprekar/digitspace.hpp"

#include <algorithm>
#include <charconv>
#include <functional>

#include "kaprekar/errors.hpp"

namespace kaprekar {
namespace {

void check_width(int width) {
  if (width < 1 || width > kMaxWidth) {
    throw Error(ErrorCode::kValidationError,
                "width must be in 1.." + std::to_string(kMaxWidth) +
                    ", got " + std::to_string(width));
  }
}

}  // namespace

DigitString DigitString::from_integer(std::uint64_t n, int width) {
  check_width(width);
  if (n >= pow10(width)) {
    throw Error(ErrorCode::kValueOutOfRange,
                std::to_string(n) + " does not fit in " +
                    std::to_string(width) + " digits");
  }
  DigitString ds;
  ds.width_ = static_cast<std::uint8_t>(width);
  for (int t = width - 1; t >= 0; --t) {
    ds.digits_[t] = static_cast<std::uint8_t>(n % 10);
    n /= 10;
  }
  return ds;
}

DigitString DigitString::from_digits(std::span<const std::uint8_t> digits) {
  check_width(static_cast<int>(digits.size()));
  DigitString ds;
  ds.width_ = static_cast<std::uint8_t>(digits.size());
  for (std::size_t t = 0; t < digits.size(); ++t) {
    if (digits[t] > 9) {
      throw Error(ErrorCode::kValidationError,
                  "digit " + std::to_string(digits[t]) + " outside 0..9");
    }
    ds.digits_[t] = digits[t];
  }
  return ds;
}

DigitString DigitString::parse(std::string_view text) {
  if (text.empty() || text.size() > static_cast<std::size_t>(kMaxWidth)) {
    throw Error(ErrorCode::kParseError,
                "digit string must have 1.." + std::to_string(kMaxWidth) +
                    " characters: '" + std::string(text) + "'");
  }
  DigitString ds;
  ds.width_ = static_cast<std::uint8_t>(text.size());
  for (std::size_t t = 0; t < text.size(); ++t) {
    char c = text[t];
    if (c < '0' || c > '9') {
      throw Error(ErrorCode::kParseError,
                  "non-digit at position " + std::to_string(t) + " in '" +
                      std::string(text) + "'");
    }
    ds.digits_[t] = static_cast<std::uint8_t>(c - '0');
  }
  return ds;
}

std::uint64_t DigitString::to_integer() const noexcept {
  std::uint64_t n = 0;
  for (int t = 0; t < width_; ++t) n = n * 10 + digits_[t];
  return n;
}

std::string DigitString::to_string() const {
  std::string s(width_, '0');
  for (int t = 0; t < width_; ++t) s[t] = static_cast<char>('0' + digits_[t]);
  return s;
}

DigitString DigitString::trimmed() const {
  int lead = 0;
  while (lead < width_ - 1 && digits_[lead] == 0) ++lead;
  DigitString ds;
  ds.width_ = static_cast<std::uint8_t>(width_ - lead);
  std::copy(digits_.begin() + lead, digits_.begin() + width_,
            ds.digits_.begin());
  return ds;
}

std::uint64_t to_integer(const DigitString& ds) noexcept {
  return ds.to_integer();
}

DigitString sort_descending(const DigitString& ds) {
  std::array<std::uint8_t, kMaxWidth> buf{};
  auto d = ds.digits();
  std::copy(d.begin(), d.end(), buf.begin());
  std::sort(buf.begin(), buf.begin() + d.size(), std::greater<>());
  return DigitString::from_digits({buf.data(), d.size()});
}

DigitString sort_ascending(const DigitString& ds) {
  std::array<std::uint8_t, kMaxWidth> buf{};
  auto d = ds.digits();
  std::copy(d.begin(), d.end(), buf.begin());
  std::sort(buf.begin(), buf.begin() + d.size());
  return DigitString::from_digits({buf.data(), d.size()});
}

DigitString reverse(const DigitString& ds) {
  std::array<std::uint8_t, kMaxWidth> buf{};
  auto d = ds.digits();
  std::reverse_copy(d.begin(), d.end(), buf.begin());
  return DigitString::from_digits({buf.data(), d.size()});
}

bool is_repdigit(const DigitString& ds) noexcept {
  auto d = ds.digits();
  return std::all_of(d.begin(), d.end(),
                     [&](std::uint8_t x) { return x == d.front(); });
}

Permutation Permutation::from_one_based(std::span<const int> mapping) {
  const int n = static_cast<int>(mapping.size());
  if (n < 1 || n > kMaxWidth) {
    throw Error(ErrorCode::kValidationError,
                "permutation width must be in 1.." + std::to_string(kMaxWidth));
  }
  std::vector<bool> seen(n, false);
  Permutation p;
  p.source_.reserve(n);
  for (int pos : mapping) {
    if (pos < 1 || pos > n || seen[pos - 1]) {
      throw Error(ErrorCode::kValidationError,
                  "permutation is not a bijection of {1.." +
                      std::to_string(n) + "}");
    }
    seen[pos - 1] = true;
    p.source_.push_back(static_cast<std::uint8_t>(pos - 1));
  }
  return p;
}

Permutation Permutation::parse(std::string_view text) {
  std::vector<int> mapping;
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
                  "bad permutation entry at offset " + std::to_string(start) +
                      " in '" + std::string(text) + "'");
    }
    mapping.push_back(value);
    start = end + 1;
  }
  return from_one_based(mapping);
}

Permutation Permutation::identity(int width) {
  std::vector<int> mapping(width);
  for (int t = 0; t < width; ++t) mapping[t] = t + 1;
  return from_one_based(mapping);
}

std::vector<int> Permutation::one_based() const {
  std::vector<int> out;
  out.reserve(source_.size());
  for (auto s : source_) out.push_back(s + 1);
  return out;
}

std::string Permutation::to_string() const {
  std::string s;
  for (std::size_t t = 0; t < source_.size(); ++t) {
    if (t) s += ',';
    s += std::to_string(source_[t] + 1);
  }
  return s;
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t t = 0; t < source_.size(); ++t) {
    if (source_[t] != t) return false;
  }
  return true;
}

DigitString apply_permutation(const DigitString& ds, const Permutation& p) {
  if (ds.width() != p.width()) {
    throw Error(ErrorCode::kWidthMismatch,
                "permutation width " + std::to_string(p.width()) +
                    " != digit string width " + std::to_string(ds.width()));
  }
  std::array<std::uint8_t, kMaxWidth> buf{};
  for (int t = 0; t < ds.width(); ++t) buf[t] = ds[p.source(t)];
  return DigitString::from_digits(
      {buf.data(), static_cast<std::size_t>(ds.width())});
}

Permutation compose(const Permutation& first, const Permutation& second) {
  if (first.width() != second.width()) {
    throw Error(ErrorCode::kWidthMismatch, "cannot compose permutations of "
                                           "different widths");
  }
  std::vector<int> mapping(first.width());
  for (int t = 0; t < first.width(); ++t) {
    mapping[t] = first.source(second.source(t)) + 1;
  }
  return Permutation::from_one_based(mapping);
}

}  // namespace kaprekar
