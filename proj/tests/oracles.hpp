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

#ifndef KAPREKAR_TESTS_ORACLES_HPP_
#define KAPREKAR_TESTS_ORACLES_HPP_

// Reference implementations used only by tests. They work on decimal
// strings and plain integers and share no code with the library.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace oracle {

inline std::string pad(std::uint64_t n, int width) {
  std::string s = std::to_string(n);
  return std::string(width - static_cast<int>(s.size()), '0') + s;
}

inline std::uint64_t num(const std::string& s) { return std::stoull(s); }

inline std::uint64_t ipow10(int k) {
  std::uint64_t r = 1;
  while (k-- > 0) r *= 10;
  return r;
}

inline std::uint64_t absdiff(std::uint64_t a, std::uint64_t b) {
  return a > b ? a - b : b - a;
}

inline std::uint64_t kaprekar(std::uint64_t n, int k) {
  std::string hi = pad(n, k), lo = pad(n, k);
  std::sort(hi.rbegin(), hi.rend());
  std::sort(lo.begin(), lo.end());
  return num(hi) - num(lo);
}

/// Source-position convention: position t of the result takes source position
/// perm[t] (1-based).
inline std::string permute(const std::string& s, const std::vector<int>& perm) {
  std::string out;
  for (int p : perm) out += s[p - 1];
  return out;
}

inline std::uint64_t perm_diff(std::uint64_t n, int k, const std::vector<int>& p1,
                               const std::vector<int>& p2) {
  const std::string s = pad(n, k);
  return absdiff(num(permute(s, p1)), num(permute(s, p2)));
}

inline std::uint64_t self_perm_diff(std::uint64_t n, int k,
                                    const std::vector<int>& p) {
  return absdiff(n, num(permute(pad(n, k), p)));
}

inline std::uint64_t reverse_diff(std::uint64_t n, int k) {
  std::string s = pad(n, k);
  std::reverse(s.begin(), s.end());
  return absdiff(n, num(s));
}

inline std::uint64_t sf_swap_add(std::uint64_t n, int k,
                                 const std::vector<int>& parts) {
  const std::string s = pad(n, k);
  std::vector<std::string> groups;
  std::size_t at = 0;
  for (int p : parts) {
    groups.push_back(s.substr(at, p));
    at += p;
  }
  std::string swapped;
  for (auto it = groups.rbegin(); it != groups.rend(); ++it) swapped += *it;
  return (n + num(swapped)) % ipow10(k);
}

inline std::uint64_t digit_shift_sub(std::uint64_t n, int k, int inc, int inc_lt,
                                     int dec, int dec_gt) {
  std::string up = pad(n, k), down = pad(n, k);
  for (auto& c : up) {
    if (c - '0' < inc_lt) c = static_cast<char>(c + inc);
  }
  for (auto& c : down) {
    if (c - '0' > dec_gt) c = static_cast<char>(c - dec);
  }
  return absdiff(num(up), num(down));
}

inline std::uint64_t affine(std::uint64_t n, int k, std::uint64_t m,
                            std::uint64_t c) {
  // Small m and c only: plain 64-bit arithmetic.
  return (m * n + c) % ipow10(k);
}

inline std::uint64_t power_sum(std::uint64_t n, int k, int e) {
  std::uint64_t sum = 0;
  for (char c : pad(n, k)) {
    std::uint64_t t = 1;
    for (int i = 0; i < e; ++i) t *= static_cast<std::uint64_t>(c - '0');
    sum += t;
  }
  return sum % ipow10(k);
}

struct Rho {
  std::uint64_t tail = 0;
  std::uint64_t period = 0;
  std::uint64_t cycle_min = 0;
};

/// Floyd's tortoise-and-hare, then a second pass for the tail length.
inline Rho floyd(const std::function<std::uint64_t(std::uint64_t)>& f,
                 std::uint64_t x0) {
  std::uint64_t slow = f(x0), fast = f(f(x0));
  while (slow != fast) {
    slow = f(slow);
    fast = f(f(fast));
  }
  Rho r;
  slow = x0;
  while (slow != fast) {
    slow = f(slow);
    fast = f(fast);
    ++r.tail;
  }
  r.period = 1;
  r.cycle_min = slow;
  for (std::uint64_t y = f(slow); y != slow; y = f(y)) {
    ++r.period;
    r.cycle_min = std::min(r.cycle_min, y);
  }
  return r;
}

/// Distinct cycles of f on {0..n-1}, each as a sorted vector.
inline std::set<std::vector<std::uint64_t>> all_cycles(
    const std::function<std::uint64_t(std::uint64_t)>& f, std::uint64_t n) {
  std::set<std::vector<std::uint64_t>> out;
  for (std::uint64_t s = 0; s < n; ++s) {
    const Rho r = floyd(f, s);
    std::vector<std::uint64_t> c{r.cycle_min};
    for (std::uint64_t y = f(r.cycle_min); y != r.cycle_min; y = f(y)) {
      c.push_back(y);
    }
    std::sort(c.begin(), c.end());
    out.insert(c);
  }
  return out;
}

}  // namespace oracle

#endif  // KAPREKAR_TESTS_ORACLES_HPP_
