/*
 * Copyright (c) 2026, the belent authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <optional>

namespace belief {

// base^exp in signed 64-bit arithmetic; nullopt on overflow.
inline std::optional<std::int64_t> checked_ipow(std::int64_t base, int exp) {
  if (base < 1 || exp < 0) return std::nullopt;
  std::int64_t acc = 1;
  const std::int64_t cap = std::numeric_limits<std::int64_t>::max();
  for (int i = 0; i < exp; ++i) {
    if (acc > cap / base) return std::nullopt;
    acc *= base;
  }
  return acc;
}

// base^n - (base-1)^n, exact; nullopt when base^n exceeds 63 bits.
inline std::optional<std::int64_t> ipow_diff(std::int64_t base, int n) {
  if (base < 2 || n < 1) return std::nullopt;
  const auto hi = checked_ipow(base, n);
  if (!hi) return std::nullopt;
  const auto lo = checked_ipow(base - 1, n);
  return *hi - *lo;
}

// log2(base^n - (base-1)^n). Exact-integer path when it fits, otherwise
// evaluated in the log domain: n*log2(base) + log2(1 - ((base-1)/base)^n),
// with the inner term kept stable through log1p/expm1.
inline double log2_ipow_diff(std::int64_t base, int n) {
  if (const auto exact = ipow_diff(base, n)) {
    return std::log2(static_cast<double>(*exact));
  }
  const double t =
      -static_cast<double>(n) * std::log1p(1.0 / static_cast<double>(base - 1));
  return static_cast<double>(n) * std::log2(static_cast<double>(base)) +
         std::log(-std::expm1(t)) / std::numbers::ln2;
}

// 2^card - 1 as a double; card up to 64.
inline double pow2_minus_one(int card) {
  if (card < 64) return static_cast<double>((std::uint64_t{1} << card) - 1);
  return 18446744073709551615.0;  // 2^64 - 1 rounded
}

}  // namespace belief
