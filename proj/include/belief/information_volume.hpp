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
#include <string>

#include "belief/mass_function.hpp"
#include "belief/powers.hpp"

namespace belief {

namespace detail {

using uint128 = unsigned __int128;

inline uint128 checked_mul_u128(uint128 a, uint128 b) {
  if (a != 0 && b > ~uint128{0} / a) {
    throw Error(Errc::overflow, "128-bit product overflow");
  }
  return a * b;
}

inline uint128 checked_pow_u128(std::uint64_t base, int exp) {
  uint128 acc = 1;
  for (int i = 0; i < exp; ++i) acc = checked_mul_u128(acc, base);
  return acc;
}

}  // namespace detail

/// The dimension of the k-order mass-function space, (k+2)^n - (k+1)^n,
/// exact. Throws Overflow past 63 bits.
inline std::int64_t hoivmf_dimension(int n, int k) {
  if (n < 1) throw std::invalid_argument("frame cardinality must be >= 1");
  if (k < 1) throw Error(Errc::invalid_order, "order k must be >= 1");
  if (const auto exact = ipow_diff(std::int64_t{k} + 2, n)) return *exact;
  throw Error(Errc::overflow, "(k+2)^n - (k+1)^n exceeds 63-bit range for n=" +
                                  std::to_string(n) + ", k=" + std::to_string(k));
}

/// Maximum k-order TFB entropy over all BPAs on an n-element frame:
/// log2((k+2)^n - (k+1)^n). Exact integer path when it fits, stable
/// log-domain evaluation otherwise; defined for all n, k >= 1.
inline double hoivmf_value(int n, int k) {
  if (n < 1) throw std::invalid_argument("frame cardinality must be >= 1");
  if (k < 1) throw Error(Errc::invalid_order, "order k must be >= 1");
  return log2_ipow_diff(std::int64_t{k} + 2, n);
}

/// Same quantity through the binomial route,
/// log2(sum over a of C(n,a) * ((k+1)^a - k^a)).
/// Kept as an independent identity check on hoivmf_value; exact 128-bit
/// accumulation, Overflow when the sum no longer fits.
inline double hoivmf_via_binomial(int n, int k) {
  if (n < 1 || n > 30) {
    throw std::invalid_argument("hoivmf_via_binomial supports 1 <= n <= 30");
  }
  if (k < 1) throw Error(Errc::invalid_order, "order k must be >= 1");

  using detail::uint128;
  uint128 sum = 0;
  std::int64_t binom = 1;  // C(n, 0)
  for (int a = 1; a <= n; ++a) {
    binom = binom * (n - a + 1) / a;  // exact at every step
    const uint128 hi = detail::checked_pow_u128(static_cast<std::uint64_t>(k) + 1, a);
    const uint128 lo = detail::checked_pow_u128(static_cast<std::uint64_t>(k), a);
    const uint128 term =
        detail::checked_mul_u128(static_cast<uint128>(binom), hi - lo);
    if (sum > ~uint128{0} - term) {
      throw Error(Errc::overflow, "binomial sum overflows 128 bits");
    }
    sum += term;
  }
  return std::log2(static_cast<double>(sum));
}

/// The BPA that attains hoivmf_value(n, k):
/// m(F) = ((k+1)^|F| - k^|F|) / ((k+2)^n - (k+1)^n) for every nonempty F.
/// All (k+1)^|F| - k^|F| leaves then carry equal mass, so the k-order TFB
/// entropy of the result is exactly the maximum. Explicit 2^n - 1 entries,
/// so n is capped at 20.
inline MassFunction max_tfb_bpa(const Frame& frame, int k) {
  const int n = static_cast<int>(frame.size());
  if (n > 20) {
    throw Error(Errc::frame_too_large,
                "max_tfb_bpa materializes 2^n - 1 entries; n = " +
                    std::to_string(n) + " is past the n = 20 cap");
  }
  if (k < 1) throw Error(Errc::invalid_order, "order k must be >= 1");

  const auto den_exact = ipow_diff(std::int64_t{k} + 2, n);
  const double log2_den = log2_ipow_diff(std::int64_t{k} + 2, n);

  MassFunction m(frame);
  for (std::uint64_t bits = 1; bits <= frame.full_mask(); ++bits) {
    const FocalElement f(bits);
    const auto num_exact = ipow_diff(std::int64_t{k} + 1, f.cardinality());
    const double mass =
        (den_exact && num_exact)
            ? static_cast<double>(*num_exact) / static_cast<double>(*den_exact)
            : std::exp2(log2_ipow_diff(std::int64_t{k} + 1, f.cardinality()) -
                        log2_den);
    m.set(f, mass);
  }
  return m;
}

}  // namespace belief
